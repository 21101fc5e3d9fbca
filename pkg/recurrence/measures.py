"""
Orthogonality Measures
Support, density and Gauss rules of the probability measure behind each family
"""
import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np
from scipy import integrate, special
from scipy.linalg import eigh_tridiagonal

from errors import DomainError, FamilyError
from recurrence.families import CoefficientSequence, FamilyLabel, eval_poly_table
from specfun.gamma import gamma_fn

logger = logging.getLogger(__name__)

GaussRule = Callable[[int], Tuple[np.ndarray, np.ndarray]]


@dataclass(frozen=True)
class MeasureSpec:
    """Probability measure: support, density and a Gauss rule with weights summing to 1"""
    support: Tuple[float, float]
    density: Callable[[np.ndarray], np.ndarray]
    gauss_rule: GaussRule
    total_mass: float = 1.0
    symmetric: bool = False

    def integrate_density(self) -> float:
        """Total mass by adaptive quadrature of the density"""
        lower, upper = self.support
        value, _ = integrate.quad(lambda x: float(self.density(np.asarray(x))),
                                  lower, upper, limit=200)
        return value

    def quadrature(self, f: Callable[[np.ndarray], np.ndarray], nodes: int) -> float:
        """Integral of f against the measure with an n-node Gauss rule"""
        x, w = self.gauss_rule(nodes)
        return float(np.dot(w, f(x)))


def golub_welsch(coeffs: CoefficientSequence, nodes: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Gauss rule of the measure encoded by the Jacobi matrix itself

    Nodes are the eigenvalues of the n x n truncation, weights the squared
    first components of the normalized eigenvectors (mu_0 = 1).
    """
    if nodes < 1:
        raise DomainError(f"Gauss rule needs at least one node, got {nodes}")
    diagonal = np.array([coeffs.a_value(k) for k in range(nodes)])
    off_diagonal = np.array([coeffs.b_signed(k) for k in range(nodes - 1)])
    x, vectors = eigh_tridiagonal(diagonal, off_diagonal)
    return x, vectors[0] ** 2


def _hermite_measure() -> MeasureSpec:
    def rule(n):
        x, w = special.roots_hermite(n)
        return x, w / math.sqrt(math.pi)

    return MeasureSpec(
        support=(-math.inf, math.inf),
        density=lambda x: np.exp(-np.square(x)) / math.sqrt(math.pi),
        gauss_rule=rule,
        symmetric=True,
    )


def _laguerre_measure(alpha: float) -> MeasureSpec:
    # normalizer is Gamma(alpha+1); mu_0 = 1 forces it
    normalizer = gamma_fn(alpha + 1.0)

    def rule(n):
        x, w = special.roots_genlaguerre(n, alpha)
        return x, w / normalizer

    def density(x):
        x = np.asarray(x, dtype=float)
        with np.errstate(divide='ignore', invalid='ignore'):
            values = np.where(x >= 0, np.power(np.abs(x), alpha) * np.exp(-x) / normalizer, 0.0)
        return values

    return MeasureSpec(support=(0.0, math.inf), density=density, gauss_rule=rule)


def _legendre_measure() -> MeasureSpec:
    def rule(n):
        x, w = special.roots_legendre(n)
        return x, 0.5 * w

    return MeasureSpec(
        support=(-1.0, 1.0),
        density=lambda x: np.where(np.abs(x) <= 1.0, 0.5, 0.0),
        gauss_rule=rule,
        symmetric=True,
    )


def _chebyshev_measure() -> MeasureSpec:
    def rule(n):
        x, w = special.roots_chebyt(n)
        return x, w / math.pi

    def density(x):
        x = np.asarray(x, dtype=float)
        with np.errstate(divide='ignore', invalid='ignore'):
            return np.where(np.abs(x) < 1.0, 1.0 / (math.pi * np.sqrt(1.0 - np.square(x))), 0.0)

    return MeasureSpec(support=(-1.0, 1.0), density=density, gauss_rule=rule, symmetric=True)


def measure_of(coeffs: CoefficientSequence) -> MeasureSpec:
    """
    Orthogonality measure of a family

    Args:
        coeffs: Builtin family, or custom family carrying a user density

    Returns:
        MeasureSpec with unit total mass; custom families get Golub-Welsch rules
    """
    label = coeffs.family_label
    if label is FamilyLabel.HERMITE:
        return _hermite_measure()
    if label is FamilyLabel.LAGUERRE:
        return _laguerre_measure(coeffs.params['alpha'])
    if label is FamilyLabel.LEGENDRE:
        return _legendre_measure()
    if label is FamilyLabel.CHEBYSHEV_FIRST:
        return _chebyshev_measure()
    if coeffs.user_measure is not None:
        return MeasureSpec(
            support=coeffs.support,
            density=coeffs.user_measure,
            gauss_rule=lambda n: golub_welsch(coeffs, n),
            symmetric=coeffs.symmetric,
        )
    raise FamilyError(f"{coeffs.name}: custom family has no user-supplied measure")


def orthonormality_defect(coeffs: CoefficientSequence, n_max: int,
                          nodes: int, measure: Optional[MeasureSpec] = None) -> np.ndarray:
    """
    Gram matrix minus identity, G_mn = int Psi_m Psi_n dmu, for m, n <= n_max

    Returns:
        (n_max+1) x (n_max+1) array of defects
    """
    measure = measure or measure_of(coeffs)
    x, w = measure.gauss_rule(nodes)
    table = eval_poly_table(coeffs, n_max, x)
    gram = (table * w) @ table.T
    return gram - np.eye(n_max + 1)
