"""
Coherent States
Eigenvectors of the annihilation operator as weighted power series in z

    |z> = S^{-1/2} sum_n z^n / prod_{k<n} (sqrt(2) |b_k|) |n>,
    S(|z|^2) = sum_n |z|^{2n} / (2 b^2_{n-1})!
"""
import logging
import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from config import Config
from errors import ConvergenceError, DomainError, SeriesOverflowError
from oscillator.operators import lowering_shift
from recurrence.families import CoefficientSequence, eval_poly_table
from specfun.control import default_control

logger = logging.getLogger(__name__)

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class DomainOfDefinition:
    """Open disk |z| < radius where the coherent-state series converges"""
    radius: float
    radius_squared: float

    def contains(self, z: complex) -> bool:
        return self.contains_squared(abs(z) ** 2)

    def contains_squared(self, t: float) -> bool:
        """t = |z|^2 compared with 2 lim b_n^2 directly"""
        return t < self.radius_squared

    def describe(self) -> str:
        if math.isinf(self.radius):
            return "the whole complex plane"
        if math.isclose(self.radius, 1.0 / SQRT2):
            return f"|z| < 1/sqrt(2) = {self.radius:.7f}"
        return f"|z| < {self.radius:.7g}"


def domain_of(coeffs: CoefficientSequence) -> DomainOfDefinition:
    """
    Radius sqrt(2 lim b_n^2): 1/sqrt(2) for Legendre and Chebyshev, infinite for
    Hermite and Laguerre. Families with unknown limit get the whole plane and
    rely on the series divergence guard.
    """
    limit = coeffs.b_squared_limit
    if limit is None:
        logger.debug(f"{coeffs.name}: no lim b_n^2 recorded, domain left unbounded")
        return DomainOfDefinition(math.inf, math.inf)
    return DomainOfDefinition(math.sqrt(2.0 * limit), 2.0 * limit)


def _b_squared_floor(coeffs: CoefficientSequence, n: int) -> float:
    """Lower bound on b_k^2 for k >= n, used by geometric tail majorants"""
    value = coeffs.b_squared(n)
    limit = coeffs.b_squared_limit
    return min(value, limit) if limit is not None else value


def generalized_exp(coeffs: CoefficientSequence, w: Union[float, complex],
                    rel_tol: Optional[float] = None) -> complex:
    """
    Generalized exponential sum_n w^n / (2 b^2_{n-1})! for complex w

    Stops once a geometric majorant of the remaining terms is below rel_tol
    relative to the partial sum.

    Raises:
        SeriesOverflowError: partial sums left the floating-point range
        ConvergenceError: the terms did not decay within the series cap
    """
    ctl = default_control(rel_tol)
    w = complex(w)
    modulus = abs(w)
    term = complex(1.0)
    total = complex(1.0)
    if modulus == 0:
        return total

    for n in range(ctl.max_terms):
        term *= w / (2.0 * coeffs.b_squared(n))
        total += term
        if not (math.isfinite(total.real) and math.isfinite(total.imag)):
            raise SeriesOverflowError(f"{coeffs.name}: generalized exponential overflowed at w={w}")
        q = modulus / (2.0 * _b_squared_floor(coeffs, n + 1))
        if q < 1.0 and (term == 0 or abs(term) * q / (1.0 - q) <= ctl.rel_tol * abs(total)):
            logger.debug(f"{coeffs.name}: generalized exponential at w={w} took {n + 1} terms")
            return total

    raise ConvergenceError(
        f"{coeffs.name}: generalized exponential at |w|={modulus:.6g} did not converge "
        f"within {ctl.max_terms} terms"
    )


def _require_inside(coeffs: CoefficientSequence, z: complex):
    domain = domain_of(coeffs)
    if not domain.contains(z):
        raise DomainError(
            f"{coeffs.name}: z={z} lies outside the domain of definition {domain.describe()}"
        )


def normalization_sum(coeffs: CoefficientSequence, t: float,
                      rel_tol: Optional[float] = None,
                      enforce_domain: bool = True) -> float:
    """
    Normalization sum S(t) = sum_n t^n / (2 b^2_{n-1})!

    Args:
        coeffs: Recurrence data
        t: |z|^2, t >= 0
        rel_tol: Series tolerance (Config.SERIES_REL_TOL by default)
        enforce_domain: Reject t >= radius^2 up front; when False the series
            runs and its divergence guard decides

    Returns:
        S(t)
    """
    if t < 0:
        raise DomainError(f"normalization_sum needs t >= 0, got {t}")
    if enforce_domain:
        domain = domain_of(coeffs)
        if not domain.contains_squared(t):
            raise DomainError(
                f"{coeffs.name}: |z| = {math.sqrt(t):.7g} outside the domain {domain.describe()}"
            )
    return generalized_exp(coeffs, t, rel_tol).real


@dataclass(frozen=True)
class CoherentStateVector:
    """Truncated coherent state: coefficients c_0..c_{dim-1} in the Fock basis"""
    z: complex
    dim: int
    coefficients: np.ndarray
    S: float
    tail_bound: float
    family: CoefficientSequence

    @property
    def norm_squared(self) -> float:
        return float(np.sum(np.abs(self.coefficients) ** 2))

    def as_array(self) -> np.ndarray:
        return self.coefficients.copy()


def _tail_bound(coeffs: CoefficientSequence, t: float, last_sq: float, dim: int) -> float:
    """Geometric majorant of sum_{n >= dim} |c_n|^2 given |c_{dim-1}|^2"""
    if t == 0 or last_sq == 0:
        return 0.0
    next_sq = last_sq * t / (2.0 * coeffs.b_squared(dim - 1))
    q = t / (2.0 * _b_squared_floor(coeffs, dim))
    return next_sq / (1.0 - q) if q < 1.0 else math.inf


def coherent_state(coeffs: CoefficientSequence, z: complex,
                   dim: Optional[int] = None,
                   tail_tol: Optional[float] = None) -> CoherentStateVector:
    """
    Coherent state |z> truncated to dim Fock levels

    Args:
        coeffs: Recurrence data
        z: Point inside the domain of definition
        dim: Number of levels; by default the smallest dim whose tail bound is
            below tail_tol, capped by Config.MAX_DIM
        tail_tol: Bound on sum_{n >= dim} |c_n|^2 (Config.TAIL_TOL by default)

    Returns:
        CoherentStateVector with S and the tail bound
    """
    z = complex(z)
    _require_inside(coeffs, z)
    if dim is not None and dim < 1:
        raise DomainError(f"coherent_state needs dim >= 1, got {dim}")
    if dim is not None and dim > Config.MAX_DIM:
        logger.warning(f"dim={dim} capped at MAX_DIM={Config.MAX_DIM}")
        dim = Config.MAX_DIM

    tail_tol = Config.TAIL_TOL if tail_tol is None else tail_tol
    t = abs(z) ** 2
    S = normalization_sum(coeffs, t)
    scale = 1.0 / math.sqrt(S)
    limit = dim if dim is not None else Config.MAX_DIM

    values = [complex(scale)]
    tail = _tail_bound(coeffs, t, abs(values[0]) ** 2, 1)
    while len(values) < limit:
        if dim is None and len(values) >= 2 and tail < tail_tol:
            break
        n = len(values)
        values.append(values[-1] * z / (SQRT2 * abs(coeffs.b_signed(n - 1))))
        tail = _tail_bound(coeffs, t, abs(values[-1]) ** 2, len(values))

    if dim is None and tail >= tail_tol:
        logger.warning(f"{coeffs.name}: z={z} needs more than MAX_DIM={Config.MAX_DIM} "
                       f"levels; tail bound {tail:.3e}")
    logger.debug(f"{coeffs.name}: coherent state at z={z} uses dim={len(values)}")
    return CoherentStateVector(
        z=z,
        dim=len(values),
        coefficients=np.array(values, dtype=complex),
        S=S,
        tail_bound=tail,
        family=coeffs,
    )


def overlap(coeffs: CoefficientSequence, z1: complex, z2: complex,
            rel_tol: Optional[float] = None) -> complex:
    """
    <z1|z2> = E(conj(z1) z2) / sqrt(S(|z1|^2) S(|z2|^2)), E the generalized exponential
    """
    z1, z2 = complex(z1), complex(z2)
    _require_inside(coeffs, z1)
    _require_inside(coeffs, z2)
    numerator = generalized_exp(coeffs, z1.conjugate() * z2, rel_tol)
    s1 = normalization_sum(coeffs, abs(z1) ** 2, rel_tol)
    s2 = normalization_sum(coeffs, abs(z2) ** 2, rel_tol)
    return numerator / math.sqrt(s1 * s2)


def eigen_residual(coeffs: CoefficientSequence, state: CoherentStateVector) -> float:
    """||(a - z) c|| over indices < dim - 1, a the lowering shift with weights sqrt(2)|b_n|"""
    if state.dim < 2:
        raise DomainError("eigen_residual needs a state with dim >= 2")
    lower = lowering_shift(coeffs, state.dim).entries
    residual = lower @ state.coefficients - state.z * state.coefficients
    return float(np.linalg.norm(residual[:state.dim - 1]))


def series_wavefunction(coeffs: CoefficientSequence, z: complex, x,
                        dim: Optional[int] = None):
    """
    Position representation sum_n c_n Psi_n(x) of the truncated state

    Without dim the state is cut where the squared tail drops below
    Config.WAVEFUNCTION_TAIL_TOL, so the pointwise error is of order
    sqrt(tail) max |Psi_n(x)| rather than sqrt(Config.TAIL_TOL).

    Returns:
        Complex scalar for scalar x, else a complex array shaped like x
    """
    state = coherent_state(coeffs, z, dim, tail_tol=Config.WAVEFUNCTION_TAIL_TOL)
    table = eval_poly_table(coeffs, state.dim - 1, x)
    value = np.tensordot(state.coefficients, table, axes=1)
    if dim is None:
        last = float(np.max(np.abs(state.coefficients[-1] * table[-1])))
        logger.debug(f"{coeffs.name}: wavefunction at z={z} uses dim={state.dim}, "
                     f"last term {last:.2e}")
    return complex(value) if np.ndim(value) == 0 else value
