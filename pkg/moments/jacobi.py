"""
Jacobi Matrix Moments
Truncations of the Jacobi matrix and the moments mu_k = <e_0, J^k e_0>
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

import numpy as np

from config import Config
from errors import DomainError, InsufficientDataError
from recurrence.families import CoefficientSequence
from recurrence.measures import MeasureSpec, measure_of

logger = logging.getLogger(__name__)


class MomentSource(Enum):
    """Where a moment table came from"""
    JACOBI_POWER = "jacobi_power"
    QUADRATURE = "quadrature"


@dataclass(frozen=True)
class MomentTable:
    """Moments mu_0 .. mu_K of an orthogonality measure"""
    values: Sequence[float]
    source: MomentSource

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k: int) -> float:
        return float(self.values[k])

    @property
    def k_max(self) -> int:
        return len(self.values) - 1

    def odd_defect(self) -> float:
        """Largest |mu_{2k+1}|, zero for a symmetric measure"""
        odd = [abs(self.values[k]) for k in range(1, len(self.values), 2)]
        return max(odd) if odd else 0.0


def jacobi_truncation(coeffs: CoefficientSequence, dim: int) -> np.ndarray:
    """
    Leading dim x dim block of the Jacobi matrix

    Args:
        coeffs: Recurrence data
        dim: Block size, dim >= 1

    Returns:
        Real symmetric tridiagonal array with diagonal a_0.. and off-diagonal b_0..
    """
    if dim < 1:
        raise DomainError(f"Jacobi truncation needs dim >= 1, got {dim}")
    matrix = np.diag([coeffs.a_value(k) for k in range(dim)])
    if dim > 1:
        off = np.array([coeffs.b_signed(k) for k in range(dim - 1)])
        matrix += np.diag(off, 1) + np.diag(off, -1)
    return matrix


def _jacobi_powers(coeffs: CoefficientSequence, k_max: int, dim: int) -> np.ndarray:
    matrix = jacobi_truncation(coeffs, dim)
    vector = np.zeros(dim)
    vector[0] = 1.0
    moments = np.empty(k_max + 1)
    moments[0] = 1.0
    for k in range(1, k_max + 1):
        vector = matrix @ vector
        moments[k] = vector[0]
    return moments


def moment_via_jacobi(coeffs: CoefficientSequence, k: int, dim: int) -> float:
    """
    Moment mu_k as the corner entry of J^k

    Exact for dim > k/2 + 1: a closed walk of length k from e_0 never
    leaves the first floor(k/2) + 1 basis vectors.
    """
    if k < 0:
        raise DomainError(f"Moment index must be nonnegative, got {k}")
    if dim <= k / 2 + 1:
        raise InsufficientDataError(
            f"dim={dim} too small for mu_{k}; need dim > {k / 2 + 1:g}"
        )
    return float(_jacobi_powers(coeffs, k, dim)[k])


def jacobi_moments(coeffs: CoefficientSequence, k_max: int) -> MomentTable:
    """All moments mu_0..mu_{k_max} from one sequence of matrix-vector products"""
    dim = k_max // 2 + 2
    return MomentTable(values=tuple(_jacobi_powers(coeffs, k_max, dim)),
                       source=MomentSource.JACOBI_POWER)


def _symmetrized_rule(x: np.ndarray, w: np.ndarray):
    order = np.argsort(x)
    x, w = x[order], w[order]
    x = 0.5 * (x - x[::-1])
    w = 0.5 * (w + w[::-1])
    return x, w


def quadrature_moments(coeffs: CoefficientSequence, k_max: int,
                       nodes: Optional[int] = None,
                       measure: Optional[MeasureSpec] = None) -> MomentTable:
    """
    Moments by Gauss quadrature against the family's measure

    Rules of symmetric measures are symmetrized and folded onto x > 0: node
    pairs +-x contribute 2 w x^k to even moments and cancel in odd ones, which
    are set to 0.0.
    """
    measure = measure or measure_of(coeffs)
    nodes = nodes or Config.QUADRATURE_NODES
    x, w = measure.gauss_rule(nodes)
    values = np.empty(k_max + 1)
    if measure.symmetric:
        x, w = _symmetrized_rule(np.asarray(x), np.asarray(w))
        half = len(x) // 2
        positive, weights = x[half + len(x) % 2:], w[half + len(x) % 2:]
        centre = w[half] if len(x) % 2 else 0.0
        for k in range(k_max + 1):
            if k % 2:
                values[k] = 0.0
                continue
            values[k] = 2.0 * float(np.dot(weights, np.power(positive, k))) + (centre if k == 0 else 0.0)
    else:
        for k in range(k_max + 1):
            values[k] = float(np.dot(w, np.power(x, k)))
    logger.debug(f"{coeffs.name}: {k_max + 1} quadrature moments with {nodes} nodes")
    return MomentTable(values=tuple(values), source=MomentSource.QUADRATURE)
