"""
Recurrence Coefficient Families
Defines the three-term recurrence data {a_n, b_n} of a polynomial family and
evaluates the orthonormal polynomials and generalized factorials built from it
"""
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, Optional, Tuple, Union

import numpy as np

from errors import DomainError, FamilyError, SeriesOverflowError

logger = logging.getLogger(__name__)


class FamilyLabel(Enum):
    """Polynomial families known to the library"""
    HERMITE = "hermite"
    LAGUERRE = "laguerre"
    LEGENDRE = "legendre"
    CHEBYSHEV_FIRST = "chebyshev_first"
    CUSTOM = "custom"


# leading coefficients validated by custom_family
CUSTOM_CHECKED_TERMS = 16

# accepted spellings on the command line and in config files
_LABEL_ALIASES = {
    "chebyshev": FamilyLabel.CHEBYSHEV_FIRST,
    "chebyshev1": FamilyLabel.CHEBYSHEV_FIRST,
}


def parse_family_label(label: Union[str, FamilyLabel]) -> FamilyLabel:
    """Turn a label or alias into a FamilyLabel"""
    if isinstance(label, FamilyLabel):
        return label
    key = str(label).strip().lower()
    if key in _LABEL_ALIASES:
        return _LABEL_ALIASES[key]
    try:
        return FamilyLabel(key)
    except ValueError:
        known = ", ".join(l.value for l in FamilyLabel if l is not FamilyLabel.CUSTOM)
        raise FamilyError(f"Unknown family '{label}' (known: {known})") from None


@dataclass(frozen=True)
class CoefficientSequence:
    """
    Recurrence data of an orthonormal polynomial family

        x Psi_n = b_n Psi_{n+1} + a_n Psi_n + b_{n-1} Psi_{n-1},  Psi_0 = 1

    b_{-1} = 0 is applied by the accessors, never stored.
    """
    family_label: FamilyLabel
    params: Dict[str, float]
    a: Callable[[int], float]
    b: Callable[[int], float]
    symmetric: bool
    support: Tuple[float, float]
    b_squared_limit: Optional[float] = None  # lim b_n^2; inf when unbounded
    exact_b_squared: Optional[Callable[[int], Fraction]] = None
    user_measure: Optional[Callable[[np.ndarray], np.ndarray]] = field(default=None, compare=False)

    @property
    def name(self) -> str:
        """Human-readable label including parameters"""
        if not self.params:
            return self.family_label.value
        args = ",".join(f"{k}={v:g}" for k, v in sorted(self.params.items()))
        return f"{self.family_label.value}({args})"

    def a_value(self, n: int) -> float:
        """Diagonal term, zero for symmetric families"""
        if n < 0 or self.symmetric:
            return 0.0
        return float(self.a(n))

    def b_signed(self, n: int) -> float:
        """Off-diagonal term with its stored sign, b_{-1} = 0"""
        if n < 0:
            return 0.0
        return float(self.b(n))

    def b_squared(self, n: int) -> float:
        """b_n^2 with b_{-1} = 0"""
        value = self.b_signed(n)
        return value * value

    def b_squared_exact(self, n: int) -> Fraction:
        """b_n^2 as an exact fraction (rational families only)"""
        if self.exact_b_squared is None:
            raise FamilyError(f"{self.name} has no exact rational b_n^2")
        if n < 0:
            return Fraction(0)
        return self.exact_b_squared(n)

    def to_dict(self) -> Dict[str, Any]:
        """Export the identifying data"""
        return {
            'family': self.family_label.value,
            'params': dict(self.params),
            'symmetric': self.symmetric,
            'support': list(self.support),
        }


def _hermite() -> CoefficientSequence:
    return CoefficientSequence(
        family_label=FamilyLabel.HERMITE,
        params={},
        a=lambda n: 0.0,
        b=lambda n: math.sqrt((n + 1) / 2.0),
        symmetric=True,
        support=(-math.inf, math.inf),
        b_squared_limit=math.inf,
        exact_b_squared=lambda n: Fraction(n + 1, 2),
    )


def _laguerre(alpha: float) -> CoefficientSequence:
    if not alpha > -1.0:
        raise FamilyError(f"Laguerre family needs alpha > -1, got {alpha}")
    return CoefficientSequence(
        family_label=FamilyLabel.LAGUERRE,
        params={'alpha': float(alpha)},
        a=lambda n: 2.0 * n + alpha + 1.0,
        # negative b_n; quadratic quantities only see b_n^2
        b=lambda n: -math.sqrt((n + 1) * (n + alpha + 1.0)),
        symmetric=False,
        support=(0.0, math.inf),
        b_squared_limit=math.inf,
    )


def _legendre() -> CoefficientSequence:
    return CoefficientSequence(
        family_label=FamilyLabel.LEGENDRE,
        params={},
        a=lambda n: 0.0,
        b=lambda n: (n + 1) / math.sqrt((2 * n + 1) * (2 * n + 3)),
        symmetric=True,
        support=(-1.0, 1.0),
        b_squared_limit=0.25,
        exact_b_squared=lambda n: Fraction((n + 1) ** 2, (2 * n + 1) * (2 * n + 3)),
    )


def _chebyshev_first() -> CoefficientSequence:
    return CoefficientSequence(
        family_label=FamilyLabel.CHEBYSHEV_FIRST,
        params={},
        a=lambda n: 0.0,
        b=lambda n: 1.0 / math.sqrt(2.0) if n == 0 else 0.5,
        symmetric=True,
        support=(-1.0, 1.0),
        b_squared_limit=0.25,
        exact_b_squared=lambda n: Fraction(1, 2) if n == 0 else Fraction(1, 4),
    )


def builtin_family(label: Union[str, FamilyLabel], **params: float) -> CoefficientSequence:
    """
    Recurrence coefficients of a builtin family

    Args:
        label: hermite, laguerre, legendre or chebyshev_first (alias chebyshev)
        **params: Family parameters; Laguerre takes alpha (default 0)

    Returns:
        CoefficientSequence of the family
    """
    family = parse_family_label(label)
    if family is FamilyLabel.HERMITE:
        return _hermite()
    if family is FamilyLabel.LAGUERRE:
        return _laguerre(float(params.get('alpha', 0.0)))
    if family is FamilyLabel.LEGENDRE:
        return _legendre()
    if family is FamilyLabel.CHEBYSHEV_FIRST:
        return _chebyshev_first()
    raise FamilyError("The custom family is built with custom_family(), not builtin_family()")


def custom_family(a: Callable[[int], float], b: Callable[[int], float], *,
                  symmetric: bool, support: Tuple[float, float],
                  b_squared_limit: Optional[float] = None,
                  measure: Optional[Callable[[np.ndarray], np.ndarray]] = None,
                  params: Optional[Dict[str, float]] = None) -> CoefficientSequence:
    """
    User-defined recurrence data

    Args:
        a, b: Coefficient callables
        symmetric: Whether the orthogonality measure is symmetric; a_n must then vanish
        support: Interval carrying the measure
        b_squared_limit: lim b_n^2 if known, used for domain radii and tail bounds
        measure: Probability density of the orthogonality measure; its Gauss
            rules come from the family's own Jacobi matrix (Golub-Welsch)
        params: Free-form parameters recorded in reports

    Raises:
        FamilyError: a leading coefficient is not finite, some b_n vanishes
            (reducible Jacobi matrix) or a symmetric family has a_n != 0
    """
    for n in range(CUSTOM_CHECKED_TERMS):
        a_n, b_n = float(a(n)), float(b(n))
        if not (math.isfinite(a_n) and math.isfinite(b_n)):
            raise FamilyError(f"custom family: a_{n}={a_n}, b_{n}={b_n} must be finite")
        if b_n == 0:
            raise FamilyError(f"custom family: b_{n} must be nonzero (irreducible Jacobi matrix)")
        if symmetric and a_n != 0:
            raise FamilyError(f"custom family declared symmetric but a_{n}={a_n}")
    if b_squared_limit is not None and not b_squared_limit > 0:
        raise FamilyError(f"custom family: lim b_n^2 must be positive, got {b_squared_limit}")
    return CoefficientSequence(
        family_label=FamilyLabel.CUSTOM,
        params=dict(params or {}),
        a=a,
        b=b,
        symmetric=symmetric,
        support=support,
        b_squared_limit=b_squared_limit,
        user_measure=measure,
    )


def eval_poly_table(coeffs: CoefficientSequence, n_max: int, x) -> np.ndarray:
    """
    Psi_0 .. Psi_{n_max} at the points x by forward recurrence

    Returns:
        Array of shape (n_max + 1,) + shape(x)
    """
    if n_max < 0:
        raise DomainError(f"Polynomial degree must be nonnegative, got {n_max}")
    x = np.asarray(x, dtype=float)
    table = np.empty((n_max + 1,) + x.shape)
    table[0] = 1.0
    previous = np.zeros_like(x)
    with np.errstate(over='ignore', invalid='ignore'):
        for n in range(n_max):
            current = table[n]
            table[n + 1] = ((x - coeffs.a_value(n)) * current
                            - coeffs.b_signed(n - 1) * previous) / coeffs.b_signed(n)
            previous = current
    if not np.all(np.isfinite(table)):
        raise SeriesOverflowError(
            f"{coeffs.name}: recurrence overflowed for degree <= {n_max}"
        )
    return table


def eval_poly(coeffs: CoefficientSequence, n: int, x):
    """
    Orthonormal polynomial Psi_n(x)

    Args:
        coeffs: Recurrence data
        n: Degree, n >= 0
        x: Scalar or array of points

    Returns:
        Psi_n(x), float for scalar x
    """
    value = eval_poly_table(coeffs, n, x)[n]
    return float(value) if np.ndim(value) == 0 else value


def gen_factorial(coeffs: CoefficientSequence, n: int, scale: float) -> float:
    """
    Generalized factorial (scale b^2_{n-1})! = prod_{k<n} scale * b_k^2

    The empty product (n <= 0) is 1.
    """
    result = 1.0
    for k in range(n):
        result *= scale * coeffs.b_squared(k)
    return result


def gen_factorial_exact(coeffs: CoefficientSequence, n: int,
                        scale: Union[int, Fraction] = 2) -> Fraction:
    """Exact rational version of gen_factorial"""
    result = Fraction(1)
    for k in range(n):
        result *= scale * coeffs.b_squared_exact(k)
    return result
