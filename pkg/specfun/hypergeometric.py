"""
Gauss hypergeometric function 2F1 inside the unit disk
"""
import logging
from typing import Optional, Union

from errors import ConvergenceError, DomainError
from specfun.control import SeriesControl, default_control

logger = logging.getLogger(__name__)

Number = Union[float, complex]


def _nonpositive_integer(value: float) -> bool:
    return value <= 0 and float(value).is_integer()


def gauss_2f1(a: float, b: float, c: float, w: Number,
              ctl: Optional[SeriesControl] = None) -> complex:
    """
    Direct power series sum_n (a)_n (b)_n / ((c)_n n!) w^n

    Args:
        a, b, c: Real parameters, c not a nonpositive integer
        w: Argument with |w| < 1 (terminating series accept any w)
        ctl: Series control (defaults from Config)

    Returns:
        2F1(a, b; c; w) as a complex number
    """
    ctl = ctl or default_control()
    if _nonpositive_integer(c):
        raise DomainError(f"2F1 undefined for c={c} (nonpositive integer)")

    w = complex(w)
    modulus = abs(w)
    terminating = _nonpositive_integer(a) or _nonpositive_integer(b)
    if modulus >= 1.0 and not terminating:
        raise DomainError(f"2F1 series supported only for |w| < 1, got |w|={modulus:.6g}")

    term = complex(1.0)
    total = complex(1.0)
    for n in range(ctl.max_terms):
        factor = (a + n) * (b + n) / ((c + n) * (n + 1))
        term *= factor * w
        total += term
        if term == 0:
            return total
        ratio = abs(factor) * modulus
        majorant = max(ratio, modulus)
        if majorant < 1.0 and abs(term) * majorant / (1.0 - majorant) <= ctl.rel_tol * abs(total):
            logger.debug(f"2F1({a},{b};{c};{w}) converged after {n + 1} terms")
            return total

    raise ConvergenceError(
        f"2F1({a},{b};{c};{w}) did not converge within {ctl.max_terms} terms"
    )
