"""
Legendre functions of the first kind on the cut (-1, 1)
"""
import logging
import math
from typing import Optional

from errors import DomainError
from specfun.control import SeriesControl, default_control
from specfun.elliptic import elliptic_e, elliptic_k
from specfun.hypergeometric import gauss_2f1

logger = logging.getLogger(__name__)


def _half_integer_order(nu: float) -> bool:
    return float(nu - 0.5).is_integer()


def _legendre_half_integer(nu: float, x: float, one_plus_x: float) -> float:
    """
    P_nu(x) for nu in {-1/2, 1/2, 3/2, ...} via elliptic integrals of m = (1-x)/2

    P_{-1/2} = (2/pi) K(m),  P_{1/2} = (2/pi) (2E(m) - K(m)),
    then (mu+1) P_{mu+1} = (2mu+1) x P_mu - mu P_{mu-1}.
    """
    m1 = 0.5 * one_plus_x
    k = elliptic_k(m1)
    e = elliptic_e(m1)
    previous = 2.0 / math.pi * k
    current = 2.0 / math.pi * (2.0 * e - k)
    if nu == -0.5:
        return previous
    mu = 0.5
    while mu < nu:
        following = ((2.0 * mu + 1.0) * x * current - mu * previous) / (mu + 1.0)
        previous, current = current, following
        mu += 1.0
    return current


def legendre_p(nu: float, x: float, ctl: Optional[SeriesControl] = None,
               one_plus_x: Optional[float] = None) -> float:
    """
    Legendre function P_nu(x) = 2F1(-nu, nu+1; 1; (1-x)/2) for -1 < x < 1

    Args:
        nu: Real degree
        x: Point on the cut
        ctl: Series control for the hypergeometric branch
        one_plus_x: 1 + x when the caller knows it more precisely than x

    Returns:
        P_nu(x)
    """
    if not -1.0 < x < 1.0:
        raise DomainError(f"legendre_p is evaluated on the cut -1 < x < 1, got x={x}")
    if one_plus_x is None:
        one_plus_x = 1.0 + x
    # P_{-nu-1} = P_nu
    if nu < -0.5:
        nu = -nu - 1.0

    if _half_integer_order(nu):
        return _legendre_half_integer(nu, x, one_plus_x)

    ctl = ctl or default_control()
    w = 0.5 * (1.0 - x)
    return gauss_2f1(-nu, nu + 1.0, 1.0, w, ctl).real
