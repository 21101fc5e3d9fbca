r"""Modified Bessel functions of the first and second kind.

``I_alpha`` is summed from its power series.  ``K_alpha`` uses the reflection
formula

.. math::
    K_\alpha(x) = \frac{\pi}{2} \frac{I_{-\alpha}(x) - I_\alpha(x)}{\sin \pi\alpha}

for small arguments at non-integer order. Integer orders below ``x = 2`` sum the
logarithmic series with digamma weights. Larger arguments use the exponentially
scaled integral

.. math::
    e^{x} K_\alpha(x) = \int_0^\infty e^{-x(\cosh t - 1)} \cosh(\alpha t)\, dt

where the reflection difference would cancel catastrophically.
"""
import logging
import math
from typing import Optional, Union

from scipy import integrate

from errors import ConvergenceError, DomainError
from specfun.control import SeriesControl, default_control
from specfun.gamma import reciprocal_gamma

logger = logging.getLogger(__name__)

# switch from the reflection formula to the integral representation
K_SERIES_LIMIT = 2.0
EULER_GAMMA = 0.5772156649015329


def _is_integer(value: float) -> bool:
    return float(value).is_integer()


def _power_series(first: float, q: float, alpha: float, ctl: SeriesControl) -> float:
    """Sum first * sum_n q^n / (n! (alpha+1)_n) with a geometric tail bound"""
    term = first
    total = first
    for n in range(ctl.max_terms):
        ratio = q / ((n + 1) * (alpha + n + 1))
        term *= ratio
        total += term
        r = abs(ratio)
        # ratios decrease monotonically once alpha + n + 1 > 0
        if alpha + n + 1 > 0 and r < 1.0:
            if term == 0 or abs(term) * r / (1.0 - r) <= ctl.rel_tol * abs(total):
                return total
    raise ConvergenceError(f"Bessel series (alpha={alpha}) did not converge")


def bessel_i(alpha: float, x: float, ctl: Optional[SeriesControl] = None,
             scaled: bool = False) -> float:
    """
    Modified Bessel function I_alpha(x) by its power series

    Args:
        alpha: Real order (negative integers fold onto |alpha|)
        x: Argument, x >= 0
        ctl: Series control
        scaled: Return exp(-x) * I_alpha(x)

    Returns:
        I_alpha(x), or its scaled value
    """
    ctl = ctl or default_control()
    if x < 0:
        raise DomainError(f"bessel_i needs x >= 0, got {x}")
    if alpha < 0 and _is_integer(alpha):
        alpha = -alpha
    if x == 0:
        if alpha == 0:
            return 1.0
        if alpha > 0:
            return 0.0
        raise DomainError(f"I_{alpha}(0) is infinite")

    log_first = alpha * math.log(x / 2.0) - (x if scaled else 0.0)
    first = math.exp(log_first) * reciprocal_gamma(alpha + 1.0)
    return _power_series(first, x * x / 4.0, alpha, ctl)


def bessel_i_reduced(alpha: float, q: Union[float, complex],
                     ctl: Optional[SeriesControl] = None) -> complex:
    """
    Entire function sum_n q^n / (n! Gamma(alpha+n+1))

    Equals (y/2)^-alpha I_alpha(y) for q = y^2/4 and (y/2)^-alpha J_alpha(y)
    for q = -y^2/4, without any branch choice.
    """
    ctl = ctl or default_control()
    if alpha <= -1:
        raise DomainError(f"bessel_i_reduced needs alpha > -1, got {alpha}")
    q = complex(q)
    term = complex(reciprocal_gamma(alpha + 1.0))
    total = term
    for n in range(ctl.max_terms):
        ratio = q / ((n + 1) * (alpha + n + 1))
        term *= ratio
        total += term
        r = abs(ratio)
        if r < 1.0 and (term == 0 or abs(term) * r / (1.0 - r) <= ctl.rel_tol * abs(total)):
            return total
    raise ConvergenceError(f"reduced Bessel series (alpha={alpha}, q={q}) did not converge")


def _k_reflection(alpha: float, x: float, ctl: SeriesControl) -> float:
    denominator = 2.0 * math.sin(math.pi * alpha)
    return math.pi * (bessel_i(-alpha, x, ctl) - bessel_i(alpha, x, ctl)) / denominator


def _k_integer_order(n: int, x: float, ctl: SeriesControl) -> float:
    """
    K_n(x) for integer n >= 0 from the logarithmic series

        K_n = 1/2 (x/2)^-n sum_{k<n} (n-k-1)!/k! (-x^2/4)^k + (-1)^(n+1) ln(x/2) I_n(x)
              + (-1)^n 1/2 (x/2)^n sum_k [psi(k+1) + psi(n+k+1)] (x^2/4)^k / (k! (n+k)!)
    """
    q = x * x / 4.0
    finite = 0.0
    for k in range(n):
        finite += math.factorial(n - k - 1) / math.factorial(k) * (-q) ** k
    finite *= 0.5 * (x / 2.0) ** -n

    # psi(m + 1) = -gamma + H_m
    psi_low = -EULER_GAMMA
    psi_high = -EULER_GAMMA + sum(1.0 / j for j in range(1, n + 1))
    base = 1.0 / math.factorial(n)
    total = base * (psi_low + psi_high)
    for k in range(ctl.max_terms):
        ratio = q / ((k + 1) * (n + k + 1))
        base *= ratio
        psi_low += 1.0 / (k + 1)
        psi_high += 1.0 / (n + k + 1)
        weight = psi_low + psi_high
        total += base * weight
        # weights grow by at most 2 per step while ratio < 1/2
        if ratio < 0.5 and base * (abs(weight) + 2.0) * ratio / (1.0 - ratio) <= ctl.rel_tol * abs(total):
            break
    else:
        raise ConvergenceError(f"K_{n}({x}) series did not converge")

    sign = -1.0 if n % 2 else 1.0
    log_part = -sign * math.log(x / 2.0) * bessel_i(n, x, ctl)
    return finite + log_part + sign * 0.5 * (x / 2.0) ** n * total


def _k_small_argument(alpha: float, x: float, ctl: SeriesControl) -> float:
    if _is_integer(alpha):
        return _k_integer_order(int(alpha), x, ctl)
    return _k_reflection(alpha, x, ctl)


def _k_scaled_integral(alpha: float, x: float) -> float:
    """exp(x) K_alpha(x) by adaptive quadrature of the cosh representation"""
    # past t_max the integrand is below exp(-700)
    t_max = 2.0 * math.asinh(math.sqrt(400.0 / x))
    t_max = 2.0 * math.asinh(math.sqrt((400.0 + alpha * t_max) / x))

    def integrand(t: float) -> float:
        log_cosh = alpha * t + math.log1p(math.exp(-2.0 * alpha * t)) - math.log(2.0)
        return math.exp(-2.0 * x * math.sinh(0.5 * t) ** 2 + log_cosh)

    value, error = integrate.quad(integrand, 0.0, t_max, epsabs=0.0, epsrel=1e-13, limit=200)
    if not math.isfinite(value) or error > 1e-9 * abs(value):
        raise ConvergenceError(f"K_{alpha}({x}) quadrature error estimate {error:.3g}")
    return value


def bessel_k(alpha: float, x: float, ctl: Optional[SeriesControl] = None,
             scaled: bool = False) -> float:
    """
    Modified Bessel function of the second kind K_alpha(x)

    Args:
        alpha: Real order (K is even in the order)
        x: Argument, x > 0
        ctl: Series control for the small-argument branch
        scaled: Return exp(x) * K_alpha(x)

    Returns:
        K_alpha(x), or its scaled value
    """
    ctl = ctl or default_control()
    if x <= 0:
        raise DomainError(f"bessel_k needs x > 0, got {x}")
    alpha = abs(alpha)

    if x <= K_SERIES_LIMIT:
        value = _k_small_argument(alpha, x, ctl)
        return value * math.exp(x) if scaled else value

    value = _k_scaled_integral(alpha, x)
    return value if scaled else value * math.exp(-x)
