"""
Closed Forms of Coherent States
Resummed normalizations, wavefunctions and overlaps for the Laguerre,
Legendre and Chebyshev oscillators, next to the formulas as usually printed.

The resummed forms follow from generating functions and agree with the
series; the printed forms are evaluated literally and only reported.
"""
import cmath
import logging
import math
from dataclasses import dataclass
from typing import Optional

from errors import ConvergenceError, DomainError
from recurrence.families import builtin_family
from coherent.states import SQRT2, series_wavefunction
from specfun.bessel import bessel_i, bessel_i_reduced
from specfun.gamma import gamma_fn
from specfun.hypergeometric import gauss_2f1

logger = logging.getLogger(__name__)

# |1 - s x| below this is reported as branch-point proximity
BRANCH_POINT_TOL = 1e-8


@dataclass(frozen=True)
class ClosedForms:
    """Normalization S(|z|^2), resummed wavefunction and the printed variant (None if undefined)"""
    norm: float
    wavefunction: complex
    printed_wavefunction: Optional[complex] = None

    @property
    def printed_ratio(self) -> Optional[complex]:
        if self.printed_wavefunction is None or self.printed_wavefunction == 0:
            return None
        return self.wavefunction / self.printed_wavefunction


def _check_unit_half_disk(z: complex):
    if not abs(z) < 1.0 / SQRT2:
        raise DomainError(f"z={z} outside the domain |z| < 1/sqrt(2)")


# ----------------------------------------------------------------------------- Hermite

def hermite_closed_forms(z: complex, x: float) -> ClosedForms:
    """Glauber state exp(-|z|^2/2) exp(sqrt(2) x z - z^2/2) with S = exp(|z|^2)"""
    z = complex(z)
    t = abs(z) ** 2
    wavefunction = cmath.exp(-0.5 * t + SQRT2 * x * z - 0.5 * z * z)
    return ClosedForms(norm=math.exp(t), wavefunction=wavefunction)


# ----------------------------------------------------------------------------- Laguerre

def laguerre_norm(alpha: float, z: complex) -> float:
    """Gamma(alpha+1) (sqrt(2)/|z|)^alpha I_alpha(sqrt(2)|z|), with limit 1 at z = 0"""
    modulus = abs(z)
    if modulus == 0:
        return 1.0
    y = SQRT2 * modulus
    return gamma_fn(alpha + 1.0) * (2.0 / y) ** alpha * bessel_i(alpha, y)


def _laguerre_printed(alpha: float, z: complex, x: float) -> Optional[complex]:
    if not (z.imag == 0 and z.real > 0 and x > 0):
        return None
    zr = z.real
    numerator = math.exp(zr / SQRT2) * bessel_i(alpha, 2 ** 0.75 * math.sqrt(x * zr))
    return complex(numerator / ((SQRT2 * x) ** alpha * bessel_i(alpha, SQRT2 * zr)))


def laguerre_closed_forms(alpha: float, z: complex, x: float) -> ClosedForms:
    """
    Laguerre coherent state in closed form

    With s = z/sqrt(2) the unnormalized series sum_n s^n L_n^alpha(x)/(alpha+1)_n
    resums to Gamma(alpha+1) e^s R(-x s), R(q) = sum_n q^n/(n! Gamma(alpha+n+1)),
    which is the Bessel J generating function and stays finite at x = 0.

    Args:
        alpha: Laguerre parameter, alpha > -1
        z: Any complex point
        x: Position, x >= 0

    Returns:
        ClosedForms; the printed variant exists for real z > 0 and x > 0
    """
    if not alpha > -1:
        raise DomainError(f"Laguerre closed forms need alpha > -1, got {alpha}")
    if x < 0:
        raise DomainError(f"Laguerre wavefunction needs x >= 0, got {x}")
    z = complex(z)
    norm = laguerre_norm(alpha, z)
    s = z / SQRT2
    unnormalized = gamma_fn(alpha + 1.0) * cmath.exp(s) * bessel_i_reduced(alpha, -x * s)
    forms = ClosedForms(norm=norm,
                        wavefunction=unnormalized / math.sqrt(norm),
                        printed_wavefunction=_laguerre_printed(alpha, z, x))
    if forms.printed_ratio is not None:
        logger.info(f"laguerre(alpha={alpha:g}): resummed/printed wavefunction ratio "
                    f"{forms.printed_ratio:.6g} at z={z}, x={x}")
    return forms


def laguerre_overlap(alpha: float, z1: complex, z2: complex) -> complex:
    """<z1|z2> = Gamma(alpha+1) R(conj(z1) z2 / 2) / sqrt(S1 S2)"""
    if not alpha > -1:
        raise DomainError(f"Laguerre overlap needs alpha > -1, got {alpha}")
    z1, z2 = complex(z1), complex(z2)
    numerator = gamma_fn(alpha + 1.0) * bessel_i_reduced(alpha, 0.5 * z1.conjugate() * z2)
    return numerator / math.sqrt(laguerre_norm(alpha, z1) * laguerre_norm(alpha, z2))


def laguerre_overlap_printed(alpha: float, z1: complex, z2: complex) -> Optional[float]:
    """I_alpha(2 sqrt(conj(z1) z2)) / sqrt(I_alpha(sqrt(2)|z1|) I_alpha(sqrt(2)|z2|)) for real conj(z1) z2 > 0"""
    w = complex(z1).conjugate() * complex(z2)
    if w.imag != 0 or w.real <= 0:
        return None
    denominator = bessel_i(alpha, SQRT2 * abs(z1)) * bessel_i(alpha, SQRT2 * abs(z2))
    return bessel_i(alpha, 2.0 * math.sqrt(w.real)) / math.sqrt(denominator)


# ----------------------------------------------------------------------------- Legendre

def legendre_norm(z: complex) -> float:
    """2F1(1/2, 3/2; 1; 2|z|^2)"""
    _check_unit_half_disk(z)
    return gauss_2f1(0.5, 1.5, 1.0, 2.0 * abs(z) ** 2).real


def _legendre_generating(s: complex, x: float) -> complex:
    """sum_n (3/2)_n / n! P_n(x) s^n on the principal branch"""
    base = 1.0 - s * x
    if abs(base) < BRANCH_POINT_TOL:
        logger.warning(f"Legendre wavefunction near its branch point: |1 - s x| = {abs(base):.3e}")
    argument = s * s * (x * x - 1.0) / (base * base)
    return base ** -1.5 * gauss_2f1(0.75, 1.25, 1.0, argument)


def legendre_closed_forms(z: complex, x: float) -> ClosedForms:
    """
    Legendre coherent state in closed form

    The series sum_n c_n sqrt(2n+1) P_n(x) resums with s = sqrt(2) z; the
    printed variant uses s = 2 z and is None wherever it cannot be evaluated.

    Args:
        z: |z| < 1/sqrt(2)
        x: Position in [-1, 1]
    """
    z = complex(z)
    _check_unit_half_disk(z)
    if not -1.0 <= x <= 1.0:
        raise DomainError(f"Legendre wavefunction needs x in [-1, 1], got {x}")
    norm = legendre_norm(z)
    wavefunction = _legendre_generating(SQRT2 * z, x) / math.sqrt(norm)
    try:
        printed = _legendre_generating(2.0 * z, x) / math.sqrt(norm)
    except (DomainError, ConvergenceError, ZeroDivisionError) as e:
        logger.info(f"printed Legendre wavefunction undefined at z={z}, x={x}: {e}")
        printed = None
    return ClosedForms(norm=norm, wavefunction=wavefunction, printed_wavefunction=printed)


def legendre_overlap(z1: complex, z2: complex) -> complex:
    """2F1(1/2, 3/2; 1; 2 conj(z1) z2) / sqrt(2F1(..; 2|z1|^2) 2F1(..; 2|z2|^2))"""
    z1, z2 = complex(z1), complex(z2)
    numerator = gauss_2f1(0.5, 1.5, 1.0, 2.0 * z1.conjugate() * z2)
    return numerator / math.sqrt(legendre_norm(z1) * legendre_norm(z2))


# ----------------------------------------------------------------------------- Chebyshev

def chebyshev_norm(z: complex) -> float:
    """S = (1 - |z|^2) / (1 - 2|z|^2)"""
    _check_unit_half_disk(z)
    t = abs(z) ** 2
    return (1.0 - t) / (1.0 - 2.0 * t)


def chebyshev_resummed(z: complex, x: float) -> complex:
    """sqrt((1-2|z|^2)/(1-|z|^2)) (1 - sqrt(2) z x) / (1 - 2 sqrt(2) z x + 2 z^2)"""
    z = complex(z)
    u = SQRT2 * z
    return ((1.0 - u * x) / (1.0 - 2.0 * u * x + u * u)) / math.sqrt(chebyshev_norm(z))


def chebyshev_printed(z: complex, x: float) -> complex:
    """sqrt(2)/(1 - 2|z|^2) (1 - sqrt(2) z x) / (1 - 2 sqrt(2) z x + 2 z^2)"""
    z = complex(z)
    u = SQRT2 * z
    return SQRT2 / (1.0 - 2.0 * abs(z) ** 2) * (1.0 - u * x) / (1.0 - 2.0 * u * x + u * u)


def chebyshev_closed_forms(z: complex, x: float) -> ClosedForms:
    """Resummed and printed Chebyshev wavefunctions, x in (-1, 1)"""
    z = complex(z)
    _check_unit_half_disk(z)
    if not -1.0 < x < 1.0:
        raise DomainError(f"Chebyshev wavefunction needs -1 < x < 1, got {x}")
    return ClosedForms(norm=chebyshev_norm(z),
                       wavefunction=chebyshev_resummed(z, x),
                       printed_wavefunction=chebyshev_printed(z, x))


def chebyshev_closed_form(z: complex, x: float, dim: Optional[int] = None) -> complex:
    """
    Chebyshev coherent state at x as the series sum_n c_n Psi_n(x)

    The ratio to the printed form is logged; at z = 0 it is 1/sqrt(2).
    """
    forms = chebyshev_closed_forms(z, x)
    value = series_wavefunction(builtin_family("chebyshev_first"), z, x, dim)
    logger.info(f"chebyshev: series/printed ratio {value / forms.printed_wavefunction:.6g} "
                f"at z={complex(z)}, x={x}")
    return value
