"""
Radial Measures
Densities d nu(z) = w(|z|) d(Re z) d(Im z) for the resolution of unity
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Dict

from errors import DomainError, FamilyError
from recurrence.families import FamilyLabel
from specfun.bessel import bessel_i, bessel_k
from specfun.legendre import legendre_p

logger = logging.getLogger(__name__)

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class RadialMeasure:
    """Rotation-invariant density w(r) on the disk r < radius"""
    weight: Callable[[float], float]
    radius: float
    family_label: FamilyLabel
    params: Dict[str, float] = field(default_factory=dict)
    description: str = ""

    def __call__(self, r: float) -> float:
        if not 0.0 < r < self.radius:
            raise DomainError(f"{self.family_label.value} measure evaluated at r={r} "
                              f"outside (0, {self.radius:.7g})")
        return self.weight(r)


def laguerre_measure(alpha: float) -> RadialMeasure:
    """
    w(r) = (sqrt(2)/pi) K_alpha(sqrt(2) r) I_alpha(sqrt(2) r) on the whole plane

    The product is formed from the exponentially scaled K and I.
    """
    if not alpha > -1:
        raise FamilyError(f"Laguerre measure needs alpha > -1, got {alpha}")

    def weight(r: float) -> float:
        y = SQRT2 * r
        return SQRT2 / math.pi * bessel_k(alpha, y, scaled=True) * bessel_i(alpha, y, scaled=True)

    return RadialMeasure(weight=weight, radius=math.inf, family_label=FamilyLabel.LAGUERRE,
                         params={'alpha': float(alpha)},
                         description="(sqrt(2)/pi) K_alpha(sqrt(2)r) I_alpha(sqrt(2)r)")


def legendre_measure() -> RadialMeasure:
    """
    w(r) = [(4r^2 - 5) P_{1/2}(r^2 - 1) - 3 P_{3/2}(r^2 - 1)] / (2 (r^2 - 2)) for r < 1/sqrt(2)
    """
    def weight(r: float) -> float:
        t = r * r
        p_half = legendre_p(0.5, t - 1.0, one_plus_x=t)
        p_three_halves = legendre_p(1.5, t - 1.0, one_plus_x=t)
        return ((4.0 * t - 5.0) * p_half - 3.0 * p_three_halves) / (2.0 * (t - 2.0))

    return RadialMeasure(weight=weight, radius=1.0 / SQRT2, family_label=FamilyLabel.LEGENDRE,
                         description="[(4r^2-5)P_1/2(r^2-1) - 3P_3/2(r^2-1)] / (2(r^2-2))")


def hermite_measure() -> RadialMeasure:
    """Flat density 1/pi, the Glauber measure that resolves the boson identity"""
    return RadialMeasure(weight=lambda r: 1.0 / math.pi, radius=math.inf,
                         family_label=FamilyLabel.HERMITE, description="1/pi")
