r"""Complete elliptic integrals through Carlson's symmetric forms.

Both integrals take the complementary parameter ``m1 = 1 - m`` so that the
logarithmic end ``m -> 1`` keeps full relative precision:

.. math::
    K(m) = R_F(0, m_1, 1), \qquad
    E(m) = R_F(0, m_1, 1) - \tfrac{m}{3} R_D(0, m_1, 1)

Duplication iterations follow Carlson, "Numerical computation of real or
complex elliptic integrals".
"""
import math

from errors import ConvergenceError, DomainError

# duplicate until the arguments agree to this relative spread
_SPREAD = 1e-4
_MAX_ITER = 200


def carlson_rf(x: float, y: float, z: float) -> float:
    """Carlson's R_F for nonnegative arguments, at most one of them zero"""
    if min(x, y, z) < 0 or x + y == 0 or x + z == 0 or y + z == 0:
        raise DomainError(f"R_F undefined for ({x}, {y}, {z})")

    x0, y0, z0 = x, y, z
    a0 = (x + y + z) / 3.0
    q = max(abs(a0 - x), abs(a0 - y), abs(a0 - z)) / _SPREAD
    a = a0
    scale = 1.0
    for _ in range(_MAX_ITER):
        if q * scale < abs(a):
            break
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * sy + sx * sz + sy * sz
        x, y, z = (x + lam) / 4.0, (y + lam) / 4.0, (z + lam) / 4.0
        a = (a + lam) / 4.0
        scale /= 4.0
    else:
        raise ConvergenceError("R_F duplication did not converge")

    big_x = scale * (a0 - x0) / a
    big_y = scale * (a0 - y0) / a
    big_z = -(big_x + big_y)
    e2 = big_x * big_y - big_z * big_z
    e3 = big_x * big_y * big_z
    return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / math.sqrt(a)


def carlson_rd(x: float, y: float, z: float) -> float:
    """Carlson's R_D for x, y >= 0 (not both zero) and z > 0"""
    if min(x, y) < 0 or x + y == 0 or z <= 0:
        raise DomainError(f"R_D undefined for ({x}, {y}, {z})")

    x0, y0, z0 = x, y, z
    a0 = (x + y + 3.0 * z) / 5.0
    q = max(abs(a0 - x), abs(a0 - y), abs(a0 - z)) / _SPREAD
    a = a0
    scale = 1.0
    tail = 0.0
    for _ in range(_MAX_ITER):
        if q * scale < abs(a):
            break
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * sy + sx * sz + sy * sz
        tail += scale / (sz * (z + lam))
        x, y, z = (x + lam) / 4.0, (y + lam) / 4.0, (z + lam) / 4.0
        a = (a + lam) / 4.0
        scale /= 4.0
    else:
        raise ConvergenceError("R_D duplication did not converge")

    big_x = scale * (a0 - x0) / a
    big_y = scale * (a0 - y0) / a
    big_z = -(big_x + big_y) / 3.0
    xy = big_x * big_y
    zz = big_z * big_z
    e2 = xy - 6.0 * zz
    e3 = (3.0 * xy - 8.0 * zz) * big_z
    e4 = 3.0 * (xy - zz) * zz
    e5 = xy * zz * big_z
    series = (1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0
              - 3.0 * e4 / 22.0 - 9.0 * e2 * e3 / 52.0 + 3.0 * e5 / 26.0)
    return scale * series / (a * math.sqrt(a)) + 3.0 * tail


def elliptic_k(m1: float) -> float:
    """Complete elliptic integral of the first kind K(m), given m1 = 1 - m in (0, 1]"""
    if not 0.0 < m1 <= 1.0:
        raise DomainError(f"elliptic_k needs 0 < m1 <= 1, got {m1}")
    return carlson_rf(0.0, m1, 1.0)


def elliptic_e(m1: float) -> float:
    """Complete elliptic integral of the second kind E(m), given m1 = 1 - m in [0, 1]"""
    if not 0.0 <= m1 <= 1.0:
        raise DomainError(f"elliptic_e needs 0 <= m1 <= 1, got {m1}")
    if m1 == 0.0:
        return 1.0
    m = 1.0 - m1
    return carlson_rf(0.0, m1, 1.0) - m / 3.0 * carlson_rd(0.0, m1, 1.0)
