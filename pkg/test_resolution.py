"""
Tests for radial measures and the resolution-of-unity check
"""
import math

import numpy as np
import pytest

from errors import DomainError, FamilyError
from recurrence import builtin_family
from resolution import (
    check_unity, hermite_measure, laguerre_measure, legendre_measure, radial_moments
)
from specfun import bessel_i, bessel_k
from verification.report import ReportStatus


def test_measure_domains():
    legendre = legendre_measure()
    assert legendre.radius == pytest.approx(0.7071068, abs=1e-7)
    assert math.isfinite(legendre(0.5))
    with pytest.raises(DomainError):
        legendre(0.75)
    with pytest.raises(DomainError):
        hermite_measure()(0.0)
    with pytest.raises(FamilyError):
        laguerre_measure(-1.0)


def test_laguerre_weight_uses_scaled_bessel_product():
    r, alpha = 3.0, 1.0
    y = math.sqrt(2.0) * r
    expected = math.sqrt(2.0) / math.pi * bessel_k(alpha, y) * bessel_i(alpha, y)
    assert laguerre_measure(alpha)(r) == pytest.approx(expected, rel=1e-10)


def test_radial_moments_hermite_are_one(hermite):
    d_values, quadrature = radial_moments(hermite, hermite_measure(), 4)
    assert np.allclose(d_values, 1.0, atol=1e-10)
    assert quadrature.outer_cut > 5.0
    assert quadrature.panels > 0


def test_hermite_unity_calibrates_the_quadrature(hermite):
    report = check_unity(hermite, hermite_measure(), 10, 1e-8)
    assert report.status is ReportStatus.PASS
    assert report.details['calibration_error'] < 1e-8
    assert report.details['converged']
    assert len(report.details['D']) == 11


@pytest.mark.parametrize("alpha", [0.0, 1.0])
def test_laguerre_unity_is_n_independent(alpha):
    family = builtin_family("laguerre", alpha=alpha)
    report = check_unity(family, laguerre_measure(alpha), 8, 1e-6)
    assert report.status is ReportStatus.PASS
    assert report.details['spread'] < 1e-6
    if alpha == 0.0:
        assert report.details['D'][0] == pytest.approx(math.sqrt(2.0), rel=1e-6)


def test_legendre_unity_is_informational(legendre):
    report = check_unity(legendre, legendre_measure(), 4, 1e-6)
    assert report.status is ReportStatus.REPORT
    assert not report.asserted
    assert report.details['radius'] == pytest.approx(1.0 / math.sqrt(2.0))
    assert report.details['r_max'] < report.details['radius']


def test_measure_must_match_family(hermite):
    with pytest.raises(FamilyError):
        check_unity(hermite, laguerre_measure(0.0), 4, 1e-6)
    with pytest.raises(FamilyError):
        radial_moments(builtin_family("laguerre", alpha=1.0), laguerre_measure(0.0), 4)
