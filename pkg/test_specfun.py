"""
Tests for the special-function layer
"""
import math

import pytest
from hypothesis import given, settings, strategies as st
from scipy import special

from errors import ConvergenceError, DomainError
from specfun import (
    SeriesControl, bessel_i, bessel_i_reduced, bessel_k, elliptic_e, elliptic_k,
    gamma_fn, gauss_2f1, legendre_p, pochhammer, reciprocal_gamma
)


# ----------------------------------------------------------------------------- gamma

def test_gamma_integer_and_half_integer_values():
    assert gamma_fn(5) == pytest.approx(24.0, rel=1e-13)
    assert gamma_fn(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-13)
    assert gamma_fn(-0.5) == pytest.approx(-2.0 * math.sqrt(math.pi), rel=1e-12)


@pytest.mark.parametrize("pole", [0.0, -1.0, -7.0])
def test_gamma_poles(pole):
    with pytest.raises(DomainError):
        gamma_fn(pole)
    assert reciprocal_gamma(pole) == 0.0


@given(st.floats(min_value=0.05, max_value=30.0))
@settings(max_examples=200)
def test_gamma_matches_math_gamma(x):
    assert gamma_fn(x) == pytest.approx(math.gamma(x), rel=1e-12)


def test_pochhammer_values():
    assert pochhammer(3.7, 0) == 1.0
    assert pochhammer(0.5, 2) == pytest.approx(0.75)
    assert pochhammer(1.0, 6) == pytest.approx(720.0)
    with pytest.raises(DomainError):
        pochhammer(1.0, -1)


@given(st.floats(min_value=-5.0, max_value=5.0), st.integers(min_value=0, max_value=25))
def test_pochhammer_step(a, n):
    assert pochhammer(a, n + 1) == pytest.approx(pochhammer(a, n) * (a + n), rel=1e-12, abs=1e-300)


# ----------------------------------------------------------------------------- Bessel

def test_bessel_i_values():
    assert bessel_i(0, 0) == 1.0
    assert bessel_i(2, 0) == 0.0
    assert bessel_i(0, math.sqrt(2.0)) == pytest.approx(1.566082, abs=1e-6)
    assert bessel_i(1, 2) == pytest.approx(1.590637, abs=1e-6)


def test_bessel_i_scaled_is_consistent():
    x = 12.5
    assert bessel_i(1.5, x, scaled=True) == pytest.approx(math.exp(-x) * bessel_i(1.5, x), rel=1e-12)


def test_bessel_i_negative_argument():
    with pytest.raises(DomainError):
        bessel_i(0, -1.0)


def test_bessel_i_reduced_matches_bessel_i():
    alpha, y = 0.5, 3.0
    expected = (y / 2.0) ** -alpha * bessel_i(alpha, y)
    assert bessel_i_reduced(alpha, y * y / 4.0).real == pytest.approx(expected, rel=1e-12)


def test_bessel_i_reduced_gives_bessel_j_for_negative_argument():
    # J_0(2) = 0.22389077914123567
    assert bessel_i_reduced(0.0, -1.0).real == pytest.approx(0.22389077914123567, rel=1e-12)


def test_series_cap_raises_convergence_error():
    ctl = SeriesControl(rel_tol=1e-16, max_terms=2)
    with pytest.raises(ConvergenceError):
        bessel_i(0, 25.0, ctl)


@pytest.mark.parametrize("x", [0.01, 0.3, 1.0, 2.5, 7.0, 30.0])
def test_bessel_k_half_order_closed_form(x):
    expected = math.sqrt(math.pi / (2.0 * x)) * math.exp(-x)
    assert bessel_k(0.5, x) == pytest.approx(expected, rel=1e-8)


def test_bessel_k_values():
    assert bessel_k(0.5, 1.0) == pytest.approx(0.461068, abs=1e-6)
    assert bessel_k(0, 1.0) == pytest.approx(0.42102443824070834, rel=1e-8)
    assert math.isfinite(bessel_k(1.0, 20.0) * math.exp(20.0) * math.sqrt(20.0))
    with pytest.raises(DomainError):
        bessel_k(0, 0.0)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
@pytest.mark.parametrize("x", [0.05, 0.7, 1.0, 1.9, 2.0])
def test_bessel_k_integer_order_matches_scipy(n, x):
    assert bessel_k(n, x) == pytest.approx(special.kv(n, x), rel=1e-12)
    assert bessel_k(n, x, scaled=True) == pytest.approx(special.kve(n, x), rel=1e-12)


def test_bessel_k_integer_order_values():
    assert bessel_k(1, 1.0) == pytest.approx(0.6019072301972346, rel=1e-13)
    assert bessel_k(2, 1.0) == pytest.approx(1.6248388986351774, rel=1e-13)
    assert bessel_k(-2, 1.0) == bessel_k(2, 1.0)


@pytest.mark.parametrize("alpha", [0.0, 0.5, 1.0, 2.5])
@pytest.mark.parametrize("x", [0.1, 0.5, 1.0, 2.0, 3.5, 6.0, 10.0])
def test_bessel_wronskian(alpha, x):
    value = bessel_i(alpha, x) * bessel_k(alpha + 1, x) + bessel_i(alpha + 1, x) * bessel_k(alpha, x)
    assert value == pytest.approx(1.0 / x, rel=1e-8)


# ----------------------------------------------------------------------------- 2F1

def test_gauss_2f1_at_zero():
    assert gauss_2f1(0.3, 1.7, 2.2, 0.0) == 1.0


def test_gauss_2f1_logarithm_identity():
    w = 0.5
    assert gauss_2f1(1, 1, 2, w).real == pytest.approx(-math.log(1 - w) / w, rel=1e-13)


def test_gauss_2f1_complex_argument():
    w = 0.4 + 0.3j
    import cmath
    assert gauss_2f1(1, 1, 2, w) == pytest.approx(-cmath.log(1 - w) / w, rel=1e-13)


def test_gauss_2f1_terminating_series_accepts_large_argument():
    # 2F1(-2, b; c; w) = 1 - 2bw/c + b(b+1)w^2/(c(c+1))
    b, c, w = 1.5, 2.0, 3.0
    expected = 1 - 2 * b * w / c + b * (b + 1) * w * w / (c * (c + 1))
    assert gauss_2f1(-2, b, c, w).real == pytest.approx(expected, rel=1e-14)


def test_gauss_2f1_contiguous_relation():
    # c(c-1)(z-1) F(c-1) + c[c-1-(2c-a-b-1)z] F(c) + (c-a)(c-b) z F(c+1) = 0
    a, b, c, z = 0.5, 1.5, 2.5, 0.45
    total = (c * (c - 1) * (z - 1) * gauss_2f1(a, b, c - 1, z)
             + c * (c - 1 - (2 * c - a - b - 1) * z) * gauss_2f1(a, b, c, z)
             + (c - a) * (c - b) * z * gauss_2f1(a, b, c + 1, z))
    assert abs(total) < 1e-12


def test_gauss_2f1_domain_errors():
    with pytest.raises(DomainError):
        gauss_2f1(0.5, 1.5, 1.0, 1.0)
    with pytest.raises(DomainError):
        gauss_2f1(0.5, 1.5, -1.0, 0.2)


# ----------------------------------------------------------------------------- elliptic / Legendre

def test_elliptic_integrals():
    assert elliptic_k(1.0) == pytest.approx(math.pi / 2, rel=1e-14)
    assert elliptic_e(1.0) == pytest.approx(math.pi / 2, rel=1e-14)
    assert elliptic_k(0.5) == pytest.approx(1.8540746773013719, rel=1e-13)
    assert elliptic_e(0.5) == pytest.approx(1.3506438810476755, rel=1e-13)
    assert elliptic_e(0.0) == 1.0
    with pytest.raises(DomainError):
        elliptic_k(0.0)


def test_legendre_p_integer_degree():
    assert legendre_p(2, 0.5) == pytest.approx(-0.125, abs=1e-14)
    assert legendre_p(3, 0.2) == pytest.approx(0.5 * (5 * 0.008 - 3 * 0.2), rel=1e-13)


def test_legendre_p_half_at_zero():
    expected = math.sqrt(math.pi) / (math.gamma(1.25) * math.gamma(0.25))
    assert legendre_p(0.5, 0.0) == pytest.approx(expected, rel=1e-12)
    assert legendre_p(0.5, 0.0) == pytest.approx(0.539353, abs=1e-6)


@pytest.mark.parametrize("nu", [0.5, 1.5])
@pytest.mark.parametrize("x", [-0.6, 0.0, 0.3, 0.8])
def test_legendre_p_half_integer_matches_hypergeometric(nu, x):
    expected = gauss_2f1(-nu, nu + 1.0, 1.0, 0.5 * (1.0 - x)).real
    assert legendre_p(nu, x) == pytest.approx(expected, rel=1e-10)


def test_legendre_p_limit_at_one():
    assert legendre_p(0.5, 1.0 - 1e-12) == pytest.approx(1.0, abs=1e-9)
    assert legendre_p(1.7, 0.999999) == pytest.approx(1.0, abs=1e-5)


def test_legendre_p_rejects_endpoints():
    with pytest.raises(DomainError):
        legendre_p(0.5, 1.0)
    with pytest.raises(DomainError):
        legendre_p(0.5, -1.5)
