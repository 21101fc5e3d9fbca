"""
Tests for recurrence data, polynomial evaluation and orthogonality measures
"""
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import special

from errors import DomainError, FamilyError
from recurrence import (
    FamilyLabel, builtin_family, custom_family, eval_poly, eval_poly_table,
    gen_factorial, gen_factorial_exact, golub_welsch, measure_of,
    orthonormality_defect, parse_family_label
)


def test_family_labels_and_aliases():
    assert parse_family_label("Chebyshev") is FamilyLabel.CHEBYSHEV_FIRST
    assert parse_family_label(" hermite ") is FamilyLabel.HERMITE
    assert parse_family_label(FamilyLabel.LEGENDRE) is FamilyLabel.LEGENDRE
    with pytest.raises(FamilyError, match="known"):
        parse_family_label("jacobi")


def test_builtin_coefficients(hermite, legendre, chebyshev):
    assert legendre.b_signed(0) == pytest.approx(1.0 / math.sqrt(3.0), rel=1e-15)
    assert hermite.b_squared(3) == pytest.approx(2.0)
    assert chebyshev.b_signed(0) == pytest.approx(1.0 / math.sqrt(2.0))
    assert chebyshev.b_signed(5) == 0.5
    for family in (hermite, legendre, chebyshev):
        assert family.symmetric
        assert family.b_signed(-1) == 0.0
        assert family.a_value(4) == 0.0


def test_laguerre_coefficients():
    family = builtin_family("laguerre", alpha=1.5)
    assert family.a_value(2) == pytest.approx(2 * 2 + 1.5 + 1)
    assert family.b_signed(2) == pytest.approx(-math.sqrt(3 * 4.5))
    assert family.name == "laguerre(alpha=1.5)"
    assert family.to_dict()['symmetric'] is False


@pytest.mark.parametrize("alpha", [-1.0, -2.0])
def test_laguerre_rejects_alpha_at_or_below_minus_one(alpha):
    with pytest.raises(FamilyError):
        builtin_family("laguerre", alpha=alpha)


def test_custom_label_is_not_builtin():
    with pytest.raises(FamilyError):
        builtin_family("custom")


def test_eval_poly_examples(legendre, hermite):
    assert eval_poly(legendre, 0, 0.3) == 1.0
    assert eval_poly(legendre, 1, 1.0) == pytest.approx(math.sqrt(3.0), rel=1e-14)
    # normalized Hermite: H_2(x)/sqrt(2^2 2!) = (4x^2 - 2)/sqrt(8)
    x = 0.7
    assert eval_poly(hermite, 2, x) == pytest.approx((4 * x * x - 2) / math.sqrt(8.0), rel=1e-13)


def test_eval_poly_table_shape_and_validation(chebyshev):
    xs = np.linspace(-1, 1, 7)
    table = eval_poly_table(chebyshev, 4, xs)
    assert table.shape == (5, 7)
    # Psi_n = sqrt(2) T_n for n >= 1
    assert np.allclose(table[3], math.sqrt(2.0) * np.cos(3 * np.arccos(xs)), atol=1e-13)
    with pytest.raises(DomainError):
        eval_poly_table(chebyshev, -1, xs)


@pytest.mark.parametrize("label", ["hermite", "legendre", "chebyshev"])
def test_parity_of_symmetric_families(label):
    family = builtin_family(label)
    xs = np.linspace(-0.9, 0.9, 11)
    table = eval_poly_table(family, 8, xs)
    mirrored = eval_poly_table(family, 8, -xs)
    for n in range(9):
        assert np.allclose(mirrored[n], (-1) ** n * table[n], atol=1e-12)


@given(st.integers(min_value=0, max_value=40), st.floats(min_value=0.5, max_value=3.0))
def test_gen_factorial_step(n, scale):
    family = builtin_family("legendre")
    step = gen_factorial(family, n + 1, scale)
    assert step == pytest.approx(gen_factorial(family, n, scale) * scale * family.b_squared(n), rel=1e-14)


def test_gen_factorial(hermite, legendre):
    assert gen_factorial(hermite, 4, 2.0) == pytest.approx(24.0)
    assert gen_factorial(legendre, 2, 2.0) == pytest.approx(16.0 / 45.0)
    assert gen_factorial(legendre, 0, 2.0) == 1.0
    assert gen_factorial_exact(legendre, 2) == Fraction(16, 45)
    assert gen_factorial_exact(hermite, 5) == Fraction(120)


def test_exact_b_squared_unavailable_for_laguerre(laguerre0):
    with pytest.raises(FamilyError):
        laguerre0.b_squared_exact(0)


@pytest.mark.parametrize("label, params", [
    ("hermite", {}),
    ("laguerre", {'alpha': 0.0}),
    ("laguerre", {'alpha': 2.5}),
    ("legendre", {}),
    ("chebyshev", {}),
])
def test_orthonormality(label, params):
    family = builtin_family(label, **params)
    defect = orthonormality_defect(family, 12, 60)
    assert np.max(np.abs(defect)) < 1e-9


@pytest.mark.parametrize("label, params", [
    ("hermite", {}),
    ("laguerre", {'alpha': 0.5}),
    ("legendre", {}),
    ("chebyshev", {}),
])
def test_orthonormality_fifteen_levels_on_dense_rule(label, params):
    family = builtin_family(label, **params)
    defect = orthonormality_defect(family, 15, 200)
    assert defect.shape == (16, 16)
    assert np.max(np.abs(defect)) < 1e-9


@pytest.mark.parametrize("alpha", [0.0, 0.5, 1.0, 2.5])
def test_laguerre_measure_has_unit_mass(alpha):
    measure = measure_of(builtin_family("laguerre", alpha=alpha))
    assert measure.support == (0.0, math.inf)
    assert measure.integrate_density() == pytest.approx(1.0, rel=1e-8)
    x, w = measure.gauss_rule(30)
    assert np.sum(w) == pytest.approx(1.0, rel=1e-12)
    assert np.all(x > 0)


@pytest.mark.parametrize("label", ["hermite", "legendre"])
def test_measure_has_unit_mass(label):
    measure = measure_of(builtin_family(label))
    assert measure.integrate_density() == pytest.approx(1.0, abs=1e-10)
    x, w = measure.gauss_rule(20)
    assert np.sum(w) == pytest.approx(1.0, abs=1e-13)


def test_golub_welsch_reproduces_builtin_rule(legendre):
    x_gw, w_gw = golub_welsch(legendre, 10)
    x_ref, w_ref = measure_of(legendre).gauss_rule(10)
    assert np.allclose(np.sort(x_gw), np.sort(x_ref), atol=1e-13)
    assert np.allclose(w_gw[np.argsort(x_gw)], w_ref[np.argsort(x_ref)], atol=1e-13)
    with pytest.raises(DomainError):
        golub_welsch(legendre, 0)


def _hermite_clone(**kwargs):
    return custom_family(lambda n: 0.0, lambda n: math.sqrt((n + 1) / 2.0),
                         symmetric=True, support=(-math.inf, math.inf), **kwargs)


def test_custom_family_without_density_has_no_measure():
    family = _hermite_clone()
    assert family.family_label is FamilyLabel.CUSTOM
    with pytest.raises(FamilyError):
        measure_of(family)


def test_custom_family_measure_uses_golub_welsch():
    family = _hermite_clone(measure=lambda x: np.exp(-np.square(x)) / math.sqrt(math.pi))
    measure = measure_of(family)
    assert measure.symmetric
    assert measure.integrate_density() == pytest.approx(1.0, abs=1e-10)
    x, w = measure.gauss_rule(12)
    x_ref, w_ref = measure_of(builtin_family("hermite")).gauss_rule(12)
    assert np.allclose(np.sort(x), np.sort(x_ref), atol=1e-12)
    assert np.allclose(w[np.argsort(x)], w_ref[np.argsort(x_ref)], atol=1e-13)
    defect = orthonormality_defect(family, 10, 40)
    assert np.max(np.abs(defect)) < 1e-10


@pytest.mark.parametrize("a, b, symmetric", [
    (lambda n: 0.0, lambda n: 0.0, True),
    (lambda n: 0.0, lambda n: 0.0 if n == 5 else 0.5, True),
    (lambda n: 0.0, lambda n: math.inf, False),
    (lambda n: math.nan, lambda n: 0.5, False),
    (lambda n: 0.1 if n == 3 else 0.0, lambda n: 0.5, True),
])
def test_custom_family_rejects_bad_coefficients(a, b, symmetric):
    with pytest.raises(FamilyError):
        custom_family(a, b, symmetric=symmetric, support=(-1.0, 1.0))


def test_custom_family_rejects_nonpositive_limit():
    with pytest.raises(FamilyError, match="lim"):
        _hermite_clone(b_squared_limit=0.0)
    assert _hermite_clone(b_squared_limit=math.inf).b_squared_limit == math.inf


@pytest.mark.parametrize("alpha", [0.0, 0.5, 2.5])
@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_laguerre_polynomials_are_confluent_hypergeometric(alpha, n):
    # L_n^alpha(x) = (alpha+1)_n / n! 1F1(-n; alpha+1; x), normalized by Gamma(n+alpha+1) / (n! Gamma(alpha+1))
    family = builtin_family("laguerre", alpha=alpha)
    xs = np.array([0.0, 0.3, 1.0, 2.7, 6.0])
    norm = math.sqrt(math.factorial(n) * math.gamma(alpha + 1.0) / math.gamma(n + alpha + 1.0))
    laguerre = special.poch(alpha + 1.0, n) / math.factorial(n) * special.hyp1f1(-n, alpha + 1.0, xs)
    assert np.allclose(eval_poly(family, n, xs), norm * laguerre, rtol=1e-11, atol=1e-12)
    assert np.allclose(norm * special.eval_genlaguerre(n, alpha, xs), norm * laguerre, rtol=1e-11, atol=1e-12)
