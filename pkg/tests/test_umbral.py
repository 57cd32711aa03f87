"""The moment functional, M-expressions, and the executable lemma checks."""

import pytest

from lacunary.hermite import hermite_h, m_moment
from lacunary.poly import UPolynomial
from lacunary.rational import Rational
from lacunary.series import TruncSeries
from lacunary.umbral import (
    MExpression,
    default_mdeg_bound,
    exp_of_linear_M,
    exp_of_m_power,
    umbral_eval,
    verify_corollary_and_ecor,
    verify_lemma_fm_i,
    verify_lemma_fm_ii,
)

from helpers import check_eval_linearity


def scalar_series(value, order=4):
    return TruncSeries.from_poly(UPolynomial.constant(value), order)


def test_eval_monomials():
    M = MExpression.umbra(4)
    assert umbral_eval(M**2) == scalar_series(1)
    assert umbral_eval(M**5) == TruncSeries.zero(4)
    assert umbral_eval(M**6) == scalar_series(15)


def test_eval_u_plus_m_square():
    u = MExpression.from_series(TruncSeries.from_poly(UPolynomial.u(), 4))
    M = MExpression.umbra(4)
    expected = TruncSeries.from_poly(UPolynomial({(2, 0): 1, (0, 0): 1}), 4)
    assert umbral_eval((u + M) ** 2) == expected


def test_eval_u_plus_m_gives_hermite():
    order = 2
    u = MExpression.from_series(TruncSeries.from_poly(UPolynomial.u(), order))
    M = MExpression.umbra(order)
    for n in range(17):
        got = umbral_eval((u + M) ** n)
        assert got == TruncSeries.from_poly(hermite_h(n), order)


def test_eval_m_power_equals_h_at_zero():
    M = MExpression.umbra(3)
    for n in range(17):
        got = umbral_eval(M**n)
        assert got.constant_coefficient() == UPolynomial.constant(hermite_h(n).coefficient(0))


def test_exp_of_linear_M_structure():
    z = TruncSeries.variable("z", 2)
    e = exp_of_linear_M(z, 2)
    assert e.coefficient(0) == TruncSeries.one(2)
    assert e.coefficient(1) == z
    assert e.coefficient(2) == TruncSeries.monomial((2,), Rational(1, 2), 2)


def test_eval_exp_mz_is_exp_half_z_squared():
    order = 8
    z = TruncSeries.variable("z", order)
    lhs = umbral_eval(exp_of_linear_M(z, default_mdeg_bound(order)))
    rhs = TruncSeries(order, {(2,): UPolynomial.constant(Rational(1, 2))}).exp()
    assert lhs == rhs


def test_eval_exp_m_of_sum_of_variables():
    order = 6
    vars = ("z", "x")
    z = TruncSeries.variable("z", order, vars)
    x = TruncSeries.variable("x", order, vars)
    lhs = umbral_eval(exp_of_linear_M(z + x, default_mdeg_bound(order)))
    rhs = (((z + x) * (z + x)) / 2).exp()
    assert lhs == rhs


def test_mdeg_bound_rejects_dropped_terms():
    z = TruncSeries.variable("z", 8)
    with pytest.raises(ValueError):
        exp_of_linear_M(z, 4)
    with pytest.raises(ValueError):
        MExpression({5: TruncSeries.one(3)}, 4)


def test_coefficients_must_share_order():
    with pytest.raises(ValueError):
        MExpression({0: TruncSeries.one(3), 1: TruncSeries.one(4)}, 2)


def test_exp_of_m_power_requires_zero_constant():
    with pytest.raises(ValueError):
        exp_of_m_power(TruncSeries.one(3), 2, 12)


def test_shift_rule_for_monomials():
    # eval(e^(Mz) M^k) == e^(z^2/2) eval((M+z)^k)
    order = 4
    z = TruncSeries.variable("z", order)
    M = MExpression.umbra(order)
    exp_mz = exp_of_linear_M(z, default_mdeg_bound(order))
    gauss = TruncSeries(order, {(2,): UPolynomial.constant(Rational(1, 2))}).exp()
    shifted = M + MExpression.from_series(z)
    for k in range(default_mdeg_bound(order) + 1):
        assert umbral_eval(exp_mz * M**k) == gauss * umbral_eval(shifted**k)


def test_lemma_fm_i_reports():
    for order in (0, 2, 8):
        report = verify_lemma_fm_i(order)
        assert report.verified, report.to_dict()
        assert report.identity == "lemma-fm-i"
        assert report.order == order


def test_lemma_fm_ii_low_coefficients():
    report = verify_lemma_fm_ii(8)
    assert report.verified
    z = TruncSeries.variable("z", 4)
    lhs = umbral_eval(exp_of_m_power(z, 2, default_mdeg_bound(4)))
    assert lhs.coefficient((0,)) == UPolynomial.one()
    assert lhs.coefficient((1,)) == UPolynomial.constant(m_moment(2))
    assert lhs.coefficient((2,)) == UPolynomial.constant(Rational(3, 2))


def test_corollary_and_ecor():
    report = verify_corollary_and_ecor(8)
    assert report.verified, report.to_dict()
    assert report.identity == "corollary-ecor"


def test_corollary_x_slice_values():
    # coefficient of x^2 z^0 on both corollary sides is 1/2, and of x^2 z^1
    # in the cube variant it is m_moment(8)/2 = 105/2
    order = 4
    vars = ("z", "x")
    z = TruncSeries.variable("z", order, vars)
    x = TruncSeries.variable("x", order, vars)
    bound = default_mdeg_bound(order)
    lhs_a = umbral_eval(exp_of_m_power(z, 2, bound) * exp_of_linear_M(x, bound))
    assert lhs_a.coefficient((0, 2)) == UPolynomial.constant(Rational(1, 2))
    lhs_b = umbral_eval(exp_of_m_power(z, 2, bound) * exp_of_m_power(x, 3, bound))
    assert lhs_b.coefficient((1, 2)) == UPolynomial.constant(Rational(105, 2))


def test_corollary_x_zero_slice_is_lemma_fm_ii():
    order = 6
    vars = ("z", "x")
    z = TruncSeries.variable("z", order, vars)
    x = TruncSeries.variable("x", order, vars)
    bound = default_mdeg_bound(order)
    lhs = umbral_eval(exp_of_m_power(z, 2, bound) * exp_of_linear_M(x, bound))
    univariate = umbral_eval(exp_of_m_power(TruncSeries.variable("z", order), 2, bound))
    for n in range(order + 1):
        assert lhs.coefficient((n, 0)) == univariate.coefficient((n,))


def test_eval_linearity_randomized():
    check_eval_linearity(300)
