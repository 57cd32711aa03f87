"""Hermite polynomial generators, moments, and the normalization bridge."""

import math

from lacunary.hermite import (
    HermiteKind,
    hermite,
    hermite_H,
    hermite_h,
    m_moment,
    normalization_relation_check,
)
from lacunary.oracle import enumerate_matchings
from lacunary.poly import UPolynomial
from lacunary.rational import Rational
from lacunary.series import TruncSeries

U = UPolynomial.u


def test_h_small_values():
    assert hermite_h(0) == UPolynomial.one()
    assert hermite_h(1) == U()
    assert hermite_h(2) == UPolynomial({(2, 0): 1, (0, 0): 1})
    assert hermite_h(3) == UPolynomial({(3, 0): 1, (1, 0): 3})
    assert hermite_h(4) == UPolynomial({(4, 0): 1, (2, 0): 6, (0, 0): 3})


def test_H_small_values():
    assert hermite_H(0) == UPolynomial.one()
    assert hermite_H(1) == U(coeff=2)
    assert hermite_H(2) == UPolynomial({(2, 0): 4, (0, 0): -2})
    assert hermite_H(3) == UPolynomial({(3, 0): 8, (1, 0): -12})


def test_kind_dispatch():
    assert hermite(HermiteKind.PROBABILIST, 3) == hermite_h(3)
    assert hermite(HermiteKind.PHYSICIST, 3) == hermite_H(3)


def test_h_monic_with_nonnegative_integer_coefficients():
    for n in range(12):
        p = hermite_h(n)
        assert p.coefficient(n) == 1
        for (du, dx), c in p.items():
            assert dx == 0 and c > 0 and c.denominator == 1


def test_h_matches_generating_function():
    order = 16
    gf = TruncSeries(
        order, {(1,): UPolynomial.u(), (2,): UPolynomial.constant(Rational(1, 2))}
    ).exp()
    for n in range(order + 1):
        assert gf.coefficient((n,)) * math.factorial(n) == hermite_h(n)


def test_H_matches_generating_function():
    order = 16
    gf = TruncSeries(
        order, {(1,): UPolynomial.u(coeff=2), (2,): UPolynomial.constant(-1)}
    ).exp()
    for n in range(order + 1):
        assert gf.coefficient((n,)) * math.factorial(n) == hermite_H(n)


def test_h_matches_matching_enumeration():
    for n in range(11):
        assert hermite_h(n) == enumerate_matchings(n)


def test_h_coefficient_closed_form():
    # coefficient of u^(n-2k) is n! / (2^k k! (n-2k)!)
    for n in range(11):
        p = hermite_h(n)
        for k in range(n // 2 + 1):
            expected = math.factorial(n) // (
                2**k * math.factorial(k) * math.factorial(n - 2 * k)
            )
            assert p.coefficient(n - 2 * k) == expected


def test_m_moment_values():
    assert [m_moment(n) for n in range(9)] == [1, 0, 1, 0, 3, 0, 15, 0, 105]
    assert m_moment(3) == 0
    assert m_moment(6) == 15
    assert m_moment(12) == 10395


def test_m_moment_counts_perfect_matchings():
    for m in range(0, 9, 2):
        assert enumerate_matchings(m).coefficient(0) == m_moment(m)


def test_h_at_zero_is_moment():
    for n in range(20):
        assert hermite_h(n).coefficient(0) == m_moment(n)


def test_normalization_relation():
    for n in range(21):
        assert normalization_relation_check(n)


def test_normalization_relation_explicit_n2():
    # k=0: 4 == 2^2 * 1, k=1: -2 == -2 * 1
    assert hermite_H(2).coefficient(2) == 4 == 2**2 * hermite_h(2).coefficient(2)
    assert hermite_H(2).coefficient(0) == -2 == -2 * hermite_h(2).coefficient(0)
