"""Seeded randomized property suites shared by module tests and acceptance.

Each check_* function runs ``count`` independent random instances from a
fixed-seed generator and asserts the property on every one, so the module
tests can run a few hundred and the acceptance gate can demand a thousand
without duplicating logic.
"""

import random

from lacunary.poly import UPolynomial
from lacunary.rational import Rational
from lacunary.series import TruncSeries
from lacunary.umbral import MExpression, umbral_eval

SEED = 20260811


def make_rng(salt: int = 0) -> random.Random:
    return random.Random(SEED + salt)


def random_rational(rng, span=9):
    return Rational(rng.randint(-span, span), rng.randint(1, span))


def random_poly(rng, max_deg_u=4, max_deg_x=2, max_terms=4) -> UPolynomial:
    coeffs = {}
    for _ in range(rng.randint(0, max_terms)):
        coeffs[(rng.randint(0, max_deg_u), rng.randint(0, max_deg_x))] = random_rational(rng)
    return UPolynomial(coeffs)


def random_series(rng, order=4, vars=("z",), max_terms=5) -> TruncSeries:
    coeffs = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = _random_exponents(rng, order, len(vars))
        coeffs[exps] = random_poly(rng, max_deg_u=3, max_deg_x=0 if len(vars) == 1 else 2)
    return TruncSeries(order, coeffs, vars)


def _random_exponents(rng, order, nvars):
    if nvars == 1:
        return (rng.randint(0, order),)
    a = rng.randint(0, order)
    return (a, rng.randint(0, order - a))


def random_unit_series(rng, order=4, vars=("z",)) -> TruncSeries:
    """Random series with constant coefficient exactly 1."""
    s = random_zero_constant_series(rng, order, vars)
    return TruncSeries.one(order, vars) + s


def random_zero_constant_series(rng, order=4, vars=("z",)) -> TruncSeries:
    s = random_series(rng, order, vars)
    return s - TruncSeries.from_poly(s.constant_coefficient(), order, vars)


# -- the four acceptance property families -----------------------------------


def check_series_ring_axioms(count: int) -> None:
    rng = make_rng(1)
    one = TruncSeries.one(4)
    for _ in range(count):
        a = random_series(rng)
        b = random_series(rng)
        c = random_series(rng)
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert one * a == a
        assert a + (-a) == TruncSeries.zero(4)


def check_inverse_pairs(count: int) -> None:
    """series_inverse/sqrt/exp/log are two-sided partners of mul/square/log/exp."""
    rng = make_rng(2)
    one = TruncSeries.one(4)
    for _ in range(count):
        a = random_unit_series(rng)
        assert a.inverse() * a == one
        s = a.sqrt()
        assert s * s == a
        assert a.log().exp() == a
        b = random_zero_constant_series(rng)
        assert b.exp().log() == b
        b2 = random_zero_constant_series(rng)
        assert (b + b2).exp() == b.exp() * b2.exp()


def check_eval_linearity(count: int) -> None:
    rng = make_rng(3)
    for _ in range(count):
        order = rng.randint(0, 3)
        bound = rng.randint(2, 5)
        p = _random_mexpr(rng, order, bound)
        q = _random_mexpr(rng, order, bound)
        a = random_series(rng, order)
        b = random_series(rng, order)
        lhs = umbral_eval(a * p + b * q)
        rhs = a * umbral_eval(p) + b * umbral_eval(q)
        assert lhs == rhs


def _random_mexpr(rng, order, bound) -> MExpression:
    coeffs = {d: random_series(rng, order) for d in range(0, bound + 1) if rng.random() < 0.6}
    if not any(coeffs.values()):
        coeffs[0] = TruncSeries.one(order)
    return MExpression(coeffs, bound)


def check_truncation_consistency(count: int) -> None:
    """Computing at order N then truncating matches computing at order N-1."""
    rng = make_rng(4)
    for _ in range(count):
        order = rng.randint(1, 5)
        a = random_series(rng, order)
        b = random_series(rng, order)
        assert (a * b).truncated(order - 1) == a.truncated(order - 1) * b.truncated(order - 1)
        u = random_unit_series(rng, order)
        assert u.inverse().truncated(order - 1) == u.truncated(order - 1).inverse()
        assert u.sqrt().truncated(order - 1) == u.truncated(order - 1).sqrt()
        assert u.log().truncated(order - 1) == u.truncated(order - 1).log()
        zc = random_zero_constant_series(rng, order)
        assert zc.exp().truncated(order - 1) == zc.truncated(order - 1).exp()


# -- exact-arith property families --------------------------------------------


def check_poly_ring_axioms(count: int) -> None:
    rng = make_rng(5)
    one = UPolynomial.one()
    for _ in range(count):
        a = random_poly(rng)
        b = random_poly(rng)
        c = random_poly(rng)
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert one * a == a


def check_diff_u_rules(count: int) -> None:
    rng = make_rng(6)
    for _ in range(count):
        a = random_poly(rng)
        b = random_poly(rng)
        q = random_rational(rng)
        assert (a + b).diff_u() == a.diff_u() + b.diff_u()
        assert (a * q).diff_u() == a.diff_u() * q
        assert (a * b).diff_u() == a.diff_u() * b + a * b.diff_u()
        assert a.int_u().diff_u() == a


def check_rational_roundtrip(count: int) -> None:
    rng = make_rng(7)
    for _ in range(count):
        a = random_rational(rng, span=999)
        b = random_rational(rng, span=999)
        assert (a + b) - b == a
        assert b == 0 or (a / b) * b == a
        c = Rational(a)
        assert c.denominator > 0
        from math import gcd

        assert gcd(int(c.numerator), int(c.denominator)) == 1
