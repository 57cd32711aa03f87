"""Construction and coefficient-exact verification of the generating-function
identities.

Everything here is a univariate truncated series in z with polynomial
coefficients in u.  The central object is the weighted rooted-tree series

    w = u + 3*w^2*z = (1 - sqrt(1 - 12*u*z)) / (6*z),

whose z^n coefficient is 3^n * C_n * u^(n+1) with C_n the Catalan numbers.
``w_series`` computes the fixed point and the closed form, asserts they
agree, and is cached per order so that every factor of an identity shares
one w, which keeps a verification run internally consistent.

The identities themselves form a closed enumeration (see IDENTITIES);
``verify`` builds both sides and compares coefficient by coefficient,
returning an :class:`IdentityReport`.  The two headline identities are the
even-stride (Doetsch) generating function

    sum_n h_{2n}(u) z^n/n!  =  (1-2z)^(-1/2) * exp(u^2 z / (1-2z))

and the triple-stride one, whose right side is the product of three
combinatorially meaningful factors: exp(T) for forests of unrooted trees,
(1-6wz)^(-1/2) for cycles of trees, and an explicit double sum for the
components with at least two independent cycles.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .hermite import hermite_h
from .poly import POLY_ONE, POLY_U, UPolynomial
from .rational import Rational
from .report import IdentityReport, Mismatch, compare_series
from .series import TruncSeries
from .umbral import verify_corollary_and_ecor, verify_lemma_fm_i, verify_lemma_fm_ii


def catalan_number(n: int) -> int:
    """C_n = binom(2n, n) / (n + 1)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return math.comb(2 * n, n) // (n + 1)


def _u_series(order: int) -> TruncSeries:
    return TruncSeries.from_poly(POLY_U, order)


def _z(order: int) -> TruncSeries:
    return TruncSeries.variable("z", order)


def w_fixed_point(order: int) -> TruncSeries:
    """Iterate w <- u + 3*w^2*z; each pass settles one more z-order."""
    z = _z(order)
    w = _u_series(order)
    for _ in range(order + 1):
        w_next = _u_series(order) + 3 * (w * w) * z
        if w_next == w:
            break
        w = w_next
    return w

def w_closed_form(order: int) -> TruncSeries:
    """(1 - sqrt(1 - 12*u*z)) / (6*z) via the explicit z-division."""
    radicand = TruncSeries.one(order + 1) - TruncSeries.monomial(
        (1,), UPolynomial.u(coeff=12), order + 1
    )
    return (TruncSeries.one(order + 1) - radicand.sqrt()).div_z() / 6


def w_explicit(order: int) -> TruncSeries:
    """Coefficient formula: z^n |-> 3^n * C_n * u^(n+1)."""
    return TruncSeries(
        order,
        {
            (n,): UPolynomial.u(power=n + 1, coeff=3**n * catalan_number(n))
            for n in range(order + 1)
        },
    )


@lru_cache(maxsize=None)
def w_series(order: int) -> TruncSeries:
    """The shared tree series w, computed two ways and asserted equal."""
    w = w_fixed_point(order)
    if w != w_closed_form(order):
        raise AssertionError(f"w routes disagree at order {order}")
    return w


@lru_cache(maxsize=None)
def lhs_lacunary(stride: int, order: int) -> TruncSeries:
    """sum_{n<=order} h_{stride*n}(u) z^n / n! for stride 2 or 3."""
    if stride not in (2, 3):
        raise ValueError(f"stride must be 2 or 3, got {stride}")
    return TruncSeries(
        order,
        {
            (n,): hermite_h(stride * n) / math.factorial(n)
            for n in range(order + 1)
        },
    )


@lru_cache(maxsize=None)
def rhs_doetsch(order: int) -> TruncSeries:
    """(1 - 2z)^(-1/2) * exp(u^2 z / (1 - 2z))."""
    one = TruncSeries.one(order)
    base = one - 2 * _z(order)
    arg = TruncSeries.monomial((1,), UPolynomial.u(power=2), order) * base.inverse()
    return base.sqrt().inverse() * arg.exp()


# -- the tree generating function, three ways --------------------------------


def tree_gf_product_route(order: int) -> TruncSeries:
    """(w - u) * (3u - w) / 6 from the shared w."""
    w = w_series(order)
    u = _u_series(order)
    return (w - u) * (3 * u - w) / 6


def tree_gf_integral_route(order: int) -> TruncSeries:
    """((1-12uz)^(3/2) - 1 + 18uz) / (108 z^2) - u^2/2.

    The two singular-looking pieces of the antiderivative are combined
    before dividing so that both explicit z-divisions are exact; inputs are
    computed at order + 2 to make the result trustworthy at ``order``.
    """
    lifted = order + 2
    one = TruncSeries.one(lifted)
    uz = TruncSeries.monomial((1,), POLY_U, lifted)
    radicand = one - 12 * uz
    numerator = radicand * radicand.sqrt() - one + 18 * uz
    quotient = numerator.div_z().div_z() / 108
    return quotient - TruncSeries.from_poly(UPolynomial.u(power=2) / 2, order)


def tree_gf_explicit_route(order: int) -> TruncSeries:
    """sum_{n>=1} 3^n (2n)!/(n+2)! u^(n+2) z^n / n!."""
    coeffs = {}
    for n in range(1, order + 1):
        c = Rational(3**n * math.factorial(2 * n), math.factorial(n + 2) * math.factorial(n))
        coeffs[(n,)] = UPolynomial.u(power=n + 2, coeff=c)
    return TruncSeries(order, coeffs)


@lru_cache(maxsize=None)
def tree_gf(order: int) -> TruncSeries:
    """The unrooted-tree series T; all three routes must agree."""
    t = tree_gf_product_route(order)
    if t != tree_gf_integral_route(order) or t != tree_gf_explicit_route(order):
        raise AssertionError(f"tree generating function routes disagree at order {order}")
    return t


# -- cycle factors ------------------------------------------------------------


def _one_minus_6wz(order: int) -> TruncSeries:
    return TruncSeries.one(order) - 6 * w_series(order) * _z(order)


def one_cycle_exp_log_route(order: int) -> TruncSeries:
    return (_one_minus_6wz(order).log() * Rational(-1, 2)).exp()


def one_cycle_inverse_sqrt_route(order: int) -> TruncSeries:
    return _one_minus_6wz(order).sqrt().inverse()


@lru_cache(maxsize=None)
def one_cycle_factor(order: int) -> TruncSeries:
    """(1 - 6wz)^(-1/2): graphs whose components are single cycles of trees."""
    factor = one_cycle_inverse_sqrt_route(order)
    if factor != one_cycle_exp_log_route(order):
        raise AssertionError(f"one-cycle routes disagree at order {order}")
    return factor


def multi_cycle_coefficient(n: int) -> Rational:
    """(6n)! / (2^(3n) (3n)! (2n)!), the z^(2n) scalar of the multi-cycle sum."""
    return Rational(
        math.factorial(6 * n), 2 ** (3 * n) * math.factorial(3 * n) * math.factorial(2 * n)
    )


@lru_cache(maxsize=None)
def multi_cycle_factor(order: int) -> TruncSeries:
    """sum_n (6n)!/(2^(3n)(3n)!) * (1-6wz)^(-3n) * z^(2n)/(2n)!."""
    inv_cubed = _one_minus_6wz(order).inverse() ** 3
    total = TruncSeries.one(order)
    power = TruncSeries.one(order)
    for n in range(1, order // 2 + 1):
        power = power * inv_cubed
        z2n = TruncSeries.monomial((2 * n,), POLY_ONE, order)
        total = total + multi_cycle_coefficient(n) * power * z2n
    return total


@lru_cache(maxsize=None)
def rhs_main(order: int) -> TruncSeries:
    """exp(T) * (1-6wz)^(-1/2) * multi-cycle sum."""
    return tree_gf(order).exp() * one_cycle_factor(order) * multi_cycle_factor(order)


# -- hypergeometric form -------------------------------------------------------


def rising_factorial(a: Rational, n: int) -> Rational:
    out = Rational(1)
    for i in range(n):
        out = out * (a + i)
    return out


def hypergeom_term(n: int) -> Rational:
    """(1/6)_n (5/6)_n 54^n / n!, the 2F0-style expansion scalar."""
    return (
        rising_factorial(Rational(1, 6), n)
        * rising_factorial(Rational(5, 6), n)
        * 54**n
        / math.factorial(n)
    )


def hypergeom_form_check(terms: int) -> IdentityReport:
    """Scalar identity making the hypergeometric form equal the multi-cycle sum.

    Checks (1/6)_n (5/6)_n 54^n / n! == (6n)!/(2^(3n)(3n)!(2n)!) for n <= terms.
    """
    for n in range(terms + 1):
        lhs = hypergeom_term(n)
        rhs = multi_cycle_coefficient(n)
        if lhs != rhs:
            return IdentityReport(
                "hypergeom",
                terms,
                Mismatch((n,), UPolynomial.constant(lhs), UPolynomial.constant(rhs)),
            )
    return IdentityReport("hypergeom", terms)


def hypergeom_series_route(order: int) -> TruncSeries:
    """The hypergeometric sum evaluated at 54 z^2 / (1-6wz)^3 as a series."""
    argument = (
        TruncSeries.monomial((2,), UPolynomial.constant(54), order)
        * _one_minus_6wz(order).inverse() ** 3
    )
    total = TruncSeries.zero(order)
    power = TruncSeries.one(order)
    for n in range(order // 2 + 1):
        total = total + (
            rising_factorial(Rational(1, 6), n)
            * rising_factorial(Rational(5, 6), n)
            / math.factorial(n)
        ) * power
        power = power * argument
    return total


# -- the closed identity enumeration ------------------------------------------


def _verify_doetsch(order: int) -> IdentityReport:
    return compare_series("doetsch", order, lhs_lacunary(2, order), rhs_doetsch(order))


def _verify_main(order: int) -> IdentityReport:
    return compare_series("main", order, lhs_lacunary(3, order), rhs_main(order))


def _verify_routes(name, order, routes) -> IdentityReport:
    baseline = routes[0](order)
    for other in routes[1:]:
        report = compare_series(name, order, baseline, other(order))
        if not report.verified:
            return report
    return IdentityReport(name, order)


def _verify_tree_gf_routes(order: int) -> IdentityReport:
    return _verify_routes(
        "tree-gf-routes",
        order,
        (tree_gf_product_route, tree_gf_integral_route, tree_gf_explicit_route),
    )


def _verify_one_cycle_routes(order: int) -> IdentityReport:
    return _verify_routes(
        "one-cycle-routes",
        order,
        (one_cycle_inverse_sqrt_route, one_cycle_exp_log_route),
    )


def _verify_w_routes(order: int) -> IdentityReport:
    return _verify_routes(
        "w-routes", order, (w_fixed_point, w_closed_form, w_explicit)
    )


def _verify_hypergeom(order: int) -> IdentityReport:
    report = hypergeom_form_check(order)
    if not report.verified:
        return report
    series_report = compare_series(
        "hypergeom", order, multi_cycle_factor(order), hypergeom_series_route(order)
    )
    return series_report


def _verify_dt_du(order: int) -> IdentityReport:
    """d(tree gf)/du = w - u, checked one order down."""
    reduced = max(order - 1, 0)
    lhs = tree_gf(order).map_coefficients(UPolynomial.diff_u).truncated(reduced)
    rhs = (w_series(order) - _u_series(order)).truncated(reduced)
    return IdentityReport("dT-du", order, compare_series("dT-du", reduced, lhs, rhs).mismatch)


IDENTITIES = {
    "doetsch": _verify_doetsch,
    "main": _verify_main,
    "tree-gf-routes": _verify_tree_gf_routes,
    "one-cycle-routes": _verify_one_cycle_routes,
    "w-routes": _verify_w_routes,
    "hypergeom": _verify_hypergeom,
    "lemma-fm-i": verify_lemma_fm_i,
    "lemma-fm-ii": verify_lemma_fm_ii,
    "corollary-ecor": verify_corollary_and_ecor,
    "dT-du": _verify_dt_du,
}


def identity_names() -> list[str]:
    return list(IDENTITIES)


def verify(identity: str, order: int) -> IdentityReport:
    """Verify one named identity to the given truncation order."""
    try:
        checker = IDENTITIES[identity]
    except KeyError:
        raise ValueError(
            f"unknown identity {identity!r}; choose from {', '.join(IDENTITIES)}"
        ) from None
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    return checker(order)
