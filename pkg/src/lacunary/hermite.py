"""The two Hermite normalizations and the moment sequence they share.

``hermite_h`` is the matchings normalization with exponential generating
function e^(u*z + z^2/2): h_n(u) sums u^(#unmatched) over all matchings of
an n-set, so every coefficient is a nonnegative integer.  ``hermite_H`` is
the physicists' normalization with generating function e^(2*u*z - z^2).
Both are produced by their three-term recurrences; the generating-function
and brute-force-enumeration cross-checks live in the test suite.

``m_moment`` is the moment sequence (2k)!/(2^k k!) on even indices and 0 on
odd ones, i.e. the number of perfect matchings of an n-set; it drives the
umbral evaluation engine and equals h_n(0).

The classical bridge h_n(u) = i^n/2^(n/2) * H_n(-i*u/sqrt(2)) is never
evaluated with complex numbers here: ``normalization_relation_check``
restates it as the equivalent coefficient-wise rational identity
H-coeff(u^(n-2k)) = (-1)^k * 2^(n-k) * h-coeff(u^(n-2k)), which is exact
over Q.
"""

from __future__ import annotations

import enum
import math
from functools import lru_cache

from .poly import POLY_ONE, UPolynomial
from .rational import Rational


class HermiteKind(enum.Enum):
    """Which normalization a caller wants."""

    PROBABILIST = "h"  # EGF e^(u z + z^2/2), monic, nonnegative coefficients
    PHYSICIST = "H"  # EGF e^(2 u z - z^2), leading coefficient 2^n


@lru_cache(maxsize=None)
def hermite_h(n: int) -> UPolynomial:
    """Matchings-normalized Hermite polynomial via h_{n+1} = u*h_n + n*h_{n-1}."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return POLY_ONE
    if n == 1:
        return UPolynomial.u()
    return UPolynomial.u() * hermite_h(n - 1) + (n - 1) * hermite_h(n - 2)


@lru_cache(maxsize=None)
def hermite_H(n: int) -> UPolynomial:
    """Physicists' Hermite polynomial via H_{n+1} = 2u*H_n - 2n*H_{n-1}."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return POLY_ONE
    if n == 1:
        return UPolynomial.u(coeff=2)
    return UPolynomial.u(coeff=2) * hermite_H(n - 1) - (2 * (n - 1)) * hermite_H(n - 2)


def hermite(kind: HermiteKind, n: int) -> UPolynomial:
    return hermite_h(n) if kind is HermiteKind.PROBABILIST else hermite_H(n)


def m_moment(n: int) -> int:
    """Number of perfect matchings of an n-set: (2k)!/(2^k k!) for n=2k, else 0."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n % 2:
        return 0
    k = n // 2
    return math.factorial(2 * k) // (2**k * math.factorial(k))


def normalization_relation_check(n: int) -> bool:
    """Coefficient-wise rational form of the h/H rescaling; True iff it holds at n."""
    h = hermite_h(n)
    H = hermite_H(n)
    degrees = {e[0] for e, _ in h.items()} | {e[0] for e, _ in H.items()}
    for d in degrees:
        if (n - d) % 2:  # a term of the wrong parity would break the relation
            return False
        k = (n - d) // 2
        if H.coefficient(d) != (-1) ** k * Rational(2) ** (n - k) * h.coefficient(d):
            return False
    return True
