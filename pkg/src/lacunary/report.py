"""Verification reports shared by the identity, umbral and census checkers.

JSON schema (kept byte-stable for downstream diffing):

    {"identity": str, "order": int, "status": "verified" | "mismatch",
     "mismatch": null | {"exponents": [int, ...], "lhs": str, "rhs": str}}
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .poly import UPolynomial


@dataclass(frozen=True)
class Mismatch:
    exponents: Tuple[int, ...]
    lhs: UPolynomial
    rhs: UPolynomial


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    order: int
    mismatch: Optional[Mismatch] = None

    @property
    def verified(self) -> bool:
        return self.mismatch is None

    @property
    def status(self) -> str:
        return "verified" if self.verified else "mismatch"

    def to_dict(self) -> dict:
        detail = None
        if self.mismatch is not None:
            detail = {
                "exponents": list(self.mismatch.exponents),
                "lhs": str(self.mismatch.lhs),
                "rhs": str(self.mismatch.rhs),
            }
        return {
            "identity": self.identity,
            "order": self.order,
            "status": self.status,
            "mismatch": detail,
        }


def compare_series(identity: str, order: int, lhs, rhs) -> IdentityReport:
    """Coefficient-by-coefficient comparison; reports the first mismatch.

    "First" means lowest total degree, then lexicographic exponents, so a
    failure always points at the smallest offending coefficient.
    """
    if lhs.order != rhs.order or lhs.vars != rhs.vars:
        raise ValueError(
            f"cannot compare series of shape ({lhs.order}, {lhs.vars}) "
            f"and ({rhs.order}, {rhs.vars})"
        )
    exponent_set = {e for e, _ in lhs.items()} | {e for e, _ in rhs.items()}
    for e in sorted(exponent_set, key=lambda t: (sum(t), t)):
        lp = lhs.coefficient(e)
        rp = rhs.coefficient(e)
        if lp != rp:
            return IdentityReport(identity, order, Mismatch(tuple(e), lp, rp))
    return IdentityReport(identity, order)
