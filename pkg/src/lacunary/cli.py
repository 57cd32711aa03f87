"""Command-line frontend: expansion, verification and oracle censuses.

Output goes to stdout in a fixed grammar (see the polynomial rendering in
``poly``) so that runs with identical inputs are byte-identical.  Exit codes:
0 when every requested check verifies, 1 on a verification mismatch, 2 on
usage errors (argparse's convention).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

from . import identities, oracle
from .hermite import HermiteKind, hermite
from .poly import UPolynomial
from .rational import Rational
from .series import TruncSeries

DEFAULT_ORDER = 12


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    fmt: str
    order: int = DEFAULT_ORDER
    n: int = 0


def _hermite_h_egf(order: int) -> TruncSeries:
    return TruncSeries(
        order, {(1,): UPolynomial.u(), (2,): UPolynomial.constant(Rational(1, 2))}
    ).exp()


def _hermite_big_h_egf(order: int) -> TruncSeries:
    return TruncSeries(
        order, {(1,): UPolynomial.u(coeff=2), (2,): UPolynomial.constant(-1)}
    ).exp()


SERIES_BUILDERS = {
    "w": identities.w_series,
    "tree-gf": identities.tree_gf,
    "one-cycle": identities.one_cycle_factor,
    "multi-cycle": identities.multi_cycle_factor,
    "lhs-doetsch": lambda order: identities.lhs_lacunary(2, order),
    "rhs-doetsch": identities.rhs_doetsch,
    "lhs-main": lambda order: identities.lhs_lacunary(3, order),
    "rhs-main": identities.rhs_main,
    "hermite-h-egf": _hermite_h_egf,
    "hermite-H-egf": _hermite_big_h_egf,
}


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lacunary",
        description="Exact verification of Hermite-polynomial generating-function identities.",
    )
    parser.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_hermite = sub.add_parser("hermite", help="print one Hermite polynomial")
    p_hermite.add_argument("--kind", choices=("h", "H"), required=True)
    p_hermite.add_argument("--n", type=_nonnegative, required=True)

    p_expand = sub.add_parser("expand", help="print the coefficients of a named series")
    p_expand.add_argument("series", choices=sorted(SERIES_BUILDERS))
    p_expand.add_argument("--order", type=_nonnegative, default=DEFAULT_ORDER)

    p_verify = sub.add_parser("verify", help="verify a named identity exactly")
    p_verify.add_argument("identity", choices=identities.identity_names())
    p_verify.add_argument("--order", type=_nonnegative, default=DEFAULT_ORDER)

    p_oracle = sub.add_parser("oracle", help="brute-force enumeration censuses")
    p_oracle.add_argument("target", choices=("matchings", "wtrees", "graphs"))
    p_oracle.add_argument("--n", type=_nonnegative, required=True)

    return parser


def _emit(payload: dict, text_lines: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _series_payload(name: str, series: TruncSeries) -> tuple[dict, list[str]]:
    coefficients = {}
    lines = []
    for exps in sorted(
        ({e for e, _ in series.items()} | {(0,) * len(series.vars)}),
        key=lambda t: (sum(t), t),
    ):
        key = "*".join(f"{v}^{k}" for v, k in zip(series.vars, exps))
        value = str(series.coefficient(exps))
        coefficients[key] = value
        lines.append(f"{key}: {value}")
    payload = {"series": name, "order": series.order, "coefficients": coefficients}
    return payload, lines


def cmd_hermite(config: RunConfig, kind: str, n: int) -> int:
    poly = hermite(HermiteKind(kind), n)
    payload = {"kind": kind, "n": n, "polynomial": str(poly)}
    _emit(payload, [str(poly)], config.fmt)
    return 0


def cmd_expand(config: RunConfig, name: str) -> int:
    series = SERIES_BUILDERS[name](config.order)
    payload, lines = _series_payload(name, series)
    _emit(payload, lines, config.fmt)
    return 0


def cmd_verify(config: RunConfig, identity: str) -> int:
    report = identities.verify(identity, config.order)
    lines = [f"{identity} @ order {config.order}: {report.status}"]
    if report.mismatch is not None:
        m = report.mismatch
        lines.append(f"  first mismatch at exponents {list(m.exponents)}")
        lines.append(f"  lhs: {m.lhs}")
        lines.append(f"  rhs: {m.rhs}")
    _emit(report.to_dict(), lines, config.fmt)
    return 0 if report.verified else 1


def cmd_oracle(config: RunConfig, target: str) -> int:
    n = config.n
    if target == "matchings":
        census = oracle.enumerate_matchings(n)
        _emit({"target": target, "n": n, "census": str(census)}, [str(census)], config.fmt)
        return 0
    if target == "wtrees":
        count = oracle.enumerate_w_trees(n)
        formula = 3**n * math.factorial(n) * identities.catalan_number(n)
        payload = {"target": target, "n": n, "count": count, "formula": formula}
        _emit(payload, [str(count)], config.fmt)
        return 0 if count == formula else 1
    census = oracle.enumerate_marked_graphs(n)
    check = oracle.factor_census_check(n)
    payload = {
        "target": target,
        "n": n,
        "census": census.to_dict(),
        "check": "pass" if check.passed else "fail",
    }
    lines = [f"{profile}: {poly}" for profile, poly in census.to_dict().items()]
    lines.append(f"factor census check (n <= {n}): {'pass' if check.passed else 'fail'}")
    if not check.passed:
        for entry in check.entries:
            if not entry.matched:
                lines.append(
                    f"  n={entry.n} {entry.factor}: census {entry.census} != series {entry.series}"
                )
    _emit(payload, lines, config.fmt)
    return 0 if check.passed else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = RunConfig(
        subcommand=args.subcommand,
        fmt=args.format,
        order=getattr(args, "order", DEFAULT_ORDER),
        n=getattr(args, "n", 0),
    )
    try:
        if args.subcommand == "hermite":
            return cmd_hermite(config, args.kind, args.n)
        if args.subcommand == "expand":
            return cmd_expand(config, args.series)
        if args.subcommand == "verify":
            return cmd_verify(config, args.identity)
        return cmd_oracle(config, args.target)
    except ValueError as exc:
        parser.error(str(exc))


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
