"""Brute-force enumeration of matchings, marked trivalent graphs and w-trees.

These enumerations are deliberately independent of the series machinery:
they walk concrete finite objects and aggregate weights, and the test suite
uses them as ground truth for every generating-function factor.

Matchings.  A matching of {0..m-1} is an involution, represented as a tuple
of disjoint pairs (i, j) with i < j; elements in no pair are the fixed
points and carry weight u each.  ``iter_matchings`` pairs the smallest
unused element first, so the enumeration order is deterministic.

Marked graphs.  A marked graph on n labeled trivalent vertices has 3n
half-edge slots, slot s belonging to vertex s // 3 with mark "abc"[s % 3],
plus a matching of the slots.  Matched slot pairs become edges of a reduced
multigraph on the n vertices (a pair within one vertex is a loop, and loops
count as cycles); unmatched slots are u-weighted leaves that never affect
connectivity.  Components are classified by their cyclomatic number
edges - vertices + 1: zero for trees, one for unicyclic components, two or
more for the rest.

w-trees.  A w-tree is a rooted tree whose internal vertices are labeled and
trivalent with half-edges marked a/b/c, whose leaves are unlabeled, and
whose root half-edge is unmatched.  The two subtrees under an internal
vertex hang off half-edges with distinct marks, so ordering children by
mark is a canonical form for the 2-per-vertex child-order symmetry of plane
drawings.  ``iter_w_trees`` generates exactly the canonical drawings (each
tree once); ``iter_w_tree_drawings`` generates all drawings so that small-n
tests can exercise the quotient explicitly.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, Tuple

from . import identities
from .hermite import hermite_h
from .poly import UPolynomial

MATCHING_BOUND = 14
W_TREE_BOUND = 5
MARKED_GRAPH_BOUND = 4

Pair = Tuple[int, int]
Pairs = Tuple[Pair, ...]

MARKS = "abc"
LEAF = ()


def iter_matchings(items: Tuple[int, ...]) -> Iterator[Pairs]:
    """All involutions of ``items`` as tuples of pairs (fixed points omitted)."""
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    yield from iter_matchings(rest)  # first stays unmatched
    for i, partner in enumerate(rest):
        for sub in iter_matchings(rest[:i] + rest[i + 1 :]):
            yield ((first, partner),) + sub


def matching_fixed_points(items: Tuple[int, ...], pairs: Pairs) -> Tuple[int, ...]:
    used = {v for pair in pairs for v in pair}
    return tuple(v for v in items if v not in used)


def enumerate_matchings(m: int) -> UPolynomial:
    """Weighted census sum u^(#fixed points) over all matchings of an m-set."""
    if not 0 <= m <= MATCHING_BOUND:
        raise ValueError(f"matching enumeration supports 0 <= m <= {MATCHING_BOUND}, got {m}")
    counts: Dict[int, int] = {}
    for pairs in iter_matchings(tuple(range(m))):
        fixed = m - 2 * len(pairs)
        counts[fixed] = counts.get(fixed, 0) + 1
    return UPolynomial({(fixed, 0): c for fixed, c in counts.items()})


# -- marked trivalent graphs ---------------------------------------------------


@dataclass(frozen=True)
class MarkedGraph:
    """n labeled trivalent vertices plus a matching of their 3n half-edge slots."""

    n: int
    pairs: Pairs

    def __post_init__(self):
        used = [v for pair in self.pairs for v in pair]
        if len(set(used)) != len(used):
            raise ValueError("a half-edge slot is used twice")
        if any(not 0 <= s < 3 * self.n for s in used):
            raise ValueError("half-edge slot out of range")

    def fixed_slots(self) -> Tuple[int, ...]:
        return matching_fixed_points(tuple(range(3 * self.n)), self.pairs)

    def weight_exponent(self) -> int:
        """Number of u-weighted monovalent leaves."""
        return 3 * self.n - 2 * len(self.pairs)

    def reduced_edges(self) -> Tuple[Pair, ...]:
        """Vertex pairs of the reduced multigraph (loops and multi-edges kept)."""
        return tuple((s // 3, t // 3) for s, t in self.pairs)

    def component_profile(self) -> Tuple[int, int, int]:
        return _component_profile(self.n, self.pairs)


def _component_profile(n: int, pairs: Pairs) -> Tuple[int, int, int]:
    """(#acyclic, #unicyclic, #multicyclic) components of the reduced multigraph."""
    parent = list(range(n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for s, t in pairs:
        ru, rv = find(s // 3), find(t // 3)
        if ru != rv:
            parent[ru] = rv
    vertices = [0] * n
    edges = [0] * n
    for v in range(n):
        vertices[find(v)] += 1
    for s, t in pairs:
        edges[find(s // 3)] += 1
    acyclic = unicyclic = multicyclic = 0
    for v in range(n):
        if find(v) == v:
            cycles = edges[v] - vertices[v] + 1  # cyclomatic number, loops included
            if cycles == 0:
                acyclic += 1
            elif cycles == 1:
                unicyclic += 1
            else:
                multicyclic += 1
    return (acyclic, unicyclic, multicyclic)


@dataclass(frozen=True)
class ComponentCensus:
    """Weighted graph counts keyed by component-class profile."""

    n: int
    by_profile: Dict[Tuple[int, int, int], UPolynomial]

    def total(self) -> UPolynomial:
        out = UPolynomial.zero()
        for poly in self.by_profile.values():
            out = out + poly
        return out

    def _restricted(self, keep) -> UPolynomial:
        out = UPolynomial.zero()
        for profile, poly in self.by_profile.items():
            if keep(profile):
                out = out + poly
        return out

    def all_acyclic(self) -> UPolynomial:
        return self._restricted(lambda p: p[1] == 0 and p[2] == 0)

    def all_unicyclic(self) -> UPolynomial:
        return self._restricted(lambda p: p[0] == 0 and p[2] == 0)

    def all_multicyclic(self) -> UPolynomial:
        return self._restricted(lambda p: p[0] == 0 and p[1] == 0)

    def to_dict(self) -> dict:
        return {
            ",".join(map(str, profile)): str(self.by_profile[profile])
            for profile in sorted(self.by_profile)
        }


def iter_marked_graphs(n: int) -> Iterator[MarkedGraph]:
    for pairs in iter_matchings(tuple(range(3 * n))):
        yield MarkedGraph(n, pairs)


@lru_cache(maxsize=None)
def enumerate_marked_graphs(n: int) -> ComponentCensus:
    """Census of all marked graphs on n vertices, keyed by component profile."""
    if not 0 <= n <= MARKED_GRAPH_BOUND:
        raise ValueError(
            f"marked-graph enumeration supports 0 <= n <= {MARKED_GRAPH_BOUND}, got {n}"
        )
    counts: Dict[Tuple[int, int, int], Dict[int, int]] = {}
    for pairs in iter_matchings(tuple(range(3 * n))):
        profile = _component_profile(n, pairs)
        fixed = 3 * n - 2 * len(pairs)
        per_fixed = counts.setdefault(profile, {})
        per_fixed[fixed] = per_fixed.get(fixed, 0) + 1
    return ComponentCensus(
        n,
        {
            profile: UPolynomial({(f, 0): c for f, c in per_fixed.items()})
            for profile, per_fixed in counts.items()
        },
    )


# -- w-trees --------------------------------------------------------------------


def _iter_canonical(labels: Tuple[int, ...]) -> Iterator[tuple]:
    if not labels:
        yield LEAF
        return
    for root in labels:
        rest = tuple(sorted(set(labels) - {root}))
        for mark in MARKS:  # mark of the unmatched / parent-facing half-edge
            for k in range(len(rest) + 1):
                for left_labels in itertools.combinations(rest, k):
                    right_labels = tuple(sorted(set(rest) - set(left_labels)))
                    for left in _w_tree_lists(left_labels):
                        for right in _w_tree_lists(right_labels):
                            yield (root, mark, left, right)


@lru_cache(maxsize=None)
def _w_tree_lists(labels: Tuple[int, ...]) -> tuple:
    """Memoized canonical w-trees on exactly the given internal labels."""
    return tuple(_iter_canonical(labels))


def iter_w_trees(labels: Tuple[int, ...]) -> Iterator[tuple]:
    """Each distinct w-tree exactly once, as its canonical drawing.

    The two child half-edges of an internal vertex carry the two marks other
    than the root-facing one, in alphabetical order: left gets the smaller
    mark.  Because the marks differ, this fixes one drawing per tree; only
    the subtree lists are memoized, so the full top-level list is never
    materialized.
    """
    yield from _iter_canonical(tuple(sorted(labels)))


def enumerate_w_trees(n: int) -> int:
    """Count distinct w-trees with n internal vertices by direct generation."""
    if not 0 <= n <= W_TREE_BOUND:
        raise ValueError(f"w-tree enumeration supports 0 <= n <= {W_TREE_BOUND}, got {n}")
    if n <= 4:
        trees = list(iter_w_trees(tuple(range(n))))
        distinct = set(trees)
        if len(distinct) != len(trees):
            raise AssertionError("canonical w-tree generation produced a duplicate")
        return len(trees)
    return sum(1 for _ in iter_w_trees(tuple(range(n))))


def iter_w_tree_drawings(labels: Tuple[int, ...]) -> Iterator[tuple]:
    """All 2^n plane drawings per tree: children in either order.

    A drawing is (root, root_mark, (mark1, sub1), (mark2, sub2)) with the
    children in drawing order; a leaf is ().
    """
    labels = tuple(sorted(labels))
    if not labels:
        yield LEAF
        return
    for root in labels:
        rest = tuple(sorted(set(labels) - {root}))
        for mark in MARKS:
            others = tuple(m for m in MARKS if m != mark)
            for mark_order in (others, others[::-1]):
                for k in range(len(rest) + 1):
                    for first_labels in itertools.combinations(rest, k):
                        second_labels = tuple(sorted(set(rest) - set(first_labels)))
                        for first in iter_w_tree_drawings(first_labels):
                            for second in iter_w_tree_drawings(second_labels):
                                yield (
                                    root,
                                    mark,
                                    (mark_order[0], first),
                                    (mark_order[1], second),
                                )


def canonical_w_tree(drawing: tuple) -> tuple:
    """Canonical form of a drawing: sort children by (mark, subtree encoding)."""
    if drawing == LEAF:
        return LEAF
    root, mark, (m1, sub1), (m2, sub2) = drawing
    c1 = (m1, canonical_w_tree(sub1))
    c2 = (m2, canonical_w_tree(sub2))
    left, right = sorted((c1, c2))
    # canonical drawings drop the child marks: they are determined by the
    # root mark plus alphabetical order
    return (root, mark, left[1], right[1])


# -- census versus generating-function factors -----------------------------------


@dataclass(frozen=True)
class CensusCheckEntry:
    n: int
    factor: str
    census: UPolynomial
    series: UPolynomial

    @property
    def matched(self) -> bool:
        return self.census == self.series


@dataclass(frozen=True)
class CensusCheckReport:
    n_max: int
    entries: Tuple[CensusCheckEntry, ...]

    @property
    def passed(self) -> bool:
        return all(entry.matched for entry in self.entries)

    def to_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "status": "verified" if self.passed else "mismatch",
            "entries": [
                {
                    "n": e.n,
                    "factor": e.factor,
                    "matched": e.matched,
                    "census": str(e.census),
                    "series": str(e.series),
                }
                for e in self.entries
            ],
        }


def factor_census_check(n_max: int) -> CensusCheckReport:
    """Compare the graph census, class by class, with the series factors.

    For each n <= n_max the all-acyclic, all-unicyclic and all-multicyclic
    graph classes must have exponential generating functions exp(T),
    (1-6wz)^(-1/2) and the multi-cycle sum, and the total census must be
    h_{3n}(u).  Mismatches are collected, not raised.
    """
    if not 0 <= n_max <= MARKED_GRAPH_BOUND:
        raise ValueError(f"census check supports 0 <= n_max <= {MARKED_GRAPH_BOUND}, got {n_max}")
    forest_gf = identities.tree_gf(n_max).exp()
    one_cycle = identities.one_cycle_factor(n_max)
    multi_cycle = identities.multi_cycle_factor(n_max)
    entries = []
    for n in range(n_max + 1):
        scale = math.factorial(n)
        census = enumerate_marked_graphs(n)
        for factor, census_poly, series in (
            ("acyclic", census.all_acyclic(), forest_gf),
            ("unicyclic", census.all_unicyclic(), one_cycle),
            ("multicyclic", census.all_multicyclic(), multi_cycle),
        ):
            entries.append(
                CensusCheckEntry(n, factor, census_poly, series.coefficient((n,)) * scale)
            )
        entries.append(CensusCheckEntry(n, "total", census.total(), hermite_h(3 * n)))
    return CensusCheckReport(n_max, tuple(entries))
