"""Exact certification of lifts against brute-force matroid oracles.

The outer description of an independence polytope consists of
nonnegativity plus the rank inequalities sum_{e in S} x_e <= r(S), so
projection equality has a finite exact certificate at desk scale:
every independent set's characteristic vector is feasible (one
inclusion) and every rank inequality is respected by the LP maximum
(the other).  All arithmetic is rational; a PASS is a proof, not a
test.

Also here: the random-objective greedy cross-check, the quadratic
rectangle cover of the non-incidence pairs, and the exhaustive check
of the single-addition / single-exchange witness claim the cover
rests on.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .extform import ExtendedFormulation, _to_lp, lp_feasible_point
from .matroid import BinaryMatroid, MatroidError
from .rational import Rational, ZERO, rat_str
from .simplex import LpSolver

SCHEMA_VERSION = 1


class VerifyError(ValueError):
    pass


@dataclass(frozen=True)
class CertificationReport:
    """Outcome of certify_equality; deterministic except for seconds."""

    elements: tuple[str, ...]
    # (sorted independent set, feasible)
    vertex_checks: tuple[tuple[tuple[str, ...], bool], ...]
    # (sorted subset, lp max as string, rank, max <= rank, max == rank)
    rank_checks: tuple[tuple[tuple[str, ...], str, int, bool, bool], ...]
    # (element, lp min as string, min >= 0)
    nonneg_checks: tuple[tuple[str, str, bool], ...]
    overall: bool
    seconds: float = field(default=0.0, compare=False)

    @property
    def counts(self) -> dict[str, int]:
        return {
            "vertex_checks": len(self.vertex_checks),
            "vertex_failures": sum(not ok for _, ok in self.vertex_checks),
            "rank_checks": len(self.rank_checks),
            "rank_failures": sum(not ok for *_, ok, _t in self.rank_checks),
            "rank_tight": sum(t for *_, t in self.rank_checks),
            "nonneg_checks": len(self.nonneg_checks),
            "nonneg_failures": sum(not ok for *_, ok in self.nonneg_checks),
        }

    def to_json(self) -> str:
        """Byte-deterministic JSON; wall-clock time is deliberately
        excluded so identical inputs give identical bytes."""
        doc = {
            "schema_version": SCHEMA_VERSION,
            "elements": list(self.elements),
            "vertex_checks": [[list(s), ok] for s, ok in self.vertex_checks],
            "rank_checks": [[list(s), v, r, ok, tight]
                            for s, v, r, ok, tight in self.rank_checks],
            "nonneg_checks": [[e, v, ok] for e, v, ok in self.nonneg_checks],
            "counts": self.counts,
            "overall": self.overall,
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"

    def summary(self) -> str:
        c = self.counts
        lines = [
            f"elements: {len(self.elements)}",
            f"vertex checks: {c['vertex_checks']} "
            f"({c['vertex_failures']} failed)",
            f"rank checks: {c['rank_checks']} "
            f"({c['rank_failures']} failed, {c['rank_tight']} tight)",
            f"nonnegativity checks: {c['nonneg_checks']} "
            f"({c['nonneg_failures']} failed)",
            f"overall: {'PASS' if self.overall else 'FAIL'}",
        ]
        return "\n".join(lines)


def _subsets_by_index(elements: Sequence[str]):
    """All subsets ordered by characteristic-vector index."""
    n = len(elements)
    for mask in range(1 << n):
        yield tuple(elements[i] for i in range(n) if (mask >> i) & 1)


def certify_equality(ef: ExtendedFormulation, matroid: BinaryMatroid,
                     cap: int = 12) -> CertificationReport:
    """Exact proof that ef projects to the independence polytope.

    Three exhaustive families: characteristic vectors of independent
    sets are feasible points of the lift; for every subset S the LP
    maximum of sum_{e in S} x_e is at most r(S); every coordinate has
    nonnegative LP minimum.  PASS means all three hold, which is both
    inclusions (tightness of the rank checks follows from the vertex
    family and is reported informationally).
    """
    if set(ef.projected_labels) != set(matroid.elements):
        raise VerifyError("projected labels do not match the ground set")
    if matroid.size > cap:
        raise VerifyError(
            f"ground set of size {matroid.size} exceeds cap {cap}")
    start = time.monotonic()

    vertex_checks = []
    for ind in matroid.independent_sets(cap):
        point = {e: 1 for e in ind}
        vertex_checks.append((tuple(sorted(ind)), lp_feasible_point(ef, point)))

    # One presolve, 2^|E| + |E| phase-2 solves.
    solver = LpSolver(_to_lp(ef))
    idx = {lbl: ef.index_of_label(lbl) for lbl in matroid.elements}
    rank_checks = []
    for subset in _subsets_by_index(matroid.elements):
        status = solver.solve({idx[e]: 1 for e in subset}, maximize=True)
        r = matroid.rank_of(subset)
        if status[0] != "optimal":
            rank_checks.append((tuple(sorted(subset)), status[0], r,
                                False, False))
            continue
        value = status[1]
        rank_checks.append((tuple(sorted(subset)), rat_str(value), r,
                            value <= r, value == r))
    nonneg_checks = []
    for e in matroid.elements:
        status = solver.solve({idx[e]: 1}, maximize=False)
        if status[0] != "optimal":
            nonneg_checks.append((e, status[0], False))
        else:
            nonneg_checks.append((e, rat_str(status[1]), status[1] >= 0))

    overall = (all(ok for _, ok in vertex_checks)
               and all(ok for *_, ok, _t in rank_checks)
               and all(ok for *_, ok in nonneg_checks))
    return CertificationReport(
        tuple(matroid.elements), tuple(vertex_checks), tuple(rank_checks),
        tuple(nonneg_checks), overall,
        seconds=time.monotonic() - start)


@dataclass(frozen=True)
class GreedyReport:
    trials: int
    seed: int
    # (weights as sorted items, lp value, greedy value)
    mismatches: tuple[tuple[tuple[tuple[str, int], ...], str, str], ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def greedy_cross_check(ef: ExtendedFormulation, matroid: BinaryMatroid,
                       trials: int = 100,
                       weight_range: tuple[int, int] = (-10, 10),
                       seed: int = 0) -> GreedyReport:
    """Random-objective agreement between the lift's LP maximum and the
    matroid greedy: an independent re-check of a certified instance.
    """
    if set(ef.projected_labels) != set(matroid.elements):
        raise VerifyError("projected labels do not match the ground set")
    rng = random.Random(seed)
    lo, hi = weight_range
    solver = LpSolver(_to_lp(ef))
    idx = {lbl: ef.index_of_label(lbl) for lbl in matroid.elements}
    mismatches = []
    for _ in range(trials):
        weights = {e: rng.randint(lo, hi) for e in matroid.elements}
        status = solver.solve({idx[e]: w for e, w in weights.items()},
                              maximize=True)
        _, greedy_value = matroid.greedy_max(weights)
        if status[0] != "optimal" or status[1] != greedy_value:
            lp_value = rat_str(status[1]) if status[0] == "optimal" else status[0]
            mismatches.append((tuple(sorted(weights.items())),
                               lp_value, rat_str(greedy_value)))
    return GreedyReport(trials, seed, tuple(mismatches))


# -- rectangle covers of the non-incidence pairs ----------------------

class IndependenceFamily:
    """An explicit independence system: the protocol the cover checks
    need (elements, membership, rank as largest contained member).

    Deliberately does not require the exchange axiom, so corrupted
    families can serve as negative controls.
    """

    def __init__(self, elements: Sequence[str], sets: Iterable[frozenset]):
        self.elements = tuple(elements)
        self._sets = frozenset(frozenset(s) for s in sets)
        if frozenset() not in self._sets:
            raise VerifyError("independence family must contain the empty set")
        ground = set(self.elements)
        for s in self._sets:
            if not s <= ground:
                raise VerifyError(f"set {sorted(s)} leaves the ground set")

    @property
    def size(self) -> int:
        return len(self.elements)

    def is_independent(self, subset: Iterable[str]) -> bool:
        return frozenset(subset) in self._sets

    def rank_of(self, subset: Iterable[str]) -> int:
        subset = frozenset(subset)
        return max((len(s) for s in self._sets if s <= subset), default=0)

    def independent_sets(self, cap: int = 20) -> list[frozenset]:
        if self.size > cap:
            raise MatroidError(
                f"ground set of size {self.size} exceeds cap {cap}")
        key = lambda s: tuple(1 if e in s else 0 for e in self.elements)
        return sorted(self._sets, key=key)

    @staticmethod
    def of(matroid: BinaryMatroid, cap: int = 20) -> "IndependenceFamily":
        return IndependenceFamily(matroid.elements,
                                  matroid.independent_sets(cap))


@dataclass(frozen=True)
class Rectangle:
    """A product set of non-incident (rank subset, vertex) pairs.

    kind "extend" covers pairs witnessed by adding e to I; kind
    "exchange" covers pairs witnessed by swapping f out for e.
    """

    kind: str
    e: str
    f: Optional[str]
    row_sets: tuple[tuple[str, ...], ...]  # the subsets S
    col_sets: tuple[tuple[str, ...], ...]  # the independent sets I


@dataclass(frozen=True)
class CoverReport:
    num_rectangles: int
    count_bound: int  # |E|^2
    valid: bool       # every enumerated pair satisfies |I & S| <= r(S) - 1
    covered: int
    total: int        # all non-incidence pairs

    @property
    def coverage_complete(self) -> bool:
        return self.covered == self.total

    @property
    def ok(self) -> bool:
        return (self.valid and self.coverage_complete
                and self.num_rectangles <= self.count_bound)


def _non_incident(family, subset: frozenset, ind: frozenset) -> bool:
    return len(ind & subset) <= family.rank_of(subset) - 1


def rectangle_cover(family, cap: int = 8) -> tuple[list[Rectangle], CoverReport]:
    """The quadratic rectangle cover of all non-incidence pairs.

    Emits |E| extend rectangles (S containing e, I extendable by e)
    and |E|(|E|-1) exchange rectangles (S containing e but not f, I
    containing f with the swap independent), then verifies validity,
    coverage and the count bound by exhaustive enumeration.

    family may be a BinaryMatroid or an IndependenceFamily.
    """
    if family.size > cap:
        raise VerifyError(
            f"ground set of size {family.size} exceeds cap {cap}")
    elements = list(family.elements)
    indep = [frozenset(s) for s in family.independent_sets(cap)]
    subsets = [frozenset(s) for s in _subsets_by_index(elements) if s]

    rectangles = []
    for e in elements:
        rows = [s for s in subsets if e in s]
        cols = [i for i in indep
                if e not in i and family.is_independent(i | {e})]
        rectangles.append(Rectangle(
            "extend", e, None,
            tuple(tuple(sorted(s)) for s in rows),
            tuple(tuple(sorted(i)) for i in cols)))
    for e, f in itertools.permutations(elements, 2):
        rows = [s for s in subsets if e in s and f not in s]
        cols = [i for i in indep
                if e not in i and f in i
                and family.is_independent((i - {f}) | {e})]
        rectangles.append(Rectangle(
            "exchange", e, f,
            tuple(tuple(sorted(s)) for s in rows),
            tuple(tuple(sorted(i)) for i in cols)))

    valid = True
    covered_pairs = set()
    for rect in rectangles:
        for srow in rect.row_sets:
            s = frozenset(srow)
            for icol in rect.col_sets:
                i = frozenset(icol)
                if not _non_incident(family, s, i):
                    valid = False
                else:
                    covered_pairs.add((s, i))
    all_pairs = {(s, i) for s in subsets for i in indep
                 if _non_incident(family, s, i)}
    report = CoverReport(
        num_rectangles=len(rectangles),
        count_bound=family.size ** 2,
        valid=valid,
        covered=len(covered_pairs & all_pairs),
        total=len(all_pairs))
    return rectangles, report


def validity_of_exchange_claim(family, cap: int = 8):
    """Exhaustively test: (S, I) is non-incident iff a single-addition
    or single-exchange witness exists.

    Returns (True, None), or (False, (S, I)) with the first pair (in
    characteristic-vector order) breaking the equivalence.  Matroids
    must always satisfy it; a corrupted family need not.
    """
    if family.size > cap:
        raise VerifyError(
            f"ground set of size {family.size} exceeds cap {cap}")
    elements = list(family.elements)
    indep = [frozenset(s) for s in family.independent_sets(cap)]
    for srow in _subsets_by_index(elements):
        if not srow:
            continue
        s = frozenset(srow)
        for i in indep:
            witness = any(family.is_independent(i | {e}) for e in s - i) or \
                any(family.is_independent((i - {f}) | {e})
                    for e in s - i for f in i - s)
            if _non_incident(family, s, i) != witness:
                return False, (tuple(sorted(s)), tuple(sorted(i)))
    return True, None
