"""Extended formulations: rational linear systems with a coordinate
projection onto ground-set variables.

A variable either carries a ground-set label (projected) or is
auxiliary.  Equations are stored apart from inequalities and are never
counted in size, since only inequalities can create facets of the
lift.  Operations never eliminate variables; demotions just clear the
label, so every construction stays a coordinate projection.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .rational import ONE, Rational, ZERO
from .simplex import LinearProgram, solve_lp

Row = Mapping[int, object]  # var index -> Rational coefficient


@dataclass(frozen=True)
class Variable:
    name: str
    label: Optional[str] = None  # ground-set element label; None = auxiliary

    @property
    def projected(self) -> bool:
        return self.label is not None


@dataclass(frozen=True)
class ExtendedFormulation:
    variables: tuple[Variable, ...]
    inequalities: tuple[tuple[Row, str, object], ...]  # (row, "<=" or ">=", rhs)
    equations: tuple[tuple[Row, object], ...]

    def __post_init__(self):
        labels = [v.label for v in self.variables if v.projected]
        if len(set(labels)) != len(labels):
            raise ValueError("projected labels must be pairwise distinct")
        for row, sense, _ in self.inequalities:
            if sense not in ("<=", ">="):
                raise ValueError(f"bad sense {sense!r}")
            self._check_row(row)
        for row, _ in self.equations:
            self._check_row(row)

    def _check_row(self, row: Row):
        for j in row:
            if not 0 <= j < len(self.variables):
                raise ValueError(f"row references unknown variable {j}")

    # -- bookkeeping ---------------------------------------------------

    @property
    def projected_labels(self) -> tuple[str, ...]:
        return tuple(v.label for v in self.variables if v.projected)

    def index_of_label(self, label: str) -> int:
        for i, v in enumerate(self.variables):
            if v.label == label:
                return i
        raise KeyError(f"no projected variable labeled {label!r}")

    def size(self) -> tuple[int, int, int]:
        """(inequalities, equations, variables)."""
        return len(self.inequalities), len(self.equations), len(self.variables)


def _fresh_name(base: str, taken: set[str]) -> str:
    name = base
    k = 2
    while name in taken:
        name = f"{base}~{k}"
        k += 1
    taken.add(name)
    return name


def monotonize(ef: ExtendedFormulation) -> ExtendedFormulation:
    """Down-closure lift: fresh projected x with 0 <= x <= y, the old
    projected variables y demoted to auxiliary.  Adds 2n inequalities."""
    taken = {v.name for v in ef.variables}
    variables = [Variable(v.name, None) if v.projected else v
                 for v in ef.variables]
    ineqs = list(ef.inequalities)
    for i, v in enumerate(ef.variables):
        if not v.projected:
            continue
        xi = len(variables)
        variables.append(Variable(_fresh_name(f"x_{v.label}", taken), v.label))
        ineqs.append(({xi: ONE}, ">=", ZERO))
        ineqs.append(({xi: ONE, i: -ONE}, "<=", ZERO))
    return ExtendedFormulation(tuple(variables), tuple(ineqs), ef.equations)


def affine_complement(ef: ExtendedFormulation) -> ExtendedFormulation:
    """Complement lift: fresh projected x with 0 <= x <= 1 - y."""
    taken = {v.name for v in ef.variables}
    variables = [Variable(v.name, None) if v.projected else v
                 for v in ef.variables]
    ineqs = list(ef.inequalities)
    for i, v in enumerate(ef.variables):
        if not v.projected:
            continue
        xi = len(variables)
        variables.append(Variable(_fresh_name(f"x_{v.label}", taken), v.label))
        ineqs.append(({xi: ONE}, ">=", ZERO))
        ineqs.append(({xi: ONE, i: ONE}, "<=", ONE))
    return ExtendedFormulation(tuple(variables), tuple(ineqs), ef.equations)


def product(ef1: ExtendedFormulation, ef2: ExtendedFormulation) -> ExtendedFormulation:
    """Disjoint union of variables and constraints; sizes add exactly."""
    common = set(ef1.projected_labels) & set(ef2.projected_labels)
    if common:
        raise ValueError(f"projected label collision: {sorted(common)}")
    taken = {v.name for v in ef1.variables}
    variables = list(ef1.variables)
    offset = len(variables)
    for v in ef2.variables:
        variables.append(Variable(_fresh_name(v.name, taken), v.label))
    shift = lambda row: {j + offset: c for j, c in row.items()}
    ineqs = list(ef1.inequalities) + [(shift(r), s, b) for r, s, b in ef2.inequalities]
    eqs = list(ef1.equations) + [(shift(r), b) for r, b in ef2.equations]
    return ExtendedFormulation(tuple(variables), tuple(ineqs), tuple(eqs))


def couple(ef: ExtendedFormulation, pairs: Sequence[tuple[str, str]]) -> ExtendedFormulation:
    """Glue paired elements by x + y = 1 and project both away."""
    flat = [lbl for pair in pairs for lbl in pair]
    if len(set(flat)) != len(flat):
        raise ValueError("coupled labels must be pairwise distinct")
    demote = set()
    eqs = list(ef.equations)
    for left, right in pairs:
        i, j = ef.index_of_label(left), ef.index_of_label(right)
        eqs.append(({i: ONE, j: ONE}, ONE))
        demote.update((i, j))
    variables = tuple(Variable(v.name, None) if i in demote else v
                      for i, v in enumerate(ef.variables))
    return ExtendedFormulation(variables, ef.inequalities, tuple(eqs))


def intersection(ef1: ExtendedFormulation, ef2: ExtendedFormulation) -> ExtendedFormulation:
    """Intersection of two projections over the same label set.

    Both formulations are kept side by side and equally-labeled
    projected variables are equated; the second copy's labels are
    demoted.  Inequality counts add, like product.
    """
    if set(ef1.projected_labels) != set(ef2.projected_labels):
        raise ValueError("intersection needs identical projected label sets")
    taken = {v.name for v in ef1.variables}
    variables = list(ef1.variables)
    offset = len(variables)
    for v in ef2.variables:
        variables.append(Variable(_fresh_name(v.name, taken), None))
    shift = lambda row: {j + offset: c for j, c in row.items()}
    ineqs = list(ef1.inequalities) + [(shift(r), s, b) for r, s, b in ef2.inequalities]
    eqs = list(ef1.equations) + [(shift(r), b) for r, b in ef2.equations]
    for lbl in ef1.projected_labels:
        i = ef1.index_of_label(lbl)
        j = ef2.index_of_label(lbl) + offset
        eqs.append(({i: ONE, j: -ONE}, ZERO))
    return ExtendedFormulation(tuple(variables), tuple(ineqs), tuple(eqs))


def fix_variable(ef: ExtendedFormulation, label: str, value: int) -> ExtendedFormulation:
    """Restrict to a 0/1-cube face: label = value, variable demoted.

    Realizes minors on a built lift (deletion -> 0, contraction -> 1).
    """
    if value not in (0, 1):
        raise ValueError("fix value must be 0 or 1")
    i = ef.index_of_label(label)
    variables = tuple(Variable(v.name, None) if k == i else v
                      for k, v in enumerate(ef.variables))
    eqs = ef.equations + (({i: ONE}, Rational(value)),)
    return ExtendedFormulation(variables, ef.inequalities, eqs)


def rename_labels(ef: ExtendedFormulation, mapping: Mapping[str, str]) -> ExtendedFormulation:
    """Relabel projected variables (e.g. prefixing at a sum node)."""
    variables = tuple(
        Variable(v.name, mapping.get(v.label, v.label)) if v.projected else v
        for v in ef.variables)
    return ExtendedFormulation(variables, ef.inequalities, ef.equations)


def vrep_lift(points: Sequence[Mapping[str, int]],
              labels: Sequence[str]) -> ExtendedFormulation:
    """Convex hull of explicit 0/1 points via one multiplier per point.

    x = sum(lambda_P * P), sum(lambda) = 1, lambda >= 0.  Used as the
    leaf formulation for small matroids.
    """
    if not points:
        raise ValueError("vrep_lift needs at least one point")
    variables = [Variable(f"x_{lbl}", lbl) for lbl in labels]
    lam0 = len(variables)
    taken = {v.name for v in variables}
    for p in range(len(points)):
        variables.append(Variable(_fresh_name(f"lam{p}", taken), None))
    ineqs = [({lam0 + p: ONE}, ">=", ZERO) for p in range(len(points))]
    eqs = []
    for i, lbl in enumerate(labels):
        row = {i: -ONE}
        for p, pt in enumerate(points):
            if pt.get(lbl, 0):
                row[lam0 + p] = ONE
        eqs.append((row, ZERO))
    eqs.append(({lam0 + p: ONE for p in range(len(points))}, ONE))
    return ExtendedFormulation(tuple(variables), tuple(ineqs), tuple(eqs))


# -- exact optimization ----------------------------------------------

def _to_lp(ef: ExtendedFormulation) -> LinearProgram:
    return LinearProgram(
        num_vars=len(ef.variables),
        inequalities=[(dict(r), b) if s == "<=" else
                      ({j: -Rational(c) for j, c in r.items()}, -Rational(b))
                      for r, s, b in ef.inequalities],
        equations=[(dict(r), b) for r, b in ef.equations],
    )


def lp_optimize(ef: ExtendedFormulation, objective: Mapping[str, object],
                direction: str = "max"):
    """Exact rational optimum of a linear objective over projected labels.

    Returns ("optimal", value), ("infeasible",) or ("unbounded",).
    """
    if direction not in ("max", "min"):
        raise ValueError("direction must be 'max' or 'min'")
    obj: dict[int, object] = {}
    for lbl, c in objective.items():
        obj[ef.index_of_label(lbl)] = Rational(c)
    return solve_lp(_to_lp(ef), obj, maximize=(direction == "max"))


def lp_feasible_point(ef: ExtendedFormulation,
                      assignment: Mapping[str, object]) -> bool:
    """True iff fixing every projected variable to the given rational
    value leaves the auxiliary system feasible."""
    lp = _to_lp(ef)
    eqs = list(lp.equations)
    for lbl in ef.projected_labels:
        i = ef.index_of_label(lbl)
        eqs.append(({i: ONE}, Rational(assignment.get(lbl, 0))))
    lp = LinearProgram(lp.num_vars, lp.inequalities, eqs)
    return solve_lp(lp, {}, maximize=True)[0] == "optimal"
