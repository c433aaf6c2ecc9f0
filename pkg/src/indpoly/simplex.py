"""Exact rational LP solver: two-phase simplex with Bland's rule.

Everything is computed over exact rationals; infeasible and unbounded
are in-band results.  The solver presolves a system once (explicit
nonnegativity rows become variable types, equations are eliminated by
Gauss-Jordan, leftover free variables are split) and caches the
phase-1 tableau, so repeated solves over the same constraints -- the
certification workload -- only run phase 2.

Bland's pivoting (lowest-index entering column, lowest-index leaving
basis variable on ratio ties) guarantees termination; speed is not the
point at desk scale, determinism and exactness are.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .rational import ONE, Rational, ZERO

Status = tuple  # ("optimal", value) | ("infeasible",) | ("unbounded",)


@dataclass(frozen=True)
class LinearProgram:
    """Constraints only; objectives are supplied per solve.

    inequalities: (row, rhs) meaning row . x <= rhs
    equations:    (row, rhs) meaning row . x  = rhs
    Rows are sparse dicts var index -> coefficient.  All variables are
    free unless an explicit nonnegativity inequality types them.
    """

    num_vars: int
    inequalities: Sequence[tuple[Mapping[int, object], object]]
    equations: Sequence[tuple[Mapping[int, object], object]]


class LpSolver:
    """Presolved LP over a fixed constraint system."""

    def __init__(self, lp: LinearProgram):
        self._status = None  # set to "infeasible" during presolve if detected
        ineqs = [({j: Rational(c) for j, c in row.items() if Rational(c) != 0},
                  Rational(b)) for row, b in lp.inequalities]
        eqs = [({j: Rational(c) for j, c in row.items() if Rational(c) != 0},
                Rational(b)) for row, b in lp.equations]

        # Explicit "x >= 0" rows (arriving as -x <= 0) become variable types.
        nonneg = [False] * lp.num_vars
        kept = []
        for row, b in ineqs:
            if b == 0 and len(row) == 1:
                (j, c), = row.items()
                if c < 0:
                    nonneg[j] = True
                    continue
            kept.append((row, b))
        ineqs = kept

        # Gauss-Jordan elimination of the equations.  Pivots prefer free
        # variables; pivoting on a nonneg variable re-adds its bound as
        # an inequality over the substituted expression.
        self._subst: dict[int, tuple[dict[int, object], object]] = {}
        pending = list(eqs)
        while pending:
            row, b = pending.pop(0)
            row, b = self._apply_subst(row, b)
            if not row:
                if b != 0:
                    self._status = "infeasible"
                    return
                continue
            free = [j for j in row if not nonneg[j]]
            pivot = min(free) if free else min(row)
            pc = row[pivot]
            expr = {j: -c / pc for j, c in row.items() if j != pivot}
            const = b / pc
            # Substitute into previously recorded pivot expressions.
            for v, (e, k) in self._subst.items():
                if pivot in e:
                    a = e.pop(pivot)
                    for j, c in expr.items():
                        e[j] = e.get(j, ZERO) + a * c
                        if e[j] == 0:
                            del e[j]
                    self._subst[v] = (e, k + a * const)
            self._subst[pivot] = (expr, const)
            if nonneg[pivot]:
                # pivot = const + expr >= 0  =>  -expr <= const
                ineqs.append(({j: -c for j, c in expr.items()}, const))

        # Substitute into the inequalities, drop vanished rows.
        rows = []
        for row, b in ineqs:
            row, b = self._apply_subst(row, b)
            if not row:
                if b < 0:
                    self._status = "infeasible"
                    return
                continue
            rows.append((row, b))

        # Column layout: one column per remaining nonneg variable, a
        # split pair (u - v) per remaining free variable.
        self._col_of: dict[int, tuple[int, int | None]] = {}
        ncols = 0
        remaining = sorted({j for row, _ in rows for j in row} |
                           {j for e, _ in self._subst.values() for j in e})
        for j in remaining:
            if nonneg[j]:
                self._col_of[j] = (ncols, None)
                ncols += 1
            else:
                self._col_of[j] = (ncols, ncols + 1)
                ncols += 2
        self._nonneg = nonneg
        self._nstruct = ncols
        self._build_phase1(rows)

    # -- presolve helpers ---------------------------------------------

    def _apply_subst(self, row, b):
        out = dict(row)
        for j in list(out):
            hit = self._subst.get(j)
            if hit is None:
                continue
            a = out.pop(j)
            expr, const = hit
            b -= a * const
            for k, c in expr.items():
                out[k] = out.get(k, ZERO) + a * c
                if out[k] == 0:
                    del out[k]
        return out, b

    def _dense(self, row, width):
        dense = [ZERO] * width
        for j, a in row.items():
            pos, neg = self._col_of[j]
            dense[pos] += a
            if neg is not None:
                dense[neg] -= a
        return dense

    def _build_phase1(self, rows):
        m = len(rows)
        n = self._nstruct
        width = n + m  # structural + slack columns; rhs kept separately
        tableau = []
        rhs = []
        basis = []
        art_rows = []
        for i, (row, b) in enumerate(rows):
            dense = self._dense(row, width)
            dense[n + i] = ONE
            if b < 0:
                dense = [-a for a in dense]
                b = -b
                art_rows.append(i)
                basis.append(None)  # artificial, assigned below
            else:
                basis.append(n + i)
            tableau.append(dense)
            rhs.append(b)
        n_art = len(art_rows)
        for a, i in enumerate(art_rows):
            for k in range(m):
                tableau[k].append(ONE if k == i else ZERO)
            basis[i] = width + a
        total = width + n_art
        if n_art:
            cost = [ZERO] * total
            for a in range(n_art):
                cost[width + a] = ONE
            cval = ZERO
            for i in art_rows:
                for j in range(total):
                    cost[j] -= tableau[i][j]
                cval -= rhs[i]
            # Phase-1 objective is bounded below by 0, so always optimal.
            _, p1val = _simplex(tableau, rhs, basis, cost, cval, total)
            if p1val != 0:
                self._status = "infeasible"
                return
            # Pivot surviving zero-valued artificials out, or drop
            # redundant rows.
            drop = []
            for i in range(m):
                if basis[i] >= width:
                    col = next((j for j in range(width) if tableau[i][j] != 0),
                               None)
                    if col is None:
                        drop.append(i)
                    else:
                        _pivot(tableau, rhs, basis, None, None, i, col)
            for i in sorted(drop, reverse=True):
                del tableau[i], rhs[i], basis[i]
            for row in tableau:
                del row[width:]
        self._tableau = tableau
        self._rhs = rhs
        self._basis = basis
        self._width = width

    # -- solving ------------------------------------------------------

    def solve(self, objective: Mapping[int, object], maximize: bool) -> Status:
        """Optimize objective (sparse over original variables)."""
        if self._status == "infeasible":
            return ("infeasible",)
        obj = {j: Rational(c) for j, c in objective.items() if Rational(c) != 0}
        obj, offset = self._apply_subst(obj, ZERO)
        offset = -offset  # _apply_subst treats its input as a row . x <= b pair
        sign = -ONE if maximize else ONE
        # Minimize sign * obj; unreferenced variables make it unbounded
        # unless their coefficient is favorably signed.
        for j in list(obj):
            if j not in self._col_of:
                c = sign * obj[j]
                if c < 0 or (c > 0 and not self._nonneg[j]):
                    return ("unbounded",)
                del obj[j]
        cost = [ZERO] * self._width
        for j, a in obj.items():
            pos, neg = self._col_of[j]
            cost[pos] += sign * a
            if neg is not None:
                cost[neg] -= sign * a
        tableau = [list(row) for row in self._tableau]
        rhs = list(self._rhs)
        basis = list(self._basis)
        cval = ZERO
        for i, bj in enumerate(basis):
            c = cost[bj]
            if c != 0:
                for j in range(self._width):
                    cost[j] -= c * tableau[i][j]
                cost[bj] = ZERO
                cval -= c * rhs[i]
        status, neg_z = _simplex(tableau, rhs, basis, cost, cval, self._width)
        if status == "unbounded":
            return ("unbounded",)
        # The tableau cell holds -z for the minimization of sign * obj.
        value = (neg_z if maximize else -neg_z) + offset
        return ("optimal", value)


def _pivot(tableau, rhs, basis, cost, cval, r, e):
    """Pivot row r on column e; cost/cval may be None during cleanup."""
    piv = tableau[r][e]
    if piv != ONE:
        inv = ONE / piv
        tableau[r] = [a * inv for a in tableau[r]]
        rhs[r] = rhs[r] * inv
    prow = tableau[r]
    pb = rhs[r]
    for i in range(len(tableau)):
        if i == r:
            continue
        f = tableau[i][e]
        if f != 0:
            row = tableau[i]
            tableau[i] = [a - f * p if p != 0 else a for a, p in zip(row, prow)]
            rhs[i] = rhs[i] - f * pb
    basis[r] = e
    if cost is not None:
        f = cost[e]
        if f != 0:
            for j in range(len(cost)):
                if prow[j] != 0:
                    cost[j] -= f * prow[j]
            cost[e] = ZERO
            return cval - f * pb
    return cval


def _simplex(tableau, rhs, basis, cost, cval, ncols):
    """Bland minimization in place; returns (status, objective value)."""
    m = len(tableau)
    while True:
        enter = next((j for j in range(ncols) if cost[j] < 0), None)
        if enter is None:
            return "optimal", cval
        leave = None
        best = None
        for i in range(m):
            a = tableau[i][enter]
            if a > 0:
                ratio = rhs[i] / a
                if best is None or ratio < best or \
                        (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            return "unbounded", cval
        cval = _pivot(tableau, rhs, basis, cost, cval, leave, enter)


def solve_lp(lp: LinearProgram, objective: Mapping[int, object],
             maximize: bool = True) -> Status:
    """One-shot solve; build an LpSolver directly to reuse presolve."""
    return LpSolver(lp).solve(objective, maximize)
