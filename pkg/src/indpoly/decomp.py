"""Decomposition trees: data model, file format, validation, the
independence-set calculus of k-sums, and the recursive lift builder.

A tree composes graphic / cographic / small-matrix leaves with 1-, 2-
and 3-sums.  Sum nodes store the block matrices A, B and the glue
vectors a, b, c, d; validation checks that each child's defining
matrix really has the glue-extended block shape, and the assembled
matrix is recomputed bottom-up so that certification never trusts the
lift composer it is checking.

Trees are ingested (from files or built programmatically), not
discovered; only 1-sum detection on raw matrices is provided.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Union

from . import gf2
from .extform import (ExtendedFormulation, couple, fix_variable, intersection,
                      product, rename_labels, vrep_lift)
from .gf2 import Gf2Matrix
from .graphic import (Graph, cographic_independence_ef, format_graph,
                      graphic_independence_ef, network_matrix, parse_graph)
from .matroid import BinaryMatroid


class DecompError(ValueError):
    pass


@dataclass(frozen=True)
class GraphicLeaf:
    graph: Graph


@dataclass(frozen=True)
class CographicLeaf:
    graph: Graph


@dataclass(frozen=True)
class SmallLeaf:
    matrix: Gf2Matrix


@dataclass(frozen=True)
class Sum:
    k: int
    left: "Node"
    right: "Node"
    a_block: Gf2Matrix
    b_block: Gf2Matrix
    a: Optional[Gf2Matrix] = None  # column vectors; None for k = 1
    b: Optional[Gf2Matrix] = None
    c: Optional[Gf2Matrix] = None  # k = 3 only
    d: Optional[Gf2Matrix] = None

    def __post_init__(self):
        if self.k not in (1, 2, 3):
            raise DecompError(f"k must be 1, 2 or 3, got {self.k}")
        need = {1: (), 2: ("a", "b"), 3: ("a", "b", "c", "d")}[self.k]
        for name in ("a", "b", "c", "d"):
            have = getattr(self, name) is not None
            if have != (name in need):
                raise DecompError(f"{self.k}-sum glue vector {name} "
                                  f"{'missing' if name in need else 'unexpected'}")


Node = Union[GraphicLeaf, CographicLeaf, SmallLeaf, Sum]

LEFT_PREFIX = "left/"
RIGHT_PREFIX = "right/"


def _is_zero(v: Gf2Matrix) -> bool:
    return all(r == 0 for r in v.rows)


def _col(m: Gf2Matrix, j: int, row_lo: int = 0, row_hi: Optional[int] = None) -> Gf2Matrix:
    hi = m.num_rows if row_hi is None else row_hi
    return Gf2Matrix.column_vector([m.entry(i, j) for i in range(row_lo, hi)])


def _slice(m: Gf2Matrix, rows: range, cols: range) -> Gf2Matrix:
    entries = [[m.entry(i, j) for j in cols] for i in rows]
    return Gf2Matrix.from_entries(entries, num_cols=len(cols))


def defining_matrix(node: Node) -> tuple[Gf2Matrix, list[str]]:
    """The matrix representing node's matroid plus its element labeling
    (identity-first), recomputed bottom-up."""
    if isinstance(node, GraphicLeaf):
        return network_matrix(node.graph)
    if isinstance(node, CographicLeaf):
        mat, labels = network_matrix(node.graph)
        p = mat.num_rows
        return mat.transpose(), labels[p:] + labels[:p]
    if isinstance(node, SmallLeaf):
        m = node.matrix
        return m, [f"e{i + 1}" for i in range(m.num_rows + m.num_cols)]
    return _assemble_sum(node)


def _prefixed(labels: Sequence[str], prefix: str) -> list[str]:
    return [prefix + lbl for lbl in labels]


def _check(cond: bool, msg: str):
    if not cond:
        raise DecompError(msg)


def _assemble_sum(node: Sum) -> tuple[Gf2Matrix, list[str]]:
    m1, lab1 = defining_matrix(node.left)
    m2, lab2 = defining_matrix(node.right)
    p1, p2 = m1.num_rows, m2.num_rows
    L = _prefixed(lab1, LEFT_PREFIX)
    R = _prefixed(lab2, RIGHT_PREFIX)
    if node.k == 1:
        _check(m1.rows == node.a_block.rows and m1.num_cols == node.a_block.num_cols,
               "1-sum block A does not match the left child's matrix")
        _check(m2.rows == node.b_block.rows and m2.num_cols == node.b_block.num_cols,
               "1-sum block B does not match the right child's matrix")
        mat = gf2.assemble_1sum(m1, m2)
        labels = L[:p1] + R[:p2] + L[p1:] + R[p2:]
        return mat, labels
    if node.k == 2:
        _check(m1.num_cols >= 1, "2-sum left child needs a glue column")
        _check(m2.num_rows >= 1, "2-sum right child needs a glue row")
        a = _col(m1, 0)
        A = _slice(m1, range(p1), range(1, m1.num_cols))
        b = Gf2Matrix.column_vector(m2.row_list(0))
        B = _slice(m2, range(1, p2), range(m2.num_cols))
        _check(a.rows == node.a.rows, "glue vector a does not match left child")
        _check(b.rows == node.b.rows, "glue vector b does not match right child")
        _check(A.rows == node.a_block.rows and A.num_cols == node.a_block.num_cols,
               "2-sum block A does not match the left child's matrix")
        _check(B.rows == node.b_block.rows and B.num_cols == node.b_block.num_cols,
               "2-sum block B does not match the right child's matrix")
        mat = gf2.assemble_2sum(A, a, b, B)
        labels = L[:p1] + R[1:p2] + L[p1 + 1:] + R[p2:]
        return mat, labels
    # k == 3
    _check(p1 >= 1 and m1.num_cols >= 2, "3-sum left child too small")
    _check(p2 >= 1 and m2.num_cols >= 2, "3-sum right child too small")
    _check(m1.entry(p1 - 1, 0) == 0 and m1.entry(p1 - 1, 1) == 1,
           "3-sum left child's last row must start 0 1")
    _check(m2.entry(0, 0) == 0 and m2.entry(0, 1) == 1,
           "3-sum right child's first row must start 0 1")
    a = _col(m1, 0, 0, p1 - 1)
    a2 = _col(m1, 1, 0, p1 - 1)
    _check(a.rows == a2.rows, "3-sum left child's first two columns must agree")
    A = _slice(m1, range(p1 - 1), range(2, m1.num_cols))
    c = Gf2Matrix.column_vector(m1.row_list(p1 - 1)[2:])
    d = _col(m2, 0, 1, p2)
    d2 = _col(m2, 1, 1, p2)
    _check(d.rows == d2.rows, "3-sum right child's first two columns must agree")
    B = _slice(m2, range(1, p2), range(2, m2.num_cols))
    b = Gf2Matrix.column_vector(m2.row_list(0)[2:])
    for name, got, want in (("a", a, node.a), ("b", b, node.b),
                            ("c", c, node.c), ("d", d, node.d)):
        _check(got.rows == want.rows, f"glue vector {name} does not match children")
    _check(A.rows == node.a_block.rows and A.num_cols == node.a_block.num_cols,
           "3-sum block A does not match the left child's matrix")
    _check(B.rows == node.b_block.rows and B.num_cols == node.b_block.num_cols,
           "3-sum block B does not match the right child's matrix")
    mat = gf2.assemble_3sum(A, a, b, c, d, B)
    labels = L[:p1 - 1] + R[1:p2] + L[p1 + 2:] + R[p2 + 2:]
    return mat, labels


def make_sum(k: int, left: Node, right: Node) -> Sum:
    """Build a sum node, deriving blocks and glue from the children."""
    m1, _ = defining_matrix(left)
    m2, _ = defining_matrix(right)
    p1, p2 = m1.num_rows, m2.num_rows
    if k == 1:
        return Sum(1, left, right, m1, m2)
    if k == 2:
        if m1.num_cols < 1 or p2 < 1:
            raise DecompError("children too small for a 2-sum")
        return Sum(2, left, right,
                   _slice(m1, range(p1), range(1, m1.num_cols)),
                   _slice(m2, range(1, p2), range(m2.num_cols)),
                   a=_col(m1, 0),
                   b=Gf2Matrix.column_vector(m2.row_list(0)))
    node = Sum(3, left, right,
               _slice(m1, range(p1 - 1), range(2, m1.num_cols)),
               _slice(m2, range(1, p2), range(2, m2.num_cols)),
               a=_col(m1, 0, 0, p1 - 1),
               b=Gf2Matrix.column_vector(m2.row_list(0)[2:]),
               c=Gf2Matrix.column_vector(m1.row_list(p1 - 1)[2:]),
               d=_col(m2, 0, 1, p2))
    _assemble_sum(node)  # shape validation
    return node


def node_matroid(node: Node) -> BinaryMatroid:
    mat, labels = defining_matrix(node)
    return BinaryMatroid.from_matrix(mat, labels)


def glue_elements(node: Sum) -> list[tuple[str, str]]:
    """Coupled (left, right) glue element labels, prefixed like the sum's
    ground set; [(r1, r2)] for 2-sums, [(r1, r2), (p1, p2), (q1, q2)] for
    3-sums."""
    if not isinstance(node, Sum) or node.k == 1:
        raise DecompError("glue_elements needs a 2- or 3-sum node")
    m1, lab1 = defining_matrix(node.left)
    m2, lab2 = defining_matrix(node.right)
    p1, p2 = m1.num_rows, m2.num_rows
    L = _prefixed(lab1, LEFT_PREFIX)
    R = _prefixed(lab2, RIGHT_PREFIX)
    if node.k == 2:
        return [(L[p1], R[0])]
    return [(L[p1], R[0]), (L[p1 - 1], R[p2]), (L[p1 + 1], R[p2 + 1])]


def sum_independent_sets(k: int, m1: BinaryMatroid, m2: BinaryMatroid,
                         glue_pairs: Sequence[tuple[str, str]],
                         cap: int = 20) -> list[frozenset]:
    """Independent sets of a k-sum from its summands' independent sets.

    For k = 1 all disjoint unions.  For k = 2 the unions of sets whose
    glue pair is hit exactly once, with the glue elements removed.

    For k = 3 the exactly-one rule is *not* sound: whenever both glue
    vectors are nonzero, the union of a basis of the left a-row span
    with a basis of the right d-row span is independent in the sum but
    admits no exactly-one witness, because the three glue elements form
    a triangle on each side.  The sound characterization drops the
    joint witness: J1 disjoint-union J2 is independent iff J1 and J2
    are independent and, for every glue pair (g1, g2), J1 + g1 is
    independent on the left or J2 + g2 is independent on the right.
    Degenerate glue (a zero a or d vector shows up as a glue loop)
    reduces to a 2-sum or 1-sum of minors first.

    Labels follow the summands (left/right prefixes applied by the
    caller via the matroids' labels).
    """
    if len(glue_pairs) != {1: 0, 2: 1, 3: 3}[k]:
        raise DecompError(f"{k}-sum expects {k - 1 if k < 3 else 3} glue pairs")
    if k == 3:
        (r1, r2), (p1, p2), (q1, q2) = glue_pairs
        a_zero = m1.rank_of([r1]) == 0  # column (a; 0) vanishes
        d_zero = m2.rank_of([p2]) == 0  # column (0; d) vanishes
        if a_zero and d_zero:
            return sum_independent_sets(
                1, m1.minor([r1, q1], [p1]), m2.minor([p2, q2], [r2]), [], cap)
        if d_zero:
            return sum_independent_sets(
                2, m1.minor([q1], [p1]), m2.minor([p2, q2], []), [(r1, r2)], cap)
        if a_zero:
            return sum_independent_sets(
                2, m1.minor([r1, q1], []), m2.minor([q2], [r2]), [(p1, p2)], cap)
    left_glue = [p for p, _ in glue_pairs]
    right_glue = [q for _, q in glue_pairs]
    sets1 = m1.independent_sets(cap)
    sets2 = m2.independent_sets(cap)
    out = set()
    if k == 3:
        free1 = [s for s in sets1 if not s & set(left_glue)]
        free2 = [s for s in sets2 if not s & set(right_glue)]
        blocked1 = {s: tuple(not m1.is_independent(s | {g}) for g in left_glue)
                    for s in free1}
        blocked2 = {s: tuple(not m2.is_independent(s | {g}) for g in right_glue)
                    for s in free2}
        for j1 in free1:
            b1 = blocked1[j1]
            for j2 in free2:
                b2 = blocked2[j2]
                if not any(x and y for x, y in zip(b1, b2)):
                    out.add(j1 | j2)
        return sorted(out, key=lambda s: sorted(s))
    for i1 in sets1:
        for i2 in sets2:
            if all((p in i1) + (q in i2) == 1
                   for p, q in zip(left_glue, right_glue)):
                out.add((i1 - set(left_glue)) | (i2 - set(right_glue)))
    return sorted(out, key=lambda s: sorted(s))


def build_ef(node: Node, cap: int = 20) -> ExtendedFormulation:
    """Recursive lift construction over the tree.

    Leaves use the (co)graphic lifts or an explicit convex-hull lift;
    sums take products, couple glue pairs with x + y = 1, and realize
    the degenerate zero-glue cases as cube-face minors of the children's
    lifts.  Projected labels equal node_matroid(node).elements.
    """
    if isinstance(node, GraphicLeaf):
        return graphic_independence_ef(node.graph)
    if isinstance(node, CographicLeaf):
        return cographic_independence_ef(node.graph)
    if isinstance(node, SmallLeaf):
        m = node_matroid(node)
        points = [{e: 1 for e in s} for s in m.independent_sets(cap)]
        return vrep_lift(points, list(m.elements))
    ef1 = rename_labels(build_ef(node.left, cap),
                        {lbl: LEFT_PREFIX + lbl
                         for lbl in defining_matrix(node.left)[1]})
    ef2 = rename_labels(build_ef(node.right, cap),
                        {lbl: RIGHT_PREFIX + lbl
                         for lbl in defining_matrix(node.right)[1]})
    if node.k == 1:
        return product(ef1, ef2)
    pairs = glue_elements(node)
    if node.k == 2:
        (r1, r2), = pairs
        if _is_zero(node.a):
            # Degenerate 2-sum: a 1-sum of minors (delete r1, contract r2).
            return product(fix_variable(ef1, r1, 0), fix_variable(ef2, r2, 1))
        return couple(product(ef1, ef2), pairs)
    (r1, r2), (p1, p2), (q1, q2) = pairs
    a0, d0 = _is_zero(node.a), _is_zero(node.d)
    if a0 and d0:
        # Fully degenerate: a 1-sum of minors of both children.
        ef1 = fix_variable(fix_variable(fix_variable(ef1, p1, 1), r1, 0), q1, 0)
        ef2 = fix_variable(fix_variable(fix_variable(ef2, r2, 1), p2, 0), q2, 0)
        return product(ef1, ef2)
    if d0:
        # 2-sum of minors coupling (r1, r2).
        ef1 = fix_variable(fix_variable(ef1, p1, 1), q1, 0)
        ef2 = fix_variable(fix_variable(ef2, p2, 0), q2, 0)
        return couple(product(ef1, ef2), [(r1, r2)])
    if a0:
        # Mirror case: 2-sum of minors coupling (p1, p2).
        ef1 = fix_variable(fix_variable(ef1, r1, 0), q1, 0)
        ef2 = fix_variable(fix_variable(ef2, r2, 1), q2, 0)
        return couple(product(ef1, ef2), [(p1, p2)])
    # Generic 3-sum.  Coupling all three pairs at once is not sound:
    # the three glue elements form a triangle on each side, so a set
    # whose left part spans the a-rows and whose right part spans the
    # d-rows is independent in the sum yet infeasible under the triple
    # coupling.  Instead intersect two sound relaxations, each coupling
    # two of the pairs with the third pair's glue fixed to 0.  Each
    # relaxation cuts every rank violation that shares its coupled
    # directions; together they cut all of them, and both admit every
    # independent set (the per-copy glue values solve a small
    # polymatroid system).  Inequality counts double at this node.
    def two_pair_system(keep, drop):
        ef = couple(product(ef1, ef2), keep)
        for lbl in drop:
            ef = fix_variable(ef, lbl, 0)
        return ef

    first = two_pair_system([(r1, r2), (p1, p2)], (q1, q2))
    second = two_pair_system([(r1, r2), (q1, q2)], (p1, p2))
    return intersection(first, second)


def find_1sums(mat: Gf2Matrix) -> list[tuple[list[int], list[int]]]:
    """Connected components of the bipartite nonzero pattern on rows and
    columns; each is a 1-sum summand after restriction.  Zero rows and
    columns come back as singleton blocks."""
    parent = list(range(mat.num_rows + mat.num_cols))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(mat.num_rows):
        for j in range(mat.num_cols):
            if mat.entry(i, j):
                ri, rj = find(i), find(mat.num_rows + j)
                if ri != rj:
                    parent[rj] = ri
    blocks: dict[int, tuple[list[int], list[int]]] = {}
    for i in range(mat.num_rows):
        blocks.setdefault(find(i), ([], []))[0].append(i)
    for j in range(mat.num_cols):
        blocks.setdefault(find(mat.num_rows + j), ([], []))[1].append(j)
    return sorted(blocks.values())


@lru_cache(maxsize=None)
def g_bound(n: int) -> int:
    """Worst-case total leaf ground-set size over valid decomposition
    trees of an n-element matroid (dynamic program; equals 15(n-6) for
    n >= 7)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return 1
    best = n
    for t in range(3, n - 2):
        best = max(best, g_bound(t) + g_bound(n - t))
    for t in range(2, n - 1):
        best = max(best, g_bound(t + 1) + g_bound(n - t + 1))
    for t in range(4, n - 3):
        best = max(best, g_bound(t + 3) + g_bound(n - t + 3))
    return best


@dataclass
class ValidationReport:
    errors: list[str]
    warnings: list[str]
    node_sizes: list[tuple[str, int]]  # (description, ground-set size)
    leaf_total: int
    leaf_bound: int

    @property
    def ok(self) -> bool:
        return not self.errors


def validate(node: Node) -> ValidationReport:
    """Shape preconditions as errors, decomposition-theorem cardinality
    conditions as warnings, plus size accounting per node."""
    errors: list[str] = []
    warnings: list[str] = []
    sizes: list[tuple[str, int]] = []
    leaf_total = 0

    def visit(n: Node, path: str) -> int:
        nonlocal leaf_total
        try:
            mat, labels = defining_matrix(n)
        except DecompError as exc:
            errors.append(f"{path}: {exc}")
            return 0
        size = len(labels)
        if isinstance(n, Sum):
            sizes.append((f"{path} ({n.k}-sum)", size))
            lsize = visit(n.left, path + ".L")
            rsize = visit(n.right, path + ".R")
            if n.k == 3:
                for side, s in (("left", lsize), ("right", rsize)):
                    if s < 7:
                        warnings.append(
                            f"{path}: 3-sum {side} child has {s} elements (< 7)")
        else:
            kind = type(n).__name__.replace("Leaf", "").lower()
            sizes.append((f"{path} ({kind} leaf)", size))
            leaf_total += size
            if size < 3:
                warnings.append(f"{path}: leaf has {size} elements (< 3)")
        return size

    root_size = visit(node, "root")
    bound = g_bound(root_size) if root_size >= 1 else 0
    if root_size >= 1 and leaf_total > bound:
        warnings.append(f"leaf total {leaf_total} exceeds bound {bound}")
    return ValidationReport(errors, warnings, sizes, leaf_total, bound)


# -- tree file format ------------------------------------------------

def parse_tree_file(path: str) -> Node:
    """Parse the line-oriented tree format; see write_tree for the shape.
    Referenced graph/matrix files are resolved relative to the tree file."""
    base = os.path.dirname(os.path.abspath(path))
    with open(path) as fh:
        lines = fh.read().splitlines()
    specs: dict[str, tuple] = {}
    root_id: Optional[str] = None
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] in ("leaf", "sum") and parts[1] in specs:
                raise DecompError(f"duplicate node id {parts[1]!r}")
            if parts[0] == "leaf":
                _, nid, kind, fname = parts
                if kind not in ("graphic", "cographic", "small"):
                    raise DecompError(f"unknown leaf kind {kind!r}")
                specs[nid] = ("leaf", kind, fname)
            elif parts[0] == "sum":
                _, nid, *opts = parts
                kv = dict(opt.split("=", 1) for opt in opts)
                specs[nid] = ("sum", kv)
            elif parts[0] == "root":
                _, root_id = parts
            else:
                raise DecompError(f"unknown directive {parts[0]!r}")
        except (ValueError, DecompError) as exc:
            raise DecompError(f"{path}:{lineno}: {exc}") from exc
    if root_id is None:
        raise DecompError(f"{path}: missing root directive")

    used: set[str] = set()

    def load(nid: str) -> Node:
        if nid not in specs:
            raise DecompError(f"{path}: dangling node id {nid!r}")
        if nid in used:
            raise DecompError(f"{path}: node {nid!r} used twice (cycle or "
                              "shared subtree)")
        used.add(nid)
        spec = specs[nid]
        if spec[0] == "leaf":
            _, kind, fname = spec
            with open(os.path.join(base, fname)) as fh:
                text = fh.read()
            if kind == "small":
                node: Node = SmallLeaf(gf2.parse_matrix(text))
            elif kind == "graphic":
                node = GraphicLeaf(parse_graph(text))
            else:
                node = CographicLeaf(parse_graph(text))
        else:
            kv = dict(spec[1])
            try:
                k = int(kv.pop("k"))
                left = load(kv.pop("left"))
                right = load(kv.pop("right"))
                with open(os.path.join(base, kv.pop("A"))) as fh:
                    a_block = gf2.parse_matrix(fh.read())
                with open(os.path.join(base, kv.pop("B"))) as fh:
                    b_block = gf2.parse_matrix(fh.read())
            except KeyError as exc:
                raise DecompError(f"{path}: sum node {nid} missing {exc}") from exc
            glue = {}
            for name in ("a", "b", "c", "d"):
                if name in kv:
                    bits = kv.pop(name)
                    glue[name] = Gf2Matrix.column_vector(
                        [int(ch) for ch in bits]) if bits else \
                        Gf2Matrix(0, 1, ())
            if kv:
                raise DecompError(f"{path}: sum node {nid} has unknown "
                                  f"fields {sorted(kv)}")
            node = Sum(k, left, right, a_block, b_block, **glue)
        return node

    return load(root_id)


def _bits(v: Gf2Matrix) -> str:
    return "".join(str(v.entry(i, 0)) for i in range(v.num_rows))


def write_tree(node: Node, directory: str, name: str = "tree") -> str:
    """Serialize a tree plus its graph/matrix files into directory;
    returns the tree file path."""
    os.makedirs(directory, exist_ok=True)
    lines: list[str] = []
    counter = [0]
    node_counter = [0]

    def fresh(stem: str, ext: str) -> str:
        counter[0] += 1
        return f"{name}_{stem}{counter[0]}.{ext}"

    def emit(n: Node) -> str:
        node_counter[0] += 1
        nid = f"n{node_counter[0]}"
        if isinstance(n, (GraphicLeaf, CographicLeaf)):
            fname = fresh("graph", "g")
            with open(os.path.join(directory, fname), "w") as fh:
                fh.write(format_graph(n.graph))
            kind = "graphic" if isinstance(n, GraphicLeaf) else "cographic"
            lines.append(f"leaf {nid} {kind} {fname}")
        elif isinstance(n, SmallLeaf):
            fname = fresh("mat", "m")
            with open(os.path.join(directory, fname), "w") as fh:
                fh.write(gf2.format_matrix(n.matrix))
            lines.append(f"leaf {nid} small {fname}")
        else:
            left_id = emit(n.left)
            right_id = emit(n.right)
            fa = fresh("A", "m")
            fb = fresh("B", "m")
            with open(os.path.join(directory, fa), "w") as fh:
                fh.write(gf2.format_matrix(n.a_block))
            with open(os.path.join(directory, fb), "w") as fh:
                fh.write(gf2.format_matrix(n.b_block))
            glue = ""
            for gname in ("a", "b", "c", "d"):
                v = getattr(n, gname)
                if v is not None:
                    glue += f" {gname}={_bits(v)}"
            lines.append(f"sum {nid} k={n.k} left={left_id} right={right_id}"
                         f"{glue} A={fa} B={fb}")
        return nid

    root_id = emit(node)
    lines.append(f"root {root_id}")
    tree_path = os.path.join(directory, f"{name}.tree")
    with open(tree_path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    return tree_path
