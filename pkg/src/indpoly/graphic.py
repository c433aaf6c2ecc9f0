"""Graphs, network matrices and the spanning-forest / (co)graphic lifts.

The spanning-forest polytope is lifted with the classic flow-based
system of size O(|V| * |E|): for every root choice k, each non-root
vertex sends exactly one unit along an incident edge orientation and
the two orientations of an edge sum to the edge variable.  Graphic and
cographic independence polytopes are then its monotonization and its
affine complement, respectively.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .extform import (ExtendedFormulation, Variable, affine_complement,
                      monotonize, product)
from .gf2 import Gf2Matrix
from .rational import ONE, Rational


@dataclass(frozen=True)
class Edge:
    label: str
    u: str
    v: str

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


@dataclass(frozen=True)
class Graph:
    """Undirected multigraph; parallel edges and loops permitted."""

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        labels = [e.label for e in self.edges]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate edge labels")
        for e in self.edges:
            if e.u not in vs or e.v not in vs:
                raise ValueError(f"edge {e.label} references unknown vertex")

    @staticmethod
    def build(vertices: Sequence[str], edges: Sequence[tuple[str, str, str]]) -> "Graph":
        return Graph(tuple(vertices), tuple(Edge(*e) for e in edges))

    def components(self) -> list[list[str]]:
        """Connected components; each sorted by label, listed by smallest label."""
        adj: dict[str, list[str]] = {v: [] for v in self.vertices}
        for e in self.edges:
            if not e.is_loop:
                adj[e.u].append(e.v)
                adj[e.v].append(e.u)
        seen: set[str] = set()
        comps = []
        for v in sorted(self.vertices):
            if v in seen:
                continue
            comp = []
            queue = deque([v])
            seen.add(v)
            while queue:
                w = queue.popleft()
                comp.append(w)
                for x in sorted(adj[w]):
                    if x not in seen:
                        seen.add(x)
                        queue.append(x)
            comps.append(sorted(comp))
        return comps


def parse_graph(text: str) -> Graph:
    """Graph text format: "n m" header, then m lines "label u v"."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty graph file")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"bad graph header {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    body = lines[1:]
    if len(body) != m:
        raise ValueError(f"expected {m} edges, got {len(body)}")
    edges = []
    vertices: dict[str, None] = {}
    for ln in body:
        parts = ln.split()
        if len(parts) != 3:
            raise ValueError(f"bad edge line {ln!r}")
        label, u, v = parts
        edges.append((label, u, v))
        vertices.setdefault(u)
        vertices.setdefault(v)
    if len(vertices) > n:
        raise ValueError(f"header declares {n} vertices, found {len(vertices)}")
    return Graph.build(list(vertices), edges)


def format_graph(g: Graph) -> str:
    lines = [f"{len(g.vertices)} {len(g.edges)}"]
    for e in g.edges:
        lines.append(f"{e.label} {e.u} {e.v}")
    return "\n".join(lines) + "\n"


def _bfs_forest(g: Graph) -> list[Edge]:
    """Deterministic spanning forest: BFS per component from the
    smallest-labeled vertex, scanning edges in input order."""
    adj: dict[str, list[Edge]] = {v: [] for v in g.vertices}
    for e in g.edges:
        if not e.is_loop:
            adj[e.u].append(e)
            adj[e.v].append(e)
    tree: list[Edge] = []
    seen: set[str] = set()
    for v in sorted(g.vertices):
        if v in seen:
            continue
        seen.add(v)
        queue = deque([v])
        while queue:
            w = queue.popleft()
            for e in adj[w]:
                other = e.v if e.u == w else e.u
                if other not in seen:
                    seen.add(other)
                    tree.append(e)
                    queue.append(other)
    return tree


def network_matrix(g: Graph) -> tuple[Gf2Matrix, list[str]]:
    """Tree-path incidence matrix of a BFS spanning forest, mod 2.

    Rows are tree edges, columns the non-tree edges; entry (t, e) is 1
    iff t lies on the forest path between e's endpoints.  Loops give
    zero columns.  Returns the matrix and the element labeling of its
    identity-extension: tree-edge labels (identity part) followed by
    non-tree edge labels.
    """
    tree = _bfs_forest(g)
    tree_set = {e.label for e in tree}
    cotree = [e for e in g.edges if e.label not in tree_set]
    # Parent pointers for path lookup.
    adj: dict[str, list[tuple[Edge, str]]] = {v: [] for v in g.vertices}
    for e in tree:
        adj[e.u].append((e, e.v))
        adj[e.v].append((e, e.u))
    depth: dict[str, int] = {}
    parent: dict[str, tuple[Edge, str] | None] = {}
    for v in sorted(g.vertices):
        if v in depth:
            continue
        depth[v] = 0
        parent[v] = None
        queue = deque([v])
        while queue:
            w = queue.popleft()
            for e, x in adj[w]:
                if x not in depth:
                    depth[x] = depth[w] + 1
                    parent[x] = (e, w)
                    queue.append(x)

    def path_edges(u: str, v: str) -> set[str]:
        path: set[str] = set()
        while u != v:
            if depth[u] < depth[v]:
                u, v = v, u
            e, up = parent[u]
            path ^= {e.label}
            u = up
        return path

    row_of = {e.label: i for i, e in enumerate(tree)}
    entries = [[0] * len(cotree) for _ in tree]
    for j, e in enumerate(cotree):
        if e.is_loop:
            continue
        for t in path_edges(e.u, e.v):
            entries[row_of[t]][j] = 1
    mat = Gf2Matrix.from_entries(entries, num_cols=len(cotree))
    labels = [e.label for e in tree] + [e.label for e in cotree]
    return mat, labels


def spanning_forest_ef(g: Graph) -> ExtendedFormulation:
    """Lift whose projection onto edge variables is the spanning-forest
    polytope of g.

    Built per connected component and joined by product; loop edges are
    fixed to 0 by equation, single-vertex components contribute nothing.
    Edge nonnegativity is implied by the orientation variables and is
    not stated as an inequality.
    """
    comps = g.components()
    vertex_comp = {v: i for i, comp in enumerate(comps) for v in comp}
    parts: list[ExtendedFormulation] = []
    for ci, comp in enumerate(comps):
        comp_edges = [e for e in g.edges if vertex_comp[e.u] == ci]
        if not comp_edges:
            continue
        non_loop = [e for e in comp_edges if not e.is_loop]
        loops = [e for e in comp_edges if e.is_loop]
        variables = [Variable(f"x_{e.label}", e.label) for e in comp_edges]
        var_idx = {e.label: i for i, e in enumerate(comp_edges)}
        z_idx: dict[tuple[str, str, str], int] = {}
        for k in comp:
            for e in non_loop:
                for tail in (e.u, e.v):
                    z_idx[(k, e.label, tail)] = len(variables)
                    variables.append(Variable(f"z_{k}_{e.label}_{tail}", None))
        ineqs = []
        eqs = []
        # Every spanning forest of the component has |comp| - 1 edges.
        eqs.append(({var_idx[e.label]: ONE for e in non_loop},
                    Rational(len(comp) - 1)))
        for e in loops:
            eqs.append(({var_idx[e.label]: ONE}, Rational(0)))
        for k in comp:
            for e in non_loop:
                eqs.append(({z_idx[(k, e.label, e.u)]: ONE,
                             z_idx[(k, e.label, e.v)]: ONE,
                             var_idx[e.label]: -ONE}, Rational(0)))
            # Each non-root vertex picks exactly one outgoing orientation.
            for i in comp:
                row = {}
                for e in non_loop:
                    if e.u == i or e.v == i:
                        row[z_idx[(k, e.label, i)]] = \
                            row.get(z_idx[(k, e.label, i)], Rational(0)) + ONE
                eqs.append((row, Rational(0) if i == k else ONE))
        for z in z_idx.values():
            ineqs.append(({z: -ONE}, "<=", Rational(0)))
        for e in non_loop:
            ineqs.append(({var_idx[e.label]: ONE}, "<=", ONE))
        parts.append(ExtendedFormulation(tuple(variables), tuple(ineqs), tuple(eqs)))
    if not parts:
        return ExtendedFormulation((), (), ())
    ef = parts[0]
    for part in parts[1:]:
        ef = product(ef, part)
    return ef


def graphic_independence_ef(g: Graph) -> ExtendedFormulation:
    """Lift of the graphic independence polytope: edge sets below some
    spanning forest."""
    return monotonize(spanning_forest_ef(g))


def cographic_independence_ef(g: Graph) -> ExtendedFormulation:
    """Lift of the cographic independence polytope: edge sets inside the
    complement of some spanning forest."""
    return affine_complement(spanning_forest_ef(g))
