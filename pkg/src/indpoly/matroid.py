"""Binary matroid oracles over labeled ground sets.

A matroid is represented by one GF(2) column per element.  Matroids
built from a p x q matrix A carry the identity-extension (I | A)
column family, identity columns first; matroids produced by minors
carry whatever column family the reduction leaves behind.

All values are immutable and all operations pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .gf2 import Gf2Matrix, identity_extension
from .rational import Rational, ZERO


class MatroidError(ValueError):
    pass


@dataclass(frozen=True)
class BinaryMatroid:
    """Ground set with one GF(2) column per element.

    columns is a rows x |E| matrix; element i owns column i.  defining
    and num_identity record the p x q matrix the matroid was built
    from, when it was built from one (needed by dual()).
    """

    elements: tuple[str, ...]
    columns: Gf2Matrix
    defining: Optional[Gf2Matrix] = None
    num_identity: Optional[int] = None
    _index: dict = field(init=False, repr=False, compare=False, hash=False, default=None)
    _col_ints: tuple = field(init=False, repr=False, compare=False, hash=False, default=None)

    def __post_init__(self):
        if len(self.elements) != self.columns.num_cols:
            raise MatroidError("label count does not match column count")
        if len(set(self.elements)) != len(self.elements):
            raise MatroidError("element labels must be pairwise distinct")
        object.__setattr__(self, "_index",
                           {e: i for i, e in enumerate(self.elements)})
        object.__setattr__(self, "_col_ints",
                           tuple(self.columns.column_bits(j)
                                 for j in range(self.columns.num_cols)))

    # -- construction -------------------------------------------------

    @staticmethod
    def from_matrix(a: Gf2Matrix, labels: Optional[Sequence[str]] = None) -> "BinaryMatroid":
        """Matroid of the identity-extension (I | A); ground set size p+q."""
        n = a.num_rows + a.num_cols
        if labels is None:
            labels = tuple(f"e{i + 1}" for i in range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n:
                raise MatroidError(f"expected {n} labels, got {len(labels)}")
        return BinaryMatroid(labels, identity_extension(a),
                             defining=a, num_identity=a.num_rows)

    @staticmethod
    def from_columns(columns: Gf2Matrix, labels: Sequence[str]) -> "BinaryMatroid":
        """Matroid of an explicit column family (no identity-extension shape)."""
        return BinaryMatroid(tuple(labels), columns)

    # -- oracles ------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.elements)

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise MatroidError(f"unknown element {label!r}") from None

    def _basis_of(self, labels: Iterable[str]) -> dict[int, int]:
        basis: dict[int, int] = {}
        for lbl in labels:
            word = self._col_ints[self.index_of(lbl)]
            while word:
                low = word & -word
                if low in basis:
                    word ^= basis[low]
                else:
                    basis[low] = word
                    break
        return basis

    def rank_of(self, subset: Iterable[str]) -> int:
        return len(self._basis_of(subset))

    def is_independent(self, subset: Iterable[str]) -> bool:
        subset = list(subset)
        return self.rank_of(subset) == len(subset)

    def rank(self) -> int:
        return self.rank_of(self.elements)

    # -- derived matroids ---------------------------------------------

    def dual(self) -> "BinaryMatroid":
        """The dual matroid, via the transpose of the defining matrix.

        The dual's identity block takes the labels of this matroid's
        non-identity columns (and vice versa), so element labels are
        preserved across the involution.
        """
        if self.defining is None or self.num_identity is None:
            raise MatroidError("dual() needs a matroid built by from_matrix")
        p = self.num_identity
        labels = self.elements[p:] + self.elements[:p]
        return BinaryMatroid.from_matrix(self.defining.transpose(), labels)

    def minor(self, deletions: Iterable[str], contractions: Iterable[str]) -> "BinaryMatroid":
        """Delete and contract elements; contractions must be independent.

        Contracted columns are pivoted to distinct unit vectors, their
        pivot rows dropped, and all named columns removed.
        """
        deletions = set(deletions)
        contractions = list(dict.fromkeys(contractions))
        if deletions & set(contractions):
            raise MatroidError("deletions and contractions must be disjoint")
        if not self.is_independent(contractions):
            raise MatroidError("contraction set is dependent")
        rows = list(self.columns.rows)
        pivoted: set[int] = set()
        for lbl in contractions:
            j = self.index_of(lbl)
            pivot = next(i for i in range(len(rows))
                         if i not in pivoted and (rows[i] >> j) & 1)
            for i in range(len(rows)):
                if i != pivot and (rows[i] >> j) & 1:
                    rows[i] ^= rows[pivot]
            pivoted.add(pivot)
        removed = deletions | set(contractions)
        keep_labels = [e for e in self.elements if e not in removed]
        keep_cols = [self.index_of(e) for e in keep_labels]
        keep_rows = tuple(r for i, r in enumerate(rows) if i not in pivoted)
        reduced = Gf2Matrix(len(keep_rows), self.columns.num_cols, keep_rows)
        if keep_cols:
            sub = reduced.submatrix_columns(keep_cols)
        else:
            sub = Gf2Matrix(max(len(keep_rows), 1), 0,
                            (0,) * max(len(keep_rows), 1))
        return BinaryMatroid.from_columns(sub, keep_labels)

    # -- optimization and enumeration ----------------------------------

    def greedy_max(self, weights: Mapping[str, object]) -> tuple[frozenset, object]:
        """Maximize a linear objective over independent sets.

        Elements are scanned in strictly decreasing weight (ties broken
        by ground-set order); non-positive weights are never taken,
        which is optimal for the down-closed independence polytope.
        """
        order = sorted(range(self.size),
                       key=lambda i: (-Rational(weights.get(self.elements[i], 0)), i))
        chosen: list[str] = []
        basis: dict[int, int] = {}
        total = ZERO
        for i in order:
            w = Rational(weights.get(self.elements[i], 0))
            if w <= 0:
                break
            word = self._col_ints[i]
            while word:
                low = word & -word
                if low in basis:
                    word ^= basis[low]
                else:
                    basis[low] = word
                    chosen.append(self.elements[i])
                    total += w
                    break
        return frozenset(chosen), total

    def independent_sets(self, cap: int = 20) -> list[frozenset]:
        """All independent sets, lexicographic by characteristic vector.

        DFS extension never revisits a superset of a dependent set.
        """
        if self.size > cap:
            raise MatroidError(f"ground set of size {self.size} exceeds cap {cap}")
        out: list[tuple[tuple[int, ...], frozenset]] = []
        n = self.size

        def extend(current: list[int], basis: dict[int, int], start: int):
            key = tuple(1 if i in current else 0 for i in range(n))
            out.append((key, frozenset(self.elements[i] for i in current)))
            for j in range(start, n):
                word = self._col_ints[j]
                reduced = word
                while reduced:
                    low = reduced & -reduced
                    if low in basis:
                        reduced ^= basis[low]
                    else:
                        break
                if reduced:
                    low = reduced & -reduced
                    basis[low] = reduced
                    current.append(j)
                    extend(current, basis, j + 1)
                    current.pop()
                    del basis[low]

        extend([], {}, 0)
        out.sort(key=lambda kv: kv[0])
        return [s for _, s in out]
