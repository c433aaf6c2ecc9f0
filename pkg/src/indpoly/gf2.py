"""Dense linear algebra over the two-element field.

Matrices are immutable, with bit-packed rows (one Python int per row,
bit j = column j) so that rank computation and span tests reduce to
XOR/AND on machine words.  Rank is the inner loop of every matroid
oracle call, so this representation matters.

Degenerate shapes are first-class: matrices with zero rows or zero
columns are legal (but not both zero), and all block-assembly helpers
handle them without special cases downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Gf2Matrix:
    """An immutable num_rows x num_cols matrix over GF(2).

    rows holds one int per row; bit j of rows[i] is entry (i, j).
    """

    num_rows: int
    num_cols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.num_rows < 0 or self.num_cols < 0:
            raise ValueError("negative dimension")
        if self.num_rows + self.num_cols == 0:
            raise ValueError("matrix must have at least one row or column")
        if len(self.rows) != self.num_rows:
            raise ValueError("row count mismatch")
        mask = (1 << self.num_cols) - 1
        for r in self.rows:
            if r & ~mask:
                raise ValueError("row has bits outside the column range")

    @staticmethod
    def from_entries(entries: Sequence[Sequence[int]], num_cols: int | None = None) -> "Gf2Matrix":
        """Build from a row-major grid of 0/1 entries.

        num_cols is only needed when entries is empty (zero-row matrix).
        """
        n_rows = len(entries)
        if n_rows == 0:
            if num_cols is None:
                raise ValueError("num_cols required for a zero-row matrix")
            return Gf2Matrix(0, num_cols, ())
        n_cols = len(entries[0])
        rows = []
        for row in entries:
            if len(row) != n_cols:
                raise ValueError("ragged rows")
            word = 0
            for j, e in enumerate(row):
                if e not in (0, 1):
                    raise ValueError(f"entry {e!r} not in GF(2)")
                word |= e << j
            rows.append(word)
        return Gf2Matrix(n_rows, n_cols, tuple(rows))

    @staticmethod
    def zero(num_rows: int, num_cols: int) -> "Gf2Matrix":
        return Gf2Matrix(num_rows, num_cols, (0,) * num_rows)

    @staticmethod
    def identity(n: int) -> "Gf2Matrix":
        return Gf2Matrix(n, n, tuple(1 << i for i in range(n)))

    @staticmethod
    def column_vector(bits: Sequence[int]) -> "Gf2Matrix":
        """A len(bits) x 1 matrix; used for the glue vectors of k-sums."""
        return Gf2Matrix.from_entries([[b] for b in bits], num_cols=1)

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def row_list(self, i: int) -> list[int]:
        return [(self.rows[i] >> j) & 1 for j in range(self.num_cols)]

    def column_bits(self, j: int) -> int:
        """Column j packed into an int (bit i = row i)."""
        word = 0
        for i in range(self.num_rows):
            word |= ((self.rows[i] >> j) & 1) << i
        return word

    def transpose(self) -> "Gf2Matrix":
        return Gf2Matrix(
            self.num_cols, self.num_rows,
            tuple(self.column_bits(j) for j in range(self.num_cols)),
        )

    def submatrix_columns(self, cols: Sequence[int]) -> "Gf2Matrix":
        for j in cols:
            if not 0 <= j < self.num_cols:
                raise IndexError(f"column index {j} out of range")
        rows = []
        for word in self.rows:
            new = 0
            for pos, j in enumerate(cols):
                new |= ((word >> j) & 1) << pos
            rows.append(new)
        return Gf2Matrix(self.num_rows, len(cols), tuple(rows))

    def hstack(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if self.num_rows != other.num_rows:
            raise ValueError("row count mismatch in hstack")
        shift = self.num_cols
        rows = tuple(a | (b << shift) for a, b in zip(self.rows, other.rows))
        return Gf2Matrix(self.num_rows, self.num_cols + other.num_cols, rows)

    def vstack(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if self.num_cols != other.num_cols:
            raise ValueError("column count mismatch in vstack")
        return Gf2Matrix(self.num_rows + other.num_rows, self.num_cols,
                         self.rows + other.rows)

    def __str__(self) -> str:
        lines = [f"{self.num_rows} {self.num_cols}"]
        for i in range(self.num_rows):
            lines.append("".join(str(self.entry(i, j)) for j in range(self.num_cols)))
        return "\n".join(lines)


def rank(m: Gf2Matrix) -> int:
    """GF(2) rank via row reduction on a scratch copy; 0 for empty matrices."""
    basis: dict[int, int] = {}  # lowest set bit -> reduced row
    for word in m.rows:
        while word:
            low = word & -word
            if low in basis:
                word ^= basis[low]
            else:
                basis[low] = word
                break
    return len(basis)


def columns_independent(m: Gf2Matrix, cols: Iterable[int]) -> bool:
    """True iff the selected columns have full rank; trivially true for []."""
    cols = list(cols)
    sub = m.submatrix_columns(cols) if cols else None
    if sub is None:
        return True
    return rank(sub) == len(cols)


def identity_extension(m: Gf2Matrix) -> Gf2Matrix:
    """The p x (p+q) matrix (I | M)."""
    if m.num_rows == 0:
        return m
    return Gf2Matrix.identity(m.num_rows).hstack(m)


def assemble_1sum(a_mat: Gf2Matrix, b_mat: Gf2Matrix) -> Gf2Matrix:
    """Block-diagonal composition (A 0; 0 B); rows are built directly so
    fully degenerate blocks (0xq, px0) need no zero-size intermediates."""
    rows = a_mat.rows + tuple(r << a_mat.num_cols for r in b_mat.rows)
    return Gf2Matrix(a_mat.num_rows + b_mat.num_rows,
                     a_mat.num_cols + b_mat.num_cols, rows)


def assemble_2sum(a_mat: Gf2Matrix, a: Gf2Matrix, b: Gf2Matrix,
                  b_mat: Gf2Matrix) -> Gf2Matrix:
    """The block matrix (A ab^T; 0 B) with glue column vectors a, b.

    Rows are packed directly (row i of ab^T is b^T or zero depending on
    a_i), so degenerate zero-width blocks need no special handling.
    """
    if a.num_rows != a_mat.num_rows:
        raise ValueError("glue vector a must have rows(A) entries")
    if b.num_rows != b_mat.num_cols:
        raise ValueError("glue vector b must have cols(B) entries")
    qa = a_mat.num_cols
    b_bits = b.column_bits(0)
    top = tuple(r | ((b_bits if av & 1 else 0) << qa)
                for r, av in zip(a_mat.rows, a.rows))
    bot = tuple(r << qa for r in b_mat.rows)
    return Gf2Matrix(a_mat.num_rows + b_mat.num_rows,
                     qa + b_mat.num_cols, top + bot)


def assemble_3sum(a_mat: Gf2Matrix, a: Gf2Matrix, b: Gf2Matrix, c: Gf2Matrix,
                  d: Gf2Matrix, b_mat: Gf2Matrix) -> Gf2Matrix:
    """The block matrix (A ab^T; dc^T B) with glue column vectors a, b, c, d."""
    if a.num_rows != a_mat.num_rows:
        raise ValueError("glue vector a must have rows(A) entries")
    if c.num_rows != a_mat.num_cols:
        raise ValueError("glue vector c must have cols(A) entries")
    if b.num_rows != b_mat.num_cols:
        raise ValueError("glue vector b must have cols(B) entries")
    if d.num_rows != b_mat.num_rows:
        raise ValueError("glue vector d must have rows(B) entries")
    qa = a_mat.num_cols
    b_bits = b.column_bits(0)
    c_bits = c.column_bits(0)
    top = tuple(r | ((b_bits if av & 1 else 0) << qa)
                for r, av in zip(a_mat.rows, a.rows))
    bot = tuple((c_bits if dv & 1 else 0) | (r << qa)
                for r, dv in zip(b_mat.rows, d.rows))
    return Gf2Matrix(a_mat.num_rows + b_mat.num_rows,
                     qa + b_mat.num_cols, top + bot)


def parse_matrix(text: str) -> Gf2Matrix:
    """Parse the shared matrix text format.

    First non-comment line is "p q", followed by p lines of q characters
    from {0,1}.  Blank lines and lines starting with '#' are ignored.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty matrix file")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"bad matrix header {lines[0]!r}")
    p, q = int(head[0]), int(head[1])
    if q == 0:
        # Zero-column rows serialize as blank lines, which are skipped.
        return Gf2Matrix(p, 0, (0,) * p)
    body = lines[1:]
    if len(body) != p:
        raise ValueError(f"expected {p} rows, got {len(body)}")
    entries = []
    for ln in body:
        if len(ln) != q or set(ln) - {"0", "1"}:
            raise ValueError(f"bad matrix row {ln!r}")
        entries.append([int(ch) for ch in ln])
    return Gf2Matrix.from_entries(entries, num_cols=q)


def format_matrix(m: Gf2Matrix) -> str:
    return str(m) + "\n"
