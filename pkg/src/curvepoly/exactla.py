"""Exact rank and kernel computations for rational matrices."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

try:
    import flint
except ImportError:  # pragma: no cover - flint is a declared dependency
    flint = None


@dataclass(frozen=True)
class QMatrix:
    rows: int
    cols: int
    entries: tuple  # row-major, ints or Fractions

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "QMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(_coerce(v) for r in rows for v in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def transpose(self) -> "QMatrix":
        return QMatrix.from_rows(
            [[self[i, j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )


def _coerce(v):
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else v
    if isinstance(v, int):
        return v
    return _coerce(Fraction(v))


def integer_rows(m: QMatrix) -> list:
    """Rows scaled by the lcm of their denominators (rank-preserving)."""
    out = []
    for i in range(m.rows):
        row = m.row(i)
        den = 1
        for v in row:
            if isinstance(v, Fraction):
                den = den * v.denominator // math.gcd(den, v.denominator)
        out.append([int(v * den) for v in row] if den != 1 else list(row))
    return out


def bareiss_rank(m: QMatrix) -> int:
    """Rank by Bareiss fraction-free elimination over the integers.

    Pivots are taken at the first nonzero entry of the remaining rows in
    row-major order.
    """
    a = integer_rows(m)
    nrows, ncols = m.rows, m.cols
    rank = 0
    prev = 1
    col = 0
    while rank < nrows and col < ncols:
        piv_row = None
        for i in range(rank, nrows):
            if a[i][col]:
                piv_row = i
                break
        if piv_row is None:
            col += 1
            continue
        a[rank], a[piv_row] = a[piv_row], a[rank]
        pr = a[rank]
        p = pr[col]
        for i in range(rank + 1, nrows):
            ri = a[i]
            f = ri[col]
            if f:
                for j in range(col + 1, ncols):
                    ri[j] = (p * ri[j] - f * pr[j]) // prev
            else:
                for j in range(col + 1, ncols):
                    if ri[j]:
                        ri[j] = (p * ri[j]) // prev
            ri[col] = 0
        prev = p
        rank += 1
        col += 1
    return rank


def rank(m: QMatrix) -> int:
    """Exact rank over Q.

    Uses FLINT's fraction-free integer elimination when available and the
    pure Python Bareiss routine otherwise; both are exact.
    """
    if m.rows == 0 or m.cols == 0:
        return 0
    if flint is not None:
        return int(flint.fmpz_mat(integer_rows(m)).rank())
    return bareiss_rank(m)


def kernel_dim(m: QMatrix) -> int:
    return m.cols - rank(m)


def kernel_basis(m: QMatrix) -> list:
    """Basis of the right kernel, as lists of Fractions (reduced row echelon)."""
    a = [[Fraction(v) for v in row] for row in m.to_rows()]
    pivots = []
    r = 0
    for c in range(m.cols):
        piv = next((i for i in range(r, m.rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [u - f * v for u, v in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [Fraction(0)] * m.cols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -a[i][fc]
        basis.append(v)
    return basis
