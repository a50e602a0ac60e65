"""Dense exact integer matrices and the symmetric matrices read off the triangles.

The w x w matrix taken from the determinant Hosoya triangle has entry
(i, j) = det_entry(i + j - 1, min(i, j)): row i reads the triangle along the
diagonal starting at its i-th row.  The analogous Hosoya-triangle matrix has
entry F(i)F(j), a rank-one outer product of the Fibonacci vector.
All indexing at the API surface is 1-based; storage is row-major tuples.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .fibcore import fib
from .triangles import det_entry, hosoya_entry


class ExactMatrix:
    """Immutable dense integer matrix with exact (arbitrary precision) entries."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Sequence[Sequence[int]]):
        data = tuple(tuple(int(v) for v in r) for r in rows)
        if not data or not data[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise ValueError("rows must all have the same length")
        self._rows = data

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return len(self._rows[0])

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        """Row-major entries; this ordering is the canonical one for emission."""
        return self._rows

    def entry(self, i: int, j: int) -> int:
        """1-based entry access."""
        if not (1 <= i <= self.nrows and 1 <= j <= self.ncols):
            raise ValueError(f"entry ({i}, {j}) out of range for {self.nrows}x{self.ncols} matrix")
        return self._rows[i - 1][j - 1]

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        if not self.is_square:
            return False
        r = self._rows
        return all(r[i][j] == r[j][i] for i in range(self.nrows) for j in range(i))

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ExactMatrix) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"ExactMatrix({self.nrows}x{self.ncols})"


class BitMatrix:
    """Symmetric 0/1 matrix, diagonal included."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Sequence[Sequence[int]]):
        data = tuple(tuple(int(v) for v in r) for r in rows)
        n = len(data)
        if n == 0 or any(len(r) != n for r in data):
            raise ValueError("bit matrix must be square and non-empty")
        if any(v not in (0, 1) for r in data for v in r):
            raise ValueError("bit matrix entries must be 0 or 1")
        if any(data[i][j] != data[j][i] for i in range(n) for j in range(i)):
            raise ValueError("bit matrix must be symmetric")
        self._rows = data

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def entry(self, i: int, j: int) -> int:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"entry ({i}, {j}) out of range for size {self.n}")
        return self._rows[i - 1][j - 1]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BitMatrix) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"BitMatrix({self.n}x{self.n})"


class RankTwoDecomposition(NamedTuple):
    """Vectors with S = u1 v1^T + u2 v2^T entrywise."""

    u1: tuple[int, ...]
    v1: tuple[int, ...]
    u2: tuple[int, ...]
    v2: tuple[int, ...]


def _check_size(w: int) -> None:
    if w < 1:
        raise ValueError(f"matrix size must be positive, got {w}")


def det_hosoya_matrix(w: int) -> ExactMatrix:
    """The w x w symmetric matrix embedded along the determinant triangle's left edge."""
    _check_size(w)
    rows = []
    for i in range(1, w + 1):
        r = []
        for j in range(1, w + 1):
            v = det_entry(i + j - 1, min(i, j))
            # triangle symmetry makes the position choice immaterial
            assert v == det_entry(i + j - 1, max(i, j))
            r.append(v)
        rows.append(r)
    return ExactMatrix(rows)


def hosoya_matrix(w: int) -> ExactMatrix:
    """The w x w symmetric matrix from the Hosoya triangle; entry (i, j) = F(i)F(j)."""
    _check_size(w)
    rows = []
    for i in range(1, w + 1):
        r = []
        for j in range(1, w + 1):
            v = hosoya_entry(i + j - 1, min(i, j))
            assert v == fib(i) * fib(j)
            r.append(v)
        rows.append(r)
    return ExactMatrix(rows)


def rank2_vectors(w: int) -> RankTwoDecomposition:
    """The two Fibonacci outer-product factors of the determinant-triangle matrix.

    u1 = (F0..F(w-1)), v1 = (F1..Fw), u2 = (F2..F(w+1)), v2 = (F0..F(w-1)).
    """
    _check_size(w)
    return RankTwoDecomposition(
        u1=tuple(fib(i) for i in range(w)),
        v1=tuple(fib(i) for i in range(1, w + 1)),
        u2=tuple(fib(i) for i in range(2, w + 2)),
        v2=tuple(fib(i) for i in range(w)),
    )


def mod2(m: ExactMatrix) -> BitMatrix:
    """Entrywise least non-negative residue mod 2."""
    if not m.is_square:
        raise ValueError("mod-2 reduction is defined for square matrices only")
    return BitMatrix([[v % 2 for v in r] for r in m.rows])


def exact_rank(m: ExactMatrix) -> int:
    """Rank over the rationals via fraction-free (Bareiss) elimination.

    Integer-only; every division performed is exact and asserted.
    """
    a = [list(r) for r in m.rows]
    nrows, ncols = m.nrows, m.ncols
    rank = 0
    prev = 1
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                q, rem = divmod(a[i][j] * a[r][c] - a[i][c] * a[r][j], prev)
                assert rem == 0, "fraction-free elimination hit a non-exact division"
                a[i][j] = q
            a[i][c] = 0
        prev = a[r][c]
        r += 1
        rank += 1
        if r == nrows:
            break
    return rank
