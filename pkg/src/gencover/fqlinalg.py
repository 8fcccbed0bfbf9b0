"""Dense matrices over a FieldSpec plus the enumeration helpers behind every
exhaustive search: reduced row echelon form, rank, span membership with
coefficient extraction, seeded random matrices, canonical subspace bases, and
packed-integer vector spaces for the numpy kernels.

Matrices store raw integer encodings row-major and are immutable once built.
Pivoting is deterministic (leftmost column, lowest row), so ranks, pivot
columns, and every witness derived from them reproduce across platforms.
"""

from __future__ import annotations

import itertools
import random
from typing import Callable, Iterator, NamedTuple, Sequence

import numpy as np

from .errors import DimensionMismatch, FieldMismatch
from .gf import FieldSpec


class GFMatrix:
    """An immutable rows x cols matrix of integer-encoded field elements."""

    __slots__ = ("field", "rows", "cols", "_data")

    def __init__(self, field: FieldSpec, rows: int, cols: int, entries: Sequence[int]):
        if len(entries) != rows * cols:
            raise DimensionMismatch(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}"
            )
        for e in entries:
            if not 0 <= e < field.q:
                raise ValueError(f"encoding {e} outside [0, {field.q})")
        self.field = field
        self.rows = rows
        self.cols = cols
        self._data = tuple(entries)

    # -- constructors ---------------------------------------------------

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "GFMatrix":
        return cls(field, rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "GFMatrix":
        entries = [0] * (n * n)
        for i in range(n):
            entries[i * n + i] = 1
        return cls(field, n, n, entries)

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[int]]) -> "GFMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        flat: list[int] = []
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatch("ragged rows")
            flat.extend(r)
        return cls(field, nrows, ncols, flat)

    # -- element access ---------------------------------------------------

    def at(self, i: int, j: int) -> int:
        return self._data[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return self._data[j :: self.cols]

    def row_lists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    # -- shape operations ---------------------------------------------------

    def transpose(self) -> "GFMatrix":
        entries = [self._data[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)]
        return GFMatrix(self.field, self.cols, self.rows, entries)

    def hstack(self, other: "GFMatrix") -> "GFMatrix":
        if self.field != other.field:
            raise FieldMismatch("cannot stack matrices over different fields")
        if self.rows != other.rows:
            raise DimensionMismatch("row counts differ")
        entries: list[int] = []
        for i in range(self.rows):
            entries.extend(self.row(i))
            entries.extend(other.row(i))
        return GFMatrix(self.field, self.rows, self.cols + other.cols, entries)

    def vstack(self, other: "GFMatrix") -> "GFMatrix":
        if self.field != other.field:
            raise FieldMismatch("cannot stack matrices over different fields")
        if self.cols != other.cols:
            raise DimensionMismatch("column counts differ")
        return GFMatrix(
            self.field, self.rows + other.rows, self.cols, self._data + other._data
        )

    def submatrix_columns(self, indices: Sequence[int]) -> "GFMatrix":
        entries = [self.at(i, j) for i in range(self.rows) for j in indices]
        return GFMatrix(self.field, self.rows, len(indices), entries)

    def delete_column(self, j: int) -> "GFMatrix":
        keep = [c for c in range(self.cols) if c != j]
        return self.submatrix_columns(keep)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "GFMatrix") -> "GFMatrix":
        self._compat(other)
        f = self.field
        return GFMatrix(
            self.field,
            self.rows,
            self.cols,
            [f.add(a, b) for a, b in zip(self._data, other._data)],
        )

    def __sub__(self, other: "GFMatrix") -> "GFMatrix":
        self._compat(other)
        f = self.field
        return GFMatrix(
            self.field,
            self.rows,
            self.cols,
            [f.sub(a, b) for a, b in zip(self._data, other._data)],
        )

    def __matmul__(self, other: "GFMatrix") -> "GFMatrix":
        if self.field != other.field:
            raise FieldMismatch("cannot multiply matrices over different fields")
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        f = self.field
        out = [0] * (self.rows * other.cols)
        for i in range(self.rows):
            row = self.row(i)
            for k, a in enumerate(row):
                if a == 0:
                    continue
                orow = other.row(k)
                base = i * other.cols
                for j, b in enumerate(orow):
                    if b:
                        out[base + j] = f.add(out[base + j], f.mul(a, b))
        return GFMatrix(self.field, self.rows, other.cols, out)

    def scale(self, c: int) -> "GFMatrix":
        f = self.field
        return GFMatrix(self.field, self.rows, self.cols, [f.mul(c, a) for a in self._data])

    def is_zero(self) -> bool:
        return not any(self._data)

    def _compat(self, other: "GFMatrix") -> None:
        if self.field != other.field:
            raise FieldMismatch("operands over different fields")
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch(
                f"{self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GFMatrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self._data == other._data
        )

    def __hash__(self) -> int:
        return hash((self.field, self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"GFMatrix({self.field}, [{body}])"


class RrefResult(NamedTuple):
    rref: GFMatrix
    rank: int
    pivot_cols: tuple[int, ...]


def rref(m: GFMatrix) -> RrefResult:
    """Reduced row echelon form by Gauss-Jordan elimination.

    Deterministic: for each column, the pivot is the first nonzero entry at
    or below the current pivot row; pivots are scaled to 1 and eliminated
    above and below.
    """
    f = m.field
    work = m.row_lists()
    pivot_cols: list[int] = []
    pr = 0
    for col in range(m.cols):
        sel = next((r for r in range(pr, m.rows) if work[r][col]), None)
        if sel is None:
            continue
        work[pr], work[sel] = work[sel], work[pr]
        inv = f.inv(work[pr][col])
        if inv != 1:
            work[pr] = [f.mul(inv, x) for x in work[pr]]
        for r in range(m.rows):
            if r != pr and work[r][col]:
                c = work[r][col]
                work[r] = [f.sub(x, f.mul(c, y)) for x, y in zip(work[r], work[pr])]
        pivot_cols.append(col)
        pr += 1
        if pr == m.rows:
            break
    out = GFMatrix(f, m.rows, m.cols, [x for row in work for x in row])
    return RrefResult(out, len(pivot_cols), tuple(pivot_cols))


def rank(m: GFMatrix) -> int:
    return rref(m).rank


def in_span(basis_cols: GFMatrix, target: Sequence[int]) -> tuple[int, ...] | None:
    """Coefficients c with basis_cols @ c = target, or None if unsolvable.

    The span of zero columns is {0}: an empty coefficient tuple is returned
    for the zero target and None otherwise.  Free variables are set to 0, so
    the returned combination is deterministic.
    """
    if len(target) != basis_cols.rows:
        raise DimensionMismatch(
            f"target length {len(target)} vs {basis_cols.rows} rows"
        )
    if basis_cols.cols == 0:
        return () if not any(target) else None
    f = basis_cols.field
    aug = basis_cols.hstack(GFMatrix(f, basis_cols.rows, 1, list(target)))
    res = rref(aug)
    if res.pivot_cols and res.pivot_cols[-1] == basis_cols.cols:
        return None
    coeffs = [0] * basis_cols.cols
    for i, pc in enumerate(res.pivot_cols):
        coeffs[pc] = res.rref.at(i, basis_cols.cols)
    return tuple(coeffs)


def matvec(m: GFMatrix, vec: Sequence[int]) -> tuple[int, ...]:
    """m times a column vector of encodings."""
    if len(vec) != m.cols:
        raise DimensionMismatch(f"vector length {len(vec)} vs {m.cols} columns")
    f = m.field
    out = []
    for i in range(m.rows):
        acc = 0
        for a, x in zip(m.row(i), vec):
            if a and x:
                acc = f.add(acc, f.mul(a, x))
        out.append(acc)
    return tuple(out)


def random_matrix(rows: int, cols: int, field: FieldSpec, seed: int) -> GFMatrix:
    """Uniform i.i.d. matrix from a seeded Mersenne-Twister stream.

    Uses random.Random(seed) (CPython's documented MT19937 generator) and
    draws entries row-major with randrange(q), so identical seeds yield
    identical matrices on every platform.
    """
    rng = random.Random(seed)
    return GFMatrix(field, rows, cols, [rng.randrange(field.q) for _ in range(rows * cols)])


def random_invertible(n: int, field: FieldSpec, rng: random.Random) -> GFMatrix:
    """Rejection-sample an invertible n x n matrix from an existing stream."""
    while True:
        m = GFMatrix(field, n, n, [rng.randrange(field.q) for _ in range(n * n)])
        if rank(m) == n:
            return m


def iter_rref_bases(ambient: int, dim: int, field: FieldSpec) -> Iterator[GFMatrix]:
    """Yield one canonical basis (dim x ambient matrix in rref) per subspace.

    Enumerates every dim-dimensional subspace of F_q^ambient exactly once:
    pivot-column sets in lexicographic order, free entries in lexicographic
    (product) order.
    """
    if dim == 0:
        yield GFMatrix(field, 0, ambient, [])
        return
    if dim > ambient:
        return
    for pivots in itertools.combinations(range(ambient), dim):
        free_pos = [
            (i, j)
            for i in range(dim)
            for j in range(pivots[i] + 1, ambient)
            if j not in pivots
        ]
        for assignment in itertools.product(field.elements(), repeat=len(free_pos)):
            entries = [0] * (dim * ambient)
            for i, pc in enumerate(pivots):
                entries[i * ambient + pc] = 1
            for (i, j), v in zip(free_pos, assignment):
                entries[i * ambient + j] = v
            yield GFMatrix(field, dim, ambient, entries)


def gaussian_binomial(m: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^m."""
    if k < 0 or k > m:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (m - i) - 1
        den *= q ** (k - i) - 1
    return num // den


class PackedSpace:
    """The vector space F_p^d with vectors packed into integers base p.

    Packing is positional: digit i (coefficient i) contributes digit * p**i,
    so component-wise addition mod p never carries between digits.  For p = 2
    adding a constant vector is a plain XOR on the packed integers; for odd p
    the adders below split the index into high/low digit blocks and go
    through two precomputed lookup tables, which keeps numpy array updates
    O(1) table lookups per element.
    """

    def __init__(self, p: int, digits: int):
        self.p = p
        self.digits = digits
        self.size = p**digits
        if p != 2 and digits > 0:
            self._lo_n = digits // 2
            self._hi_n = digits - self._lo_n
            self._K = p**self._lo_n
            self._lo_digits = self._digit_matrix(self._lo_n)
            self._hi_digits = self._digit_matrix(self._hi_n)
            self._lo_pows = np.array([p**i for i in range(self._lo_n)], dtype=np.int64)
            self._hi_pows = np.array([p**i for i in range(self._hi_n)], dtype=np.int64)

    def _digit_matrix(self, ndig: int) -> np.ndarray:
        idx = np.arange(self.p**ndig, dtype=np.int64)
        out = np.empty((self.p**ndig, ndig), dtype=np.int64)
        for i in range(ndig):
            idx, out[:, i] = np.divmod(idx, self.p)
        return out

    def pack(self, digits: Sequence[int]) -> int:
        val = 0
        for d in reversed(digits):
            val = val * self.p + d
        return val

    def unpack(self, index: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.digits):
            out.append(index % self.p)
            index //= self.p
        return tuple(out)

    def adder(self, delta: int) -> Callable[[np.ndarray], np.ndarray]:
        """Vectorized map x -> x (+) delta, component-wise mod p."""
        if self.p == 2:
            return lambda arr: arr ^ delta
        if self.digits == 0:
            return lambda arr: arr
        d = np.array(self.unpack(delta), dtype=np.int64)
        lo_map = ((self._lo_digits + d[: self._lo_n]) % self.p) @ self._lo_pows
        hi_map = (((self._hi_digits + d[self._lo_n :]) % self.p) @ self._hi_pows) * self._K
        K = self._K
        return lambda arr: hi_map[arr // K] + lo_map[arr % K]

    def subtractor_from(self, const: int) -> Callable[[np.ndarray], np.ndarray]:
        """Vectorized map x -> const (-) x, component-wise mod p."""
        if self.p == 2:
            return lambda arr: arr ^ const
        if self.digits == 0:
            return lambda arr: arr
        d = np.array(self.unpack(const), dtype=np.int64)
        lo_map = ((d[: self._lo_n] - self._lo_digits) % self.p) @ self._lo_pows
        hi_map = (((d[self._lo_n :] - self._hi_digits) % self.p) @ self._hi_pows) * self._K
        K = self._K
        return lambda arr: hi_map[arr // K] + lo_map[arr % K]
