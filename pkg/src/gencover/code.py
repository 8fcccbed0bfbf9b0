"""Linear codes over finite fields.

Construction from generator or parity-check matrices, the single-step code
operations (puncture, extend, shorten, (u, u+v), direct sum), lifting a
prime-field code to an extension field, row-space equality, and the text
file format used by the command-line tools.

Coordinates and column indices are 0-based throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dataclass_field
from typing import Iterator

from .errors import (
    DegenerateCode,
    DegreeOutOfRange,
    DimensionMismatch,
    EmptyMatrix,
    FieldMismatch,
    InputFormatError,
    LengthMismatch,
    NonPrimeBaseField,
    NonPrimeCharacteristic,
    PositionOutOfRange,
)
from .gf import FieldSpec, field_create
from .fqlinalg import GFMatrix, rank, rref


@dataclass(frozen=True)
class LinearCode:
    """An [n, k] linear code with generator G and parity-check matrix H.

    G has full rank k and every row of G is orthogonal to every row of the
    full-rank (n-k) x n matrix H; both facts are re-verified on construction.
    rank_dropped records that the originating operation lost dimension
    (rank-deficient input, puncturing a defective coordinate, ...).
    """

    field: FieldSpec
    n: int
    k: int
    G: GFMatrix
    H: GFMatrix
    rank_dropped: bool = dataclass_field(default=False, compare=False)

    def __post_init__(self):
        if self.G.rows != self.k or self.G.cols != self.n:
            raise DimensionMismatch("generator shape disagrees with (n, k)")
        if self.H.rows != self.n - self.k or self.H.cols != self.n:
            raise DimensionMismatch("parity-check shape disagrees with (n, k)")
        if rank(self.G) != self.k or rank(self.H) != self.n - self.k:
            raise DimensionMismatch("generator or parity-check matrix not full rank")
        prod = self.G @ self.H.transpose()
        if not prod.is_zero():
            raise DimensionMismatch("G and H are not orthogonal")

    @property
    def degenerate(self) -> bool:
        """True for the zero code (k = 0), which most operations reject."""
        return self.k == 0

    def codewords(self) -> Iterator[tuple[int, ...]]:
        """All q^k codewords; intended for small test codes only."""
        from .fqlinalg import matvec

        gt = self.G.transpose()
        for msg in itertools.product(self.field.elements(), repeat=self.k):
            yield matvec(gt, msg)

    def __repr__(self) -> str:
        return f"LinearCode[{self.n},{self.k}]@{self.field}"


def _parity_from_rref(field: FieldSpec, n: int, reduced: GFMatrix, pivots: tuple[int, ...]) -> GFMatrix:
    """Dual full-rank matrix for a k x n rref matrix with the given pivots.

    With columns split into pivots P and the rest N, the rref reads [I | A]
    up to the column permutation; the dual is [-A^T | I] un-permuted.
    """
    k = len(pivots)
    others = [j for j in range(n) if j not in pivots]
    m = n - k
    entries = [0] * (m * n)
    for r, j in enumerate(others):
        entries[r * n + j] = 1
        for i, pc in enumerate(pivots):
            entries[r * n + pc] = field.neg(reduced.at(i, j))
    return GFMatrix(field, m, n, entries)


def code_from_generator(G: GFMatrix) -> LinearCode:
    """Build a code from generator rows, reducing rank-deficient input.

    If the rows are dependent, the row-reduced full-rank basis is kept, k is
    set to the rank, and the result carries rank_dropped=True.
    """
    if G.rows == 0 or G.cols == 0:
        raise EmptyMatrix("generator matrix must be nonempty")
    res = rref(G)
    n = G.cols
    if res.rank == G.rows:
        basis = G
        dropped = False
    else:
        basis = GFMatrix(
            G.field,
            res.rank,
            n,
            [res.rref.at(i, j) for i in range(res.rank) for j in range(n)],
        )
        dropped = True
    reduced = rref(basis)
    H = _parity_from_rref(G.field, n, reduced.rref, reduced.pivot_cols)
    return LinearCode(G.field, n, res.rank, basis, H, rank_dropped=dropped)


def code_from_parity(H: GFMatrix) -> LinearCode:
    """Build the null-space code of a parity-check matrix.

    Dependent rows of H are discarded (they constrain nothing); the code
    dimension is n - rank(H) and may be 0, in which case the result is the
    degenerate zero code.
    """
    if H.cols == 0:
        raise EmptyMatrix("parity-check matrix must have columns")
    n = H.cols
    res = rref(H)
    reduced = GFMatrix(
        H.field, res.rank, n, [res.rref.at(i, j) for i in range(res.rank) for j in range(n)]
    )
    G = _parity_from_rref(H.field, n, reduced, res.pivot_cols)
    stored = H if res.rank == H.rows else reduced
    return LinearCode(H.field, n, n - res.rank, G, stored, rank_dropped=res.rank < H.rows)


def hamming_code(m: int, q: int = 2) -> LinearCode:
    """The [(q^m - 1)/(q - 1), n - m] Hamming code over the prime field F_q.

    The parity-check columns are the projective points of F_q^m, one
    representative each with leading nonzero entry 1, listed in
    lexicographic order (topmost entry most significant).  For q = 2 that is
    simply every nonzero column in lexicographic order.
    """
    if m < 2:
        raise DegreeOutOfRange("Hamming construction needs m >= 2")
    field = field_create(q, 1)
    cols = []
    for vec in itertools.product(range(q), repeat=m):
        if not any(vec):
            continue
        first = next(v for v in vec if v)
        if first == 1:
            cols.append(vec)
    n = len(cols)
    entries = [cols[j][i] for i in range(m) for j in range(n)]
    return code_from_parity(GFMatrix(field, m, n, entries))


def lift(C: LinearCode, t: int) -> LinearCode:
    """Read the generator of a prime-field code over the extension F_{q^t}.

    The constant-polynomial embedding keeps integer encodings unchanged, so
    the lifted code reuses G and H verbatim over field_create(q, t); ranks
    and orthogonality carry over, hence k is preserved.
    """
    if t == 1:
        return C
    if C.field.m != 1:
        raise NonPrimeBaseField("lifting is defined for prime base fields only")
    if C.degenerate:
        raise DegenerateCode("cannot lift the zero code")
    ext = field_create(C.field.p, t)
    G = GFMatrix(ext, C.k, C.n, C.G._data)
    H = GFMatrix(ext, C.n - C.k, C.n, C.H._data)
    return LinearCode(ext, C.n, C.k, G, H)


def puncture(C: LinearCode, position: int) -> LinearCode:
    """Delete one coordinate.  Dimension may drop by one (flagged)."""
    if C.n < 2:
        raise PositionOutOfRange("cannot puncture a length-1 code")
    if not 0 <= position < C.n:
        raise PositionOutOfRange(f"position {position} outside [0, {C.n})")
    if C.degenerate:
        raise DegenerateCode("cannot puncture the zero code")
    return code_from_generator(C.G.delete_column(position))


def extend(C: LinearCode) -> LinearCode:
    """Append an overall parity coordinate: c -> (c, -sum(c))."""
    if C.degenerate:
        raise DegenerateCode("cannot extend the zero code")
    f = C.field
    sums = []
    for i in range(C.k):
        acc = 0
        for x in C.G.row(i):
            acc = f.add(acc, x)
        sums.append(f.neg(acc))
    G = C.G.hstack(GFMatrix(f, C.k, 1, sums))
    return code_from_generator(G)


def shorten(C: LinearCode, position: int) -> LinearCode:
    """Keep codewords that vanish at `position` and drop that coordinate.

    Implemented as deletion of column `position` of H, which reproduces the
    classical construction exactly; the result may be the zero code.
    """
    if not 0 <= position < C.n:
        raise PositionOutOfRange(f"position {position} outside [0, {C.n})")
    if C.n < 2:
        raise PositionOutOfRange("cannot shorten a length-1 code")
    return code_from_parity(C.H.delete_column(position))


def u_uplusv(C1: LinearCode, C2: LinearCode) -> LinearCode:
    """The (u, u+v) combination of two equal-length codes: [2n, k1+k2]."""
    if C1.field != C2.field:
        raise FieldMismatch("operands over different fields")
    if C1.n != C2.n:
        raise LengthMismatch(f"lengths {C1.n} and {C2.n} differ")
    if C1.degenerate or C2.degenerate:
        raise DegenerateCode("operands must have dimension at least 1")
    f = C1.field
    top = C1.G.hstack(C1.G)
    bottom = GFMatrix.zeros(f, C2.k, C1.n).hstack(C2.G)
    return code_from_generator(top.vstack(bottom))


def direct_sum(C1: LinearCode, C2: LinearCode) -> LinearCode:
    """Coordinate-wise juxtaposition: an [n1+n2, k1+k2] code."""
    if C1.field != C2.field:
        raise FieldMismatch("operands over different fields")
    if C1.degenerate or C2.degenerate:
        raise DegenerateCode("operands must have dimension at least 1")
    f = C1.field
    top = C1.G.hstack(GFMatrix.zeros(f, C1.k, C2.n))
    bottom = GFMatrix.zeros(f, C2.k, C1.n).hstack(C2.G)
    return code_from_generator(top.vstack(bottom))


def codes_equal(C1: LinearCode, C2: LinearCode) -> bool:
    """Equality as sets of codewords: canonical rref of the generators match."""
    if C1.field != C2.field or C1.n != C2.n or C1.k != C2.k:
        return False
    return rref(C1.G).rref == rref(C2.G).rref


# -- file format ------------------------------------------------------------
#
# Text, UTF-8, LF line endings:
#   q <prime>
#   n <length>
#   k <dimension>
#   G
#   <k lines of n space-separated integers in [0, q)>


def format_code(C: LinearCode) -> str:
    if C.field.m != 1:
        raise NonPrimeBaseField("the code file format stores prime-field codes")
    lines = [f"q {C.field.p}", f"n {C.n}", f"k {C.k}", "G"]
    for i in range(C.k):
        lines.append(" ".join(str(x) for x in C.G.row(i)))
    return "\n".join(lines) + "\n"


def save_code(C: LinearCode, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_code(C))


def parse_code(text: str) -> LinearCode:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) < 4:
        raise InputFormatError("code file too short")

    def keyed(line: str, key: str) -> int:
        parts = line.split()
        if len(parts) != 2 or parts[0] != key:
            raise InputFormatError(f"expected '{key} <integer>', got {line!r}")
        try:
            return int(parts[1])
        except ValueError as exc:
            raise InputFormatError(f"bad integer in {line!r}") from exc

    q = keyed(lines[0], "q")
    n = keyed(lines[1], "n")
    k = keyed(lines[2], "k")
    if lines[3] != "G":
        raise InputFormatError("missing 'G' separator line")
    try:
        field = field_create(q, 1)
    except NonPrimeCharacteristic as exc:
        raise InputFormatError(f"q = {q} is not prime") from exc
    if len(lines) != 4 + k:
        raise InputFormatError(f"expected {k} generator rows, got {len(lines) - 4}")
    entries: list[int] = []
    for ln in lines[4:]:
        row = ln.split()
        if len(row) != n:
            raise InputFormatError(f"row {ln!r} does not have {n} entries")
        for tok in row:
            try:
                v = int(tok)
            except ValueError as exc:
                raise InputFormatError(f"bad entry {tok!r}") from exc
            if not 0 <= v < q:
                raise InputFormatError(f"entry {v} outside [0, {q})")
            entries.append(v)
    return code_from_generator(GFMatrix(field, k, n, entries))


def load_code(path) -> LinearCode:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_code(fh.read())
