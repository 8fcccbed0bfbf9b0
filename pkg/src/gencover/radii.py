"""The covering-radius hierarchy R_t of a linear code, by three routes.

* lifted: the covering radius of the generator read over F_{q^t}, found by a
  layered breadth-first search over the syndrome space (the production path).
* span_cover: the defining max-min search over syndrome sets and column
  subsets of the parity-check matrix.
* ball_cover: direct covering of the t x n matrix space by block-metric balls
  around codeword tuples (a tiny-instance oracle).

The three provably agree; `method="all"` cross-checks them and raises on any
disagreement.  Every computed entry carries a worst-case witness: the hardest
syndrome set and a smallest column set spanning it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import NamedTuple

import numpy as np

from .code import LinearCode, lift
from .errors import (
    DimensionMismatch,
    MethodDisagreement,
    MethodInfeasible,
    RadiusOutOfRange,
    SyndromeSpaceTooLarge,
    TOutOfRange,
)
from .gf import FieldSpec, xi_inv
from .fqlinalg import (
    GFMatrix,
    PackedSpace,
    gaussian_binomial,
    iter_rref_bases,
    matvec,
    rank,
)
from .planner import min_spanning_columns

DEFAULT_STATE_CAP = 1 << 26  # syndrome states for the breadth-first search
DEFAULT_SPAN_CAP = 1 << 20  # candidate syndrome sets for span_cover
DEFAULT_BALL_WORK_CAP = 1 << 26  # points x codeword tuples for ball_cover


def t_weight(v: GFMatrix) -> int:
    """Number of columns that are not identically zero (the block weight)."""
    return sum(1 for j in range(v.cols) if any(v.column(j)))


def t_distance(u: GFMatrix, v: GFMatrix) -> int:
    """Block distance: the block weight of the difference."""
    if u.rows != v.rows or u.cols != v.cols:
        raise DimensionMismatch("operands must share a shape")
    return sum(
        1
        for j in range(u.cols)
        if any(u.at(i, j) != v.at(i, j) for i in range(u.rows))
    )


def ball_volume(t: int, r: int, n: int, q: int) -> int:
    """Exact number of t x n matrices within block distance r of a fixed one.

    Equals the Hamming-ball volume over an alphabet of size q^t:
    sum_{i<=r} C(n, i) (q^t - 1)^i.
    """
    if t < 1 or n < 0 or q < 2:
        raise RadiusOutOfRange("need t >= 1, n >= 0, q >= 2")
    if not 0 <= r <= n:
        raise RadiusOutOfRange(f"radius {r} outside [0, {n}]")
    big = q**t - 1
    return sum(comb(n, i) * big**i for i in range(r + 1))


class CoveringRadiusResult(NamedTuple):
    radius: int
    deep_hole: tuple[int, ...]  # a syndrome at maximal coset-leader weight


def covering_radius(C: LinearCode, state_cap: int = DEFAULT_STATE_CAP) -> CoveringRadiusResult:
    """Largest coset-leader weight, by layered breadth-first search.

    Layer 0 holds the zero syndrome; layer w+1 holds syndromes first reached
    by adding alpha * h_j to layer w.  The radius is the index of the last
    nonempty layer, and the reported deep hole is that layer's smallest
    syndrome in the packed integer order (deterministic).

    Memory is O(q^(n-k)); exceeding `state_cap` states raises.
    """
    field = C.field
    m = C.n - C.k
    if m == 0:
        return CoveringRadiusResult(0, ())
    states = field.q**m
    if states > state_cap:
        raise SyndromeSpaceTooLarge(
            f"syndrome space has {states} states, cap is {state_cap}"
        )
    q = field.q

    deltas = set()
    for j in range(C.n):
        col = C.H.column(j)
        for alpha in field.units():
            packed = 0
            for coord in reversed(col):
                packed = packed * q + field.mul(alpha, coord)
            deltas.add(packed)
    deltas.discard(0)

    space = PackedSpace(field.p, field.m * m)
    adders = [space.adder(d) for d in sorted(deltas)]

    visited = np.zeros(states, dtype=bool)
    visited[0] = True
    frontier = np.array([0], dtype=np.int64)
    radius = 0
    while True:
        parts = []
        for add in adders:
            cand = add(frontier)
            cand = cand[~visited[cand]]
            if cand.size:
                visited[cand] = True
                parts.append(cand)
        if not parts:
            break
        frontier = np.concatenate(parts)
        radius += 1
    if not visited.all():
        raise AssertionError("parity-check columns do not span the syndrome space")

    deep = int(frontier.min())
    hole = []
    for _ in range(m):
        hole.append(deep % q)
        deep //= q
    return CoveringRadiusResult(radius, tuple(hole))


@dataclass(frozen=True)
class RadiiEntry:
    """One level of the hierarchy: R_t plus the worst case that attains it."""

    t: int
    value: int
    method: str
    witness_syndromes: tuple[tuple[int, ...], ...] | None
    witness_columns: tuple[int, ...] | None


@dataclass(frozen=True)
class RadiiReport:
    """The hierarchy R_1..R_t_max of one code, with per-level witnesses."""

    q: int
    n: int
    k: int
    t_max: int
    method: str
    entries: tuple[RadiiEntry, ...]

    def values(self) -> tuple[int, ...]:
        return tuple(e.value for e in self.entries)

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "t_max": self.t_max,
            "method": self.method,
            "entries": [
                {
                    "t": e.t,
                    "value": e.value,
                    "method": e.method,
                    "witness_syndromes": None
                    if e.witness_syndromes is None
                    else [list(s) for s in e.witness_syndromes],
                    "witness_columns": None
                    if e.witness_columns is None
                    else list(e.witness_columns),
                }
                for e in self.entries
            ],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RadiiReport":
        entries = tuple(
            RadiiEntry(
                t=e["t"],
                value=e["value"],
                method=e["method"],
                witness_syndromes=None
                if e["witness_syndromes"] is None
                else tuple(tuple(s) for s in e["witness_syndromes"]),
                witness_columns=None
                if e["witness_columns"] is None
                else tuple(e["witness_columns"]),
            )
            for e in d["entries"]
        )
        return cls(
            q=d["q"], n=d["n"], k=d["k"], t_max=d["t_max"], method=d["method"], entries=entries
        )


def _lifted_entry(C: LinearCode, t: int, state_cap: int) -> RadiiEntry:
    lifted = lift(C, t)
    res = covering_radius(lifted, state_cap=state_cap)
    m = C.n - C.k
    if m == 0:
        return RadiiEntry(t, 0, "lifted", (), ())
    if t == 1:
        syndromes: tuple[tuple[int, ...], ...] = (res.deep_hole,)
    else:
        hole = GFMatrix(lifted.field, 1, m, list(res.deep_hole))
        mat = xi_inv(hole)
        syndromes = tuple(mat.row(i) for i in range(t))
    cols = min_spanning_columns(C.H, syndromes)
    if len(cols) != res.radius:
        raise AssertionError("lifted deep hole disagrees with its column search")
    return RadiiEntry(t, res.radius, "lifted", syndromes, cols)


def _iter_candidate_sets(field, m, t, restrict, span_cap):
    """Candidate syndrome sets for the defining max, in deterministic order.

    Restricted mode walks one canonical basis per subspace of dimension
    min(t, m); min |I| depends only on the span of a set and grows with it,
    so the maximum over these candidates is the maximum over all size-t
    sets.  Unrestricted mode enumerates every size-t subset literally.
    """
    q = field.q
    if restrict:
        u = min(t, m)
        count = gaussian_binomial(m, u, q)
        if count > span_cap:
            raise MethodInfeasible(f"{count} candidate subspaces exceed cap {span_cap}")
        for basis in iter_rref_bases(m, u, field):
            yield tuple(basis.row(i) for i in range(u))
    else:
        total = q**m
        if comb(total, t) > span_cap:
            raise MethodInfeasible(
                f"{comb(total, t)} size-{t} syndrome sets exceed cap {span_cap}"
            )
        import itertools

        def unpack(idx):
            out = []
            for _ in range(m):
                out.append(idx % q)
                idx //= q
            return tuple(out)

        vectors = [unpack(i) for i in range(total)]
        for combo in itertools.combinations(vectors, t):
            yield combo


def _pad_witness_set(field, basis_rows, t):
    """Grow a basis to a size-t set inside its own span, deterministically."""
    import itertools

    out = list(basis_rows)
    if len(out) >= t:
        return tuple(out[:t])
    u = len(basis_rows)
    m = len(basis_rows[0]) if basis_rows else 0
    seen = set(out)
    for coeffs in itertools.product(field.elements(), repeat=u):
        vec = [0] * m
        for c, row in zip(coeffs, basis_rows):
            if c:
                for i, x in enumerate(row):
                    vec[i] = field.add(vec[i], field.mul(c, x))
        vec = tuple(vec)
        if vec not in seen:
            seen.add(vec)
            out.append(vec)
            if len(out) == t:
                return tuple(out)
    raise MethodInfeasible(f"the span holds fewer than {t} distinct syndromes")


def _span_cover_entry(
    C: LinearCode, t: int, restrict: bool, span_cap: int
) -> RadiiEntry:
    field = C.field
    m = C.n - C.k
    if m == 0:
        return RadiiEntry(t, 0, "span_cover", (), ())
    if field.q**m < t:
        raise MethodInfeasible(f"no size-{t} syndrome sets exist in a space of {field.q**m}")
    best = -1
    best_set: tuple[tuple[int, ...], ...] | None = None
    for cand in _iter_candidate_sets(field, m, t, restrict, span_cap):
        cols = min_spanning_columns(C.H, cand)
        if len(cols) > best:
            best = len(cols)
            best_set = cand
    assert best_set is not None
    if restrict:
        best_set = _pad_witness_set(field, best_set, t)
    cols = min_spanning_columns(C.H, best_set)
    if len(cols) != best:
        raise AssertionError("witness padding changed the attained minimum")
    return RadiiEntry(t, best, "span_cover", best_set, cols)


def _ball_cover_entry(C: LinearCode, t: int, work_cap: int) -> RadiiEntry:
    field = C.field
    q, n, k = field.q, C.n, C.k
    points = q ** (t * n)
    tuples = q ** (t * k)
    if points * tuples * max(n, 1) > work_cap:
        raise MethodInfeasible(
            f"{points} points x {tuples} codeword tuples exceed the work cap {work_cap}"
        )

    words = np.array(list(C.codewords()), dtype=np.int64)  # (q^k, n)
    packed = words
    for _ in range(t - 1):
        packed = (packed[np.newaxis, :, :] * q + words[:, np.newaxis, :]).reshape(
            -1, n
        )
    # Row i of a tuple contributes digit i (base q) of its packed column.
    pts = np.empty((points, n), dtype=np.int64)
    idx = np.arange(points, dtype=np.int64)
    big = q**t
    for j in range(n):
        pts[:, j] = (idx // big**j) % big

    best = np.full(points, n + 1, dtype=np.int16)
    for row in packed:
        np.minimum(best, (pts != row).sum(axis=1, dtype=np.int16), out=best)
    radius = int(best.max())
    worst = int(np.argmax(best))

    m = n - k
    entries = [0] * (t * n)
    for j in range(n):
        col = int(pts[worst, j])
        for i in range(t):
            entries[i * n + j] = col % q
            col //= q
    vmat = GFMatrix(field, t, n, entries)
    syndromes = tuple(matvec(C.H, vmat.row(i)) for i in range(t)) if m else ()
    cols = min_spanning_columns(C.H, syndromes) if m else ()
    if len(cols) != radius:
        raise AssertionError("deepest point disagrees with its column search")
    return RadiiEntry(t, radius, "ball_cover", syndromes, cols)


def generalized_radius(
    C: LinearCode,
    t: int,
    method: str = "lifted",
    *,
    restrict_independent: bool = True,
    state_cap: int = DEFAULT_STATE_CAP,
    span_cap: int = DEFAULT_SPAN_CAP,
    ball_work_cap: int = DEFAULT_BALL_WORK_CAP,
) -> RadiiEntry:
    """R_t of a code by one route, or by all of them cross-checked.

    method: "lifted" (breadth-first search over the extension-field syndrome
    space; prime base field for t >= 2), "span_cover" (defining max-min
    search; `restrict_independent` narrows candidates to one basis per
    subspace, which is provably equivalent and is on by default),
    "ball_cover" (tiny-instance oracle), or "all".
    """
    if t < 1:
        raise TOutOfRange("t must be at least 1")
    if method == "lifted":
        return _lifted_entry(C, t, state_cap)
    if method == "span_cover":
        return _span_cover_entry(C, t, restrict_independent, span_cap)
    if method == "ball_cover":
        return _ball_cover_entry(C, t, ball_work_cap)
    if method == "all":
        entries = [
            _lifted_entry(C, t, state_cap),
            _span_cover_entry(C, t, restrict_independent, span_cap),
            _ball_cover_entry(C, t, ball_work_cap),
        ]
        values = {e.value for e in entries}
        if len(values) != 1:
            raise MethodDisagreement(
                f"t={t}: " + ", ".join(f"{e.method}={e.value}" for e in entries)
            )
        lifted = entries[0]
        return RadiiEntry(t, lifted.value, "all", lifted.witness_syndromes, lifted.witness_columns)
    raise ValueError(f"unknown method {method!r}")


def radii_hierarchy(
    C: LinearCode,
    t_max: int,
    method: str = "lifted",
    *,
    restrict_independent: bool = True,
    state_cap: int = DEFAULT_STATE_CAP,
    span_cap: int = DEFAULT_SPAN_CAP,
    ball_work_cap: int = DEFAULT_BALL_WORK_CAP,
) -> RadiiReport:
    """R_1..R_t_max with witnesses; entries with t >= n-k are the known tail.

    Once t reaches n-k the value is n-k with no search (entries labelled
    "tail", no witnesses).  Monotonicity and the elementary bounds
    t <= R_t <= n-k are re-checked on the computed prefix.
    """
    m = C.n - C.k
    entries = []
    for t in range(1, t_max + 1):
        if t >= m:
            entries.append(RadiiEntry(t, m, "tail", None, None))
        else:
            entries.append(
                generalized_radius(
                    C,
                    t,
                    method,
                    restrict_independent=restrict_independent,
                    state_cap=state_cap,
                    span_cap=span_cap,
                    ball_work_cap=ball_work_cap,
                )
            )
    values = [e.value for e in entries]
    for t, v in enumerate(values, start=1):
        if t <= m and not t <= v <= m:
            raise AssertionError(f"R_{t}={v} escapes [{t}, {m}]")
    if any(a > b for a, b in zip(values, values[1:])):
        raise AssertionError(f"hierarchy not monotone: {values}")
    return RadiiReport(
        q=C.field.q, n=C.n, k=C.k, t_max=t_max, method=method, entries=tuple(entries)
    )


def check_parity_invariance(C: LinearCode, t: int, trials: int, seed: int) -> bool:
    """Recompute R_t from A @ H for random invertible A; True iff all agree."""
    import random

    from .code import code_from_parity
    from .fqlinalg import random_invertible

    base = _span_cover_entry(C, t, True, DEFAULT_SPAN_CAP).value
    m = C.n - C.k
    if m == 0:
        return True
    rng = random.Random(seed)
    for _ in range(trials):
        A = random_invertible(m, C.field, rng)
        scrambled = code_from_parity(A @ C.H)
        if _span_cover_entry(scrambled, t, True, DEFAULT_SPAN_CAP).value != base:
            return False
    return True
