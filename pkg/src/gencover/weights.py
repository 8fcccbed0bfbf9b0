"""Generalized Hamming weights and the packing side of the block metric.

d_t is the smallest support of a t-dimensional subcode; delta_t is
floor((d_t - 1) / 2), the largest radius at which block-metric balls around
codeword tuples with full-rank difference stay disjoint.  Both facts are
checked here by exhaustive enumeration at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .code import LinearCode
from .errors import SearchTooLarge, TOutOfRange
from .fqlinalg import GFMatrix, gaussian_binomial, iter_rref_bases, rank
from .radii import t_weight

DEFAULT_SUBSPACE_CAP = 1 << 20
DEFAULT_PACKING_WORK_CAP = 1 << 26


def generalized_weight(C: LinearCode, t: int, subspace_cap: int = DEFAULT_SUBSPACE_CAP) -> int:
    """Minimum support size over t-dimensional subcodes.

    Enumerates each subcode once through canonical rref coefficient bases
    (one per t-dimensional subspace of the message space); the support of a
    subcode equals the united support of any basis of it.
    """
    if not 1 <= t <= C.k:
        raise TOutOfRange(f"t={t} outside [1, {C.k}]")
    count = gaussian_binomial(C.k, t, C.field.q)
    if count > subspace_cap:
        raise SearchTooLarge(f"{count} subspaces exceed cap {subspace_cap}")
    best = C.n + 1
    for M in iter_rref_bases(C.k, t, C.field):
        w = t_weight(M @ C.G)
        if w < best:
            best = w
    return best


@dataclass(frozen=True)
class WeightHierarchy:
    """d_1..d_k and the packing radii delta_t = floor((d_t - 1)/2)."""

    d: tuple[int, ...]
    delta: tuple[int, ...]


def weight_hierarchy(C: LinearCode, subspace_cap: int = DEFAULT_SUBSPACE_CAP) -> WeightHierarchy:
    d = tuple(generalized_weight(C, t, subspace_cap) for t in range(1, C.k + 1))
    if any(a >= b for a, b in zip(d, d[1:])):
        raise AssertionError(f"weight hierarchy not strictly increasing: {d}")
    return WeightHierarchy(d=d, delta=tuple((x - 1) // 2 for x in d))


def packing_radius(C: LinearCode, t: int) -> int:
    return (generalized_weight(C, t) - 1) // 2


def verify_packing(
    C: LinearCode, t: int, r: int, work_cap: int = DEFAULT_PACKING_WORK_CAP
) -> bool:
    """True iff balls of radius r around tuple pairs with full-rank
    difference are pairwise disjoint, by exhausting the ambient space.
    """
    if r < 0:
        raise TOutOfRange("radius must be nonnegative")
    field = C.field
    q, n = field.q, C.n
    points = q ** (t * n)
    tuples = q ** (t * C.k)
    if points * tuples > work_cap:
        raise SearchTooLarge(
            f"{points} points x {tuples} tuples exceed the work cap {work_cap}"
        )

    words = list(C.codewords())
    import itertools

    tuple_rows = list(itertools.product(words, repeat=t))
    packed = np.array(
        [
            [sum(rows[i][j] * q**i for i in range(t)) for j in range(n)]
            for rows in tuple_rows
        ],
        dtype=np.int64,
    )
    pts = np.empty((points, n), dtype=np.int64)
    idx = np.arange(points, dtype=np.int64)
    big = q**t
    for j in range(n):
        pts[:, j] = (idx // big**j) % big
    within = [
        ((pts != row).sum(axis=1) <= r) for row in packed
    ]

    for a in range(len(tuple_rows)):
        mat_a = GFMatrix.from_rows(field, [list(row) for row in tuple_rows[a]])
        for b in range(a + 1, len(tuple_rows)):
            mat_b = GFMatrix.from_rows(field, [list(row) for row in tuple_rows[b]])
            if rank(mat_a - mat_b) != t:
                continue
            if bool(np.any(within[a] & within[b])):
                return False
    return True
