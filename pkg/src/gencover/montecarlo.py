"""Seeded randomized experiments on the covering behaviour of binary codes.

Covers the pair-coverage count X_v (the number of full-rank coefficient
pairs whose codeword pair lands within block distance r of a fixed 2 x n
target), its exact expectation over a uniformly random generator matrix, the
translate-average identity for arbitrary matrix sets, and the empirical rate
at which random [n, k] binary codes achieve a prescribed second covering
radius.  Everything is deterministic given the seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .code import LinearCode, code_from_generator, lift
from .errors import DomainError, SearchTooLarge
from .gf import FieldSpec
from .fqlinalg import GFMatrix, PackedSpace, random_matrix
from .radii import ball_volume, covering_radius

DEFAULT_TRANSLATE_CAP = 1 << 20


@dataclass(frozen=True)
class MCSummary:
    """Results of one experiment; unused fields stay None."""

    trials: int
    seed: int
    success_fraction: float | None = None
    mean_xv: float | None = None
    exact_expectation: float | None = None
    ebound_low: float | None = None
    ebound_high: float | None = None


def exact_expectation_xv(n: int, k: int, r: int) -> float:
    """E[X_v] = (2^k - 1)(2^k - 2) V / 2^(2n) with V the block-ball volume.

    Independent of v: a full-rank coefficient pair maps a uniform generator
    matrix to a uniform codeword pair.  Strictly inside the open interval
    (V 2^(2k-1-2n), V 2^(2k-2n)) whenever k >= 3.
    """
    if not 2 <= k <= n:
        raise DomainError(f"need 2 <= k <= n, got k={k}, n={n}")
    if not 0 <= r <= n:
        raise DomainError(f"radius {r} outside [0, {n}]")
    v = ball_volume(2, r, n, 2)
    return float(Fraction((2**k - 1) * (2**k - 2) * v, 2 ** (2 * n)))


def xv_bracket(n: int, k: int, r: int) -> tuple[float, float]:
    """The open bracket (V 2^(2k-1-2n), V 2^(2k-2n)) around E[X_v] for k >= 3."""
    v = ball_volume(2, r, n, 2)
    return (
        float(Fraction(v, 2 ** (2 * n + 1 - 2 * k))),
        float(Fraction(v, 2 ** (2 * n - 2 * k))),
    )


def empirical_xv(
    n: int, k: int, r: int, v: GFMatrix, trials: int, seed: int
) -> float:
    """Mean of X_v over `trials` uniformly random k x n binary generators.

    Randomness comes from numpy's documented PCG64 generator seeded with
    `seed`; trials are processed in fixed-size chunks whose results do not
    depend on the chunking.
    """
    if not 2 <= k <= n:
        raise DomainError(f"need 2 <= k <= n, got k={k}, n={n}")
    if k > 8:
        raise SearchTooLarge("coefficient enumeration is capped at k = 8")
    if v.rows != 2 or v.cols != n:
        raise DomainError("v must be a 2 x n matrix")
    if trials < 1:
        raise DomainError("need at least one trial")

    rng = np.random.default_rng(seed)
    messages = np.empty((2**k, k), dtype=np.uint8)
    idx = np.arange(2**k)
    for bit in range(k):
        messages[:, bit] = (idx >> bit) & 1
    v1 = np.array(v.row(0), dtype=np.uint8)
    v2 = np.array(v.row(1), dtype=np.uint8)
    nonzero = idx != 0
    valid = nonzero[:, None] & nonzero[None, :] & (idx[:, None] != idx[None, :])

    total = 0
    remaining = trials
    chunk = max(1, (1 << 22) // (4**k * n))
    while remaining:
        batch = min(chunk, remaining)
        gs = rng.integers(0, 2, size=(batch, k, n), dtype=np.uint8)
        words = np.matmul(messages[None, :, :], gs) & 1  # (batch, 2^k, n)
        bad1 = words != v1  # column mismatch against the first row
        bad2 = words != v2
        dist = (bad1[:, :, None, :] | bad2[:, None, :, :]).sum(axis=3)
        total += int(((dist <= r) & valid[None, :, :]).sum())
        remaining -= batch
    return total / trials


def xv_experiment(
    n: int, k: int, r: int, v: GFMatrix, trials: int, seed: int
) -> MCSummary:
    """Exact expectation, empirical mean, and the k >= 3 bracket in one record."""
    lo, hi = xv_bracket(n, k, r)
    return MCSummary(
        trials=trials,
        seed=seed,
        mean_xv=empirical_xv(n, k, r, v, trials, seed),
        exact_expectation=exact_expectation_xv(n, k, r),
        ebound_low=lo,
        ebound_high=hi,
    )


def coset_avg_check(
    matrices: list[GFMatrix],
    t: int,
    n: int,
    field: FieldSpec,
    translate_cap: int = DEFAULT_TRANSLATE_CAP,
) -> tuple[Fraction, Fraction]:
    """Average |S meet (S + v)| over all translates v, next to |S|^2 / q^(tn).

    Returns both sides as exact fractions; they are provably equal, and the
    left side really is accumulated translate by translate over the whole
    space (vectorized over v), so the comparison exercises the packed
    subtraction rather than restating the identity.
    """
    digits = field.m * t * n
    size = field.p**digits
    if size > translate_cap:
        raise SearchTooLarge(f"{size} translates exceed cap {translate_cap}")
    space = PackedSpace(field.p, digits)

    packed = set()
    for mat in matrices:
        if mat.rows != t or mat.cols != n or mat.field != field:
            raise DomainError("set members must be t x n matrices over the field")
        flat: list[int] = []
        for i in range(t):
            for x in mat.row(i):
                flat.extend(field.digits_of(x))
        packed.add(space.pack(flat))

    counts = np.zeros(size, dtype=np.int64)
    if packed:
        member = np.zeros(size, dtype=bool)
        member[list(packed)] = True
        all_v = np.arange(size, dtype=np.int64)
        for s in sorted(packed):
            # s - v in S  <=>  the translate of v by s hits the set.
            counts += member[space.subtractor_from(s)(all_v)]
    lhs = Fraction(int(counts.sum()), size)
    rhs = Fraction(len(packed) ** 2, size)
    return lhs, rhs


def estimate_r2_success(
    n: int, k: int, rho: float, trials: int, seed: int
) -> MCSummary:
    """Fraction of random [n, k] binary codes with R_2 <= floor(rho * n).

    Each trial owns the Mersenne-Twister stream random.Random(seed * 1000003
    + trial) and redraws its k x n generator until it has full rank, so the
    sample really consists of dimension-k codes, runs are reproducible, and
    trials are order-independent.
    """
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got k={k}, n={n}")
    if not 0.0 <= rho <= 1.0:
        raise DomainError(f"rho {rho} outside [0, 1]")
    if trials < 1:
        raise DomainError("need at least one trial")
    import random

    from .gf import field_create

    f2 = field_create(2, 1)
    threshold = int(rho * n)
    successes = 0
    for trial in range(trials):
        rng = random.Random(seed * 1000003 + trial)
        while True:
            G = GFMatrix(f2, k, n, [rng.randrange(2) for _ in range(k * n)])
            C = code_from_generator(G)
            if not C.rank_dropped:
                break
        if C.n - C.k == 0:
            radius = 0
        else:
            radius = covering_radius(lift(C, 2)).radius
        if radius <= threshold:
            successes += 1
    return MCSummary(trials=trials, seed=seed, success_fraction=successes / trials)
