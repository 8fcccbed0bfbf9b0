"""Batched syndrome queries against a parity-check matrix.

Given H and a batch of syndrome vectors, find a column index set I with every
syndrome in the span of H_I, either exactly minimal (lexicographic-first
subset search) or greedily (rank-deficiency descent), together with the
combining coefficients needed to reconstruct each syndrome.  Column indices
are 0-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Sequence

from .errors import DimensionMismatch, Infeasible, InputFormatError, SearchTooLarge
from .gf import FieldSpec
from .fqlinalg import GFMatrix, in_span, matvec, rank

DEFAULT_SEARCH_CAP = 1 << 22  # subset tests before the exact search gives up


@dataclass(frozen=True)
class BatchPlan:
    """A column set I and the coefficients expressing each syndrome over H_I.

    coefficients has one row per input syndrome (duplicates and zero
    syndromes included) and one column per entry of `columns`; row i
    reconstructs syndrome i as sum_j coefficients[i][j] * H[:, columns[j]].
    """

    columns: tuple[int, ...]
    coefficients: GFMatrix
    method: str
    size: int

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "size": self.size,
            "columns": list(self.columns),
            "coefficients": self.coefficients.row_lists(),
            "q": self.coefficients.field.q,
        }

    @classmethod
    def from_dict(cls, d: dict, field: FieldSpec) -> "BatchPlan":
        rows = d["coefficients"]
        ncols = len(d["columns"])
        flat = [x for row in rows for x in row]
        return cls(
            columns=tuple(d["columns"]),
            coefficients=GFMatrix(field, len(rows), ncols, flat),
            method=d["method"],
            size=d["size"],
        )


def _as_matrix(field: FieldSpec, vectors: Sequence[Sequence[int]], length: int) -> GFMatrix:
    """Column matrix of the given vectors."""
    for v in vectors:
        if len(v) != length:
            raise DimensionMismatch(f"syndrome length {len(v)}, expected {length}")
    entries = [v[i] for i in range(length) for v in vectors]
    return GFMatrix(field, length, len(vectors), entries)


def _check_feasible(H: GFMatrix, vectors: Sequence[Sequence[int]]) -> None:
    if not vectors:
        return
    S = _as_matrix(H.field, vectors, H.rows)
    if rank(H.hstack(S)) > rank(H):
        raise Infeasible("syndromes outside the column space of H")


def min_spanning_columns(
    H: GFMatrix,
    vectors: Sequence[Sequence[int]],
    search_cap: int = DEFAULT_SEARCH_CAP,
) -> tuple[int, ...]:
    """Smallest column set whose span contains every given vector.

    Iterates subset sizes upward starting from the rank of the vectors (no
    smaller set can work) and, within a size, subsets in lexicographic
    order; the first success wins, so results are deterministic.
    """
    vectors = [tuple(v) for v in vectors]
    nonzero = [v for v in dict.fromkeys(vectors) if any(v)]
    if not nonzero:
        return ()
    _check_feasible(H, nonzero)
    n = H.cols
    start = rank(_as_matrix(H.field, nonzero, H.rows))
    tested = 0
    for r in range(start, n + 1):
        tested += comb(n, r)
        if tested > search_cap:
            raise SearchTooLarge(
                f"exact search would test more than {search_cap} column sets"
            )
        for idx in itertools.combinations(range(n), r):
            sub = H.submatrix_columns(idx)
            if all(in_span(sub, v) is not None for v in nonzero):
                return idx
    raise Infeasible("no spanning column set exists")  # unreachable if feasible


def _finish_plan(
    H: GFMatrix, syndromes: Sequence[Sequence[int]], idx: tuple[int, ...], method: str
) -> BatchPlan:
    sub = H.submatrix_columns(idx)
    rows = []
    for s in syndromes:
        coeffs = in_span(sub, s)
        if coeffs is None:
            raise Infeasible("selected columns do not span a syndrome")
        rows.append(list(coeffs))
    flat = [x for row in rows for x in row]
    coeff = GFMatrix(H.field, len(rows), len(idx), flat)
    plan = BatchPlan(columns=idx, coefficients=coeff, method=method, size=len(idx))
    if not verify_plan(H, syndromes, plan):
        raise AssertionError("plan failed its own reconstruction check")
    return plan


def plan_exact(
    H: GFMatrix,
    syndromes: Sequence[Sequence[int]],
    search_cap: int = DEFAULT_SEARCH_CAP,
) -> BatchPlan:
    """Minimal-size plan; duplicates and zero syndromes are handled up front."""
    if not syndromes:
        raise DimensionMismatch("syndrome batch must be nonempty")
    idx = min_spanning_columns(H, syndromes, search_cap=search_cap)
    return _finish_plan(H, syndromes, idx, "exact")


def plan_greedy(H: GFMatrix, syndromes: Sequence[Sequence[int]]) -> BatchPlan:
    """Greedy plan: repeatedly add the column that most reduces the rank
    deficiency rank([H_I | S]) - rank(H_I), breaking ties toward lower column
    indices.  Terminates within n steps; no minimality guarantee.
    """
    if not syndromes:
        raise DimensionMismatch("syndrome batch must be nonempty")
    vectors = [tuple(v) for v in syndromes]
    nonzero = [v for v in dict.fromkeys(vectors) if any(v)]
    _check_feasible(H, nonzero)
    if not nonzero:
        return _finish_plan(H, syndromes, (), "greedy")
    S = _as_matrix(H.field, nonzero, H.rows)

    def deficiency(idx: list[int]) -> int:
        sub = H.submatrix_columns(idx)
        return rank(sub.hstack(S)) - rank(sub)

    chosen: list[int] = []
    current = deficiency(chosen)
    while current > 0:
        best_j, best_d = None, None
        for j in range(H.cols):
            if j in chosen:
                continue
            d = deficiency(sorted(chosen + [j]))
            if best_d is None or d < best_d:
                best_j, best_d = j, d
        chosen = sorted(chosen + [best_j])
        current = best_d
    return _finish_plan(H, syndromes, tuple(chosen), "greedy")


def verify_plan(H: GFMatrix, syndromes: Sequence[Sequence[int]], plan: BatchPlan) -> bool:
    """Recompute every reconstruction and check the column indices are valid."""
    if any(not 0 <= j < H.cols for j in plan.columns):
        return False
    if plan.coefficients.rows != len(syndromes) or plan.coefficients.cols != len(plan.columns):
        return False
    if plan.size != len(plan.columns):
        return False
    sub = H.submatrix_columns(plan.columns)
    for i, s in enumerate(syndromes):
        if matvec(sub, plan.coefficients.row(i)) != tuple(s):
            return False
    return True


# -- syndrome file format -----------------------------------------------------
#
# One syndrome per line: n-k space-separated integers in [0, q).
# Blank lines and lines starting with '#' are ignored.


def parse_syndromes(text: str, field: FieldSpec, length: int) -> list[tuple[int, ...]]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if len(toks) != length:
            raise InputFormatError(f"syndrome {line!r} does not have {length} entries")
        vec = []
        for tok in toks:
            try:
                v = int(tok)
            except ValueError as exc:
                raise InputFormatError(f"bad entry {tok!r}") from exc
            if not 0 <= v < field.q:
                raise InputFormatError(f"entry {v} outside [0, {field.q})")
            vec.append(v)
        out.append(tuple(vec))
    return out


def load_syndromes(path, field: FieldSpec, length: int) -> list[tuple[int, ...]]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_syndromes(fh.read(), field, length)
