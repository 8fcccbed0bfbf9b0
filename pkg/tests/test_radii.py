"""The hierarchy computations, cross-checked against brute-force oracles."""

import itertools
import random

import pytest

from gencover.code import (
    code_from_generator,
    hamming_code,
    lift,
    shorten,
)
from gencover.errors import MethodInfeasible, RadiusOutOfRange, SyndromeSpaceTooLarge
from gencover.fqlinalg import GFMatrix, in_span, random_matrix
from gencover.gf import field_create
from gencover.radii import (
    RadiiReport,
    ball_volume,
    check_parity_invariance,
    covering_radius,
    generalized_radius,
    radii_hierarchy,
    t_distance,
    t_weight,
)

F2 = field_create(2, 1)
F3 = field_create(3, 1)


def rep3():
    return code_from_generator(GFMatrix.from_rows(F2, [[1, 1, 1]]))


def shortened_hamming_63():
    H = hamming_code(3, 2)
    pos = next(j for j in range(7) if H.H.column(j) == (1, 1, 1))
    return shorten(H, pos)


def brute_ball_count(t, r, n, q):
    """Oracle: count t x n matrices with at most r nonzero columns directly."""
    count = 0
    for cols in itertools.product(range(q**t), repeat=n):
        if sum(1 for c in cols if c) <= r:
            count += 1
    return count


def sampled_random_code(field, n, k, seed):
    C = code_from_generator(random_matrix(k, n, field, seed=seed))
    return None if C.degenerate else C


# -- block metric -------------------------------------------------------------


def test_t_weight_examples():
    assert t_weight(GFMatrix.zeros(F2, 2, 3)) == 0
    v = GFMatrix.from_rows(F2, [[1, 0, 0], [0, 0, 1]])
    assert t_weight(v) == 2
    assert t_distance(v, v) == 0
    u = GFMatrix.from_rows(F2, [[1, 0, 0], [0, 0, 0]])
    assert t_distance(u, v) == 1


# -- ball volume --------------------------------------------------------------


def test_ball_volume_examples():
    assert ball_volume(2, 0, 5, 2) == 1
    assert ball_volume(1, 7, 7, 2) == 2**7
    assert ball_volume(1, 4, 4, 3) == 3**4
    assert ball_volume(2, 1, 3, 2) == 10  # 1 + 3 * 3
    with pytest.raises(RadiusOutOfRange):
        ball_volume(2, 4, 3, 2)
    with pytest.raises(RadiusOutOfRange):
        ball_volume(2, -1, 3, 2)


def test_ball_volume_matches_enumeration():
    for q in (2, 3):
        for t in (1, 2):
            for n in range(1, 5):
                for r in range(n + 1):
                    assert ball_volume(t, r, n, q) == brute_ball_count(t, r, n, q)


# -- covering radius ----------------------------------------------------------


def test_covering_radius_full_space():
    C = code_from_generator(GFMatrix.identity(F2, 4))
    assert covering_radius(C).radius == 0


def test_covering_radius_hamming_is_one():
    res = covering_radius(hamming_code(3, 2))
    assert res.radius == 1
    assert any(res.deep_hole)


def test_covering_radius_repetition():
    assert covering_radius(rep3()).radius == 1
    # Lifted to F_4 the [3,1] code has radius 2.
    assert covering_radius(lift(rep3(), 2)).radius == 2


def test_covering_radius_cap():
    with pytest.raises(SyndromeSpaceTooLarge):
        covering_radius(hamming_code(3, 2), state_cap=4)


def brute_covering_radius(C):
    """Oracle: max over vectors of the distance to the nearest codeword."""
    words = list(C.codewords())
    worst = 0
    for v in itertools.product(C.field.elements(), repeat=C.n):
        best = min(
            sum(1 for a, b in zip(v, w) if a != b) for w in words
        )
        worst = max(worst, best)
    return worst


def test_covering_radius_matches_brute_force():
    rng = random.Random(3)
    done = 0
    seed = 0
    while done < 12:
        seed += 1
        field = field_create(rng.choice([2, 3]), 1)
        n = rng.randint(2, 5)
        k = rng.randint(1, n)
        C = sampled_random_code(field, n, k, seed)
        if C is None:
            continue
        assert covering_radius(C).radius == brute_covering_radius(C)
        done += 1


# -- generalized radius, three methods ---------------------------------------


def test_hamming_radius_all_methods():
    C = hamming_code(3, 2)
    for method in ("lifted", "span_cover", "ball_cover", "all"):
        assert generalized_radius(C, 2, method).value == 2


def test_shortened_hamming_values():
    S = shortened_hamming_63()
    assert generalized_radius(S, 1, "lifted").value == 2
    assert generalized_radius(S, 2, "lifted").value == 2
    assert generalized_radius(S, 2, "span_cover").value == 2


def test_repetition_t2_all_methods():
    C = rep3()
    for method in ("lifted", "span_cover", "ball_cover"):
        assert generalized_radius(C, 2, method).value == 2


def test_method_agreement_random_binary_codes():
    rng = random.Random(42)
    done = 0
    seed = 1000
    while done < 50:
        seed += 1
        n = rng.randint(2, 6)
        k = rng.randint(1, min(3, n))
        C = sampled_random_code(F2, n, k, seed)
        if C is None or C.n - C.k == 0:
            continue
        for t in (1, 2):
            a = generalized_radius(C, t, "lifted").value
            b = generalized_radius(C, t, "span_cover").value
            c = generalized_radius(C, t, "ball_cover").value
            assert a == b == c, (C, t, a, b, c)
        done += 1


def test_span_cover_restriction_equivalent_on_tiny_codes():
    rng = random.Random(17)
    done = 0
    seed = 5000
    while done < 10:
        seed += 1
        n = rng.randint(2, 5)
        k = rng.randint(max(1, n - 2), n - 1) if n > 1 else 1
        C = sampled_random_code(F2, n, k, seed)
        if C is None or not 1 <= C.n - C.k <= 2:
            continue
        for t in (1, 2):
            a = generalized_radius(C, t, "span_cover", restrict_independent=True)
            b = generalized_radius(C, t, "span_cover", restrict_independent=False)
            assert a.value == b.value
        done += 1


def test_ball_cover_cap():
    with pytest.raises(MethodInfeasible):
        generalized_radius(hamming_code(3, 2), 2, "ball_cover", ball_work_cap=100)


# -- hierarchy ----------------------------------------------------------------


def test_hamming_hierarchy():
    rep = radii_hierarchy(hamming_code(3, 2), 3, "lifted")
    assert rep.values() == (1, 2, 3)
    assert rep.entries[2].method == "tail"


def test_hamming_hierarchy_strictly_increasing():
    values = radii_hierarchy(hamming_code(3, 2), 3, "lifted").values()
    assert values[0] < values[1] < values[2]


def test_shortened_hamming_hierarchy():
    rep = radii_hierarchy(shortened_hamming_63(), 3, "lifted")
    assert rep.values() == (2, 2, 3)


def test_hierarchy_tail():
    rep = radii_hierarchy(rep3(), 4, "lifted")
    assert rep.values() == (1, 2, 2, 2)
    assert [e.method for e in rep.entries] == ["lifted", "tail", "tail", "tail"]


def test_hierarchy_inequalities_random():
    rng = random.Random(8)
    done = 0
    seed = 30000
    while done < 25:
        seed += 1
        q = rng.choice([2, 3])
        field = field_create(q, 1)
        n = rng.randint(3, 8 if q == 2 else 7)
        lo = max(1, n - (6 if q == 2 else 4))
        hi = min(4, n - 1)
        if lo > hi:
            continue
        k = rng.randint(lo, hi)
        C = sampled_random_code(field, n, k, seed)
        if C is None:
            continue
        rep = radii_hierarchy(C, 3, "lifted")
        values = rep.values()
        m = C.n - C.k
        r1 = values[0]
        for t, v in enumerate(values, start=1):
            assert v <= m
            if t <= m:
                assert t <= v
            assert v <= t * r1
        # Subadditivity over the computed prefix.
        for t1 in range(1, 3):
            for t2 in range(1, 4 - t1):
                assert values[t1 + t2 - 1] <= values[t1 - 1] + values[t2 - 1]
        done += 1


def test_report_roundtrip():
    rep = radii_hierarchy(hamming_code(3, 2), 3, "lifted")
    assert RadiiReport.from_dict(rep.to_dict()) == rep


# -- witnesses ----------------------------------------------------------------


def brute_min_columns(H, syndromes):
    for r in range(H.cols + 1):
        for idx in itertools.combinations(range(H.cols), r):
            sub = H.submatrix_columns(idx)
            if all(in_span(sub, s) is not None for s in syndromes):
                return r
    raise AssertionError("syndromes not spanned by H at all")


@pytest.mark.parametrize("maker", [rep3, shortened_hamming_63, lambda: hamming_code(3, 2)])
def test_witness_validity(maker):
    C = maker()
    rep = radii_hierarchy(C, min(3, C.n - C.k), "lifted")
    for entry in rep.entries:
        if entry.method == "tail":
            continue
        syndromes = entry.witness_syndromes
        cols = entry.witness_columns
        sub = C.H.submatrix_columns(cols)
        for s in syndromes:
            assert in_span(sub, s) is not None
        # Minimality, re-verified by exhaustive search over all column sets.
        assert brute_min_columns(C.H, syndromes) == len(cols) == entry.value


# -- parity-check invariance ---------------------------------------------------


def test_parity_invariance_identity_trivial():
    C = hamming_code(3, 2)
    assert check_parity_invariance(C, 1, trials=1, seed=0)


def test_parity_invariance_hamming():
    C = hamming_code(3, 2)
    for t in (1, 2):
        assert check_parity_invariance(C, t, trials=20, seed=7)


def test_parity_invariance_parity_code():
    C = code_from_generator(GFMatrix.from_rows(F2, [[1, 0, 1], [0, 1, 1]]))
    assert (C.n, C.k) == (3, 2)
    for t in (1, 2):
        assert check_parity_invariance(C, t, trials=20, seed=11)
