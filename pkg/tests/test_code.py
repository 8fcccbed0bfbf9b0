"""Code construction, the single-step operations, lifting, and file I/O."""

import random

import pytest

from gencover.code import (
    code_from_generator,
    code_from_parity,
    codes_equal,
    direct_sum,
    extend,
    format_code,
    hamming_code,
    lift,
    load_code,
    parse_code,
    puncture,
    save_code,
    shorten,
    u_uplusv,
)
from gencover.errors import (
    DegreeOutOfRange,
    EmptyMatrix,
    FieldMismatch,
    InputFormatError,
    LengthMismatch,
    NonPrimeBaseField,
    PositionOutOfRange,
)
from gencover.fqlinalg import GFMatrix, in_span, random_matrix, rank, rref
from gencover.gf import field_create

F2 = field_create(2, 1)
F3 = field_create(3, 1)


def rep3():
    return code_from_generator(GFMatrix.from_rows(F2, [[1, 1, 1]]))


def check_wellformed(C):
    assert rank(C.G) == C.k
    assert rank(C.H) == C.n - C.k
    assert (C.G @ C.H.transpose()).is_zero()


def test_full_space_code():
    C = code_from_generator(GFMatrix.identity(F2, 4))
    assert (C.n, C.k) == (4, 4)
    assert C.H.rows == 0
    check_wellformed(C)


def test_repetition_code_parity():
    C = rep3()
    assert (C.n, C.k) == (3, 1)
    check_wellformed(C)
    # H spans the same row space as [[1,1,0],[1,0,1]].
    expect = rref(GFMatrix.from_rows(F2, [[1, 1, 0], [1, 0, 1]])).rref
    assert rref(C.H).rref == expect


def test_rank_deficient_generator_flagged():
    C = code_from_generator(GFMatrix.from_rows(F2, [[1, 0, 1], [1, 0, 1]]))
    assert C.k == 1
    assert C.rank_dropped
    check_wellformed(C)


def test_empty_generator_rejected():
    with pytest.raises(EmptyMatrix):
        code_from_generator(GFMatrix(F2, 0, 3, []))


def test_hamming_74():
    C = hamming_code(3, 2)
    assert (C.n, C.k) == (7, 4)
    check_wellformed(C)
    # Columns are all nonzero binary triples in lexicographic order.
    cols = [C.H.column(j) for j in range(7)]
    assert cols[0] == (0, 0, 1)
    assert cols[6] == (1, 1, 1)
    assert len(set(cols)) == 7


def test_hamming_22_is_repetition():
    C = hamming_code(2, 2)
    assert (C.n, C.k) == (3, 1)
    assert codes_equal(C, rep3())


def test_ternary_hamming():
    C = hamming_code(2, 3)
    assert (C.n, C.k) == (4, 2)
    assert C.field == F3
    check_wellformed(C)
    with pytest.raises(DegreeOutOfRange):
        hamming_code(1, 2)


def test_lift_shapes_and_identity():
    C = rep3()
    assert lift(C, 1) is C
    L = lift(C, 2)
    assert (L.n, L.k) == (3, 1)
    assert L.field == field_create(2, 2)
    assert L.G.row(0) == (1, 1, 1)
    check_wellformed(L)
    H = lift(hamming_code(3, 2), 2)
    assert (H.n, H.k) == (7, 4)
    with pytest.raises(NonPrimeBaseField):
        lift(lift(C, 2), 2)


def test_lift_preserves_dimension_random():
    rng = random.Random(99)
    done = 0
    seed = 0
    while done < 100:
        seed += 1
        q = rng.choice([2, 3, 5])
        field = field_create(q, 1)
        n = rng.randint(2, 6)
        k = rng.randint(1, n)
        C = code_from_generator(random_matrix(k, n, field, seed=seed))
        if C.degenerate:
            continue
        t = rng.randint(2, 3)
        assert lift(C, t).k == C.k
        done += 1


def test_puncture():
    C = puncture(rep3(), 2)
    assert (C.n, C.k) == (2, 1)
    assert not C.rank_dropped
    H = hamming_code(3, 2)
    for pos in range(7):
        P = puncture(H, pos)
        assert (P.n, P.k) == (6, 4)  # distance 3 > 1, so rank is kept
        check_wellformed(P)
    single = code_from_generator(GFMatrix.from_rows(F2, [[1]]))
    with pytest.raises(PositionOutOfRange):
        puncture(single, 0)
    with pytest.raises(PositionOutOfRange):
        puncture(rep3(), 3)


def test_puncture_can_drop_rank():
    # Both codewords differ only in the last coordinate.
    C = code_from_generator(GFMatrix.from_rows(F2, [[0, 0, 1]]))
    P = puncture(C, 2)
    assert P.k == 0 and P.rank_dropped and P.degenerate


def test_extend_repetition():
    E = extend(rep3())
    assert (E.n, E.k) == (4, 1)
    assert set(E.codewords()) == {(0, 0, 0, 0), (1, 1, 1, 1)}


def test_extend_hamming():
    E = extend(hamming_code(3, 2))
    assert (E.n, E.k) == (8, 4)
    # Every codeword of the extension has even weight.
    for cw in E.codewords():
        assert sum(cw) % 2 == 0


def test_extend_ternary_parity():
    C = code_from_generator(GFMatrix.from_rows(F3, [[1, 2]]))
    E = extend(C)
    # -(1+2) = 0 in F_3.
    assert E.G.row(0) == (1, 2, 0)


def test_puncture_of_extension_recovers_code():
    for C in (rep3(), hamming_code(3, 2), code_from_generator(random_matrix(2, 5, F3, seed=4))):
        back = puncture(extend(C), C.n)
        assert codes_equal(back, C)


def test_shorten_hamming_at_all_ones_column():
    H = hamming_code(3, 2)
    all_ones = next(j for j in range(7) if H.H.column(j) == (1, 1, 1))
    S = shorten(H, all_ones)
    assert (S.n, S.k) == (6, 3)
    check_wellformed(S)


def test_shorten_repetition_degenerates():
    S = shorten(rep3(), 0)
    assert (S.n, S.k) == (2, 0)
    assert S.degenerate
    assert list(S.codewords()) == [(0, 0)]


def test_shorten_then_extend_lengths():
    C = hamming_code(3, 2)
    assert shorten(C, 0).n == C.n - 1
    assert extend(shorten(C, 0)).n == C.n


def test_u_uplusv():
    C = u_uplusv(rep3(), rep3())
    assert (C.n, C.k) == (6, 2)
    # (111, 000) = (u, u+v) with u = v = 111.
    words = set(C.codewords())
    assert (1, 1, 1, 0, 0, 0) in words
    assert (1, 1, 1, 1, 1, 1) in words
    other = code_from_generator(GFMatrix.from_rows(F2, [[1, 1]]))
    with pytest.raises(LengthMismatch):
        u_uplusv(rep3(), other)
    t3 = code_from_generator(GFMatrix.from_rows(F3, [[1, 1, 1]]))
    with pytest.raises(FieldMismatch):
        u_uplusv(rep3(), t3)


def test_direct_sum():
    D = direct_sum(rep3(), rep3())
    assert (D.n, D.k) == (6, 2)
    assert len(set(D.codewords())) == 4
    full1 = code_from_generator(GFMatrix.identity(F2, 1))
    D2 = direct_sum(hamming_code(3, 2), full1)
    assert (D2.n, D2.k) == (8, 5)


def test_membership_via_span():
    C = u_uplusv(rep3(), rep3())
    gt = C.G.transpose()
    assert in_span(gt, (1, 1, 1, 0, 0, 0)) is not None
    assert in_span(gt, (1, 0, 1, 0, 0, 0)) is None


def test_wellformed_random_codes():
    for trial in range(60):
        field = field_create([2, 3][trial % 2], 1)
        n = 2 + trial % 6
        k = 1 + trial % n if n > 1 else 1
        C = code_from_generator(random_matrix(min(k, n), n, field, seed=trial))
        check_wellformed(C)


def test_code_from_parity_roundtrip():
    H = hamming_code(3, 2)
    again = code_from_parity(H.H)
    assert codes_equal(H, again)


def test_file_format_roundtrip(tmp_path):
    C = hamming_code(3, 2)
    path = tmp_path / "hamming.code"
    save_code(C, path)
    text = path.read_text(encoding="utf-8")
    assert text.startswith("q 2\nn 7\nk 4\nG\n")
    D = load_code(path)
    assert codes_equal(C, D)


def test_parse_rejects_non_prime_q():
    bad = "q 4\nn 2\nk 1\nG\n1 1\n"
    with pytest.raises(InputFormatError):
        parse_code(bad)


def test_parse_rejects_malformed():
    with pytest.raises(InputFormatError):
        parse_code("q 2\nn 2\n")
    with pytest.raises(InputFormatError):
        parse_code("q 2\nn 2\nk 1\nG\n1 1 1\n")
    with pytest.raises(InputFormatError):
        parse_code("q 2\nn 2\nk 1\nG\n1 7\n")
    with pytest.raises(InputFormatError):
        parse_code("q 2\nn 2\nk 2\nG\n1 1\n")


def test_parse_accepts_rank_deficient_with_flag():
    C = parse_code("q 2\nn 3\nk 2\nG\n1 0 1\n1 0 1\n")
    assert C.k == 1 and C.rank_dropped


def test_format_code_golden():
    C = rep3()
    assert format_code(C) == "q 2\nn 3\nk 1\nG\n1 1 1\n"
