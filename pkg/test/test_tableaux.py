import sys
sys.path.append("src")

from math import factorial

from hypothesis import given, settings, strategies as st

from shapes import Partition, SkewShape, hooks, parse_skew, partitions_upto, skew_shapes_upto
from tableaux import (Tableau, enum_BSYT, enum_BSYT_k, enum_IT_maxentry, enum_SIT,
                      enum_SIT_by_fillings, enum_SSVT, enum_SSYT_maxentry, enum_SYT,
                      enum_weight_bounded, minimal_IT, stats, weight_counts)

SMALL_SKEW = [sh for sh in skew_shapes_upto(5) if sh.size() > 0]


def test_square_tableaux():
    sh = parse_skew("2,2")
    assert len(enum_SYT(sh)) == 2
    sits = enum_SIT(sh)
    assert len(sits) == 3
    assert [T.values() for T in sits] == [[1, 2, 2, 3], [1, 2, 3, 4], [1, 3, 2, 4]]
    bsyt = enum_BSYT(sh)
    assert [T.values() for T in bsyt] == [[1, 2, 2, 3]]
    assert len(enum_BSYT_k(sh, 2)) == 1


def test_chain_and_tail_counts():
    sh = parse_skew("2,2")
    T = Tableau.from_rows(sh, [[1, 2], [2, 3]])
    assert T.chain() == [Partition(), Partition.of(1), Partition.of(2, 1), Partition.of(2, 2)]
    s = stats(T)
    assert s.weight == 8 and s.m == 3
    assert [s.a_ge(k) for k in range(1, 5)] == [4, 3, 1, 0]


def test_skew_tableaux_follow_the_inner_shape():
    sh = parse_skew("3,2/1")
    T = Tableau.from_rows(sh, [[1, 3], [2, 4]])
    assert T.nu_le(2) == Partition.of(2, 1)
    assert len(enum_SYT(sh)) == 5


def test_semistandard_and_set_valued_counts():
    sh = parse_skew("2,1")
    assert len(enum_SSYT_maxentry(sh, 2)) == 2
    assert len(enum_SSYT_maxentry(sh, 3)) == 8
    assert len(enum_SSVT(sh, 2)) == 3
    assert all(T.is_valid(2) for T in enum_SSVT(sh, 2))
    assert len(enum_IT_maxentry(parse_skew("1,1"), 3)) == 3


def test_weight_bounded_families():
    sh = parse_skew("1")
    assert weight_counts(enum_weight_bounded("rpp", sh, 3)) == {0: 1, 1: 1, 2: 1, 3: 1}
    assert weight_counts(enum_weight_bounded("ssyt", sh, 3)) == {1: 1, 2: 1, 3: 1}
    square = enum_weight_bounded("it", parse_skew("2,2"), 8)
    assert weight_counts(square) == {8: 1}
    assert square[0] == minimal_IT(Partition.of(2, 2))


def test_increasing_tableaux_shift_to_reverse_plane_partitions():
    for lam in (Partition.of(2, 1), Partition.of(2, 2), Partition.of(3, 1)):
        sh = SkewShape.straight(lam)
        M = minimal_IT(lam)
        its = enum_weight_bounded("it", sh, M.weight + 4)
        rpps = enum_weight_bounded("rpp", sh, 4)
        shifted = [T.subtract(M) for T in its]
        assert len(shifted) == len(rpps)
        assert set(shifted) == set(rpps)
        assert all(T.weight - M.weight == S.weight for T, S in zip(its, shifted))


def test_sits_without_repeats_are_standard():
    for sh in SMALL_SKEW:
        n = sh.size()
        assert [T for T in enum_SIT(sh) if T.m == n] == enum_SYT(sh)


def test_hook_length_formula_on_small_shapes():
    for lam in partitions_upto(6):
        f = len(enum_SYT(SkewShape.straight(lam)))
        prod = 1
        for h in hooks(lam):
            prod *= h
        assert f * prod == factorial(lam.size())


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(SMALL_SKEW))
def test_sit_chains_match_brute_force(sh):
    assert enum_SIT(sh) == enum_SIT_by_fillings(sh)


if __name__ == "__main__":
    test_square_tableaux()
    test_chain_and_tail_counts()
    test_skew_tableaux_follow_the_inner_shape()
    test_semistandard_and_set_valued_counts()
    test_weight_bounded_families()
    test_increasing_tableaux_shift_to_reverse_plane_partitions()
    test_sits_without_repeats_are_standard()
    test_hook_length_formula_on_small_shapes()
    test_sit_chains_match_brute_force()
    print("tableaux: ok")
