import sys
sys.path.append("src")

from collections import Counter

import pytest
from hypothesis import given, strategies as st

from errors import ShapeError
from shapes import (Cell, Partition, SkewShape, b_stat, hook, hooks, parse_partition, parse_skew,
                    partitions_of, s_stat, skew_shapes_upto, subpartitions, upper_covers_rc)


@st.composite
def partition_strategy(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    k = draw(st.integers(min_value=1, max_value=n))
    bins = draw(st.lists(st.integers(min_value=0, max_value=k - 1), min_size=n, max_size=n))
    return Partition(tuple(sorted(Counter(bins).values(), reverse=True)))


def test_parse_and_print():
    sh = parse_skew("4,4,2/2,1")
    assert sh.outer == Partition.of(4, 4, 2)
    assert sh.inner == Partition.of(2, 1)
    assert sh.size() == 7
    assert str(sh) == "4,4,2/2,1"
    assert str(parse_skew("3,1")) == "3,1"
    assert parse_partition("∅") == Partition()
    assert str(Partition()) == "∅"


def test_bad_shapes():
    for text in ("2,3", "a,b", "2,0", "2,1/3"):
        with pytest.raises(ShapeError):
            parse_skew(text)


def test_hooks_of_square():
    lam = Partition.of(2, 2)
    assert hooks(lam) == [3, 2, 2, 1]
    assert hook(lam, Cell(1, 1)) == 3
    with pytest.raises(ShapeError):
        hook(lam, Cell(3, 1))


def test_b_and_s_statistics():
    lam = Partition.of(4, 4, 2)
    assert b_stat(lam) == 8
    assert s_stat(lam) == 31


def test_partition_counts():
    assert [len(partitions_of(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert len(subpartitions(Partition.of(2, 2))) == 6
    assert all(not sh.inner == sh.outer for sh in skew_shapes_upto(3, proper=True))


def test_upper_covers_add_cells_in_distinct_rows_and_columns():
    covers = set(upper_covers_rc(Partition.of(1), Partition.of(2, 2)))
    assert covers == {Partition.of(2), Partition.of(1, 1), Partition.of(2, 1)}


@given(partition_strategy())
def test_conjugate_is_an_involution(lam):
    assert lam.conjugate.conjugate == lam
    assert lam.conjugate.size() == lam.size()
    assert sorted(hooks(lam)) == sorted(hooks(lam.conjugate))


@given(partition_strategy())
def test_skew_cells_partition_the_outer_shape(lam):
    for mu in subpartitions(lam):
        sh = SkewShape(lam, mu)
        assert len(sh.cells()) == lam.size() - mu.size()
        assert all(c in sh and c not in mu for c in sh.cells())


if __name__ == "__main__":
    test_parse_and_print()
    test_bad_shapes()
    test_hooks_of_square()
    test_b_and_s_statistics()
    test_partition_counts()
    test_upper_covers_add_cells_in_distinct_rows_and_columns()
    test_conjugate_is_an_involution()
    test_skew_cells_partition_the_outer_shape()
    print("shapes: ok")
