import sys
sys.path.append("src")

import pytest

from errors import PermutationError
from permutations import (Permutation, contains_pattern, essential_set, grassmannian_perm,
                          is_dominant, is_grassmannian, is_vexillary, mu_of, parse_permutation,
                          random_vexillary, rothe, supershape_of, w_nk)
from shapes import Cell, Partition


def test_parse():
    assert parse_permutation("1432") == Permutation.of(1, 4, 3, 2)
    assert parse_permutation("1,4,3,2") == Permutation.of(1, 4, 3, 2)
    assert str(Permutation.of(1, 4, 3, 2)) == "1432"
    for bad in ("1224", "12a", "134"):
        with pytest.raises(PermutationError):
            parse_permutation(bad)


def test_rothe_diagram_of_1432():
    w = parse_permutation("1432")
    assert rothe(w) == {Cell(2, 2), Cell(2, 3), Cell(3, 2)}
    assert essential_set(w) == {Cell(2, 3), Cell(3, 2)}
    assert mu_of(w) == Partition.of(2, 1)
    assert supershape_of(w) == Partition.of(3, 3, 2)
    assert is_vexillary(w) and not is_grassmannian(w) and not is_dominant(w)


def test_patterns():
    assert contains_pattern(parse_permutation("2143"), (2, 1, 4, 3))
    assert not is_vexillary(parse_permutation("2143"))
    assert is_dominant(parse_permutation("321"))
    with pytest.raises(PermutationError):
        mu_of(parse_permutation("2143"))


def test_grassmannian_permutations():
    w = grassmannian_perm(Partition.of(2, 1), 2)
    assert w == Permutation.of(2, 4, 1, 3)
    assert is_grassmannian(w)
    assert mu_of(w) == Partition.of(2, 1)
    assert grassmannian_perm(Partition(), 2) == Permutation.of(1, 2)


def test_w_nk_and_random_vexillary():
    assert w_nk(3, 2) == Permutation.of(1, 2, 5, 4, 3)
    w = random_vexillary(seed=3, size=6)
    assert w == random_vexillary(seed=3, size=6)
    assert is_vexillary(w)


if __name__ == "__main__":
    test_parse()
    test_rothe_diagram_of_1432()
    test_patterns()
    test_grassmannian_permutations()
    test_w_nk_and_random_vexillary()
    print("permutations: ok")
