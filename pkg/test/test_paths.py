import sys
sys.path.append("src")

import pytest
from hypothesis import given, settings, strategies as st

import diagrams as dg
from errors import PathError
from paths import (PathFamily, X, delannoy_count, det_bound, dyck_paths, dyck_polynomial,
                   eta_matrix, from_paths, high_peaks, labeled_paths_bijection, schroeder,
                   thick_zigzag, to_paths, valid_path_families)
from shapes import parse_skew, skew_shapes_upto


def test_schroeder_numbers():
    assert [schroeder(n) for n in range(1, 7)] == [1, 3, 11, 45, 197, 903]
    with pytest.raises(ValueError):
        schroeder(0)


def test_delannoy_numbers():
    assert [delannoy_count(n, n) for n in range(5)] == [1, 3, 13, 63, 321]
    assert delannoy_count(2, 1) == 5


def test_determinant_bound():
    sh = parse_skew("5,4,4,2/2,1")
    assert eta_matrix(sh) == [[13, 7], [1, 3]]
    assert det_bound(sh) == 32
    assert len(dg.generalized_excited_diagrams(sh)) <= det_bound(sh)


def test_diagrams_round_trip_through_paths():
    for text in ("3,3,2/2,1", "3,3,3/1", "4,3,3/1", "5,4,4,2/2,1"):
        sh = parse_skew(text)
        diagrams = dg.generalized_excited_diagrams(sh)
        families = set()
        for D in diagrams:
            pf = to_paths(D, sh)
            assert from_paths(pf, sh) == D
            families.add(pf)
        assert families == set(valid_path_families(sh))
        assert len(families) == len(diagrams)
        assert labeled_paths_bijection(sh)
    assert len(valid_path_families(parse_skew("5,4,4,2/2,1"))) == 27


def test_diagonal_step_hands_its_corner_to_the_next_path():
    sh = parse_skew("3,3,3/1")
    pf = to_paths(dg.Diagram.of(sh.outer, [(1, 1), (3, 3)]), sh)
    assert pf.paths == (((2, 1), (1, 2)), ((3, 2), (2, 2), (2, 3)))
    assert pf.diagonal_steps() == 1
    assert high_peaks(to_paths(dg.Diagram.of(sh.outer, [(3, 3)]), sh), sh) == {(1, 1), (2, 2)}
    bad = PathFamily((((2, 1), (2, 2), (1, 2)), ((3, 2), (2, 3))), pf.starts, pf.ends)
    with pytest.raises(PathError):
        from_paths(bad, sh)


def test_diagram_outside_the_region_has_no_paths():
    sh = parse_skew("3,3,2/2,1")
    with pytest.raises(PathError):
        to_paths(dg.Diagram.of(sh.outer, [(4, 1)]), sh)


def test_dyck_polynomials():
    assert [len(dyck_paths(n)) for n in range(1, 6)] == [1, 2, 5, 14, 42]
    assert [dyck_polynomial(n)(2) for n in range(1, 6)] == [1, 3, 11, 45, 197]
    assert dyck_polynomial(2) == 1 + X


def test_thick_zigzag():
    for n in range(1, 5):
        tz = thick_zigzag(n, 1)
        assert tz.direct_count == schroeder(n)
        assert tz.agrees
    tz = thick_zigzag(4, 2)
    assert tz.direct_count == 913
    assert tz.agrees
    assert tz.dyck["L_nk_at_2"] == 913


def test_paths_biject_on_all_small_shapes():
    for sh in skew_shapes_upto(6):
        diagrams = dg.generalized_excited_diagrams(sh)
        for D in diagrams:
            assert from_paths(to_paths(D, sh), sh) == D
        assert len(valid_path_families(sh)) == len(diagrams), str(sh)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(skew_shapes_upto(9, proper=True)))
def test_paths_biject_with_diagrams(sh):
    assert len(valid_path_families(sh)) == len(dg.generalized_excited_diagrams(sh))
    assert labeled_paths_bijection(sh)
    assert len(dg.generalized_excited_diagrams(sh)) <= det_bound(sh)


if __name__ == "__main__":
    test_schroeder_numbers()
    test_delannoy_numbers()
    test_determinant_bound()
    test_diagrams_round_trip_through_paths()
    test_diagonal_step_hands_its_corner_to_the_next_path()
    test_diagram_outside_the_region_has_no_paths()
    test_dyck_polynomials()
    test_thick_zigzag()
    test_paths_biject_on_all_small_shapes()
    test_paths_biject_with_diagrams()
    print("paths: ok")
