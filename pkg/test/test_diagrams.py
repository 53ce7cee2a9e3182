import sys
sys.path.append("src")

from hypothesis import given, settings, strategies as st

import diagrams as dg
from shapes import Cell, parse_skew, skew_shapes_upto


def test_pinned_counts():
    sh = parse_skew("3,3,2/2,1")
    assert len(dg.excited_diagrams(sh)) == 5
    assert len(dg.generalized_excited_diagrams(sh)) == 11
    assert len(dg.pleasant_diagrams(sh)) == 88
    assert dg.pleasant_count_formula(sh) == 88
    assert dg.peak_weighted_count(sh) == 11


def test_small_skew_shape():
    sh = parse_skew("4,3/2")
    assert len(dg.excited_diagrams(sh)) == 3
    assert len(dg.generalized_excited_diagrams(sh)) == 5
    assert dg.check_NO_characterization(sh)


def test_straight_shape_has_one_empty_diagram():
    sh = parse_skew("3,2")
    assert dg.excited_diagrams(sh) == {dg.Diagram.of(sh.outer, [])}
    assert dg.generalized_excited_diagrams(sh) == {dg.Diagram.of(sh.outer, [])}


def test_excited_moves_keep_size():
    sh = parse_skew("5,4,4,2/2,1")
    excited = dg.excited_diagrams(sh)
    assert len(excited) == 8
    for D in excited:
        assert len(D) == 3
    hist = dg.size_histogram(dg.generalized_excited_diagrams(sh))
    assert hist == {3: 8, 4: 12, 5: 6, 6: 1}
    assert sum(hist.values()) == dg.peak_weighted_count(sh) == 27


def test_peaks_sit_south_east_of_the_diagram():
    sh = parse_skew("3,3,2/2,1")
    peaks = dg.excited_peaks(sh)
    inner = dg.Diagram.of(sh.outer, sh.inner.cells())
    assert peaks[inner] == frozenset()
    for D, p in peaks.items():
        assert not (p & D.cells)
        assert all(c in sh.outer for c in p)


def test_diagram_json():
    D = dg.Diagram.of(parse_skew("2,2").outer, [(1, 1)])
    assert D.to_json([Cell(2, 2)]) == {"ambient": "2,2", "cells": [{"r": 1, "c": 1}],
                                       "peaks": [{"r": 2, "c": 2}]}
    assert "peaks" not in D.to_json()


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(skew_shapes_upto(6)))
def test_generalized_diagrams_are_excited_plus_peak_subsets(sh):
    assert dg.peaks_order_independent(sh)
    assert dg.check_NO_characterization(sh)
    assert dg.pleasant_count_formula(sh) == len(dg.pleasant_diagrams(sh))


if __name__ == "__main__":
    test_pinned_counts()
    test_small_skew_shape()
    test_straight_shape_has_one_empty_diagram()
    test_excited_moves_keep_size()
    test_peaks_sit_south_east_of_the_diagram()
    test_diagram_json()
    test_generalized_diagrams_are_excited_plus_peak_subsets()
    print("diagrams: ok")
