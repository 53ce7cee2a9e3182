import sys
sys.path.append("src")

from dataclasses import replace

import pytest
from sympy import QQ

from errors import ShapeError, UnsupportedMode
from exact_arith import BETA, Q, equal
from grothendieck import EvalContext
from permutations import parse_permutation
from shapes import Partition, SkewShape, parse_skew, skew_shapes_upto
from verifiers import (REGISTRY, VerifyOptions, bsyt_sides, infinite_partial_sums,
                       khlf_closed_form, koof_form, knhlf_form, parse_target, run_identity,
                       sit_q_sum, sit_sum, sit_terms, skew_q_form, skew_q_peaks_form,
                       sweep_targets)

QUICK = VerifyOptions(trials=3, seed=11, truncation=10)


def _run(identity_id, text, **opts):
    spec = REGISTRY.get_identity(identity_id)
    return run_identity(identity_id, parse_target(spec.kind, text), replace(QUICK, **opts))


def test_square_terms_by_tableau():
    b = BETA
    u_a = (1 + 3*b)**3 * (1 + 4*b)**2 / (6 * b**4 * (4 + 10*b))
    u_b = (1 + 3*b)**2 * (1 + 4*b)**3 / (6 * b**4 * (4 + 10*b))
    u_c = -(1 + 3*b)**2 * (1 + 4*b)**2 / (3 * b**3 * (4 + 10*b))
    sh = parse_skew("2,2")
    terms = sit_terms(sh, EvalContext(2))
    assert len(terms) == 3
    # tableaux come sorted by reading word, so the one with a repeated 2 is first
    assert equal(terms[0], u_c)
    for expected in (u_a, u_b):
        assert any(equal(t, expected) for t in terms[1:])
    total = b**4 * sit_sum(sh, EvalContext(2))
    assert equal(total, (1 + 3*b)**2 * (1 + 4*b)**2 / 12)
    assert equal(sit_sum(sh, EvalContext(2)), khlf_closed_form(Partition.of(2, 2), 2, BETA))


def test_straight_identities_pass():
    for identity_id in ("hlf", "qhlf", "it-rpp", "khlf", "qkhlf-cor", "qkhlf",
                        "beta-coefficients", "khlf-multi"):
        for shape in ("1", "2,1", "2,2", "3,1"):
            report = _run(identity_id, shape)
            assert report.passed, (identity_id, shape, report.to_dict())


def test_khlf_with_extra_variables():
    report = _run("khlf", "2,1", d=4)
    assert report.passed and report.d == 4
    assert report.detail["sit_count"] == 3


def test_qkhlf_in_both_modes():
    assert _run("qkhlf", "2,1", mode="exact-q").passed
    report = _run("qkhlf", "2,1", mode="exact-beta")
    assert report.passed
    assert "limit" in report.detail


def test_skew_identities_pass():
    for identity_id in ("nhlf", "qnhlf", "rpp", "knhlf", "skew-q", "knhlf-multi", "qknhlf",
                        "oof", "k-oof", "excited-counts", "naruse-okada", "pleasant", "paths",
                        "labeled-paths", "det-bound", "skew-chevalley"):
        for shape in ("2,1/1", "3,2/1", "2,2/1"):
            report = _run(identity_id, shape)
            assert report.passed, (identity_id, shape, report.to_dict())


def test_skew_q_peaks_form_on_small_shapes():
    q = Q
    sh = parse_skew("2,2/1")
    x1, x2 = q / (1 - q), q ** 2 / (1 - q ** 2)
    assert equal(skew_q_peaks_form(sh, q), x2 ** 2 * (x1 + 1 / (1 - q ** 3)))
    for sh in skew_shapes_upto(5, proper=True):
        lhs = sit_q_sum(sh, q)
        assert equal(lhs, skew_q_form(sh, q)), str(sh)
        assert equal(lhs, skew_q_peaks_form(sh, q)), str(sh)


def test_k_oof_agrees_with_knhlf():
    sh = parse_skew("3,2,1/1")
    assert equal(koof_form(sh, 3, BETA), knhlf_form(sh, 3, BETA))
    report = _run("k-oof", "3,2,1/1")
    assert report.passed and report.detail["matches_knhlf"]


def test_groth_properties():
    report = _run("groth", "2,1", trials=2)
    assert report.passed, report.detail
    assert report.detail["failed"] == {}


def test_size_and_permutation_identities():
    assert _run("sit-counts", "4").passed
    assert _run("thick-zigzag", "4,2").rhs == "913"
    assert _run("dyck-det", "3,3").passed
    assert _run("gamma-wnk", "5,2").lhs == "13777"
    assert _run("kmy", "1432").passed
    report = _run("gamma", "1432")
    assert report.passed and report.lhs == "beta**2 + 5*beta + 5"


def test_beta_coefficients_bsyt_identity():
    left, right = bsyt_sides(Partition.of(2, 1), 2)
    assert left == right == QQ(62, 3)


def test_infinite_sum():
    assert equal(khlf_closed_form(Partition.of(1), 1, BETA), (1 + 2*BETA) / (-BETA))
    sums = infinite_partial_sums(Partition.of(1), 1, QQ(-1, 4), (10, 200))
    assert abs(sums[200] - 2) < QQ(1, 10 ** 9)
    assert sums[10] < sums[200]
    report = _run("khlf-infinite", "1")
    assert report.passed and report.truncation == 200
    assert _run("khlf-infinite", "2,1", M=400).passed
    with pytest.raises(UnsupportedMode):
        _run("khlf-infinite", "1", beta=QQ(1))


def test_modes_and_targets_are_checked():
    with pytest.raises(UnsupportedMode):
        _run("hlf", "2,1", mode="exact-beta")
    with pytest.raises(ShapeError):
        parse_target("straight", "3,2/1")
    with pytest.raises(ShapeError):
        _run("khlf", "2,2,1", d=2)
    assert parse_target("size", "4") == (4, 1)
    assert parse_target("perm", "1432") == parse_permutation("1432")


def test_sweep_targets():
    straight = sweep_targets("khlf", 2)
    assert (SkewShape.straight(Partition.of(1, 1)), 4) in straight
    assert ((4, 2), None) in sweep_targets("thick-zigzag", 6)
    assert sweep_targets("kmy", 3)
    assert all(REGISTRY.get_identity(s.identity_id).sweep for s in REGISTRY.select(["all"]))


def test_reports_are_plain_data():
    report = _run("hlf", "3,1", timing=True)
    row = report.to_dict()
    assert row["identity"] == "hlf" and row["pass"] is True
    assert row["lhs"] == row["rhs"] == "3"
    assert row["runtime"] >= 0
    assert "trials" not in row


if __name__ == "__main__":
    test_square_terms_by_tableau()
    test_straight_identities_pass()
    test_khlf_with_extra_variables()
    test_qkhlf_in_both_modes()
    test_skew_identities_pass()
    test_skew_q_peaks_form_on_small_shapes()
    test_k_oof_agrees_with_knhlf()
    test_groth_properties()
    test_size_and_permutation_identities()
    test_beta_coefficients_bsyt_identity()
    test_infinite_sum()
    test_modes_and_targets_are_checked()
    test_sweep_targets()
    test_reports_are_plain_data()
    print("verifiers: ok")
