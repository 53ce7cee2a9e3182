import sys
sys.path.append("src")

import pytest
from sympy import QQ, ZZ
from sympy.polys.rings import ring

from errors import HooklabError, ShapeError
from exact_arith import BETA, equal
from grothendieck import (BETA_POLY, EvalContext, G_determinant, G_tableau, bracket,
                          double_grothendieck_vexillary, gamma_det_bound, gamma_wnk_check,
                          gamma_wnk_value, grassmannian_check, one_at_lambda_check,
                          one_plus_beta_G1_check, oplus, pieri_at_lambda_residual,
                          pieri_residual, pieri_rewritten_residual, principal_specialization,
                          rescaling_residual, symmetry_residual, vanishing_check,
                          y_lambda_point)
from permutations import parse_permutation, w_nk
from shapes import Partition, subpartitions


def _ctx(d, beta=QQ(2)):
    return EvalContext(d, beta, tuple(QQ(v) for v in (1, 4, 6, 9, 11, 15, 20)))


def test_single_box():
    ctx = EvalContext(1)
    x = QQ(5)
    assert G_tableau(Partition.of(1), [x], ctx) == oplus(x, QQ(1), BETA)
    assert equal(bracket(x, [QQ(1), QQ(2)], 2, BETA), oplus(x, 1, BETA) * oplus(x, 2, BETA))
    with pytest.raises(ShapeError):
        G_tableau(Partition.of(1, 1), [x], ctx)


def test_tableau_sum_equals_bialternant():
    xs = (QQ(3), QQ(7))
    for mu in (Partition.of(1), Partition.of(2, 1), Partition.of(2, 2), Partition.of(3)):
        ctx = _ctx(2)
        assert equal(G_tableau(mu, xs, ctx), G_determinant(mu, xs, ctx))
        assert not symmetry_residual(mu, xs, ctx, 0, 1)
    with pytest.raises(ValueError):
        G_determinant(Partition.of(1), (QQ(3), QQ(3)), _ctx(2))


def test_vanishing_at_partition_points():
    ctx = EvalContext(2)
    lam = Partition.of(2, 2)
    value = G_tableau(lam, y_lambda_point(lam, ctx), ctx)
    assert equal(value, 12 / ((1 + 3 * BETA) ** 2 * (1 + 4 * BETA) ** 2))
    for mu in subpartitions(Partition.of(3, 3)):
        assert vanishing_check(mu, Partition.of(2, 1), ctx)


def test_pieri_and_one_plus_beta_G1():
    xs = (QQ(3), QQ(7))
    ctx = _ctx(2)
    assert one_plus_beta_G1_check(xs, ctx)
    for mu in (Partition(), Partition.of(1), Partition.of(2, 1)):
        assert not pieri_residual(mu, xs, ctx)
        assert not pieri_rewritten_residual(mu, xs, ctx)
        for lam in subpartitions(Partition.of(3, 3)):
            assert not pieri_at_lambda_residual(mu, lam, ctx)
            assert one_at_lambda_check(lam, ctx)


def test_rescaling_to_beta_minus_one():
    xs = (QQ(3), QQ(7))
    for beta in (QQ(2), QQ(-1, 3)):
        assert not rescaling_residual(Partition.of(2, 1), xs, _ctx(2, beta))


def test_grassmannian_permutation_gives_the_same_polynomial():
    assert grassmannian_check(Partition.of(2, 1), (QQ(3), QQ(7)), _ctx(2))


def test_1432_at_y_zero():
    w = parse_permutation("1432")
    R, b, x1, x2, x3, x4 = ring("beta,x1,x2,x3,x4", ZZ)
    got = double_grothendieck_vexillary(w, [x1, x2, x3, x4], [R.zero] * 4, b)
    expected = (x1**2*x2 + x2**2*x1 + x1**2*x3 + x1*x2*x3 + x2**2*x3
                + b*x1**2*x2**2 + 2*b*x1**2*x2*x3 + 2*b*x2**2*x1*x3 + b**2*x1**2*x2**2*x3)
    assert got == expected


def test_principal_specializations():
    assert principal_specialization(parse_permutation("1432")) == 5 + 5 * BETA_POLY + BETA_POLY**2
    assert principal_specialization(parse_permutation("1432"), 1) == 11
    assert gamma_wnk_value(5, 2) == 13777
    assert gamma_wnk_check(3, 1)
    assert principal_specialization(w_nk(3, 1), 1) == 11


def test_gamma_bounded_by_weighted_determinant():
    for w in (parse_permutation("1432"), w_nk(3, 2), w_nk(4, 1)):
        assert gamma_det_bound(w).holds


def test_non_vexillary_is_rejected():
    with pytest.raises(HooklabError):
        principal_specialization(parse_permutation("2143"))


if __name__ == "__main__":
    test_single_box()
    test_tableau_sum_equals_bialternant()
    test_vanishing_at_partition_points()
    test_pieri_and_one_plus_beta_G1()
    test_rescaling_to_beta_minus_one()
    test_grassmannian_permutation_gives_the_same_polynomial()
    test_1432_at_y_zero()
    test_principal_specializations()
    test_gamma_bounded_by_weighted_determinant()
    test_non_vexillary_is_rejected()
    print("grothendieck: ok")
