"""
Factorial and double Grothendieck polynomials.

Values are evaluated, never expanded symbolically: every function takes its
x values and an EvalContext (d, beta, and a rule for y_i) and returns an
exact scalar.  Scalars may be QQ rationals, elements of a rational function
field, or elements of a polynomial ring, as long as they support + - * and
the operations used on them.

Set-valued tableaux use the content c(u) = j - i, so entry r in cell u pairs
x_r with y_{r+c(u)}.
"""

from dataclasses import dataclass, replace
from functools import lru_cache
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import QQ, ZZ
from sympy.polys.rings import ring

import diagrams as dg
from errors import HooklabError, ShapeError
from exact_arith import BETA, det, divide, equal, product, total
from paths import eta_matrix, schroeder
from permutations import (Permutation, grassmannian_perm, is_grassmannian, mu_of, w_nk,
                          supershape_of)
from shapes import Partition, SkewShape, upper_covers_rc
from tableaux import SetValuedTableau, enum_SSVT

BETA_RING, BETA_POLY = ring("beta", ZZ)

Y_RULES = ("identity", "zero", "qpower")


@dataclass(frozen=True)
class EvalContext:
    """
    Where a polynomial is evaluated: the number of x variables d, the value of
    beta, and the y values.

    ys, when given, lists y_1, y_2, ... explicitly.  Otherwise `rule` picks
    y_i = i, y_i = 0 or y_i = q**i.
    """
    d: int
    beta: object = BETA
    ys: Optional[Tuple] = None
    rule: str = "identity"
    q: object = None

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"d must be positive, got {self.d}")
        if self.ys is None and self.rule not in Y_RULES:
            raise ValueError(f"Unknown y rule {self.rule!r}; expected one of {Y_RULES}")
        if self.ys is None and self.rule == "qpower" and self.q is None:
            raise ValueError("The qpower rule needs q")

    def y(self, i: int):
        if i < 1:
            raise ValueError(f"y_{i} is undefined")
        if self.ys is not None:
            if i > len(self.ys):
                raise ValueError(f"y_{i} requested but only {len(self.ys)} values given")
            return self.ys[i - 1]
        if self.rule == "identity":
            return QQ(i)
        if self.rule == "zero":
            return QQ(0)
        return self.q ** i

    def y_values(self, n: int) -> Tuple:
        return tuple(self.y(i) for i in range(1, n + 1))

    def with_beta(self, beta) -> "EvalContext":
        return replace(self, beta=beta)

    def with_ys(self, ys: Sequence) -> "EvalContext":
        return replace(self, ys=tuple(ys))

    @property
    def one(self):
        return self.beta ** 0

    @property
    def zero(self):
        return self.beta * 0


def oplus(a, b, beta):
    return a + b + beta * a * b


def ominus(a, b, beta):
    return divide(a - b, 1 + beta * b)


def bracket(x, ys: Sequence, k: int, beta):
    """[x|y]^k = (x ⊕ y_1) ... (x ⊕ y_k)."""
    if k > len(ys):
        raise ValueError(f"[x|y]^{k} needs {k} y values, got {len(ys)}")
    return product((oplus(x, ys[i], beta) for i in range(k)), beta ** 0)


def _check_length(mu: Partition, d: int):
    if len(mu) > d:
        raise ShapeError(f"{mu} has more than d = {d} parts")


@lru_cache(maxsize=None)
def _ssvt(mu: Partition, d: int) -> Tuple[SetValuedTableau, ...]:
    return tuple(enum_SSVT(SkewShape.straight(mu), d))


def G_tableau(mu: Partition, xs: Sequence, ctx: EvalContext):
    """G_mu(x|y) as the sum over set-valued tableaux with entries in [d]."""
    _check_length(mu, ctx.d)
    if len(xs) != ctx.d:
        raise ValueError(f"Expected {ctx.d} x values, got {len(xs)}")
    beta = ctx.beta
    out = ctx.zero
    for T in _ssvt(mu, ctx.d):
        term = beta ** (T.ne - mu.size())
        for c, entries in T.entries:
            for r in entries:
                term = term * oplus(xs[r - 1], ctx.y(r + c.content), beta)
        out = out + term
    return out


def _vandermonde(xs: Sequence):
    return product((xs[i] - xs[j] for i in range(len(xs)) for j in range(i + 1, len(xs))),
                   xs[0] ** 0 if xs else QQ(1))


def G_determinant(mu: Partition, xs: Sequence, ctx: EvalContext):
    """G_mu(x|y) as det[[x_i|y]^{mu_j+d-j} (1+beta x_i)^{j-1}] over the Vandermonde."""
    d = ctx.d
    _check_length(mu, d)
    if len(xs) != d:
        raise ValueError(f"Expected {d} x values, got {len(xs)}")
    V = _vandermonde(xs)
    if not V:
        raise ValueError("x values repeat, so the bialternant is undefined; use G_tableau")
    ys = ctx.y_values(mu.part(1) + d)
    beta = ctx.beta
    rows = [[bracket(x, ys, mu.part(j) + d - j, beta) * (1 + beta * x) ** (j - 1)
             for j in range(1, d + 1)] for x in xs]
    return det(rows) / V


def factorial_schur(mu: Partition, xs: Sequence, ys: Sequence):
    """s_mu(x|y) = det[(x_i - y_1) ... (x_i - y_{mu_j+d-j})] over the Vandermonde."""
    d = len(xs)
    _check_length(mu, d)
    V = _vandermonde(xs)
    if not V:
        raise ValueError("x values repeat")
    rows = [[product((x - ys[l] for l in range(mu.part(j) + d - j)), x ** 0)
             for j in range(1, d + 1)] for x in xs]
    return det(rows) / V


def y_lambda_point(lam: Partition, ctx: EvalContext) -> Tuple:
    """The vanishing point (⊖y_{lam_1+d}, ..., ⊖y_{lam_d+1})."""
    d = ctx.d
    _check_length(lam, d)
    return tuple(ominus(ctx.zero, ctx.y(lam.part(i) + d - i + 1), ctx.beta)
                 for i in range(1, d + 1))


def vanishing_value(lam: Partition, ctx: EvalContext):
    """Π over cells of lam of y_{d+j-lam'_j} ⊖ y_{lam_i+d-i+1}."""
    d = ctx.d
    conj = lam.conjugate
    return product((ominus(ctx.y(d + j - conj.part(j)), ctx.y(lam.part(i) + d - i + 1), ctx.beta)
                    for i, j in lam.cells()), ctx.one)


def vanishing_check(mu: Partition, lam: Partition, ctx: EvalContext) -> bool:
    """G_mu at the point of lam is zero unless mu ⊆ lam, and the hook product when mu = lam."""
    value = G_tableau(mu, y_lambda_point(lam, ctx), ctx)
    if not lam.contains(mu):
        return not value
    if mu == lam:
        return equal(value, vanishing_value(lam, ctx))
    return True


def wt(lam: Partition, mu: Partition, ctx: EvalContext):
    d, beta = ctx.d, ctx.beta
    _check_length(lam, d)
    _check_length(mu, d)
    return product((divide(1 + beta * ctx.y(mu.part(i) + d - i + 1),
                           1 + beta * ctx.y(lam.part(i) + d - i + 1))
                    for i in range(1, d + 1)), ctx.one)


def one_plus_beta_G1(xs: Sequence, ctx: EvalContext):
    return 1 + ctx.beta * G_tableau(Partition.of(1), xs, ctx)


def one_plus_beta_G1_check(xs: Sequence, ctx: EvalContext) -> bool:
    beta = ctx.beta
    rhs = product((1 + beta * x for x in xs), ctx.one) * \
        product((1 + beta * ctx.y(i) for i in range(1, ctx.d + 1)), ctx.one)
    return equal(one_plus_beta_G1(xs, ctx), rhs)


def one_at_lambda_check(lam: Partition, ctx: EvalContext) -> bool:
    """1 + beta G_1 at the point of lam is Π (1+beta y_i)/(1+beta y_{lam_i+d-i+1})."""
    d, beta = ctx.d, ctx.beta
    rhs = product((divide(1 + beta * ctx.y(i), 1 + beta * ctx.y(lam.part(i) + d - i + 1))
                   for i in range(1, d + 1)), ctx.one)
    return equal(one_plus_beta_G1(y_lambda_point(lam, ctx), ctx), rhs)


def covers_within(mu: Partition, d: int) -> List[Partition]:
    """All nu ↦ mu with at most d rows."""
    box = Partition((mu.part(1) + 1,) * d)
    return list(upper_covers_rc(mu, box))


def pieri_residual(mu: Partition, xs: Sequence, ctx: EvalContext):
    """LHS minus RHS of the Pieri rule, the sum running over nu ↦ mu and nu = mu."""
    beta = ctx.beta
    lhs = G_tableau(mu, xs, ctx) * one_plus_beta_G1(xs, ctx)
    nus = total((beta ** (nu.size() - mu.size()) * G_tableau(nu, xs, ctx)
                 for nu in covers_within(mu, ctx.d)), ctx.zero)
    rhs = one_plus_beta_G1(y_lambda_point(mu, ctx), ctx) * (G_tableau(mu, xs, ctx) + nus)
    return lhs - rhs


def pieri_rewritten_residual(mu: Partition, xs: Sequence, ctx: EvalContext):
    """The Pieri rule solved for G_mu, with the sum over nu ↦ mu only."""
    beta = ctx.beta
    G1_mu = G_tableau(Partition.of(1), y_lambda_point(mu, ctx), ctx)
    G1_x = G_tableau(Partition.of(1), xs, ctx)
    lhs = G_tableau(mu, xs, ctx) * divide(G1_x - G1_mu, 1 + beta * G1_mu)
    rhs = total((beta ** (nu.size() - mu.size() - 1) * G_tableau(nu, xs, ctx)
                 for nu in covers_within(mu, ctx.d)), ctx.zero)
    return lhs - rhs


def pieri_at_lambda_residual(mu: Partition, lam: Partition, ctx: EvalContext):
    """G_mu(y_lam)(wt(lam/mu) - 1) minus Σ_{nu ↦ mu} beta^{|nu/mu|} G_nu(y_lam)."""
    beta = ctx.beta
    point = y_lambda_point(lam, ctx)
    lhs = G_tableau(mu, point, ctx) * (wt(lam, mu, ctx) - 1)
    rhs = total((beta ** (nu.size() - mu.size()) * G_tableau(nu, point, ctx)
                 for nu in covers_within(mu, ctx.d)), ctx.zero)
    return lhs - rhs


def rescaling_residual(mu: Partition, xs: Sequence, ctx: EvalContext):
    """G at beta = -1 minus (-beta)^{|mu|} G(-x/beta | -y/beta) at beta."""
    beta = ctx.beta
    if not beta:
        raise ValueError("Rescaling needs beta != 0")
    n = mu.part(1) + ctx.d
    ys = ctx.y_values(n)
    at_minus_one = G_tableau(mu, xs, EvalContext(ctx.d, -ctx.one, ys))
    scaled = EvalContext(ctx.d, beta, tuple(divide(-y, beta) for y in ys))
    rescaled = G_tableau(mu, [divide(-x, beta) for x in xs], scaled)
    return at_minus_one - (-beta) ** mu.size() * rescaled


def symmetry_residual(mu: Partition, xs: Sequence, ctx: EvalContext, i: int, j: int):
    swapped = list(xs)
    swapped[i], swapped[j] = swapped[j], swapped[i]
    return G_tableau(mu, xs, ctx) - G_tableau(mu, swapped, ctx)


@dataclass(frozen=True)
class VexillaryData:
    perm: Permutation
    mu: Partition
    supershape: Partition

    @property
    def shape(self) -> SkewShape:
        return SkewShape(self.supershape, self.mu)


@lru_cache(maxsize=None)
def vexillary_data(w: Permutation) -> VexillaryData:
    return VexillaryData(w, mu_of(w), supershape_of(w))


def _cell_factor(xs: Sequence, ys: Sequence, beta, i: int, j: int):
    if i > len(xs) or j > len(ys):
        raise ValueError(f"Cell ({i},{j}) needs x_{i} and y_{j}")
    return oplus(xs[i - 1], ys[j - 1], beta)


def kmy_generalized_form(w: Permutation, xs: Sequence, ys: Sequence, beta):
    """Σ over generalized excited diagrams D of beta^{|D|-|mu|} Π_{(i,j) in D} (x_i ⊕ y_j)."""
    data = vexillary_data(w)
    out = beta * 0
    for D in sorted(dg.generalized_excited_diagrams(data.shape)):
        term = beta ** (len(D) - data.mu.size())
        for i, j in D.sorted_cells():
            term = term * _cell_factor(xs, ys, beta, i, j)
        out = out + term
    return out


def kmy_peak_form(w: Permutation, xs: Sequence, ys: Sequence, beta):
    """The same sum over excited diagrams, each peak (i,j) contributing 1 + beta (x_i ⊕ y_j)."""
    data = vexillary_data(w)
    out = beta * 0
    for D, peaks in sorted(dg.excited_peaks(data.shape).items()):
        term = beta ** (len(D) - data.mu.size())
        for i, j in D.sorted_cells():
            term = term * _cell_factor(xs, ys, beta, i, j)
        for i, j in sorted(peaks):
            term = term * (1 + beta * _cell_factor(xs, ys, beta, i, j))
        out = out + term
    return out


def double_grothendieck_vexillary(w: Permutation, xs: Sequence, ys: Sequence, beta):
    """The double Grothendieck polynomial of a vexillary w, evaluated at (x, y)."""
    value = kmy_generalized_form(w, xs, ys, beta)
    peak_value = kmy_peak_form(w, xs, ys, beta)
    if not equal(value, peak_value):
        raise HooklabError(f"Excited and generalized excited forms disagree for {w}",
                           {"generalized": str(value), "peaks": str(peak_value)})
    return value


def grassmannian_check(mu: Partition, xs: Sequence, ctx: EvalContext) -> bool:
    """G_mu(x|y) equals the double Grothendieck polynomial of its Grassmannian permutation."""
    w = grassmannian_perm(mu, ctx.d)
    if not is_grassmannian(w):
        raise HooklabError(f"{w} should have a single descent")
    ys = ctx.y_values(len(w) + 1)
    kmy = double_grothendieck_vexillary(w, xs, ys, ctx.beta)
    return equal(G_tableau(mu, xs, ctx), kmy)


def principal_specialization(w: Permutation, beta=BETA_POLY):
    """Gamma_w(beta) = G_w(1, 0), checked against its excited-peak form."""
    data = vexillary_data(w)
    general = total((beta ** (len(D) - data.mu.size())
                     for D in dg.generalized_excited_diagrams(data.shape)), beta * 0)
    peaks = total((beta ** (len(D) - data.mu.size()) * (1 + beta) ** len(p)
                   for D, p in dg.excited_peaks(data.shape).items()), beta * 0)
    if not equal(general, peaks):
        raise HooklabError(f"Principal specialization forms disagree for {w}",
                           {"generalized": str(general), "peaks": str(peaks)})
    return general


def _coefficients(p) -> Dict[int, int]:
    return {m[0]: int(c) for m, c in p.items()}


@dataclass(frozen=True)
class GammaBound:
    perm: Permutation
    gamma: object
    bound: object

    @property
    def holds(self) -> bool:
        diff = _coefficients(self.bound - self.gamma)
        return all(c >= 0 for c in diff.values())


def gamma_det_bound(w: Permutation) -> GammaBound:
    """Gamma_w(beta) against det[eta_beta(A_i, B_j)], both in ZZ[beta]."""
    data = vexillary_data(w)
    gamma = principal_specialization(w, BETA_POLY)
    matrix = eta_matrix(data.shape, BETA_POLY)
    bound = det(matrix) if matrix else BETA_RING.one
    return GammaBound(w, gamma, BETA_RING(bound))


def gamma_wnk_value(n: int, k: int) -> int:
    return int(principal_specialization(w_nk(n, k), 1))


def schroeder_det_formula(n: int, k: int):
    s_det = det([[schroeder(n - 2 + i + j) for j in range(1, k + 1)] for i in range(1, k + 1)])
    return QQ(int(s_det), 2 ** comb(k, 2))


def gamma_wnk_check(n: int, k: int) -> bool:
    return QQ(gamma_wnk_value(n, k)) == schroeder_det_formula(n, k)
