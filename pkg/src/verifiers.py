"""
Identity verifiers.

Every verifier takes a target (a skew shape, a permutation or an (n, k) size
pair) and a VerifyOptions, computes the two sides of one identity by separate
code paths, and returns a VerificationReport.  The tableau side goes through
`tableaux` and `grothendieck.wt`; the product side goes through hooks and
diagrams.  Only `shapes` and `exact_arith` are shared.

Verifiers register themselves in REGISTRY with the modes they support and a
sweep generator used by `hooklab sweep`.
"""

import itertools
import time
from dataclasses import dataclass, field, replace
from functools import lru_cache
from math import comb, factorial
from typing import Dict, Iterable, List, Optional, Tuple

from sympy import QQ

import diagrams as dg
from errors import HooklabError, PoleError, ResampleExhausted, ShapeError, UnsupportedMode
from exact_arith import (BETA, DEFAULT_BOUND, DEFAULT_RESAMPLE_BUDGET, DEFAULT_TRIALS, Q,
                         Q_FIELD, PointSampler, TruncSeries, det, divide, equal, format_value,
                         laurent_coefficient, limit_at_infinity, product, schwartz_zippel_bound,
                         series_at_zero, total)
from grothendieck import (EvalContext, G_determinant, G_tableau, double_grothendieck_vexillary,
                          factorial_schur, gamma_det_bound, gamma_wnk_value, grassmannian_check,
                          one_at_lambda_check, one_plus_beta_G1_check, pieri_at_lambda_residual,
                          pieri_residual, pieri_rewritten_residual, principal_specialization,
                          rescaling_residual, schroeder_det_formula, symmetry_residual,
                          vanishing_check, vexillary_data, wt, y_lambda_point, ominus)
from log import debug
from paths import (X, delannoy_count, det_bound, dyck_polynomial, eta_matrix, from_paths,
                   labeled_paths_bijection, nested_dyck_polynomial, schroeder, thick_zigzag,
                   to_paths, valid_path_families)
from permutations import (Permutation, is_grassmannian, is_vexillary, parse_permutation,
                          random_vexillary)
from registry import IdentityRegistry
from shapes import (Partition, SkewShape, b_stat, hook, hooks, parse_skew,
                    partitions_upto, s_stat, skew_shapes_upto, subpartitions, upper_covers_rc)
from tableaux import (SetValuedTableau, TableauStats, enum_BSYT_k, enum_SIT, enum_SSVT,
                      enum_SSYT_maxentry, enum_SYT, enum_weight_bounded, stats, weight_counts)

MODES = ("exact-beta", "exact-q", "random-multivariate", "truncated-series",
         "numeric-truncated", "exact-count")

DEFAULT_TRUNCATION = 20
DEFAULT_M = 200
DEFAULT_TOL = QQ(1, 10 ** 6)
DEFAULT_Q = QQ(1, 2)
DEFAULT_BETA = QQ(1)

REGISTRY = IdentityRegistry()


@dataclass(frozen=True)
class VerifyOptions:
    """Per-run knobs shared by all verifiers; None means the verifier's default."""
    d: Optional[int] = None
    mode: Optional[str] = None
    trials: int = DEFAULT_TRIALS
    seed: int = 0
    bound: int = DEFAULT_BOUND
    budget: int = DEFAULT_RESAMPLE_BUDGET
    truncation: int = DEFAULT_TRUNCATION
    M: int = DEFAULT_M
    tol: object = DEFAULT_TOL
    beta: object = None
    q: object = None
    timing: bool = False


@dataclass(frozen=True)
class VerificationReport:
    identity_id: str
    shape: str
    d: Optional[int]
    mode: str
    passed: bool
    lhs: str = ""
    rhs: str = ""
    trials: Optional[int] = None
    seed: Optional[int] = None
    truncation: Optional[int] = None
    error_bound: Optional[str] = None
    runtime: Optional[float] = None
    detail: Dict = field(default_factory=dict, compare=False)

    def sort_key(self) -> Tuple:
        return (self.identity_id, self.shape, -1 if self.d is None else self.d)

    def to_dict(self) -> Dict:
        out = {
            "identity": self.identity_id,
            "shape": self.shape,
            "d": self.d,
            "mode": self.mode,
            "pass": self.passed,
            "lhs": self.lhs,
            "rhs": self.rhs,
        }
        for key in ("trials", "seed", "truncation", "error_bound", "runtime"):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        if self.detail:
            out["detail"] = self.detail
        return out


def describe_target(target) -> str:
    if isinstance(target, tuple):
        n, k = target
        return f"n={n},k={k}"
    return str(target)


def parse_target(kind: str, text: str):
    """Turn a --shape / --perm / --size argument into a verifier target."""
    if kind == "straight":
        sh = parse_skew(text)
        if not sh.is_straight():
            raise ShapeError(f"This identity takes a straight shape, got {sh}")
        return sh
    if kind == "skew":
        return parse_skew(text)
    if kind == "perm":
        return parse_permutation(text)
    if kind == "size":
        try:
            parts = tuple(int(v) for v in text.split(","))
        except ValueError:
            raise ShapeError(f"Bad size syntax {text!r}; expected n or n,k") from None
        if len(parts) == 1:
            parts = parts + (1,)
        if len(parts) != 2 or min(parts) < 1:
            raise ShapeError(f"Bad size {text!r}; expected positive n,k")
        return parts
    raise ValueError(f"Unknown target kind {kind!r}")


def run_identity(identity_id: str, target, opts: VerifyOptions) -> VerificationReport:
    """Run one registered verifier, checking the mode and timing it when asked."""
    spec = REGISTRY.get_identity(identity_id)
    mode = opts.mode or spec.default_mode
    if mode not in spec.modes:
        raise UnsupportedMode(f"{identity_id} does not support mode {mode!r}",
                              {"modes": list(spec.modes)})
    opts = replace(opts, mode=mode)
    start = time.perf_counter()
    try:
        report = spec.verifier(target, opts)
    except ResampleExhausted as e:
        report = VerificationReport(identity_id, describe_target(target), opts.d, mode, False,
                                    seed=opts.seed, detail={"error": str(e)})
    elapsed = time.perf_counter() - start
    debug(f"{identity_id} {describe_target(target)}: {'pass' if report.passed else 'FAIL'}"
          f" ({elapsed:.3f}s)")
    if opts.timing:
        report = replace(report, runtime=round(elapsed, 6))
    return report


def sweep_targets(identity_id: str, max_size: int) -> List[Tuple[object, Optional[int]]]:
    spec = REGISTRY.get_identity(identity_id)
    if spec.sweep is None:
        return []
    return list(spec.sweep(max_size))


# shared plumbing

def _resolve_d(sh: SkewShape, opts: VerifyOptions) -> int:
    d = opts.d if opts.d is not None else max(len(sh.outer), 1)
    if len(sh.outer) > d:
        raise ShapeError(f"{sh.outer} has more than d = {d} parts", {"d": d})
    return d


def _row(lam: Partition, i: int, d: int) -> int:
    """Index lam_i + d - i + 1."""
    return lam.part(i) + d - i + 1


def _col(lam: Partition, j: int, d: int) -> int:
    """Index d + j - lam'_j."""
    return d + j - lam.conjugate.part(j)


def _report(identity_id: str, target, d, opts: VerifyOptions, passed: bool, lhs, rhs,
            **extra) -> VerificationReport:
    return VerificationReport(identity_id, describe_target(target), d, opts.mode, bool(passed),
                              lhs if isinstance(lhs, str) else format_value(lhs),
                              rhs if isinstance(rhs, str) else format_value(rhs), **extra)


def _hook_product(lam: Partition) -> int:
    return product(hooks(lam), 1)


def _sampler(opts: VerifyOptions) -> PointSampler:
    return PointSampler(opts.seed, opts.bound, opts.budget)


def _error_bound(degree: int, opts: VerifyOptions) -> str:
    return format_value(schwartz_zippel_bound(degree, opts.bound, opts.trials))


def _sit_degree(sh: SkewShape, d: int) -> int:
    """Degree estimate for SIT-sum identities after clearing denominators."""
    chains = sum(1 for nu in subpartitions(sh.outer) if nu.contains(sh.inner))
    return (d + 1) * chains + 2 * sh.size()


def _groth_degree(lam: Partition, d: int) -> int:
    return 2 * d * (lam.size() + 1) * (d + 1)


@lru_cache(maxsize=None)
def _sit_stats(sh: SkewShape) -> Tuple[TableauStats, ...]:
    return tuple(stats(T) for T in enum_SIT(sh))


@lru_cache(maxsize=None)
def _generalized(sh: SkewShape) -> Tuple[dg.Diagram, ...]:
    return tuple(sorted(dg.generalized_excited_diagrams(sh)))


@lru_cache(maxsize=None)
def _peaks(sh: SkewShape) -> Tuple[Tuple[dg.Diagram, frozenset], ...]:
    return tuple(sorted(dg.excited_peaks(sh).items()))


# tableau side

def sit_terms(sh: SkewShape, ctx: EvalContext) -> List:
    """Π_{k=1}^{m(T)} 1/(wt(λ/ν(T_{<k})) − 1) for each SIT T, in enumeration order."""
    lam = sh.outer
    gaps = {}
    out = []
    for st in _sit_stats(sh):
        term = ctx.one
        for k in range(1, st.m + 1):
            nu = st.nu_le(k - 1)
            if nu not in gaps:
                gaps[nu] = wt(lam, nu, ctx) - 1
            term = divide(term, gaps[nu])
        out.append(term)
    return out


def sit_sum(sh: SkewShape, ctx: EvalContext):
    return total(sit_terms(sh, ctx), ctx.zero)


def sit_q_sum(sh: SkewShape, q):
    """Σ_T q^{|T|} Π_k 1/(1 − q^{a(T_{≥k})}) over SIT of sh."""
    out = q * 0
    for st in _sit_stats(sh):
        term = q ** st.weight
        for k in range(1, st.m + 1):
            term = divide(term, 1 - q ** st.a_ge(k))
        out = out + term
    return out


def _series(tableaux, N: int) -> TruncSeries:
    return TruncSeries.from_counts(weight_counts(tableaux), N, Q_FIELD.ring)


# product side

def khlf_closed_form(lam: Partition, d: int, beta):
    """(−β)^{−n} Π_i (1 + β(λ_i+d−i+1))^{λ_i} / Π h."""
    num = product(((1 + beta * _row(lam, i, d)) ** lam.part(i) for i in range(1, d + 1)),
                  beta ** 0)
    return divide(num, (-beta) ** lam.size() * _hook_product(lam))


def khlf_multivariate_form(lam: Partition, ctx: EvalContext):
    d, beta = ctx.d, ctx.beta
    num = product(((1 + beta * ctx.y(_row(lam, i, d))) ** lam.part(i) for i in range(1, d + 1)),
                  ctx.one)
    den = beta ** lam.size() * product((ctx.y(_col(lam, j, d)) - ctx.y(_row(lam, i, d))
                                        for i, j in lam.cells()), ctx.one)
    return divide(num, den)


def qkhlf_form(lam: Partition, d: int, beta, q):
    """q^{−Σ(d+j−λ'_j)} β^{−n} Π_i (1 + βq^{λ_i+d−i+1})^{λ_i} Π 1/(1 − q^h)."""
    num = product(((1 + beta * q ** _row(lam, i, d)) ** lam.part(i) for i in range(1, d + 1)),
                  beta ** 0 * q ** 0)
    shift = sum(_col(lam, j, d) for _, j in lam.cells())
    den = beta ** lam.size() * q ** shift * product((1 - q ** h for h in hooks(lam)), q ** 0)
    return divide(num, den)


def hook_q_product(lam: Partition, q, shift: int = 0):
    """q^shift Π 1/(1 − q^h)."""
    return divide(q ** shift, product((1 - q ** h for h in hooks(lam)), q ** 0))


def knhlf_form(sh: SkewShape, d: int, beta):
    """Σ_D (−β)^{|D|−|λ|} Π_{λ∖D} (β(λ_i+d−i+1) + 1)/h."""
    lam = sh.outer
    out = beta * 0
    for D in _generalized(sh):
        num = product((beta * _row(lam, i, d) + 1 for i, _ in D.complement()), beta ** 0)
        den = product((hook(lam, c) for c in D.complement()), 1)
        out = out + divide(num, (-beta) ** (lam.size() - len(D)) * den)
    return out


def knhlf_multivariate_form(sh: SkewShape, ctx: EvalContext):
    lam, d, beta = sh.outer, ctx.d, ctx.beta
    out = ctx.zero
    for D in _generalized(sh):
        term = divide(ctx.one, beta ** (lam.size() - len(D)))
        for i, j in D.complement():
            term = term * divide(beta * ctx.y(_row(lam, i, d)) + 1,
                                 ctx.y(_col(lam, j, d)) - ctx.y(_row(lam, i, d)))
        out = out + term
    return out


def qknhlf_form(sh: SkewShape, d: int, beta, q):
    lam = sh.outer
    out = beta * 0 * q
    for D in _generalized(sh):
        term = divide(beta ** 0 * q ** 0, beta ** (lam.size() - len(D)))
        for c in D.complement():
            term = term * divide(beta * q ** _row(lam, c.row, d) + 1,
                                 q ** _col(lam, c.col, d) * (1 - q ** hook(lam, c)))
        out = out + term
    return out


def skew_q_form(sh: SkewShape, q):
    """Σ_D Π_{λ∖D} q^h/(1 − q^h)."""
    lam = sh.outer
    return total((product((divide(q ** hook(lam, c), 1 - q ** hook(lam, c))
                           for c in D.complement()), q ** 0)
                  for D in _generalized(sh)), q * 0)


def skew_q_peaks_form(sh: SkewShape, q):
    """Σ_E Π_{π(D)} 1/(1 − q^h) Π_{λ∖(D ∪ π(D))} q^h/(1 − q^h)."""
    lam = sh.outer
    out = q * 0
    for D, peaks in _peaks(sh):
        term = product((divide(q ** 0, 1 - q ** hook(lam, c)) for c in peaks), q ** 0)
        term = term * product((divide(q ** hook(lam, c), 1 - q ** hook(lam, c))
                               for c in D.complement() if c not in peaks), q ** 0)
        out = out + term
    return out


def naruse_form(sh: SkewShape):
    """n! Σ_E Π_{λ∖D} 1/h."""
    lam = sh.outer
    s = total((QQ(1, product((hook(lam, c) for c in D.complement()), 1))
               for D, _ in _peaks(sh)), QQ(0))
    return factorial(sh.size()) * s


def qnaruse_form(sh: SkewShape, q):
    """q^{|λ/μ|} Σ_E Π_{λ∖D} q^{λ'_j − i}/(1 − q^h)."""
    lam = sh.outer
    conj = lam.conjugate
    s = total((product((divide(q ** (conj.part(c.col) - c.row), 1 - q ** hook(lam, c))
                        for c in D.complement()), q ** 0)
               for D, _ in _peaks(sh)), q * 0)
    return q ** sh.size() * s


def rpp_pleasant_form(sh: SkewShape, q):
    lam = sh.outer
    return total((product((divide(q ** hook(lam, c), 1 - q ** hook(lam, c)) for c in S), q ** 0)
                  for S in sorted(dg.pleasant_diagrams(sh), key=sorted)), q * 0)


def rpp_peaks_form(sh: SkewShape, q):
    lam = sh.outer
    out = q * 0
    for D, peaks in _peaks(sh):
        c = sum(hook(lam, p) for p in peaks)
        out = out + divide(q ** c, product((1 - q ** hook(lam, x) for x in D.complement()),
                                           q ** 0))
    return out


def oof_form(sh: SkewShape, d: int):
    """n! Σ_{T ∈ SSYT_d(μ)} Π_{(i,j) ∈ μ} (λ_{d+1−T(i,j)} + i − j) Π_λ 1/h."""
    lam, mu = sh.outer, sh.inner
    s = 0
    for T in enum_SSYT_maxentry(SkewShape.straight(mu), d):
        s += product((lam.part(d + 1 - r) + c.row - c.col for c, r in T.entries), 1)
    return QQ(factorial(sh.size()) * s, _hook_product(lam))


@lru_cache(maxsize=None)
def _set_valued(mu: Partition, d: int) -> Tuple[SetValuedTableau, ...]:
    return tuple(enum_SSVT(SkewShape.straight(mu), d))


def _signed_power(beta, e: int):
    """(−β)^e for any integer e."""
    return (-beta) ** e if e >= 0 else divide(beta ** 0, (-beta) ** -e)


def koof_form(sh: SkewShape, d: int, beta):
    lam, mu = sh.outer, sh.inner
    prefactor = product(((1 + beta * _row(lam, i, d)) ** lam.part(i) for i in range(1, d + 1)),
                        beta ** 0)
    s = beta * 0
    for T in _set_valued(mu, d):
        term = _signed_power(beta, T.ne - lam.size())
        for c, entries in T.entries:
            for r in entries:
                a = lam.part(d + 1 - r)
                term = term * divide(a + c.row - c.col, 1 + beta * (a + r))
        s = s + term
    return divide(prefactor * s, _hook_product(lam))


# sweeps

def _straight(max_size: int, spread: int = 0) -> List[Tuple[SkewShape, Optional[int]]]:
    out = []
    for lam in partitions_upto(max_size):
        ell = max(len(lam), 1)
        for d in range(ell, ell + spread + 1):
            out.append((SkewShape.straight(lam), d))
    return out


def _straight_sweep(cap: Optional[int] = None, spread: int = 0):
    return lambda n: _straight(n if cap is None else min(n, cap), spread)


def _skew_sweep(cap: Optional[int] = None, extra: int = 0):
    def sweep(n):
        n = n + extra if cap is None else min(n + extra, cap)
        return [(sh, None) for sh in skew_shapes_upto(n)]
    return sweep


# straight shapes

@REGISTRY.identity("hlf", "straight", ("exact-count",),
                   "f^λ = n!/Π h", _straight_sweep())
def verify_HLF(target: SkewShape, opts: VerifyOptions) -> VerificationReport:
    lam = target.outer
    lhs = QQ(len(enum_SYT(target)))
    rhs = QQ(factorial(lam.size()), _hook_product(lam))
    return _report("hlf", target, None, opts, lhs == rhs, lhs, rhs)


@REGISTRY.identity("qhlf", "straight", ("truncated-series",),
                   "Σ_SSYT q^|T| = q^{b(λ)+|λ|} Π 1/(1−q^h)", _straight_sweep())
def verify_qHLF(target: SkewShape, opts: VerifyOptions) -> VerificationReport:
    lam, N = target.outer, opts.truncation
    lhs = _series(enum_weight_bounded("SSYT", target, N), N)
    rhs = series_at_zero(hook_q_product(lam, Q, b_stat(lam) + lam.size()), N)
    return _report("qhlf", target, None, opts, lhs == rhs, lhs, rhs, truncation=N)


@REGISTRY.identity("it-rpp", "straight", ("truncated-series",),
                   "Σ_IT q^|T| = q^{s(λ)} Σ_RPP q^|π| = q^{s(λ)} Π 1/(1−q^h)",
                   _straight_sweep())
def verify_IT_RPP_identity(target: SkewShape, opts: VerifyOptions) -> VerificationReport:
    lam, N = target.outer, opts.truncation
    it = _series(enum_weight_bounded("IT", target, N), N)
    rpp = _series(enum_weight_bounded("RPP", target, N), N)
    rpp_form = series_at_zero(hook_q_product(lam, Q), N)
    it_form = series_at_zero(hook_q_product(lam, Q, s_stat(lam)), N)
    passed = it == it_form and rpp == rpp_form
    return _report("it-rpp", target, None, opts, passed, it, it_form, truncation=N,
                   detail={"rpp": str(rpp), "s": s_stat(lam)})


@REGISTRY.identity("khlf", "straight", ("exact-beta",),
                   "Σ_SIT Π 1/(wt − 1) = (−β)^{−n} Π(1+β(λ_i+d−i+1))^{λ_i} / Π h",
                   _straight_sweep(spread=2))
def verify_KHLF(target: SkewShape, opts: VerifyOptions) -> VerificationReport:
    lam = target.outer
    d = _resolve_d(target, opts)
    ctx = EvalContext(d, BETA)
    terms = sit_terms(target, ctx)
    lhs = total(terms, ctx.zero)
    rhs = khlf_closed_form(lam, d, BETA)
    return _report("khlf", target, d, opts, equal(lhs, rhs), lhs, rhs,
                   detail={"sit_count": len(terms)})


@REGISTRY.identity("qkhlf-cor", "straight", ("exact-q",),
                   "Σ_SIT q^|T| Π 1/(1−q^{a(T≥k)}) = q^{s(λ)} Π 1/(1−q^h)",
                   _straight_sweep())
def verify_qKHLF_cor(target: SkewShape, opts: VerifyOptions) -> VerificationReport:
    lam = target.outer
    lhs = sit_q_sum(target, Q)
    rhs = hook_q_product(lam, Q, s_stat(lam))
    return _report("qkhlf-cor", target, None, opts, equal(lhs, rhs), lhs, rhs)


@REGISTRY.identity("khlf-multi", "straight", ("random-multivariate",),
                   "multivariate K-HLF at random (β, y)", _straight_sweep())
def verify_KHLF_multivariate(target: SkewShape, opts: VerifyOptions) -> VerificationReport:
    lam = target.outer
    d = _resolve_d(target, opts)
    first = {}

    def check(point):
        ctx = EvalContext(d, point["beta"], point["y"])
        lhs, rhs = sit_sum(target, ctx), khlf_multivariate_form(lam, ctx)
        first.setdefault("lhs", lhs)
        first.setdefault("rhs", rhs)
        return equal(lhs, rhs)

    outcome = _sampler(opts).run({"beta": 1, "y": lam.part(1) + d}, opts.trials, check)
    return _report("khlf-multi", target, d, opts, outcome.passed, first.get("lhs", ""),
                   first.get("rhs", ""), trials=opts.trials, seed=opts.seed,
                   error_bound=_error_bound(_sit_degree(target, d), opts),
                   detail={"resamples": outcome.resamples, "failures": list(outcome.failures)})


def infinite_partial_sums(lam: Partition, d: int, beta, steps: Iterable[int]) -> Dict[int, object]:
    """
    Partial sums S_M of Σ_{IT T} Π_{k=1}^{m(T)} 1/wt(λ/ν(T_{<k})) at y_i = i, over m(T) <= M.

    Walks the chain ν(T_{≤k}) step by step: each step multiplies by 1/wt(λ/ν), then either
    stays (T_k empty) or moves to a larger ν; mass reaching λ is absorbed.
    """
    steps = sorted(set(steps))
    if not lam:
        return {M: QQ(1) for M in steps}
    ctx = EvalContext(d, beta)
    below = [nu for nu in subpartitions(lam) if nu != lam]
    ratio = {nu: divide(QQ(1), wt(lam, nu, ctx)) for nu in below}
    moves = {nu: [nu] + list(upper_covers_rc(nu, lam)) for nu in below}
    mass = {Partition(): QQ(1)}
    absorbed = QQ(0)
    out = {}
    for k in range(1, steps[-1] + 1):
        nxt: Dict[Partition, object] = {}
        for nu, w in mass.items():
            w = w * ratio[nu]
            for rho in moves[nu]:
                if rho == lam:
                    absorbed += w
                else:
                    nxt[rho] = nxt.get(rho, QQ(0)) + w
        mass = nxt
        if k in steps:
            out[k] = absorbed
    return out



def _infinite_beta(lam: Partition, d: int, opts: VerifyOptions):
    edge = QQ(-1, lam.part(1) + d)
    beta = opts.beta if opts.beta is not None else edge / 2
    if not (edge < beta < 0):
        raise UnsupportedMode(f"The infinite sum is only evaluated for β in ({edge}, 0), got {beta}",
                              {"beta": str(beta)})
    return beta


@REGISTRY.identity("khlf-infinite", "straight", ("numeric-truncated",),
                   "infinite K-HLF over increasing tableaux, β in (−1/(λ_1+d), 0)",
                   _straight_sweep(cap=4))
def verify_infinite_KHLF(target: SkewShape, opts: VerifyOptions) -> VerificationReport:
    lam = target.outer
    d = _resolve_d(target, opts)
    beta = _infinite_beta(lam, d, opts)
    M, tol = opts.M, opts.tol
    sums = infinite_partial_sums(lam, d, beta, (M, 2 * M))
    # each distinct step contributes r + r^2 + ... = 1/(wt − 1), so the finite closed form applies
    rhs = khlf_closed_form(lam, d, beta)
    tail = abs(sums[2 * M] - sums[M])
    gap = abs(sums[2 * M] - rhs)
    passed = tail < tol and gap < tol
    return _report("khlf-infinite", target, d, opts, passed,
                   str(QQ.to_sympy(sums[2 * M]).evalf(15)), rhs, truncation=M,
                   detail={"beta": str(beta), "tail": str(QQ.to_sympy(tail).evalf(6)),
                           "gap": str(QQ.to_sympy(gap).evalf(6)), "tol": str(tol)})


@REGISTRY.identity("qkhlf", "straight", ("exact-beta", "exact-q"),
                   "q-K-HLF at y_i = q^i, with its β → ∞ limit", _straight_sweep())
def verify_qKHLF(target: SkewShape, opts: VerifyOptions) -> VerificationReport:
    lam = target.outer
    d = _resolve_d(target, opts)
    if opts.mode == "exact-beta":
        beta, q = BETA, opts.q if opts.q is not None else DEFAULT_Q
    else:
        beta, q = (opts.beta if opts.beta is not None else DEFAULT_BETA), Q
    ctx = EvalContext(d, beta, rule="qpower", q=q)
    lhs = sit_sum(target, ctx)
    rhs = qkhlf_form(lam, d, beta, q)
    passed = equal(lhs, rhs)
    detail = {"q": str(q), "beta": str(beta)}
    if opts.mode == "exact-beta":
        limit = limit_at_infinity(lhs)
        expected = hook_q_product(lam, q, s_stat(lam))
        detail["limit"] = format_value(limit)
        passed = passed and limit == expected
    return _report("qkhlf", target, d, opts, passed, lhs, rhs, detail=detail)


def harmonic(n: int):
    return total((QQ(1, i) for i in range(1, n + 1)), QQ(0))


def _p2_shifted(nu: Partition, d: int) -> int:
    return sum((nu.part(i) + d - i) ** 2 for i in range(1, d + 1))


def bsyt_sides(lam: Partition, d: int) -> Tuple[object, object]:
    """Both sides of the β^{1−n} coefficient identity, as rationals."""
    n = lam.size()
    sh = SkewShape.straight(lam)
    left = QQ(0)
    for nu in subpartitions(lam):
        if nu == lam:
            continue
        f_nu = len(enum_SYT(SkewShape.straight(nu)))
        f_skew = len(enum_SYT(SkewShape(lam, nu)))
        left += QQ(f_nu * f_skew * _p2_shifted(nu, d), n - nu.size())
    left += 2 * sum((n - k) * len(enum_BSYT_k(sh, k)) for k in range(1, n))
    f = len(enum_SYT(sh))
    p2 = sum(p * p for p in lam)
    right = f * ((harmonic(n) - 1) * _p2_shifted(lam, d) + QQ(n * (n + 1), 2) - p2
                 + QQ((d - 1) * d * (2 * d - 1), 6))
    return left, right


@REGISTRY.identity("beta-coefficients", "straight", ("exact-beta",),
                   "β^{−n} and β^{1−n} coefficients of K-HLF (HLF and BSYT identity)",
                   _straight_sweep(cap=5))
def verify_beta_coefficients(target: SkewShape, opts: VerifyOptions) -> VerificationReport:
    lam = target.outer
    d = _resolve_d(target, opts)
    n = lam.size()
    scaled = (-BETA) ** n * sit_sum(target, EvalContext(d, BETA))
    c0 = laurent_coefficient(scaled, 0)
    hlf = QQ(1, _hook_product(lam))
    syt = QQ(len(enum_SYT(target)), factorial(n))
    c1 = laurent_coefficient(scaled, 1)
    c1_closed = QQ(sum(lam.part(i) * _row(lam, i, d) for i in range(1, d + 1)),
                   _hook_product(lam))
    left, right = bsyt_sides(lam, d)
    passed = c0 == hlf == syt and c1 == c1_closed and left == right
    return _report("beta-coefficients", target, d, opts, passed, c0, hlf,
                   detail={"c1": str(c1), "c1_closed": str(c1_closed),
                           "bsyt_left": str(left), "bsyt_right": str(right)})


@REGISTRY.identity("groth", "straight", ("random-multivariate",),
                   "G_μ: tableau = bialternant, symmetry, factorial Schur at β = 0, "
                   "vanishing, Pieri, rescaling, Grassmannian KMY",
                   _straight_sweep(cap=4))
def verify_G_properties(target: SkewShape, opts: VerifyOptions) -> VerificationReport:
    mu = target.outer
    d = _resolve_d(target, opts)
    box = Partition((mu.part(1) + 1,) * d)
    lambdas = [lam for lam in subpartitions(box) if lam.size() <= mu.size() + 1]
    failed: Dict[str, int] = {}
    first = {}

    def mark(name: str, ok: bool):
        if not ok:
            failed[name] = failed.get(name, 0) + 1
        return ok

    def check(point):
        beta, xs, ys = point["beta"], point["x"], point["y"]
        ctx = EvalContext(d, beta, ys)
        g, bialternant = G_tableau(mu, xs, ctx), G_determinant(mu, xs, ctx)
        first.setdefault("lhs", g)
        first.setdefault("rhs", bialternant)
        ok = mark("determinant", equal(g, bialternant))
        if d >= 2:
            ok &= mark("symmetry", not symmetry_residual(mu, xs, ctx, 0, 1))
        neg = EvalContext(d, QQ(0), tuple(-y for y in ys))
        ok &= mark("factorial-schur", equal(G_tableau(mu, xs, neg), factorial_schur(mu, xs, ys)))
        ok &= mark("one-plus-beta-G1", one_plus_beta_G1_check(xs, ctx))
        ok &= mark("pieri", not pieri_residual(mu, xs, ctx))
        ok &= mark("pieri-rewritten", not pieri_rewritten_residual(mu, xs, ctx))
        ok &= mark("rescaling", not rescaling_residual(mu, xs, ctx))
        for lam in lambdas:
            ok &= mark("vanishing", vanishing_check(mu, lam, ctx))
            ok &= mark("pieri-at-lambda", not pieri_at_lambda_residual(mu, lam, ctx))
            ok &= mark("one-at-lambda", one_at_lambda_check(lam, ctx))
        ok &= mark("grassmannian", grassmannian_check(mu, xs, ctx))
        return ok

    variables = {"beta": 1, "x": d, "y": mu.part(1) + d + 2}
    outcome = _sampler(opts).run(variables, opts.trials, check)
    return _report("groth", target, d, opts, outcome.passed, first.get("lhs", ""),
                   first.get("rhs", ""), trials=opts.trials, seed=opts.seed,
                   error_bound=_error_bound(_groth_degree(box, d), opts),
                   detail={"resamples": outcome.resamples, "failed": failed,
                           "points_at_lambda": len(lambdas)})


# skew shapes

@REGISTRY.identity("nhlf", "skew", ("exact-count",),
                   "f^{λ/μ} = n! Σ_E Π_{λ∖D} 1/h", _skew_sweep())
def verify_NHLF(target: SkewShape, opts: VerifyOptions) -> VerificationReport:
    lhs = QQ(len(enum_SYT(target)))
    rhs = naruse_form(target)
    return _report("nhlf", target, None, opts, lhs == rhs, lhs, rhs,
                   detail={"excited": len(_peaks(target))})


@REGISTRY.identity("qnhlf", "skew", ("truncated-series",),
                   "Σ_SSYT q^|T| = q^{|λ/μ|} Σ_E Π q^{λ'_j−i}/(1−q^h)", _skew_sweep())
def verify_qNHLF(target: SkewShape, opts: VerifyOptions) -> VerificationReport:
    N = opts.truncation
    lhs = _series(enum_weight_bounded("SSYT", target, N), N)
    rhs = series_at_zero(qnaruse_form(target, Q), N)
    return _report("qnhlf", target, None, opts, lhs == rhs, lhs, rhs, truncation=N)


@REGISTRY.identity("rpp", "skew", ("truncated-series",),
                   "RPP series by pleasant diagrams and by excited peaks; IT reciprocity",
                   _skew_sweep())
def verify_RPP_formulas(target: SkewShape, opts: VerifyOptions) -> VerificationReport:
    N = opts.truncation
    rpp = _series(enum_weight_bounded("RPP", target, N), N)
    pleasant = series_at_zero(rpp_pleasant_form(target, Q), N)
    peaks = series_at_zero(rpp_peaks_form(target, Q), N)
    it = _series(enum_weight_bounded("IT", target, N), N)
    reciprocal = (-1) ** target.size() * rpp_peaks_form(target, divide(Q ** 0, Q))
    reciprocal_series = series_at_zero(reciprocal, N)
    passed = rpp == pleasant == peaks and it == reciprocal_series
    return _report("rpp", target, None, opts, passed, rpp, peaks, truncation=N,
                   detail={"pleasant": str(pleasant), "it": str(it),
                           "it_offset": it.lowest_degree(),
                           "reciprocal": str(reciprocal_series)})


@REGISTRY.identity("knhlf", "skew", ("exact-beta",),
                   "skew K-NHLF at y_i = i in formal β", _skew_sweep(extra=1))
def verify_KNHLF(target: SkewShape, opts: VerifyOptions) -> VerificationReport:
    d = _resolve_d(target, opts)
    lhs = sit_sum(target, EvalContext(d, BETA))
    rhs = knhlf_form(target, d, BETA)
    return _report("knhlf", target, d, opts, equal(lhs, rhs), lhs, rhs,
                   detail={"generalized": len(_generalized(target))})


@REGISTRY.identity("skew-q", "skew", ("exact-q",),
                   "Σ_SIT q^|T| Π 1/(1−q^a) = Σ_D Π q^h/(1−q^h), also by excited peaks",
                   _skew_sweep(extra=1))
def verify_skew_q(target: SkewShape, opts: VerifyOptions) -> VerificationReport:
    lhs = sit_q_sum(target, Q)
    rhs = skew_q_form(target, Q)
    peaks = skew_q_peaks_form(target, Q)
    return _report("skew-q", target, None, opts, equal(lhs, rhs) and equal(rhs, peaks),
                   lhs, rhs, detail={"peaks_form": format_value(peaks)})


def chevalley_form(sh: SkewShape, ctx: EvalContext):
    """Σ_D β^{|D|−|μ|} Π_D (y_{d+j−λ'_j} ⊖ y_{λ_i+d−i+1})."""
    lam, d, beta = sh.outer, ctx.d, ctx.beta
    return total((beta ** (len(D) - sh.inner.size()) *
                  product((ominus(ctx.y(_col(lam, j, d)), ctx.y(_row(lam, i, d)), beta)
                           for i, j in D.sorted_cells()), ctx.one)
                  for D in _generalized(sh)), ctx.zero)


def chevalley_minus_one_form(sh: SkewShape, ctx: EvalContext):
    """Σ_D (−1)^{|D|−|μ|} Π_D (y_a − y_b)/(1 − y_b)."""
    lam, d = sh.outer, ctx.d
    out = QQ(0)
    for D in _generalized(sh):
        term = QQ((-1) ** (len(D) - sh.inner.size()))
        for i, j in D.sorted_cells():
            a, b = ctx.y(_col(lam, j, d)), ctx.y(_row(lam, i, d))
            term = term * divide(a - b, 1 - b)
        out = out + term
    return out


@REGISTRY.identity("skew-chevalley", "skew", ("random-multivariate",),
                   "G_μ at the vanishing point of λ as a sum over generalized excited diagrams",
                   _skew_sweep())
def verify_skew_chevalley(target: SkewShape, opts: VerifyOptions) -> VerificationReport:
    lam, mu = target.outer, target.inner
    d = _resolve_d(target, opts)
    first = {}

    def check(point):
        ctx = EvalContext(d, point["beta"], point["y"])
        lhs = G_tableau(mu, y_lambda_point(lam, ctx), ctx)
        rhs = chevalley_form(target, ctx)
        first.setdefault("lhs", lhs)
        first.setdefault("rhs", rhs)
        return equal(lhs, rhs)

    def check_minus_one(point):
        ctx = EvalContext(d, QQ(-1), point["y"])
        return equal(G_tableau(mu, y_lambda_point(lam, ctx), ctx),
                     chevalley_minus_one_form(target, ctx))

    variables = {"beta": 1, "y": lam.part(1) + d}
    sampler = _sampler(opts)
    outcome = sampler.run(variables, opts.trials, check)
    at_minus_one = sampler.run({"y": lam.part(1) + d}, opts.trials, check_minus_one)
    return _report("skew-chevalley", target, d, opts, outcome.passed and at_minus_one.passed,
                   first.get("lhs", ""), first.get("rhs", ""), trials=opts.trials, seed=opts.seed,
                   error_bound=_error_bound(_groth_degree(lam, d), opts),
                   detail={"resamples": outcome.resamples + at_minus_one.resamples,
                           "beta_minus_one": at_minus_one.passed})


@REGISTRY.identity("knhlf-multi", "skew", ("random-multivariate",),
                   "multivariate skew K-NHLF at random (β, y)", _skew_sweep())
def verify_KNHLF_multivariate(target: SkewShape, opts: VerifyOptions) -> VerificationReport:
    d = _resolve_d(target, opts)
    first = {}

    def check(point):
        ctx = EvalContext(d, point["beta"], point["y"])
        lhs, rhs = sit_sum(target, ctx), knhlf_multivariate_form(target, ctx)
        first.setdefault("lhs", lhs)
        first.setdefault("rhs", rhs)
        return equal(lhs, rhs)

    outcome = _sampler(opts).run({"beta": 1, "y": target.outer.part(1) + d}, opts.trials, check)
    return _report("knhlf-multi", target, d, opts, outcome.passed, first.get("lhs", ""),
                   first.get("rhs", ""), trials=opts.trials, seed=opts.seed,
                   error_bound=_error_bound(_sit_degree(target, d), opts),
                   detail={"resamples": outcome.resamples})


@REGISTRY.identity("qknhlf", "skew", ("exact-beta", "exact-q"),
                   "skew q-K-NHLF at y_i = q^i, with its β → ∞ limit", _skew_sweep())
def verify_qKNHLF(target: SkewShape, opts: VerifyOptions) -> VerificationReport:
    d = _resolve_d(target, opts)
    if opts.mode == "exact-beta":
        beta, q = BETA, opts.q if opts.q is not None else DEFAULT_Q
    else:
        beta, q = (opts.beta if opts.beta is not None else DEFAULT_BETA), Q
    lhs = sit_sum(target, EvalContext(d, beta, rule="qpower", q=q))
    rhs = qknhlf_form(target, d, beta, q)
    passed = equal(lhs, rhs)
    detail = {"q": str(q), "beta": str(beta)}
    if opts.mode == "exact-beta":
        limit = limit_at_infinity(lhs)
        detail["limit"] = format_value(limit)
        passed = passed and limit == skew_q_form(target, q)
    return _report("qknhlf", target, d, opts, passed, lhs, rhs, detail=detail)


@REGISTRY.identity("oof", "skew", ("exact-count",),
                   "f^{λ/μ} by the Okounkov–Olshanski sum over SSYT_d(μ)", _skew_sweep())
def verify_OOF(target: SkewShape, opts: VerifyOptions) -> VerificationReport:
    d = _resolve_d(target, opts)
    lhs = QQ(len(enum_SYT(target)))
    rhs = oof_form(target, d)
    return _report("oof", target, d, opts, lhs == rhs, lhs, rhs)


@REGISTRY.identity("k-oof", "skew", ("exact-beta",),
                   "K-theoretic Okounkov–Olshanski formula over SSVT_d(μ)",
                   _skew_sweep(extra=1))
def verify_K_OOF(target: SkewShape, opts: VerifyOptions) -> VerificationReport:
    d = _resolve_d(target, opts)
    lhs = sit_sum(target, EvalContext(d, BETA))
    rhs = koof_form(target, d, BETA)
    knhlf = knhlf_form(target, d, BETA)
    return _report("k-oof", target, d, opts, equal(lhs, rhs) and equal(rhs, knhlf), lhs, rhs,
                   detail={"matches_knhlf": equal(rhs, knhlf)})


# diagram-level checks

@REGISTRY.identity("excited-counts", "skew", ("exact-count",),
                   "|D| = Σ_E 2^{|π|} and |P| = Σ_E 2^{n−|π|}", _skew_sweep())
def verify_excited_counts(target: SkewShape, opts: VerifyOptions) -> VerificationReport:
    general = len(_generalized(target))
    pleasant = len(dg.pleasant_diagrams(target))
    by_peaks = dg.peak_weighted_count(target)
    by_formula = dg.pleasant_count_formula(target)
    return _report("excited-counts", target, None, opts,
                   general == by_peaks and pleasant == by_formula,
                   f"|D|={general} |P|={pleasant}", f"|D|={by_peaks} |P|={by_formula}",
                   detail={"excited": len(_peaks(target)),
                           "sizes": dg.size_histogram(_generalized(target))})


@REGISTRY.identity("naruse-okada", "skew", ("exact-count",),
                   "generalized excited diagrams are D ∪ S with S ⊆ π(D)", _skew_sweep(extra=2))
def verify_naruse_okada(target: SkewShape, opts: VerifyOptions) -> VerificationReport:
    ok = dg.check_NO_characterization(target)
    order_free = dg.peaks_order_independent(target)
    return _report("naruse-okada", target, None, opts, ok and order_free,
                   str(len(_generalized(target))), str(dg.peak_weighted_count(target)),
                   detail={"order_independent": order_free})


@REGISTRY.identity("pleasant", "skew", ("exact-count",),
                   "pleasant diagram count by enumeration and by peaks", _skew_sweep())
def verify_pleasant(target: SkewShape, opts: VerifyOptions) -> VerificationReport:
    lhs = len(dg.pleasant_diagrams(target))
    rhs = dg.pleasant_count_formula(target)
    return _report("pleasant", target, None, opts, lhs == rhs, str(lhs), str(rhs))


@REGISTRY.identity("paths", "skew", ("exact-count",),
                   "generalized excited diagrams ↔ Delannoy path families", _skew_sweep())
def verify_paths(target: SkewShape, opts: VerifyOptions) -> VerificationReport:
    diagrams = _generalized(target)
    round_trip = all(from_paths(to_paths(D, target), target) == D for D in diagrams)
    families = len(valid_path_families(target))
    return _report("paths", target, None, opts, round_trip and families == len(diagrams),
                   str(len(diagrams)), str(families), detail={"round_trip": round_trip})


@REGISTRY.identity("labeled-paths", "skew", ("exact-count",),
                   "excited diagrams with peak subsets ↔ path families with labeled high peaks",
                   _skew_sweep())
def verify_labeled_paths(target: SkewShape, opts: VerifyOptions) -> VerificationReport:
    ok = labeled_paths_bijection(target)
    return _report("labeled-paths", target, None, opts, ok, str(dg.peak_weighted_count(target)),
                   str(len(_generalized(target))))


@REGISTRY.identity("det-bound", "skew", ("exact-count",),
                   "|D(λ/μ)| <= det[η(A_i, B_j)]", _skew_sweep())
def verify_det_bound(target: SkewShape, opts: VerifyOptions) -> VerificationReport:
    count = len(_generalized(target))
    bound = det_bound(target)
    return _report("det-bound", target, None, opts, count <= bound, str(count), str(bound),
                   detail={"eta": [[int(e) for e in row] for row in eta_matrix(target)]})


# sizes

def _size_pairs(ns: Iterable[int], ks: Iterable[int]):
    return [((n, k), None) for k in ks for n in ns]


@REGISTRY.identity("sit-counts", "size", ("exact-count",),
                   "|SIT(n,n)| = s_n and |SIT(p,1^q)| = D(p−1, q)",
                   lambda n: [((m, 1), None) for m in range(1, n + 1)])
def verify_hook_walk_counts(target: Tuple[int, int], opts: VerifyOptions) -> VerificationReport:
    n, _ = target
    two_row = len(enum_SIT(SkewShape.straight(Partition((n, n)))))
    hooks_ok = True
    for p in range(1, n + 1):
        for q in range(0, n + 1 - p):
            sh = SkewShape.straight(Partition((p,) + (1,) * q))
            hooks_ok &= len(enum_SIT(sh)) == delannoy_count(p - 1, q)
    return _report("sit-counts", target, None, opts, two_row == schroeder(n) and hooks_ok,
                   str(two_row), str(schroeder(n)), detail={"hooks": hooks_ok})


@REGISTRY.identity("thick-zigzag", "size", ("exact-count",),
                   "|D(δ_{n+2k}/δ_n)| = 2^{−C(k,2)} det[s_{n−2+i+j}]",
                   lambda n: _size_pairs(range(1, n + 1), (1,)) +
                   _size_pairs(range(1, min(4, n - 2) + 1), (2,)))
def verify_thick_zigzag(target: Tuple[int, int], opts: VerifyOptions) -> VerificationReport:
    n, k = target
    z = thick_zigzag(n, k)
    passed = z.agrees
    if k == 1:
        passed = passed and z.direct_count == schroeder(n)
    if k == 2:
        s = schroeder
        passed = passed and 2 * z.direct_count == s(n) * s(n + 2) - s(n + 1) ** 2
    return _report("thick-zigzag", target, None, opts, passed, str(z.direct_count),
                   z.det_formula_value, detail={"L_nk_at_2": str(z.dyck["L_nk_at_2"])})


@REGISTRY.identity("dyck-det", "size", ("exact-count",),
                   "x^{C(k,2)} L_{n,k}(x) = det[L_{n+i+j−2}(x)]",
                   lambda n: _size_pairs(range(1, min(n, 4) + 1), (1, 2, 3)))
def verify_dyck_determinant(target: Tuple[int, int], opts: VerifyOptions) -> VerificationReport:
    n, k = target
    lhs = X ** comb(k, 2) * nested_dyck_polynomial(n, k)
    rhs = det([[dyck_polynomial(n + i + j - 2) for j in range(1, k + 1)]
               for i in range(1, k + 1)])
    return _report("dyck-det", target, None, opts, lhs == rhs, str(lhs), str(rhs))


@REGISTRY.identity("gamma-wnk", "size", ("exact-count",),
                   "Γ_{w(n,k)}(1) = 2^{−C(k,2)} det[s_{n−2+i+j}]",
                   lambda n: _size_pairs(range(1, min(n, 5) + 1), (1, 2)))
def verify_gamma_wnk(target: Tuple[int, int], opts: VerifyOptions) -> VerificationReport:
    n, k = target
    lhs = QQ(gamma_wnk_value(n, k))
    rhs = schroeder_det_formula(n, k)
    passed = lhs == rhs and (k != 1 or lhs == schroeder(n))
    return _report("gamma-wnk", target, None, opts, passed, lhs, rhs)


# permutations

def _vexillary_upto(max_size: int) -> List[Permutation]:
    out = []
    for size in range(1, max_size + 1):
        for word in itertools.permutations(range(1, size + 1)):
            w = Permutation(word)
            if is_vexillary(w):
                out.append(w)
    return out


def _random_vexillary(max_size: int, count: int = 20) -> List[Permutation]:
    top = max(4, min(8, max_size + 2))
    return sorted({random_vexillary(i, 4 + i % (top - 3)) for i in range(count)})


@REGISTRY.identity("kmy", "perm", ("random-multivariate",),
                   "double Grothendieck of a vexillary w by excited and generalized excited "
                   "diagrams, and G_μ for Grassmannian w",
                   lambda n: [(w, None) for w in _vexillary_upto(min(n, 4))])
def verify_kmy(target: Permutation, opts: VerifyOptions) -> VerificationReport:
    w = target
    data = vexillary_data(w)
    n = len(w)
    descents = w.descents()
    first = {}

    def check(point):
        beta, xs, ys = point["beta"], point["x"], point["y"]
        try:
            value = double_grothendieck_vexillary(w, xs, ys, beta)
        except HooklabError as e:
            if isinstance(e, PoleError):
                raise
            debug(str(e))
            return False
        first.setdefault("value", value)
        if len(descents) == 1:
            d = descents[0]
            return grassmannian_check(data.mu, xs[:d], EvalContext(d, beta, ys))
        return True

    outcome = _sampler(opts).run({"beta": 1, "x": n, "y": n + 1}, opts.trials, check)
    return _report("kmy", target, None, opts, outcome.passed, first.get("value", ""),
                   first.get("value", ""), trials=opts.trials, seed=opts.seed,
                   error_bound=_error_bound(2 * data.supershape.size() + 2, opts),
                   detail={"mu": str(data.mu), "supershape": str(data.supershape),
                           "grassmannian": is_grassmannian(w)})


@REGISTRY.identity("gamma", "perm", ("exact-beta",),
                   "Γ_w(β) by both diagram forms, bounded by det[η_β]",
                   lambda n: [(w, None) for w in _random_vexillary(n)])
def verify_gamma(target: Permutation, opts: VerifyOptions) -> VerificationReport:
    w = target
    data = vexillary_data(w)
    try:
        bound = gamma_det_bound(w)
        at_one = int(principal_specialization(w, 1))
    except HooklabError as e:
        return _report("gamma", target, None, opts, False, "", "", detail={"error": str(e)})
    count = len(_generalized(data.shape))
    passed = bound.holds and at_one == count
    return _report("gamma", target, None, opts, passed, str(bound.gamma), str(bound.bound),
                   detail={"mu": str(data.mu), "supershape": str(data.supershape),
                           "at_one": at_one, "diagrams": count})
