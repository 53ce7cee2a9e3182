"""
Exact arithmetic for the identity checks.

Scalars are either sympy `QQ` rationals or elements of a univariate rational
function field over `QQ` (formal `beta` or formal `q`).  Both flow through
the same `+ - * /`, so every formula is written once.
"""

import random
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from sympy import QQ, ZZ
from sympy.polys.fields import FracElement, field
from sympy.polys.matrices import DomainMatrix
from sympy.polys.ring_series import rs_mul, rs_series_inversion, rs_trunc
from sympy.polys.rings import PolyElement

from errors import PoleError, ResampleExhausted
from log import debug

BETA_FIELD, BETA = field("beta", QQ)
Q_FIELD, Q = field("q", QQ)

DEFAULT_BOUND = 10_000
DEFAULT_RESAMPLE_BUDGET = 50
DEFAULT_TRIALS = 20


def rational(p, q=1):
    return QQ(p, q)


def is_formal(v) -> bool:
    return isinstance(v, FracElement)


def is_zero(v) -> bool:
    return not v


def equal(a, b) -> bool:
    return not (a - b)


def divide(a, b):
    """a / b, raising PoleError when b vanishes."""
    if not b:
        raise PoleError("Division by zero", {"numerator": format_value(a)})
    return a / b


def product(values: Iterable, one=None):
    out = QQ(1) if one is None else one
    for v in values:
        out = out * v
    return out


def total(values: Iterable, zero=None):
    out = QQ(0) if zero is None else zero
    for v in values:
        out = out + v
    return out


def _valuation(p: PolyElement) -> int:
    return min(m[0] for m in p.keys())


def _shift(p: PolyElement, k: int) -> PolyElement:
    return p.ring.from_dict({(m[0] + k,): c for m, c in p.items()})


def eval_at(f, a):
    """Evaluate a rational function at a rational point."""
    if not is_formal(f):
        return f
    den = f.denom(a)
    if not den:
        raise PoleError(f"Pole of {format_value(f)} at {a}")
    return f.numer(a) / den


def limit_at_infinity(f):
    """Limit as the formal variable tends to infinity."""
    if not is_formal(f):
        return f
    dn, dd = f.numer.degree(), f.denom.degree()
    if dn > dd:
        raise PoleError(f"{format_value(f)} is unbounded at infinity")
    if dn < dd:
        return QQ(0)
    return f.numer.LC / f.denom.LC


@dataclass(frozen=True)
class TruncSeries:
    """var**shift * poly, with coefficients known up to degree `order`."""
    poly: PolyElement
    order: int
    shift: int = 0

    @property
    def gen(self):
        return self.poly.ring.gens[0]

    @classmethod
    def from_counts(cls, counts: Mapping[int, int], order: int, ring) -> "TruncSeries":
        poly = ring.from_dict({(k,): QQ(v) for k, v in counts.items() if 0 <= k <= order and v})
        return cls(poly, order)

    @classmethod
    def from_ratfunc(cls, f, order: int) -> "TruncSeries":
        return series_at_zero(f, order)

    def lowest_degree(self) -> Optional[int]:
        if not self.poly:
            return None
        return _valuation(self.poly) + self.shift

    def coefficient(self, k: int):
        if k > self.order:
            raise ValueError(f"Coefficient {k} beyond truncation order {self.order}")
        return self.poly.get((k - self.shift,), QQ(0))

    def coefficients(self) -> List:
        low = min(0, self.shift)
        return [self.coefficient(k) for k in range(low, self.order + 1)]

    def truncate(self, order: int) -> "TruncSeries":
        order = min(order, self.order)
        return TruncSeries(rs_trunc(self.poly, self.gen, order - self.shift + 1), order, self.shift)

    def _check_power_series(self, other):
        if self.shift or other.shift:
            raise ValueError("Series arithmetic needs nonnegative degrees")

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            other = TruncSeries(self.poly.ring(other), self.order)
        self._check_power_series(other)
        order = min(self.order, other.order)
        return TruncSeries(rs_trunc(self.poly + other.poly, self.gen, order + 1), order)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(-self.poly, self.order, self.shift)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries(self.poly * other, self.order, self.shift)
        self._check_power_series(other)
        order = min(self.order, other.order)
        return TruncSeries(rs_mul(self.poly, other.poly, self.gen, order + 1), order)

    __rmul__ = __mul__

    def inverse(self) -> "TruncSeries":
        if self.shift or not self.poly.get((0,), QQ(0)):
            raise PoleError("Series has no constant term to invert")
        return TruncSeries(rs_series_inversion(self.poly, self.gen, self.order + 1), self.order)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        order = min(self.order, other.order)
        low = min(0, self.shift, other.shift)
        return all(self.coefficient(k) == other.coefficient(k) for k in range(low, order + 1))

    def __hash__(self):
        return hash((tuple(self.coefficients()), self.order))

    def __str__(self):
        x = str(self.gen)
        terms = []
        for k in range(min(0, self.shift), self.order + 1):
            c = self.coefficient(k)
            if c:
                terms.append(f"{c}*{x}**{k}" if k else str(c))
        return " + ".join(terms or ["0"]) + f" + O({x}**{self.order + 1})"


def series_at_zero(f, order: int) -> TruncSeries:
    """Laurent expansion of a rational function at 0, known through degree `order`."""
    ring = f.field.ring
    x = ring.gens[0]
    if not f:
        return TruncSeries(ring.zero, order)
    v = _valuation(f.denom)
    den = _shift(f.denom, -v)
    prec = order + v + 1
    if prec <= 0:
        return TruncSeries(ring.zero, order, -v)
    inv = rs_series_inversion(den, x, prec)
    return TruncSeries(rs_mul(f.numer, inv, x, prec), order, -v)


def laurent_coefficient(f, k: int):
    """Coefficient of var**k in the Laurent expansion of f at 0."""
    if not is_formal(f):
        return f if k == 0 else QQ(0)
    s = series_at_zero(f, k)
    return s.coefficient(k) if k >= min(0, s.shift) else QQ(0)


def det(rows: Sequence[Sequence]) -> object:
    """Exact determinant of a square matrix of rationals, polynomials or rational functions."""
    n = len(rows)
    if n == 0:
        return QQ(1)
    flat = [e for row in rows for e in row]
    domain = ZZ if all(isinstance(e, int) for e in flat) else QQ
    for e in flat:
        if isinstance(e, FracElement):
            domain = e.field.to_domain()
            break
        if isinstance(e, PolyElement):
            domain = e.ring.to_domain()
    matrix = DomainMatrix([[domain.convert(e) for e in row] for row in rows], (n, n), domain)
    return matrix.det()


def format_value(v) -> str:
    """Canonical text for a scalar: reduced fraction, or numerator over monic denominator."""
    if isinstance(v, FracElement):
        num, den = v.numer, v.denom
        lc = den.LC
        num, den = num.quo_ground(lc), den.quo_ground(lc)
        if den == 1:
            return str(num)
        return f"({num})/({den})"
    if isinstance(v, TruncSeries):
        return str(v)
    return str(v)


def schwartz_zippel_bound(degree: int, bound: int, trials: int):
    """Failure probability bound (degree/bound)**trials as an exact rational, capped at 1."""
    if trials <= 0:
        return QQ(1)
    return min(QQ(1), QQ(degree, bound) ** trials)


@dataclass(frozen=True)
class SampleOutcome:
    trials: int
    resamples: int
    passed: bool
    failures: Tuple[Dict, ...] = ()


class PointSampler:
    """
    Deterministic random points for multivariate identities.

    Each variable family ("y", "x", ...) gets pairwise-distinct integers in
    [1, bound]; the scalar "beta" gets a single integer.  Trial 0 uses y_i = i.
    A point at which the checked identity hits a pole is redrawn, up to the
    resample budget.
    """

    def __init__(self, seed: int = 0, bound: int = DEFAULT_BOUND,
                 budget: int = DEFAULT_RESAMPLE_BUDGET):
        self.seed = seed
        self.bound = bound
        self.budget = budget

    def assignment(self, variables: Mapping[str, int], trial: int = 0,
                   attempt: int = 0) -> Dict[str, object]:
        rng = random.Random(f"{self.seed}:{trial}:{attempt}")
        point = {}
        for name in sorted(variables):
            n = variables[name]
            if name == "beta":
                point[name] = QQ(rng.randint(1, self.bound))
            elif name == "y" and trial == 0 and attempt == 0:
                point[name] = tuple(QQ(i) for i in range(1, n + 1))
            else:
                if n > self.bound:
                    raise ResampleExhausted(f"Cannot draw {n} distinct values below {self.bound}")
                point[name] = tuple(QQ(v) for v in rng.sample(range(1, self.bound + 1), n))
        return point

    def run(self, variables: Mapping[str, int], trials: int,
            check: Callable[[Dict[str, object]], bool]) -> SampleOutcome:
        resamples = 0
        failures = []
        for trial in range(trials):
            for attempt in range(self.budget):
                point = self.assignment(variables, trial, attempt)
                try:
                    ok = check(point)
                except PoleError as e:
                    resamples += 1
                    debug(f"resampling trial {trial}: {e}")
                    continue
                if not ok:
                    failures.append({k: [format_value(v) for v in vals] if isinstance(vals, tuple)
                                     else format_value(vals) for k, vals in point.items()})
                break
            else:
                raise ResampleExhausted(
                    f"No pole-free point after {self.budget} attempts at trial {trial}",
                    {"seed": self.seed, "trial": trial})
        return SampleOutcome(trials, resamples, not failures, tuple(failures))
