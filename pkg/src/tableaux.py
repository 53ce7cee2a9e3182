"""
Enumerators for tableau families on skew shapes.

All enumerators return lists sorted by the row-major reading of entries, so
repeated runs give identical output.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Tuple

from errors import ShapeError, TableauError
from shapes import Cell, Partition, SkewShape, addable_cells, add_cells, upper_covers_rc

FAMILIES = ("SSYT", "RPP", "IT")


@dataclass(frozen=True, order=True)
class Tableau:
    shape: SkewShape
    entries: Tuple[Tuple[Cell, int], ...]

    @classmethod
    def from_dict(cls, shape: SkewShape, entries: Dict[Cell, int]) -> "Tableau":
        cells = shape.cells()
        if set(entries) != set(cells):
            raise TableauError(f"Entries do not cover the cells of {shape}")
        return cls(shape, tuple((c, entries[c]) for c in cells))

    @classmethod
    def from_rows(cls, shape: SkewShape, rows: List[List[int]]) -> "Tableau":
        """Build from rows of entries listed left to right, skipping the inner shape."""
        entries = {}
        for i, row in enumerate(rows, 1):
            start = shape.inner.part(i)
            for k, v in enumerate(row):
                entries[Cell(i, start + k + 1)] = v
        return cls.from_dict(shape, entries)

    def as_dict(self) -> Dict[Cell, int]:
        return dict(self.entries)

    def entry(self, c: Cell) -> int:
        return self.as_dict()[c]

    def values(self) -> List[int]:
        return [v for _, v in self.entries]

    @property
    def weight(self) -> int:
        return sum(self.values())

    @property
    def m(self) -> int:
        return max(self.values(), default=0)

    def nu_le(self, k: int) -> Partition:
        """Partition formed by the inner shape and the cells with entry <= k."""
        rows = list(self.shape.inner.padded(len(self.shape.outer)))
        for c, v in self.entries:
            if v <= k:
                if c.col != rows[c.row - 1] + 1:
                    raise TableauError(f"Entries <= {k} of {self} are not left-justified")
                rows[c.row - 1] += 1
        try:
            return Partition(tuple(rows))
        except ShapeError as e:
            raise TableauError(f"Prefix of entries <= {k} is not a partition", {"rows": rows}) from e

    def nu_lt(self, k: int) -> Partition:
        return self.nu_le(k - 1)

    def nu_ge(self, k: int) -> SkewShape:
        return SkewShape(self.shape.outer, self.nu_lt(k))

    def a_ge(self, k: int) -> int:
        return sum(1 for v in self.values() if v >= k)

    def chain(self) -> List[Partition]:
        """nu(T<=0) = inner, ..., nu(T<=m) = outer."""
        return [self.nu_le(k) for k in range(self.m + 1)]

    def subtract(self, other: "Tableau") -> "Tableau":
        a, b = self.as_dict(), other.as_dict()
        return Tableau(self.shape, tuple((c, a[c] - b[c]) for c in self.shape.cells()))

    def to_json(self) -> Dict:
        return {"cells": [{"r": c.row, "c": c.col, "entry": v} for c, v in self.entries]}

    def __str__(self):
        return " ".join(f"{c}={v}" for c, v in self.entries)


@dataclass(frozen=True, order=True)
class SetValuedTableau:
    shape: SkewShape
    entries: Tuple[Tuple[Cell, Tuple[int, ...]], ...]

    @classmethod
    def from_dict(cls, shape: SkewShape, entries: Dict[Cell, object]) -> "SetValuedTableau":
        cells = shape.cells()
        if set(entries) != set(cells):
            raise TableauError(f"Entries do not cover the cells of {shape}")
        return cls(shape, tuple((c, tuple(sorted(entries[c]))) for c in cells))

    def as_dict(self) -> Dict[Cell, Tuple[int, ...]]:
        return dict(self.entries)

    @property
    def ne(self) -> int:
        return sum(len(s) for _, s in self.entries)

    def is_valid(self, d: Optional[int] = None) -> bool:
        t = self.as_dict()
        for c, s in self.entries:
            if not s or (d is not None and (min(s) < 1 or max(s) > d)):
                return False
            right, below = Cell(c.row, c.col + 1), Cell(c.row + 1, c.col)
            if right in t and max(s) > min(t[right]):
                return False
            if below in t and max(s) >= min(t[below]):
                return False
        return True

    def to_json(self) -> Dict:
        return {"cells": [{"r": c.row, "c": c.col, "entries": list(s)} for c, s in self.entries]}


@dataclass(frozen=True)
class TableauStats:
    weight: int
    m: int
    chain: Tuple[Partition, ...]
    a: Tuple[int, ...]

    def nu_le(self, k: int) -> Partition:
        return self.chain[min(max(k, 0), self.m)]

    def nu_ge(self, k: int) -> SkewShape:
        return SkewShape(self.chain[-1], self.nu_le(k - 1))

    def a_ge(self, k: int) -> int:
        return self.a[k] if 0 <= k < len(self.a) else 0


def stats(T: Tableau) -> TableauStats:
    chain = tuple(T.chain())
    a = tuple(T.a_ge(k) for k in range(T.m + 2))
    return TableauStats(T.weight, T.m, chain, a)


def _fillings(shape: SkewShape, base: int, row_gap: int, col_gap: int,
              max_entry: Optional[int] = None, budget: Optional[int] = None) -> Iterator[Dict[Cell, int]]:
    """Row-major DFS over fillings with the given monotonicity, entry cap and weight cap."""
    cells = shape.cells()
    n = len(cells)
    filling: Dict[Cell, int] = {}

    def lowest(c: Cell) -> int:
        lo = base
        left, up = Cell(c.row, c.col - 1), Cell(c.row - 1, c.col)
        if left in filling:
            lo = max(lo, filling[left] + row_gap)
        if up in filling:
            lo = max(lo, filling[up] + col_gap)
        return lo

    def dfs(k: int, spent: int):
        if k == n:
            yield dict(filling)
            return
        c = cells[k]
        v = lowest(c)
        while True:
            if max_entry is not None and v > max_entry:
                break
            if budget is not None and spent + v + base * (n - k - 1) > budget:
                break
            filling[c] = v
            yield from dfs(k + 1, spent + v)
            del filling[c]
            v += 1

    if max_entry is None and budget is None:
        raise ValueError("An entry cap or a weight cap is required")
    yield from dfs(0, 0)


def _sorted(tableaux):
    return sorted(tableaux, key=lambda t: (t.values() if isinstance(t, Tableau) else [s for _, s in t.entries]))


def enum_SYT(sh: SkewShape) -> List[Tableau]:
    """Standard Young tableaux, built one addable cell at a time."""
    n = sh.size()
    out = []
    entries: Dict[Cell, int] = {}

    def grow(nu: Partition, k: int):
        if k > n:
            out.append(Tableau.from_dict(sh, entries))
            return
        for c in addable_cells(nu, sh.outer):
            entries[c] = k
            grow(add_cells(nu, [c]), k + 1)
            del entries[c]

    grow(sh.inner, 1)
    return _sorted(out)


def enum_SIT(sh: SkewShape) -> List[Tableau]:
    """Standard increasing tableaux as chains inner = nu_0 ↦ nu_1 ↦ ... ↦ nu_m = outer."""
    out = []
    entries: Dict[Cell, int] = {}

    def grow(nu: Partition, k: int):
        if nu == sh.outer:
            out.append(Tableau.from_dict(sh, entries))
            return
        for rho in upper_covers_rc(nu, sh.outer):
            added = SkewShape(rho, nu).cells()
            for c in added:
                entries[c] = k
            grow(rho, k + 1)
            for c in added:
                del entries[c]

    grow(sh.inner, 1)
    return _sorted(out)


def enum_SIT_by_fillings(sh: SkewShape) -> List[Tableau]:
    """Brute-force SIT enumeration over strict fillings; an oracle for enum_SIT."""
    n = sh.size()
    out = []
    for f in _fillings(sh, 1, 1, 1, max_entry=max(n, 1)):
        used = set(f.values())
        if used == set(range(1, len(used) + 1)):
            out.append(Tableau.from_dict(sh, f))
    return _sorted(out)


def enum_SSYT_maxentry(sh: SkewShape, d: int) -> List[Tableau]:
    return _sorted(Tableau.from_dict(sh, f) for f in _fillings(sh, 1, 0, 1, max_entry=d))


def enum_IT_maxentry(sh: SkewShape, M: int) -> List[Tableau]:
    return _sorted(Tableau.from_dict(sh, f) for f in _fillings(sh, 1, 1, 1, max_entry=M))


def enum_weight_bounded(family: str, sh: SkewShape, N: int) -> List[Tableau]:
    """Members of SSYT, RPP or IT with |T| <= N."""
    family = family.upper()
    gaps = {"RPP": (0, 0, 0), "SSYT": (1, 0, 1), "IT": (1, 1, 1)}
    if family not in gaps:
        raise ValueError(f"Unknown weight-bounded family {family!r}; expected one of {FAMILIES}")
    base, row_gap, col_gap = gaps[family]
    return _sorted(Tableau.from_dict(sh, f)
                   for f in _fillings(sh, base, row_gap, col_gap, max_entry=N, budget=N))


def weight_counts(tableaux: List[Tableau]) -> Dict[int, int]:
    counts: Dict[int, int] = {}
    for T in tableaux:
        counts[T.weight] = counts.get(T.weight, 0) + 1
    return counts


def enum_BSYT(sh: SkewShape) -> List[Tableau]:
    """SITs with exactly one repeated entry."""
    n = sh.size()
    return [T for T in enum_SIT(sh) if T.m == n - 1]


def enum_BSYT_k(sh: SkewShape, k: int) -> List[Tableau]:
    return [T for T in enum_BSYT(sh) if T.values().count(k) == 2]


def enum_SSVT(sh: SkewShape, d: int) -> List[SetValuedTableau]:
    """Semistandard set-valued tableaux with entry sets inside [d]."""
    cells = sh.cells()
    filling: Dict[Cell, Tuple[int, ...]] = {}
    out = []

    def dfs(k: int):
        if k == len(cells):
            out.append(SetValuedTableau.from_dict(sh, filling))
            return
        c = cells[k]
        lo = 1
        left, up = Cell(c.row, c.col - 1), Cell(c.row - 1, c.col)
        if left in filling:
            lo = max(lo, max(filling[left]))
        if up in filling:
            lo = max(lo, max(filling[up]) + 1)
        choices = range(lo, d + 1)
        for size in range(1, len(choices) + 1):
            for subset in combinations(choices, size):
                filling[c] = subset
                dfs(k + 1)
                del filling[c]

    dfs(0)
    return _sorted(out)


def minimal_IT(lam: Partition) -> Tableau:
    """The entrywise-smallest increasing tableau M_lambda, entry i+j-1."""
    sh = SkewShape.straight(lam)
    return Tableau.from_dict(sh, {c: c.row + c.col - 1 for c in sh.cells()})
