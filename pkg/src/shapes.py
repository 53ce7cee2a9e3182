"""
Partitions, skew shapes and cells.

Cells are 1-based (row, col) pairs, rows counted top-down.  Partitions are
stored without trailing zeros and are immutable, so they hash and can be
shared freely between worker threads.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple

from errors import ShapeError

EMPTY_MARKERS = ("", "0", "∅", "-")


class Cell(NamedTuple):
    row: int
    col: int

    @property
    def content(self) -> int:
        return self.col - self.row

    def __str__(self):
        return f"({self.row},{self.col})"


@dataclass(frozen=True, order=True)
class Partition:
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, p in enumerate(parts):
            if p < 0:
                raise ShapeError(f"Negative part in partition {parts}")
            if i + 1 < len(parts) and parts[i + 1] > p:
                raise ShapeError(f"Parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    def length(self) -> int:
        return len(self.parts)

    def size(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """1-based part, zero past the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __bool__(self):
        return bool(self.parts)

    def __contains__(self, cell) -> bool:
        r, c = cell
        return r >= 1 and c >= 1 and c <= self.part(r)

    @cached_property
    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= j)
                               for j in range(1, self.parts[0] + 1)))

    def cells(self) -> List[Cell]:
        return [Cell(i, j) for i, p in enumerate(self.parts, 1) for j in range(1, p + 1)]

    def contains(self, other: "Partition") -> bool:
        return all(other.part(i) <= self.part(i) for i in range(1, len(other) + 1))

    def padded(self, d: int) -> Tuple[int, ...]:
        """Parts padded with zeros to length d."""
        if len(self.parts) > d:
            raise ShapeError(f"Partition {self} has more than {d} parts")
        return self.parts + (0,) * (d - len(self.parts))

    def __str__(self):
        return ",".join(str(p) for p in self.parts) if self.parts else "∅"


@dataclass(frozen=True, order=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise ShapeError(f"Inner shape {self.inner} is not contained in {self.outer}")

    @classmethod
    def straight(cls, outer: Partition) -> "SkewShape":
        return cls(outer, Partition())

    def is_straight(self) -> bool:
        return not self.inner

    def cells(self) -> List[Cell]:
        return [Cell(i, j) for i in range(1, len(self.outer) + 1)
                for j in range(self.inner.part(i) + 1, self.outer.part(i) + 1)]

    def size(self) -> int:
        return self.outer.size() - self.inner.size()

    def __contains__(self, cell) -> bool:
        return cell in self.outer and cell not in self.inner

    def __str__(self):
        if self.inner:
            return f"{self.outer}/{self.inner}"
        return str(self.outer)


def conjugate(p: Partition) -> Partition:
    return p.conjugate


def hook(p: Partition, c: Cell) -> int:
    i, j = c
    if c not in p:
        raise ShapeError(f"Cell {tuple(c)} is outside {p}")
    return p.part(i) - i + p.conjugate.part(j) - j + 1


def hooks(p: Partition) -> List[int]:
    return [hook(p, c) for c in p.cells()]


def b_stat(p: Partition) -> int:
    return sum((i - 1) * part for i, part in enumerate(p.parts, 1))


def s_stat(p: Partition) -> int:
    return b_stat(p) + b_stat(p.conjugate) + p.size()


def staircase(d: int) -> Partition:
    """The short staircase (d-1, ..., 1)."""
    return Partition(tuple(range(d - 1, 0, -1)))


def staircase_long(n: int) -> Partition:
    """The long staircase (n+1, n, ..., 1) used to embed Dyck paths."""
    return Partition(tuple(range(n + 1, 0, -1)))


def covers_rc(nu: Partition, mu: Partition) -> bool:
    """True iff mu ⊊ nu and the cells of nu/mu lie in distinct rows and distinct columns."""
    if nu == mu or not nu.contains(mu):
        return False
    cells = SkewShape(nu, mu).cells()
    rows = {c.row for c in cells}
    cols = {c.col for c in cells}
    return len(rows) == len(cells) and len(cols) == len(cells)


def addable_cells(nu: Partition, within: Optional[Partition] = None) -> List[Cell]:
    """Cells that can be added to nu keeping a partition (and staying inside `within`)."""
    cells = []
    for i in range(1, len(nu) + 2):
        j = nu.part(i) + 1
        if i == 1 or nu.part(i - 1) >= j:
            if within is None or Cell(i, j) in within:
                cells.append(Cell(i, j))
    return cells


def add_cells(nu: Partition, cells: Sequence[Cell]) -> Partition:
    parts = list(nu.parts)
    for c in sorted(cells):
        while len(parts) < c.row:
            parts.append(0)
        parts[c.row - 1] += 1
    return Partition(tuple(parts))


def upper_covers_rc(nu: Partition, within: Partition) -> Iterator[Partition]:
    """All rho inside `within` with rho ↦ nu, i.e. adding a nonempty set of addable cells."""
    addable = addable_cells(nu, within)
    for mask in range(1, 1 << len(addable)):
        yield add_cells(nu, [c for k, c in enumerate(addable) if mask >> k & 1])


def partitions_of(n: int, max_part: Optional[int] = None) -> List[Partition]:
    """Partitions of n in reverse lexicographic order."""
    max_part = n if max_part is None else max_part
    if n == 0:
        return [Partition()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append(Partition((first,) + rest.parts))
    return out


def partitions_upto(n: int) -> List[Partition]:
    return [p for k in range(n + 1) for p in partitions_of(k)]


def subpartitions(lam: Partition) -> List[Partition]:
    """All mu ⊆ lam, smallest first."""
    def build(i):
        if i > len(lam):
            yield ()
            return
        for tail in build(i + 1):
            lo = tail[0] if tail else 0
            for p in range(lo, lam.part(i) + 1):
                yield (p,) + tail
    return sorted((Partition(t) for t in build(1)), key=lambda p: (p.size(), p.parts))


def skew_shapes_upto(n: int, proper: bool = False) -> List[SkewShape]:
    """All skew shapes lam/mu with |lam| <= n; `proper` skips mu = lam."""
    shapes = []
    for lam in partitions_upto(n):
        for mu in subpartitions(lam):
            if proper and mu == lam:
                continue
            shapes.append(SkewShape(lam, mu))
    return shapes


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in EMPTY_MARKERS:
        return Partition()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ShapeError(f"Bad partition syntax: {text!r}")
    if any(p <= 0 for p in parts):
        raise ShapeError(f"Partition parts must be positive: {text!r}")
    return Partition(parts)


def parse_skew(text: str) -> SkewShape:
    """Parse "4,4,2/2,1" (or a straight "4,4,2")."""
    if "/" in text:
        outer, inner = text.split("/", 1)
        return SkewShape(parse_partition(outer), parse_partition(inner))
    return SkewShape(parse_partition(text), Partition())
