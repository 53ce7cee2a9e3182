"""
Excited, generalized excited and pleasant diagrams of a skew shape.

A diagram is a set of cells inside the outer partition.  Starting from the
inner shape, a type I move slides an active cell (i,j) to (i+1,j+1); a type
II move adds (i+1,j+1) and keeps (i,j).  A cell is active when its three
south-east neighbours are in the outer shape and not in the diagram.
"""

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Set, Tuple

from errors import HooklabError
from log import debug
from shapes import Cell, Partition, SkewShape


@dataclass(frozen=True)
class Diagram:
    ambient: Partition
    cells: FrozenSet[Cell]

    @classmethod
    def of(cls, ambient: Partition, cells: Iterable) -> "Diagram":
        return cls(ambient, frozenset(Cell(*c) for c in cells))

    def sorted_cells(self) -> Tuple[Cell, ...]:
        return tuple(sorted(self.cells))

    def complement(self) -> List[Cell]:
        """Cells of the ambient partition outside the diagram, row-major."""
        return [c for c in self.ambient.cells() if c not in self.cells]

    def __len__(self):
        return len(self.cells)

    def __lt__(self, other):
        return (len(self), self.sorted_cells()) < (len(other), other.sorted_cells())

    def to_json(self, peaks: Optional[Iterable[Cell]] = None) -> Dict:
        out = {"ambient": str(self.ambient),
               "cells": [{"r": c.row, "c": c.col} for c in self.sorted_cells()]}
        if peaks is not None:
            out["peaks"] = [{"r": c.row, "c": c.col} for c in sorted(peaks)]
        return out


@dataclass(frozen=True)
class PeakedDiagram:
    base: Diagram
    peaks: FrozenSet[Cell]


def is_active(cells: FrozenSet[Cell], lam: Partition, c: Cell) -> bool:
    i, j = c
    return all(n in lam and n not in cells
               for n in (Cell(i + 1, j), Cell(i, j + 1), Cell(i + 1, j + 1)))


def active_cells(D: Diagram) -> List[Cell]:
    return [c for c in sorted(D.cells) if is_active(D.cells, D.ambient, c)]


def _moves(D: Diagram, generalized: bool) -> Iterator[Tuple[Cell, Diagram]]:
    for c in active_cells(D):
        target = Cell(c.row + 1, c.col + 1)
        yield c, Diagram(D.ambient, (D.cells - {c}) | {target})
        if generalized:
            yield c, Diagram(D.ambient, D.cells | {target})


def _closure(sh: SkewShape, generalized: bool, depth_first: bool = False) -> Set[Diagram]:
    start = Diagram.of(sh.outer, sh.inner.cells())
    seen = {start}
    work = deque([start])
    while work:
        D = work.pop() if depth_first else work.popleft()
        for _, nxt in _moves(D, generalized):
            if nxt not in seen:
                seen.add(nxt)
                work.append(nxt)
    return seen


def excited_diagrams(sh: SkewShape, depth_first: bool = False) -> Set[Diagram]:
    return _closure(sh, False, depth_first)


def generalized_excited_diagrams(sh: SkewShape, depth_first: bool = False) -> Set[Diagram]:
    return _closure(sh, True, depth_first)


def _peak_walk(sh: SkewShape) -> Tuple[Dict[Diagram, FrozenSet[Cell]], bool]:
    """Peaks along every type I move; the flag is False if two routes disagree."""
    start = Diagram.of(sh.outer, sh.inner.cells())
    peaks = {start: frozenset()}
    consistent = True
    work = deque([start])
    while work:
        D = work.popleft()
        for (i, j), nxt in _moves(D, False):
            p = (peaks[D] - {Cell(i, j + 1), Cell(i + 1, j)}) | {Cell(i, j)}
            if nxt not in peaks:
                peaks[nxt] = p
                work.append(nxt)
            elif peaks[nxt] != p:
                consistent = False
                debug(f"peak mismatch on {sh} at {nxt.sorted_cells()}")
    return peaks, consistent


def excited_peaks(sh: SkewShape) -> Dict[Diagram, FrozenSet[Cell]]:
    peaks, consistent = _peak_walk(sh)
    if not consistent:
        raise HooklabError(f"Excited peaks of {sh} depend on the move order")
    return peaks


def peaks_order_independent(sh: SkewShape) -> bool:
    return _peak_walk(sh)[1]


def peaked_diagrams(sh: SkewShape) -> List[PeakedDiagram]:
    return [PeakedDiagram(D, p) for D, p in sorted(excited_peaks(sh).items())]


def subsets(cells: Iterable[Cell]) -> Iterator[FrozenSet[Cell]]:
    cells = sorted(cells)
    for size in range(len(cells) + 1):
        for sub in combinations(cells, size):
            yield frozenset(sub)


def check_NO_characterization(sh: SkewShape) -> bool:
    """Generalized excited diagrams are exactly the D ∪ S with S ⊆ π(D), each produced once."""
    general = generalized_excited_diagrams(sh)
    union = set()
    produced = 0
    for D, p in excited_peaks(sh).items():
        for S in subsets(p):
            union.add(Diagram(sh.outer, D.cells | S))
            produced += 1
    return union == general and produced == len(general)


def pleasant_diagrams(sh: SkewShape) -> Set[FrozenSet[Cell]]:
    """π(D) ∪ S for D excited and S ⊆ λ∖(D ∪ π(D))."""
    out = set()
    for D, p in excited_peaks(sh).items():
        free = [c for c in sh.outer.cells() if c not in D.cells and c not in p]
        for S in subsets(free):
            out.add(p | S)
    return out


def pleasant_count_formula(sh: SkewShape) -> int:
    n = sh.size()
    return sum(2 ** (n - len(p)) for p in excited_peaks(sh).values())


def peak_weighted_count(sh: SkewShape) -> int:
    """Σ_D 2^{|π(D)|}, which counts generalized excited diagrams."""
    return sum(2 ** len(p) for p in excited_peaks(sh).values())


def size_histogram(diagrams: Iterable[Diagram]) -> Dict[int, int]:
    hist: Dict[int, int] = {}
    for D in diagrams:
        hist[len(D)] = hist.get(len(D), 0) + 1
    return dict(sorted(hist.items()))
