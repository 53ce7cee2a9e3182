"""
Lattice-path encodings of generalized excited diagrams, Delannoy and
Schröder counts, and Dyck-path polynomials for thick zigzag shapes.

The complement of a generalized excited diagram inside the region swept by
the inner shape's border strips is covered by non-intersecting paths.  A
path moves up, right, or diagonally up-right (a diagonal step marks a cell
added by a type II move).  Path k of the inner shape runs along the k-th
layer of cells beyond the inner shape on each diagonal of the band
[-ℓ(μ), μ_1].
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Set, Tuple

from sympy import QQ, ZZ
from sympy.polys.rings import ring

import diagrams as dg
from errors import PathError
from exact_arith import det
from shapes import Cell, Partition, SkewShape, staircase

X_RING, X = ring("x", ZZ)

UP, RIGHT, DIAGONAL = (0, 1), (1, 0), (1, 1)


def _step(a: Cell, b: Cell) -> Optional[Tuple[int, int]]:
    """Step vector (dx, dy) from a to b with rows counted downwards."""
    v = (b.col - a.col, a.row - b.row)
    return v if v in (UP, RIGHT, DIAGONAL) else None


def _diag_counts(mu: Partition) -> Dict[int, int]:
    counts: Dict[int, int] = {}
    for c in mu.cells():
        counts[c.content] = counts.get(c.content, 0) + 1
    return counts


@dataclass(frozen=True)
class PathLayout:
    """Endpoints and swept region of the inner shape's border strips."""
    starts: Tuple[Cell, ...]
    ends: Tuple[Cell, ...]
    region: FrozenSet[Cell]
    base: Tuple[Tuple[Cell, ...], ...]


@lru_cache(maxsize=None)
def layout(sh: SkewShape) -> PathLayout:
    lam, mu = sh.outer, sh.inner
    on_diag = _diag_counts(mu)
    band = range(-len(mu), mu.part(1) + 1)
    runs = []
    k = 1
    while True:
        layer = {}
        for c in band:
            r = max(1, 1 - c) + on_diag.get(c, 0) + k - 1
            cell = Cell(r, r + c)
            if cell in lam:
                layer[c] = cell
        if not layer:
            break
        run: List[int] = []
        for c in list(band) + [None]:
            if c is not None and c in layer:
                run.append(c)
                continue
            if run and any(on_diag.get(x, 0) >= 1 for x in run):
                runs.append(tuple(layer[x] for x in run))
            run = []
        k += 1
    region = frozenset(mu.cells()) | frozenset(c for path in runs for c in path)
    return PathLayout(tuple(p[0] for p in runs), tuple(p[-1] for p in runs), region, tuple(runs))


@dataclass(frozen=True)
class PathFamily:
    paths: Tuple[Tuple[Cell, ...], ...]
    starts: Tuple[Cell, ...]
    ends: Tuple[Cell, ...]

    def steps(self, i: int) -> List[Tuple[int, int]]:
        p = self.paths[i]
        return [_step(a, b) for a, b in zip(p, p[1:])]

    def cells(self) -> Set[Cell]:
        return {c for p in self.paths for c in p}

    def diagonal_steps(self) -> int:
        return sum(s == DIAGONAL for i in range(len(self.paths)) for s in self.steps(i))

    def to_json(self) -> Dict:
        return {"paths": [{"start": list(p[0]), "end": list(p[-1]),
                           "cells": [list(c) for c in p]} for p in self.paths]}


def _diagonal_ok(a: Cell, b: Cell, diagram: Set[Cell], base: Iterable[Cell]) -> bool:
    """A diagonal step needs its NW cell in the diagram and off the path's own base path."""
    nw = Cell(b.row, a.col)
    return nw in diagram and nw not in base


def _families(sh: SkewShape, allowed: Set[Cell],
              diagram: Optional[FrozenSet[Cell]] = None) -> Iterator[PathFamily]:
    """Non-intersecting Delannoy paths A_i -> B_i through allowed cells.

    With a diagram, diagonal steps are checked as they are taken and the
    paths must cover every allowed cell.
    """
    lay = layout(sh)
    chosen: List[Tuple[Cell, ...]] = []
    used: Set[Cell] = set()

    def extend(i: int, path: List[Cell]):
        cur, b = path[-1], lay.ends[i]
        if cur == b:
            chosen.append(tuple(path))
            yield from build(i + 1)
            chosen.pop()
            return
        r, x = cur
        for nxt in (Cell(r - 1, x), Cell(r, x + 1), Cell(r - 1, x + 1)):
            if nxt not in allowed or nxt in used or nxt.content > b.content:
                continue
            if (diagram is not None and _step(cur, nxt) == DIAGONAL
                    and not _diagonal_ok(cur, nxt, diagram, lay.base[i])):
                continue
            used.add(nxt)
            path.append(nxt)
            yield from extend(i, path)
            path.pop()
            used.discard(nxt)

    def build(i: int):
        if i == len(lay.starts):
            if diagram is None or used == allowed:
                yield PathFamily(tuple(chosen), lay.starts, lay.ends)
            return
        a = lay.starts[i]
        if a not in allowed or a in used:
            return
        used.add(a)
        yield from extend(i, [a])
        used.discard(a)

    yield from build(0)


def to_paths(D: dg.Diagram, sh: SkewShape) -> PathFamily:
    lay = layout(sh)
    if not D.cells <= lay.region:
        raise PathError(f"Diagram leaves the path region of {sh}")
    free = set(lay.region - D.cells)
    for pf in _families(sh, free, D.cells):
        return pf
    raise PathError("No path family covers the complement of the diagram",
                    {"shape": str(sh), "cells": sorted(D.cells)})


def check_family(pf: PathFamily, sh: SkewShape) -> Set[Cell]:
    """Validate a path family and return the diagram it encodes."""
    lay = layout(sh)
    if pf.starts != lay.starts or pf.ends != lay.ends or len(pf.paths) != len(lay.starts):
        raise PathError("Path endpoints do not match the shape")
    seen: Set[Cell] = set()
    for p, a, b in zip(pf.paths, pf.starts, pf.ends):
        if not p or p[0] != a or p[-1] != b:
            raise PathError(f"Path does not run from {a} to {b}")
        for c in p:
            if c not in lay.region:
                raise PathError(f"Path cell {c} outside the region")
            if c in seen:
                raise PathError(f"Paths intersect at {c}")
            seen.add(c)
        if any(_step(u, v) is None for u, v in zip(p, p[1:])):
            raise PathError("Path uses a step other than up, right or diagonal")
    diagram = set(lay.region - seen)
    for p, base in zip(pf.paths, lay.base):
        for u, v in zip(p, p[1:]):
            if _step(u, v) == DIAGONAL and not _diagonal_ok(u, v, diagram, base):
                raise PathError(f"Forbidden diagonal step {u} -> {v}")
    return diagram


def from_paths(pf: PathFamily, sh: SkewShape) -> dg.Diagram:
    return dg.Diagram(sh.outer, frozenset(check_family(pf, sh)))


def valid_path_families(sh: SkewShape) -> List[PathFamily]:
    out = []
    for pf in _families(sh, set(layout(sh).region)):
        try:
            D = from_paths(pf, sh)
            if to_paths(D, sh) == pf:
                out.append(pf)
        except PathError:
            continue
    return out


def high_peaks(pf: PathFamily, sh: SkewShape) -> FrozenSet[Cell]:
    """Cells entered from below and left to the right that are off the path's own base path."""
    peaks = set()
    for p, base in zip(pf.paths, layout(sh).base):
        for u, v, w in zip(p, p[1:], p[2:]):
            if _step(u, v) == UP and _step(v, w) == RIGHT and v not in base:
                peaks.add(v)
    return frozenset(peaks)


def _cut_peaks(pf: PathFamily, labeled: FrozenSet[Cell]) -> PathFamily:
    return PathFamily(tuple(tuple(c for c in p if c not in labeled) for p in pf.paths),
                      pf.starts, pf.ends)


def labeled_paths_bijection(sh: SkewShape) -> bool:
    """Cutting any subset of high peaks of an excited diagram's paths gives every valid family once."""
    images = set()
    produced = 0
    for D in dg.excited_diagrams(sh):
        pf = to_paths(D, sh)
        for labeled in dg.subsets(high_peaks(pf, sh)):
            image = _cut_peaks(pf, labeled)
            try:
                check_family(image, sh)
            except PathError:
                return False
            images.add(image)
            produced += 1
    return produced == len(images) and images == set(valid_path_families(sh))


def delannoy_count(m: int, n: int) -> int:
    """Paths (0,0) -> (m,n) with steps (1,0), (0,1), (1,1)."""
    return sum(comb(m, k) * comb(n, k) * 2 ** k for k in range(min(m, n) + 1))


@lru_cache(maxsize=None)
def schroeder(n: int) -> int:
    """Little Schröder number: Schröder paths to (n,n) with no diagonal step on the main diagonal."""
    if n < 1:
        raise ValueError("schroeder(n) needs n >= 1")
    ways = {(0, 0): 1}
    for total in range(1, 2 * n + 1):
        for x in range(0, n + 1):
            y = total - x
            if y < 0 or y > x or y > n:
                continue
            w = ways.get((x - 1, y), 0) + ways.get((x, y - 1), 0)
            if x - 1 != y - 1:
                w += ways.get((x - 1, y - 1), 0)
            ways[(x, y)] = w
    return ways[(n, n)]


def eta_beta(a: Cell, b: Cell, lam: Partition, beta):
    """Delannoy paths from a to b inside lam, each diagonal step weighted by beta."""
    if a not in lam or b not in lam:
        return 0 * beta

    @lru_cache(maxsize=None)
    def walk(r: int, x: int):
        cur = Cell(r, x)
        if cur == b:
            return beta ** 0
        if cur.content >= b.content or r < b.row or x > b.col:
            return 0 * beta
        out = 0 * beta
        for nxt, w in ((Cell(r - 1, x), 1), (Cell(r, x + 1), 1), (Cell(r - 1, x + 1), beta)):
            if nxt in lam:
                out = out + w * walk(*nxt)
        return out

    return walk(*a)


def eta(a: Cell, b: Cell, lam: Partition) -> int:
    return eta_beta(a, b, lam, 1)


def eta_matrix(sh: SkewShape, beta=None) -> List[List]:
    lay = layout(sh)
    if beta is None:
        return [[eta(a, b, sh.outer) for b in lay.ends] for a in lay.starts]
    return [[eta_beta(a, b, sh.outer, beta) for b in lay.ends] for a in lay.starts]


def det_bound(sh: SkewShape) -> int:
    matrix = eta_matrix(sh)
    return int(det(matrix)) if matrix else 1


def dyck_paths(n: int, start: int = 0) -> List[Tuple[int, ...]]:
    """Dyck paths of semilength n as height sequences."""
    out = []

    def walk(heights: List[int]):
        if len(heights) == 2 * n + 1:
            if heights[-1] == 0:
                out.append(tuple(heights))
            return
        h, left = heights[-1], 2 * n + 1 - len(heights)
        for nh in (h + 1, h - 1):
            if 0 <= nh <= left - 1:
                heights.append(nh)
                walk(heights)
                heights.pop()

    walk([0])
    return out


def _peaks(heights: Tuple[int, ...], offset: int) -> Set[Tuple[int, int]]:
    return {(offset + k, heights[k]) for k in range(1, len(heights) - 1)
            if heights[k - 1] < heights[k] > heights[k + 1]}


def dyck_polynomial(n: int):
    """L_n(x): Dyck paths of semilength n counted by peaks above height 1."""
    out = X_RING.zero
    for path in dyck_paths(n):
        out += X ** sum(1 for (_, h) in _peaks(path, 0) if h > 1)
    return out


def _base_heights(n: int, i: int) -> Tuple[int, ...]:
    heights = (0, 1) * n + (0,)
    for _ in range(i - 1):
        heights = (0, 1) + tuple(h + 2 for h in heights) + (1, 0)
    return heights


def nested_dyck_polynomial(n: int, k: int):
    """L_{n,k}(x): k vertex-disjoint nested paths counted by peaks off the lowest family."""
    bases = [set(enumerate(_base_heights(n, i), -2 * (i - 1))) for i in range(1, k + 1)]
    out = X_RING.zero
    occupied: Set[Tuple[int, int]] = set()

    def place(i: int, weight: int):
        nonlocal out
        if i == k:
            out += X ** weight
            return
        semilength = n + 2 * i
        offset = -2 * i
        for heights in dyck_paths(semilength):
            verts = {(offset + t, h) for t, h in enumerate(heights)}
            if verts & occupied:
                continue
            hp = sum(1 for v in _peaks(heights, offset) if v not in bases[i])
            occupied.update(verts)
            place(i + 1, weight + hp)
            occupied.difference_update(verts)

    place(0, 0)
    return out


@dataclass(frozen=True)
class ThickZigzag:
    n: int
    k: int
    direct_count: int
    det_formula_value: object
    dyck: Dict[str, object]

    @property
    def agrees(self) -> bool:
        return self.direct_count == self.det_formula_value and bool(self.dyck["identity_holds"])


def thick_zigzag(n: int, k: int) -> ThickZigzag:
    if n < 1 or k < 1:
        raise ValueError("thick_zigzag needs n >= 1 and k >= 1")
    sh = SkewShape(staircase(n + 2 * k), staircase(n))
    direct = len(dg.generalized_excited_diagrams(sh))
    s_det = det([[QQ(schroeder(n - 2 + i + j)) for j in range(1, k + 1)] for i in range(1, k + 1)])
    value = s_det / QQ(2) ** comb(k, 2)
    L = nested_dyck_polynomial(n, k)
    L_det = det([[dyck_polynomial(n + i + j - 2) for j in range(1, k + 1)] for i in range(1, k + 1)])
    dyck = {
        "L_n": dyck_polynomial(n),
        "L_nk": L,
        "det_L": L_det,
        "identity_holds": X ** comb(k, 2) * L == L_det,
        "L_nk_at_2": L(2),
    }
    return ThickZigzag(n, k, direct, value, dyck)
