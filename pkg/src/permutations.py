"""
Permutations in one-line notation and the diagrams attached to them.

The Rothe diagram of w is R(w) = {(i, w_j) : i < j, w_i > w_j}.  For a
vexillary w the shape mu(w) is the sorted Lehmer code and the supershape
lambda(w) is the smallest partition containing R(w), which is the union of
the rectangles [1,i] x [1,j] over the essential set.
"""

import random
from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Iterable, Optional, Tuple

from errors import PermutationError
from shapes import Cell, Partition


@dataclass(frozen=True, order=True)
class Permutation:
    word: Tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(v) for v in self.word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise PermutationError(f"Not a permutation of 1..{len(word)}: {word}")
        object.__setattr__(self, "word", word)

    @classmethod
    def of(cls, *word: int) -> "Permutation":
        return cls(tuple(word))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    def __len__(self):
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def descents(self) -> Tuple[int, ...]:
        return tuple(i for i in range(1, len(self)) if self(i) > self(i + 1))

    def lehmer_code(self) -> Tuple[int, ...]:
        w = self.word
        return tuple(sum(1 for b in w[i + 1:] if b < a) for i, a in enumerate(w))

    def __str__(self):
        sep = "," if len(self) > 9 else ""
        return sep.join(str(v) for v in self.word)


def parse_permutation(text: str) -> Permutation:
    """Read "1432" or "1,4,3,2"."""
    text = text.strip()
    try:
        word = [int(v) for v in text.split(",")] if "," in text else [int(v) for v in text]
    except ValueError:
        raise PermutationError(f"Bad permutation syntax: {text!r}")
    return Permutation(tuple(word))


def rothe(w: Permutation) -> FrozenSet[Cell]:
    n = len(w)
    return frozenset(Cell(i, w(j)) for i in range(1, n + 1)
                     for j in range(i + 1, n + 1) if w(i) > w(j))


def essential_set(w: Permutation) -> FrozenSet[Cell]:
    R = rothe(w)
    return frozenset(c for c in R
                     if Cell(c.row + 1, c.col) not in R
                     and Cell(c.row, c.col + 1) not in R
                     and Cell(c.row + 1, c.col + 1) not in R)


def contains_pattern(w: Permutation, pattern: Iterable[int]) -> bool:
    pattern = tuple(pattern)
    k = len(pattern)
    for idx in combinations(range(len(w)), k):
        values = [w.word[i] for i in idx]
        ranks = tuple(sorted(values).index(v) + 1 for v in values)
        if ranks == pattern:
            return True
    return False


def is_grassmannian(w: Permutation) -> bool:
    return len(w.descents()) <= 1


def is_vexillary(w: Permutation) -> bool:
    return not contains_pattern(w, (2, 1, 4, 3))


def is_dominant(w: Permutation) -> bool:
    return not contains_pattern(w, (1, 3, 2))


def _require_vexillary(w: Permutation):
    if not is_vexillary(w):
        raise PermutationError(f"{w} contains 2143 and is not vexillary", {"perm": str(w)})


def mu_of(w: Permutation) -> Partition:
    _require_vexillary(w)
    return Partition(tuple(sorted((c for c in w.lehmer_code() if c), reverse=True)))


def smallest_partition_containing(cells: Iterable[Cell]) -> Partition:
    cells = list(cells)
    if not cells:
        return Partition()
    rows = max(c.row for c in cells)
    return Partition(tuple(max((c.col for c in cells if c.row >= i), default=0)
                           for i in range(1, rows + 1)))


def supershape_of(w: Permutation) -> Partition:
    _require_vexillary(w)
    ess = essential_set(w)
    if not ess:
        return Partition()
    rows = max(c.row for c in ess)
    return Partition(tuple(max(c.col for c in ess if c.row >= i) for i in range(1, rows + 1)))


def grassmannian_perm(mu: Partition, d: int, N: Optional[int] = None) -> Permutation:
    """The permutation with its only descent at d whose shape is mu."""
    if len(mu) > d:
        raise PermutationError(f"{mu} has more than {d} parts")
    N = d + mu.part(1) if N is None else N
    head = [i + mu.part(d + 1 - i) for i in range(1, d + 1)]
    if head and head[-1] > N:
        raise PermutationError(f"N = {N} is too small for {mu} with d = {d}")
    tail = [v for v in range(1, N + 1) if v not in head]
    return Permutation(tuple(head + tail))


def w_nk(n: int, k: int) -> Permutation:
    """(1, 2, ..., k, n+k, n+k-1, ..., k+1)"""
    if n < 1 or k < 1:
        raise ValueError("w_nk needs n >= 1 and k >= 1")
    return Permutation(tuple(range(1, k + 1)) + tuple(range(n + k, k, -1)))


def random_vexillary(seed: int, size: int, attempts: int = 1000) -> Permutation:
    rng = random.Random(f"vexillary:{seed}:{size}")
    word = list(range(1, size + 1))
    for _ in range(attempts):
        rng.shuffle(word)
        w = Permutation(tuple(word))
        if is_vexillary(w):
            return w
    raise PermutationError(f"No vexillary permutation of size {size} in {attempts} draws")
