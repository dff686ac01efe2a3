"""Permutations of {1..n}, positive braid words and parabolic coset representatives.

Conventions used throughout the package:

* A permutation is stored in one-line notation, ``p(i) = one_line[i-1]``.
* Products compose like functions: ``(p * q)(i) = p(q(i))``.
* ``M(p)`` is the permutation matrix with ``M(p) e_j = e_{p(j)}``, so that
  ``M(p * q) = M(p) M(q)``.
* A braid word with letters ``(i_1, ..., i_l)`` stands for
  ``sigma_{i_l} ... sigma_{i_1}``: the first letter acts first.  Its
  permutation is ``tau_{i_l} ... tau_{i_1}``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np


@dataclass(frozen=True)
class Permutation:
    one_line: tuple[int, ...]

    def __post_init__(self) -> None:
        line = tuple(int(x) for x in self.one_line)
        if sorted(line) != list(range(1, len(line) + 1)):
            raise ValueError(f"not a permutation of 1..{len(line)}: {self.one_line}")
        object.__setattr__(self, "one_line", line)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> Permutation:
        """The transposition swapping ``i`` and ``j``."""
        line = list(range(1, n + 1))
        line[i - 1], line[j - 1] = j, i
        return cls(tuple(line))

    @classmethod
    def simple(cls, n: int, i: int) -> Permutation:
        return cls.transposition(n, i, i + 1)

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, i: int) -> int:
        return self.one_line[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if other.n != self.n:
            raise ValueError("permutations of different sizes")
        return Permutation(tuple(self.one_line[j - 1] for j in other.one_line))

    def __repr__(self) -> str:
        return f"Permutation({self.one_line})"

    @cached_property
    def _inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, v in enumerate(self.one_line, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def inverse(self) -> Permutation:
        return self._inverse

    def is_identity(self) -> bool:
        return self.one_line == tuple(range(1, self.n + 1))

    def swap_values(self, i: int) -> Permutation:
        """Return ``tau_i * self`` (swap the values ``i`` and ``i+1``)."""
        def f(v: int) -> int:
            return i + 1 if v == i else i if v == i + 1 else v
        return Permutation(tuple(f(v) for v in self.one_line))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycle decomposition, each cycle starting at its smallest element."""
        seen: set[int] = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_count(self) -> int:
        return len(self.cycles())

    def sign(self) -> int:
        return -1 if (self.n - self.cycle_count()) % 2 else 1

    def matrix(self) -> np.ndarray:
        m = np.zeros((self.n, self.n), dtype=np.int64)
        for j, v in enumerate(self.one_line):
            m[v - 1, j] = 1
        return m


def inversions(p: Permutation) -> list[tuple[int, int]]:
    line = p.one_line
    return [(i + 1, j + 1) for i, j in itertools.combinations(range(p.n), 2) if line[i] > line[j]]


def length(p: Permutation) -> int:
    """Coxeter length: the number of inversions."""
    line = p.one_line
    return sum(1 for i, j in itertools.combinations(range(p.n), 2) if line[i] > line[j])


def goes_up(p: Permutation, i: int) -> bool:
    """True iff ``length(tau_i p) > length(p)``."""
    if not 1 <= i < p.n:
        raise ValueError(f"strand index {i} out of range for S_{p.n}")
    inv = p.inverse()
    return inv(i) < inv(i + 1)


def all_permutations(n: int) -> Iterator[Permutation]:
    for line in itertools.permutations(range(1, n + 1)):
        yield Permutation(line)


@dataclass(frozen=True)
class BraidWord:
    """A word in the positive braid monoid; ``letters[0]`` acts first."""

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        letters = tuple(int(x) for x in self.letters)
        if self.n < 1:
            raise ValueError("need at least one strand")
        for x in letters:
            if not 1 <= x < self.n:
                raise ValueError(f"letter {x} invalid on {self.n} strands")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __matmul__(self, other: BraidWord) -> BraidWord:
        """Matrix-order product ``self * other`` (``other`` acts first)."""
        if other.n != self.n:
            raise ValueError("braids on different strand counts")
        return BraidWord(self.n, other.letters + self.letters)

    def permutation(self) -> Permutation:
        return braid_permutation(self)

    def prefix_permutations(self) -> list[Permutation]:
        """``[pi_0, pi_1, ..., pi_l]`` with ``pi_k = tau_{i_k} ... tau_{i_1}``."""
        p = Permutation.identity(self.n)
        out = [p]
        for i in self.letters:
            p = p.swap_values(i)
            out.append(p)
        return out


def braid_permutation(b: BraidWord) -> Permutation:
    return b.prefix_permutations()[-1]


def concat(n: int, factors: Sequence[BraidWord]) -> BraidWord:
    """Matrix-order product ``factors[0] * factors[1] * ...``."""
    letters: tuple[int, ...] = ()
    for f in reversed(factors):
        letters += f.letters
    return BraidWord(n, letters)


def positive_lift(p: Permutation) -> BraidWord:
    """Lexicographically smallest reduced word with ``braid_permutation == p``.

    The first letter must be a right descent of ``p`` (since ``p = p' tau_{i_1}``
    with ``p'`` shorter), so taking the smallest descent at each step gives the
    lexicographic minimum.
    """
    letters = []
    cur = p
    while not cur.is_identity():
        line = cur.one_line
        i = next(j for j in range(1, cur.n) if line[j - 1] > line[j])
        letters.append(i)
        cur = cur * Permutation.simple(cur.n, i)
    return BraidWord(p.n, tuple(letters))


def min_coset_reps(mu: Sequence[int]) -> list[Permutation]:
    """Minimal length representatives of ``S_n / S_mu``.

    These are the permutations increasing on each block of consecutive
    positions described by the composition ``mu``.  Sorted by length, then
    one-line notation.
    """
    mu = tuple(int(x) for x in mu)
    if any(x <= 0 for x in mu):
        raise ValueError(f"composition parts must be positive: {mu}")
    n = sum(mu)
    blocks = []
    start = 0
    for part in mu:
        blocks.append(range(start, start + part))
        start += part
    reps = []
    for line in itertools.permutations(range(1, n + 1)):
        if all(line[j] < line[j + 1] for blk in blocks for j in blk[:-1]):
            reps.append(Permutation(line))
    reps.sort(key=lambda p: (length(p), p.one_line))
    return reps
