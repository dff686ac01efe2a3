"""Shared sweep data for the tests."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from charvar.coxeter import BraidWord, Permutation, all_permutations
from charvar.lattice_tsv import convolve_all, handle_tsv, stay_tsv
from charvar.strata import CharVarSpec

LEFSCHETZ_MATRIX = [(0, 3, 2), (0, 4, 2), (0, 5, 2), (0, 3, 3), (1, 1, 2), (1, 2, 2)]


def regular_spec(g: int, k: int, n: int) -> CharVarSpec:
    return CharVarSpec(g, n, k, tuple((1,) * n for _ in range(k)))


def all_braids(max_len: int, max_n: int):
    for n in range(1, max_n + 1):
        for l in range(max_len + 1):
            if n == 1 and l:
                break
            for letters in itertools.product(range(1, n), repeat=l):
                yield BraidWord(n, letters)


def random_chain(rng: random.Random, n: int):
    """A random product of stay and handle tori, some of them relabelled."""
    perms = list(all_permutations(n))
    factors = []
    for _ in range(rng.randint(1, 6)):
        if rng.random() < 0.7:
            i, j = rng.sample(range(1, n + 1), 2)
            X = stay_tsv(n, i, j)
        else:
            X = handle_tsv(rng.choice(perms), rng.choice(perms))
        if rng.random() < 0.5:
            X = X.relabel(rng.choice(perms))
        factors.append(X)
    return convolve_all(n, factors)


def random_unimodular(rng: random.Random, size: int, steps: int = 30):
    """``(U, U^{-1})`` as integer matrices, from elementary row operations."""
    U = [[int(i == j) for j in range(size)] for i in range(size)]
    Ui = [row[:] for row in U]
    for _ in range(steps if size > 1 else 0):
        i, j = rng.sample(range(size), 2)
        c = rng.choice([-2, -1, 1, 2])
        U[i] = [a + c * b for a, b in zip(U[i], U[j])]                    # E U
        for row in Ui:                                                     # U^{-1} E^{-1}
            row[j] -= c * row[i]
    return U, Ui


def jordan_nilpotent(blocks):
    size = sum(blocks)
    N = [[0] * size for _ in range(size)]
    pos = 0
    for s in blocks:
        for r in range(s - 1):
            N[pos + r][pos + r + 1] = 1
        pos += s
    return N


def random_nilpotent(rng: random.Random, max_size: int = 12):
    """A conjugated nilpotent with known Jordan type."""
    size = rng.randint(1, max_size)
    blocks, left = [], size
    while left:
        s = rng.randint(1, left)
        blocks.append(s)
        left -= s
    J = jordan_nilpotent(blocks)
    U, Ui = random_unimodular(rng, size)
    mm = lambda A, B: [[sum(A[i][t] * B[t][j] for t in range(size)) for j in range(size)] for i in range(size)]
    N = mm(mm(U, J), Ui)
    return [[Fraction(x) for x in row] for row in N], blocks
