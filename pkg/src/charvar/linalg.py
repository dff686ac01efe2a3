"""Exact linear algebra over the integers and the rationals.

Matrices are lists of rows of Python ints or Fractions.  Everything here is
exact; numpy arrays are accepted on input and converted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

Matrix = list[list[int]]


def to_rows(a) -> Matrix:
    if isinstance(a, np.ndarray):
        return [[int(x) for x in row] for row in a.tolist()]
    return [[x for x in row] for row in a]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][t] * b[t][j] for t in range(inner)) for j in range(cols)] for i in range(len(a))]


def transpose(a: Sequence[Sequence], cols: int | None = None) -> list[list]:
    if not a:
        return [[] for _ in range(cols or 0)]
    return [list(r) for r in zip(*a)]


@dataclass
class SmithForm:
    """``U @ A @ V == D`` with ``U``, ``V`` unimodular; inverses kept too."""

    U: Matrix
    D: Matrix
    V: Matrix
    U_inv: Matrix
    V_inv: Matrix

    @property
    def diagonal(self) -> list[int]:
        k = min(len(self.D), len(self.D[0]) if self.D else 0)
        return [self.D[i][i] for i in range(k)]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def smith_normal_form(a, ncols: int | None = None) -> SmithForm:
    """Smith normal form with both transforms and their inverses.

    ``ncols`` is only needed for matrices with zero rows.
    """
    A = to_rows(a)
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    U, Ui = identity(m), identity(m)
    V, Vi = identity(n), identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]
        for row in Ui:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):  # row_dst += c * row_src
        if c == 0:
            return
        A[dst] = [x + c * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]
        for row in Ui:
            row[src] -= c * row[dst]

    def negate_row(i):
        A[i] = [-x for x in A[i]]
        U[i] = [-x for x in U[i]]
        for row in Ui:
            row[i] = -row[i]

    def swap_cols(i, j):
        for M in (A, V):
            for row in M:
                row[i], row[j] = row[j], row[i]
        Vi[i], Vi[j] = Vi[j], Vi[i]

    def add_col(src, dst, c):  # col_dst += c * col_src
        if c == 0:
            return
        for M in (A, V):
            for row in M:
                row[dst] += c * row[src]
        Vi[src] = [x - c * y for x, y in zip(Vi[src], Vi[dst])]

    t = 0
    while t < min(m, n):
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] != 0 and (best is None or abs(A[i][j]) < best):
                    best, pivot = abs(A[i][j]), (i, j)
        if pivot is None:
            break
        i, j = pivot
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    add_row(t, i, -q)
                    if A[i][t]:
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    add_col(t, j, -q)
                    if A[t][j]:
                        done = False
            if done:
                # enforce divisibility of the remaining block
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if A[i][j] % A[t][t]), None)
                if bad is None:
                    break
                add_row(bad[0], t, 1)
                continue
            # move the smallest nonzero entry of row/col t into the pivot
            cands = [(abs(A[i][t]), i, t) for i in range(t, m) if A[i][t]]
            cands += [(abs(A[t][j]), t, j) for j in range(t, n) if A[t][j]]
            _, i, j = min(cands)
            swap_rows(t, i)
            swap_cols(t, j)
        if A[t][t] < 0:
            negate_row(t)
        t += 1
    return SmithForm(U, A, V, Ui, Vi)


def integer_rank(a, ncols: int | None = None) -> int:
    return smith_normal_form(a, ncols).rank


def integer_kernel(a, ncols: int) -> Matrix:
    """Basis (as columns of an ``ncols x r`` matrix) of the saturated kernel."""
    snf = smith_normal_form(a, ncols)
    r = snf.rank
    return [row[r:] for row in snf.V]


def determinant(a) -> Fraction:
    M = [[Fraction(x) for x in row] for row in to_rows(a)]
    n = len(M)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, n):
            if M[r][c]:
                f = M[r][c] / M[c][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return det


# --- rational linear algebra -------------------------------------------------

def bareiss_rank(a) -> int:
    """Rank over Q by fraction-free elimination on an integer matrix."""
    M = [list(row) for row in to_rows(a)]
    if not M or not M[0]:
        return 0
    rows, cols = len(M), len(M[0])
    rank = 0
    prev = 1
    for c in range(cols):
        p = next((r for r in range(rank, rows) if M[r][c] != 0), None)
        if p is None:
            continue
        M[rank], M[p] = M[p], M[rank]
        piv = M[rank][c]
        for r in range(rank + 1, rows):
            M[r] = [(piv * M[r][j] - M[r][c] * M[rank][j]) // prev for j in range(cols)]
        prev = piv
        rank += 1
        if rank == rows:
            break
    return rank


def rref(a) -> tuple[list[list[Fraction]], list[int]]:
    M = [[Fraction(x) for x in row] for row in a]
    if not M:
        return M, []
    rows, cols = len(M), len(M[0])
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return M[:r], pivots


def rational_rank(a) -> int:
    return len(rref(a)[1])


def nullspace(a, ncols: int) -> list[list[Fraction]]:
    """Basis vectors of ``{x : a x = 0}``."""
    R, piv = rref(a) if a else ([], [])
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(R, piv):
            v[p] = -row[f]
        basis.append(v)
    return basis


class Subspace:
    """A subspace of Q^dim held as a reduced row-echelon basis."""

    def __init__(self, dim: int, vectors=()) -> None:
        self.dim = dim
        vecs = [list(v) for v in vectors]
        self.basis, _ = rref(vecs) if vecs else ([], [])

    @classmethod
    def whole(cls, dim: int) -> Subspace:
        return cls(dim, identity(dim))

    def __len__(self) -> int:
        return len(self.basis)

    def __add__(self, other: Subspace) -> Subspace:
        return Subspace(self.dim, self.basis + other.basis)

    def __and__(self, other: Subspace) -> Subspace:
        if not self.basis or not other.basis:
            return Subspace(self.dim)
        # x = sum a_i u_i = sum b_j w_j
        k = len(self.basis)
        cols = self.basis + [[-x for x in w] for w in other.basis]
        system = transpose(cols)
        sols = nullspace(system, len(cols))
        vecs = [[sum(s[i] * self.basis[i][c] for i in range(k)) for c in range(self.dim)] for s in sols]
        return Subspace(self.dim, vecs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self.dim == other.dim and self.basis == other.basis

    def __le__(self, other: Subspace) -> bool:
        return len(self + other) == len(other)

    def image(self, N) -> Subspace:
        """Image of this subspace under the matrix ``N`` (acting on columns)."""
        return Subspace(len(N), [[sum(row[j] * v[j] for j in range(self.dim)) for row in N] for v in self.basis])

    def contains(self, v) -> bool:
        return len(Subspace(self.dim, self.basis + [list(v)])) == len(self)


def image_space(N) -> Subspace:
    """Column space of ``N``."""
    return Subspace(len(N), transpose(N) if N and N[0] else [])


def kernel_space(N, dim: int) -> Subspace:
    return Subspace(dim, nullspace(N, dim) if N else identity(dim))


def matpow(N, k: int, dim: int):
    out = identity(dim)
    for _ in range(k):
        out = matmul(N, out)
    return out
