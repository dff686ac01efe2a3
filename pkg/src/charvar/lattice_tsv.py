"""Lattice data of torus-equivariant twisted symplectic varieties.

A :class:`ToricTSV` records, for a variety ``(C*)^m`` with a map to the
diagonal torus ``T = (C*)^n``:

* ``Phi`` (n x m): column ``k`` is the cocharacter of coordinate ``k``,
* ``Psi`` (m x n): the action of the cocharacter ``e_j`` of ``T``,
* ``pi``: the permutation the map is equivariant for,
* ``Omega`` (m x m): the integer skew form of the 2-form,
* ``neg_mask`` (n x m): where a ``-1`` sign multiplies the coordinate.

Axioms (checked by :func:`check_axioms`)::

    Phi Psi = M(pi) - I
    Omega(Psi v, g) = <(M(pi) + I) v, Phi g>
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import linalg
from .coxeter import BraidWord, Permutation, length
from .walks import CellShape


def _frozen(a) -> np.ndarray:
    arr = np.array(a, dtype=np.int64)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class ToricTSV:
    n: int
    Phi: np.ndarray
    Psi: np.ndarray
    pi: Permutation
    Omega: np.ndarray
    neg_mask: np.ndarray

    def __post_init__(self) -> None:
        m = self.Phi.shape[1] if self.Phi.ndim == 2 else 0
        object.__setattr__(self, "Phi", _frozen(np.reshape(self.Phi, (self.n, m))))
        object.__setattr__(self, "Psi", _frozen(np.reshape(self.Psi, (m, self.n))))
        object.__setattr__(self, "Omega", _frozen(np.reshape(self.Omega, (m, m))))
        object.__setattr__(self, "neg_mask", _frozen(np.reshape(self.neg_mask, (self.n, m))))
        if self.pi.n != self.n:
            raise ValueError("permutation size does not match torus rank")

    @property
    def m(self) -> int:
        return self.Phi.shape[1]

    @classmethod
    def trivial(cls, n: int, pi: Permutation | None = None) -> ToricTSV:
        z = np.zeros((n, 0), dtype=np.int64)
        return cls(n, z, z.T, pi or Permutation.identity(n), np.zeros((0, 0), dtype=np.int64), z)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ToricTSV):
            return NotImplemented
        return (self.n == other.n and self.pi == other.pi
                and all(np.array_equal(getattr(self, f), getattr(other, f))
                        for f in ("Phi", "Psi", "Omega", "neg_mask")))

    __hash__ = None

    def reorder(self, order: Sequence[int]) -> ToricTSV:
        """Same TSV with lattice basis ``(g_order[0], g_order[1], ...)``."""
        idx = list(order)
        return ToricTSV(self.n, self.Phi[:, idx], self.Psi[idx, :], self.pi,
                        self.Omega[np.ix_(idx, idx)], self.neg_mask[:, idx])

    def relabel(self, p: Permutation) -> ToricTSV:
        """Pull back along the relabeling of torus coordinates by ``p``.

        The new map is ``t -> p^{-1}(f(t))``: coordinate ``j`` of the new
        target is coordinate ``p(j)`` of the old one.
        """
        P = p.matrix()
        Pinv = p.inverse().matrix()
        return ToricTSV(self.n, Pinv @ self.Phi, self.Psi @ P, p.inverse() * self.pi * p,
                        self.Omega, Pinv @ self.neg_mask)


def stay_tsv(n: int, i: int, i_prime: int) -> ToricTSV:
    """The torus ``z -> (z at i, -1/z at i')``, equivariant for ``(i i')``."""
    if i == i_prime:
        raise ValueError("stay generator needs two distinct positions")
    phi = np.zeros((n, 1), dtype=np.int64)
    phi[i - 1, 0], phi[i_prime - 1, 0] = 1, -1
    mask = np.zeros((n, 1), dtype=np.int64)
    mask[i_prime - 1, 0] = 1
    return ToricTSV(n, phi, -phi.T, Permutation.transposition(n, i, i_prime),
                    np.zeros((1, 1), dtype=np.int64), mask)


def handle_tsv(pi1: Permutation, pi2: Permutation) -> ToricTSV:
    """The torus part of the handle ``(t1, t2) -> pi2^{-1}(t1) t2 t1^{-1} pi1^{-1}(t2)^{-1}``.

    Basis ``(g_1..g_n, g'_1..g'_n)``: cocharacters of ``t1`` then ``t2``.
    """
    if pi1.n != pi2.n:
        raise ValueError("handle permutations of different sizes")
    n = pi1.n
    I = np.eye(n, dtype=np.int64)
    M1i, M2i = pi1.inverse().matrix(), pi2.inverse().matrix()
    twist = (pi2 * pi1).matrix()
    phi = np.hstack([M2i - I, I - M1i])
    psi = np.vstack([(M1i - I) @ twist, (M2i - I) @ twist])
    # A[x, y] = rot(x) . y in the basis above
    A = np.zeros((2 * n, 2 * n), dtype=np.int64)
    p1i, p2i = pi1.inverse(), pi2.inverse()
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            A[i - 1, j - 1] = (i == j) - (p2i(i) == j)
            A[n + i - 1, n + j - 1] = (i == j) - (i == p1i(j))
            A[n + i - 1, j - 1] = -(i == j)
            A[i - 1, n + j - 1] = -(p2i(i) == p1i(j)) + (i == p1i(j)) + (p2i(i) == j)
    return ToricTSV(n, phi, psi, p2i * p1i * pi2 * pi1, A - A.T, np.zeros((n, 2 * n), dtype=np.int64))


def convolve(X: ToricTSV, Y: ToricTSV) -> ToricTSV:
    """Convolution ``X * Y`` (``Y`` is the right factor, applied first)."""
    if X.n != Y.n:
        raise ValueError("convolution of TSVs over different tori")
    cross = X.Phi.T @ Y.Phi
    omega = np.block([[X.Omega, cross], [-cross.T, Y.Omega]])
    psi = np.vstack([X.Psi @ Y.pi.matrix(), Y.Psi])
    return ToricTSV(X.n, np.hstack([X.Phi, Y.Phi]), psi, X.pi * Y.pi, omega,
                    np.hstack([X.neg_mask, Y.neg_mask]))


def convolve_all(n: int, factors: Sequence[ToricTSV]) -> ToricTSV:
    """Matrix-order product ``factors[0] * factors[1] * ...``."""
    out = ToricTSV.trivial(n)
    for f in reversed(factors):
        out = convolve(f, out)
    return out


def cell_tsv(b: BraidWord, shape: CellShape) -> ToricTSV:
    """The torus of a walk cell, straight from the stay records."""
    if shape.n != b.n or shape.length != len(b):
        raise ValueError("cell shape does not belong to this braid")
    n, m = b.n, len(shape.stays)
    phi = np.zeros((n, m), dtype=np.int64)
    psi = np.zeros((m, n), dtype=np.int64)
    mask = np.zeros((n, m), dtype=np.int64)
    for c, rec in enumerate(shape.stays):
        phi[rec.a_pos - 1, c] += 1
        phi[rec.b_pos - 1, c] -= 1
        mask[rec.b_pos - 1, c] = 1
        psi[c, rec.a_act - 1] += 1
        psi[c, rec.b_act - 1] -= 1
    gram = phi.T @ phi
    lower = np.tril(gram, -1)
    return ToricTSV(n, phi, psi, b.permutation(), lower - lower.T, mask)


def cell_tsv_by_convolution(b: BraidWord, shape: CellShape) -> ToricTSV:
    """Same cell as :func:`cell_tsv`, as a right-to-left convolution of stays."""
    pieces = [stay_tsv(b.n, rec.a_pos, rec.b_pos) for rec in shape.stays]
    out = convolve_all(b.n, pieces[::-1])
    # the convolution lists the latest stay first; restore crossing order
    return out.reorder(range(out.m - 1, -1, -1))


@dataclass
class AxiomReport:
    ok: bool
    violations: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def check_axioms(X: ToricTSV) -> AxiomReport:
    problems = []
    Mpi = X.pi.matrix()
    I = np.eye(X.n, dtype=np.int64)
    if not np.array_equal(X.Omega, -X.Omega.T):
        problems.append("Omega is not antisymmetric")
    lhs = X.Phi @ X.Psi
    for i, j in zip(*np.nonzero(lhs - (Mpi - I))):
        problems.append(f"(Phi Psi)[{i + 1},{j + 1}] = {lhs[i, j]}, expected {(Mpi - I)[i, j]}")
    # row v: (Psi e_v)^T Omega versus ((M+I) e_v)^T Phi
    left = X.Psi.T @ X.Omega
    right = (Mpi + I).T @ X.Phi
    for v, g in zip(*np.nonzero(left - right)):
        problems.append(f"Omega(Psi e_{v + 1}, g_{g + 1}) = {left[v, g]}, expected {right[v, g]}")
    return AxiomReport(not problems, problems)


def phi_components(X: ToricTSV) -> list[frozenset[int]]:
    """Connected components of the torus coordinates linked by columns of Phi.

    Every column we ever build has the form ``e_a - e_b`` or zero, so this is
    the same as asking whether ``rank Phi = n - 1``.
    """
    parent = list(range(X.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for col in X.Phi.T:
        support = [int(i) + 1 for i in np.nonzero(col)[0]]
        for a in support[1:]:
            parent[find(a)] = find(support[0])
    groups: dict[int, set[int]] = {}
    for v in range(1, X.n + 1):
        groups.setdefault(find(v), set()).add(v)
    return sorted((frozenset(g) for g in groups.values()), key=min)


def is_connected(X: ToricTSV) -> bool:
    return linalg.integer_rank(X.Phi.tolist(), X.m) == X.n - 1 if X.m else X.n == 1


def image_sign(X: ToricTSV, subset: Iterable[int]) -> int:
    """``prod_{i in subset} t_i`` on the image of the map, for a Phi-closed subset.

    On a union of components of :func:`phi_components` the characters cancel
    and only the ``-1`` signs survive.
    """
    rows = [i - 1 for i in subset]
    return -1 if int(X.neg_mask[rows].sum()) % 2 else 1


@dataclass(frozen=True, eq=False)
class ReducedCell:
    """The lattice ``ker Phi / Psi(fixed cocharacters)`` with its skew form."""

    r1: int
    Omega_red: np.ndarray
    affine_dim: int = 0
    middle_weight: int | None = None
    torsion: tuple[int, ...] = ()
    diagnostics: tuple[str, ...] = ()

    def with_dims(self, affine_dim: int, middle_weight: int) -> ReducedCell:
        return ReducedCell(self.r1, self.Omega_red, affine_dim, middle_weight, self.torsion, self.diagnostics)


def fixed_lattice(pi: Permutation) -> list[list[int]]:
    """Columns spanning ``(Z^n)^pi``: indicator vectors of the cycles."""
    cols = []
    for cyc in pi.cycles():
        v = [0] * pi.n
        for i in cyc:
            v[i - 1] = 1
        cols.append(v)
    return linalg.transpose(cols)


def fiber_reduction(X: ToricTSV) -> ReducedCell:
    m = X.m
    if m == 0:
        return ReducedCell(0, np.zeros((0, 0), dtype=np.int64))
    snf = linalg.smith_normal_form(X.Phi.tolist(), m)
    rho = snf.rank
    K = [row[rho:] for row in snf.V]          # m x rk, saturated kernel basis
    rk = m - rho
    if rk == 0:
        return ReducedCell(0, np.zeros((0, 0), dtype=np.int64))
    fix = fixed_lattice(X.pi)                  # n x c
    L = linalg.matmul(X.Psi.tolist(), fix)     # m x c, lies in ker Phi
    coords_all = linalg.matmul(snf.V_inv, L)
    diagnostics = []
    if any(coords_all[i][j] for i in range(rho) for j in range(len(fix[0]))):
        raise ArithmeticError("Psi of a fixed cocharacter is not in ker Phi")
    coords = coords_all[rho:]                  # rk x c
    snf2 = linalg.smith_normal_form(coords, len(fix[0]))
    s = snf2.rank
    torsion = tuple(d for d in snf2.diagonal[:s] if d != 1)
    if torsion:
        diagnostics.append(f"torsion in ker Phi / Psi(fix): {torsion}")
    # new kernel basis K U^{-1}: first s columns span the saturation of L
    Kp = linalg.matmul(K, snf2.U_inv)
    B = [row[s:] for row in Kp]                # m x r1
    r1 = rk - s
    Om = X.Omega.tolist()
    red = linalg.matmul(linalg.matmul(linalg.transpose(B, r1), Om), B) if r1 else []
    sat = [row[:s] for row in Kp]
    if s and any(linalg.matmul(linalg.matmul(linalg.transpose(sat, s), Om), Kp)[i][j]
                 for i in range(s) for j in range(rk)):
        diagnostics.append("Omega does not vanish on the fixed-cocharacter image")
    return ReducedCell(r1, np.array(red, dtype=np.int64).reshape(r1, r1),
                       torsion=torsion, diagnostics=tuple(diagnostics))


def rank_formula_check(X: ToricTSV, shape: CellShape, braid: BraidWord) -> bool:
    """``r1 = l(b) - 2|U| - n - c(pi(b)) + 2`` for a connected cell."""
    r1 = fiber_reduction(X).r1
    expected = len(braid) - 2 * len(shape.up) - braid.n - braid.permutation().cycle_count() + 2
    return r1 == expected
