"""Curious Lefschetz checks on cells ``(C*)^r x C^a``.

``H^*_c`` of such a cell is the exterior algebra on ``r`` generators.  The
piece ``Lambda^k`` sits in cohomological degree ``r + k + 2a`` and weight
``2k + 2a``.  The 2-form acts by wedging with
``[w] = sum_{j<j'} Omega_{jj'} e_j ^ e_j'``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .linalg import Subspace, bareiss_rank, identity, image_space, kernel_space, matmul, matpow

MAX_RANK = 20


class LefschetzError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class GradedSkewModule:
    r1: int
    Omega_red: np.ndarray
    a: int = 0

    def __post_init__(self) -> None:
        if self.r1 > MAX_RANK:
            raise LefschetzError(f"torus rank {self.r1} exceeds the supported {MAX_RANK}")
        om = np.asarray(self.Omega_red, dtype=np.int64).reshape(self.r1, self.r1)
        object.__setattr__(self, "Omega_red", om)

    def degree(self, k: int) -> int:
        return self.r1 + k + 2 * self.a

    def weight(self, k: int) -> int:
        return 2 * k + 2 * self.a

    def dim(self, k: int) -> int:
        return math.comb(self.r1, k) if 0 <= k <= self.r1 else 0


def _basis(r: int, k: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(r), k))


def _wedge(x: dict, y: dict) -> dict:
    out: dict[tuple[int, ...], int] = {}
    for s, cs in x.items():
        for t, ct in y.items():
            if set(s) & set(t):
                continue
            merged = s + t
            # sign of the sorting permutation
            inv = sum(1 for i in range(len(merged)) for j in range(i + 1, len(merged)) if merged[i] > merged[j])
            key = tuple(sorted(merged))
            out[key] = out.get(key, 0) + (-cs * ct if inv % 2 else cs * ct)
    return {k: v for k, v in out.items() if v}


def omega_form(Omega: np.ndarray) -> dict:
    r = Omega.shape[0]
    return {(j, jj): int(Omega[j, jj]) for j in range(r) for jj in range(j + 1, r) if Omega[j, jj]}


def omega_power(Omega: np.ndarray, i: int) -> dict:
    out: dict = {(): 1}
    w = omega_form(Omega)
    for _ in range(i):
        out = _wedge(w, out)
    return out


def wedge_matrix(Omega: np.ndarray, i: int, k: int) -> list[list[int]]:
    """Matrix of ``x -> [w]^i ^ x`` from ``Lambda^k`` to ``Lambda^{k+2i}``."""
    r = Omega.shape[0]
    src, dst = _basis(r, k), _basis(r, k + 2 * i)
    index = {s: n for n, s in enumerate(dst)}
    wi = omega_power(Omega, i)
    M = [[0] * len(src) for _ in dst]
    for col, s in enumerate(src):
        for key, c in _wedge(wi, {s: 1}).items():
            M[index[key]][col] += c
    return M


@dataclass
class LefschetzReport:
    passed: bool
    ranks: dict[int, tuple[int, int]]
    middle_weight: Fraction
    supplied: Fraction | None

    def __bool__(self) -> bool:
        return self.passed


def curious_lefschetz_check(M: GradedSkewModule, d=None) -> LefschetzReport:
    """Check that ``[w]^i : Lambda^{r/2-i} -> Lambda^{r/2+i}`` is bijective for ``i >= 1``.

    ``d`` is the expected middle weight in halved units, ``r/2 + a``.  The
    report fails if it is supplied and disagrees.
    """
    r = M.r1
    if r % 2:
        raise LefschetzError("odd torus rank has no middle degree")
    ranks = {}
    ok = True
    for i in range(1, r // 2 + 1):
        mat = wedge_matrix(M.Omega_red, i, r // 2 - i)
        rk = bareiss_rank(mat)
        need = math.comb(r, r // 2 - i)
        ranks[i] = (rk, need)
        ok = ok and rk == need
    middle = Fraction(r, 2) + M.a
    supplied = None if d is None else Fraction(d)
    if supplied is not None and supplied != middle:
        ok = False
    return LefschetzReport(ok, ranks, middle, supplied)


# --- two-variable polynomials in u, v -------------------------------------------

Poly2 = dict  # (u exponent, v exponent) -> int


def _padd(a: Poly2, b: Poly2, scale: int = 1) -> Poly2:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + scale * c
    return {e: c for e, c in out.items() if c}


def mh_closed_form(r1: int, a: int) -> Poly2:
    """``sum_k C(r1, k) u^{r1+k+2a} v^{k+a}``."""
    return {(r1 + k + 2 * a, k + a): math.comb(r1, k) for k in range(r1 + 1)}


def kernel_dims(M: GradedSkewModule, i: int) -> dict[int, int]:
    """``g_i``: cohomological degree -> dim ker of ``[w]^i`` on that degree."""
    out = {}
    for k in range(M.r1 + 1):
        src = M.dim(k)
        if k + 2 * i > M.r1:
            out[M.degree(k)] = src
            continue
        out[M.degree(k)] = src - bareiss_rank(wedge_matrix(M.Omega_red, i, k))
    return out


def mh_from_kernels(M: GradedSkewModule) -> Poly2:
    """Mixed Hodge polynomial rebuilt from kernel dimensions of powers of ``[w]``.

    With ``g_i(u)`` the kernel generating functions, the primitive parts are
    ``f_i = (1+u^2) g_{i+1} - g_i - u^2 g_{i+2}``.  Each primitive class of
    ``f_i`` starts a string of ``i+1`` classes, and every step raises both
    ``u`` and ``v`` by 2.  The string starts at ``v^{d-i}`` with ``d`` the
    halved middle weight.
    """
    if not curious_lefschetz_check(M):
        raise LefschetzError("the form does not satisfy the Lefschetz property")
    top = M.r1 // 2 + 2
    g: dict[int, Poly2] = {}
    for i in range(0, top + 3):
        g[i] = {} if i <= 0 else {(deg, 0): c for deg, c in kernel_dims(M, i).items() if c}
    u2 = {(2, 0): 1}

    def times(p: Poly2, m: Poly2) -> Poly2:
        out: Poly2 = {}
        for (a1, b1), c1 in p.items():
            for (a2, b2), c2 in m.items():
                out[(a1 + a2, b1 + b2)] = out.get((a1 + a2, b1 + b2), 0) + c1 * c2
        return {e: c for e, c in out.items() if c}

    d2 = M.r1 + 2 * M.a  # twice the middle weight in halved units
    mh: Poly2 = {}
    for i in range(0, top + 1):
        f = _padd(_padd(times(g[i + 1], {(0, 0): 1, (2, 0): 1}), g[i], -1), times(g[i + 2], u2), -1)
        if not f:
            continue
        if (d2 - 2 * i) % 2:
            raise LefschetzError("half-integral Hodge index")
        start = (d2 - 2 * i) // 2
        for j in range(i + 1):
            mh = _padd(mh, {(ue + 2 * j, start + 2 * j): c for (ue, _), c in f.items()})
    return mh


# --- monodromic filtration -----------------------------------------------------------

def _is_nilpotent(N, dim: int) -> bool:
    return not any(any(row) for row in matpow(N, dim, dim)) if dim else True


@dataclass
class Filtration:
    """Decreasing filtration ``F^m``; ``steps[m]`` for ``lo <= m <= hi``."""

    dim: int
    steps: dict[int, Subspace]
    lo: int
    hi: int

    def __getitem__(self, m: int) -> Subspace:
        if m < self.lo:
            return Subspace.whole(self.dim)
        if m > self.hi:
            return Subspace(self.dim)
        return self.steps[m]

    def dims(self) -> dict[int, int]:
        return {m: len(self[m]) for m in range(self.lo, self.hi + 1)}

    def graded_dims(self) -> dict[int, int]:
        out = {}
        for m in range(self.lo, self.hi + 1):
            d = len(self[m]) - len(self[m + 1])
            if d:
                out[m] = d
        return out


def monodromic_filtration(N) -> Filtration:
    """``F^m = sum_{i-j=m} im N^i  cap  ker N^{j+1}`` for a nilpotent ``N``."""
    N = [[Fraction(x) for x in row] for row in (N.tolist() if isinstance(N, np.ndarray) else N)]
    dim = len(N)
    if not _is_nilpotent(N, dim):
        raise LefschetzError("matrix is not nilpotent")
    if dim == 0:
        return Filtration(0, {0: Subspace(0)}, 0, 0)
    powers = [identity(dim)]
    for _ in range(dim + 1):
        powers.append(matmul(N, powers[-1]))
    ims = [image_space(P) for P in powers]
    kers = [kernel_space(P, dim) for P in powers]
    steps = {}
    for m in range(-dim, dim + 1):
        acc = Subspace(dim)
        for i in range(0, dim + 1):
            j = i - m
            if j < 0 or j + 1 > dim + 1:
                continue
            acc = acc + (ims[i] & kers[j + 1])
        steps[m] = acc
    return Filtration(dim, steps, -dim, dim)


def check_lefschetz_filtration(N, F: Filtration) -> bool:
    """``N F^m <= F^{m+2}`` and ``N^i : Gr^{-i} -> Gr^{i}`` bijective for ``i >= 0``."""
    N = [[Fraction(x) for x in row] for row in (N.tolist() if isinstance(N, np.ndarray) else N)]
    dim = F.dim
    for m in range(F.lo - 1, F.hi + 1):
        if not F[m].image(N) <= F[m + 2]:
            return False
        if not F[m + 1] <= F[m]:
            return False
    for i in range(0, dim + 1):
        Ni = matpow(N, i, dim)
        gr_lo = len(F[-i]) - len(F[-i + 1])
        gr_hi = len(F[i]) - len(F[i + 1])
        if gr_lo != gr_hi:
            return False
        if not F[-i].image(Ni) <= F[i]:
            return False
        # injective on Gr^{-i}: only F^{-i+1} maps into F^{i+1}
        hit = len(F[-i].image(Ni) + F[i + 1]) - len(F[i + 1])
        if hit != gr_lo:
            return False
    return True


def jordan_weights(block_sizes: Sequence[int]) -> dict[int, int]:
    """Expected graded dimensions: a block of size ``s`` fills ``-(s-1), -(s-3), ..., s-1``."""
    out: dict[int, int] = {}
    for s in block_sizes:
        for w in range(-(s - 1), s, 2):
            out[w] = out.get(w, 0) + 1
    return out


def exterior_wedge_operator(Omega: np.ndarray) -> tuple[list[list[int]], list[int]]:
    """``[w] ^ -`` on all of ``Lambda^*``, with the degree of each basis vector."""
    r = Omega.shape[0]
    basis = [s for k in range(r + 1) for s in _basis(r, k)]
    index = {s: i for i, s in enumerate(basis)}
    w = omega_form(Omega)
    M = [[0] * len(basis) for _ in basis]
    for col, s in enumerate(basis):
        for key, c in _wedge(w, {s: 1}).items():
            M[index[key]][col] += c
    return M, [len(s) for s in basis]


def check_cell(r1: int, omega_red: np.ndarray, affine_dim: int) -> LefschetzReport:
    return curious_lefschetz_check(GradedSkewModule(r1, omega_red, affine_dim), Fraction(r1, 2) + affine_dim)
