"""Symmetric functions in several alphabets, truncated by degree.

A :class:`Series` in ``k`` alphabets has homogeneous pieces ``parts[d]``
spanned by ``p_{nu_1}[X_1] ... p_{nu_k}[X_k]`` with every ``|nu_i| = d``
(all series used here are balanced across alphabets).  Coefficients are
exact rationals, i.e. the series is evaluated at a numeric point of the
coefficient ring.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping

Partition = tuple[int, ...]


@lru_cache(maxsize=None)
def partitions(n: int, largest: int | None = None) -> tuple[Partition, ...]:
    """Partitions of ``n`` in reverse lexicographic order."""
    largest = n if largest is None else largest
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def conjugate(lam: Partition) -> Partition:
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0])) if lam else ()


def z_factor(nu: Partition) -> int:
    out = 1
    for part, mult in Counter(nu).items():
        out *= part ** mult * math.factorial(mult)
    return out


@lru_cache(maxsize=None)
def p_to_m(n: int) -> dict[Partition, dict[Partition, int]]:
    """``p_nu = sum_mu R[nu][mu] m_mu``: count the ways to pour parts of nu into bins of mu."""
    out = {}
    for nu in partitions(n):
        row = {}
        for mu in partitions(n):
            cnt = 0
            for assign in itertools.product(range(len(mu)), repeat=len(nu)):
                sums = [0] * len(mu)
                for part, b in zip(nu, assign):
                    sums[b] += part
                cnt += sums == list(mu)
            if cnt:
                row[mu] = cnt
        out[nu] = row
    return out


@lru_cache(maxsize=None)
def m_to_p(n: int) -> dict[Partition, dict[Partition, Fraction]]:
    """Inverse of :func:`p_to_m`."""
    parts = partitions(n)
    size = len(parts)
    R = p_to_m(n)
    # solve A X = I where A[mu][nu] = R[nu][mu] (columns are p_nu in the m basis)
    A = [[Fraction(R[nu].get(mu, 0)) for nu in parts] + [Fraction(int(i == j)) for j in range(size)]
         for i, mu in enumerate(parts)]
    for c in range(size):
        p = next(r for r in range(c, size) if A[r][c] != 0)
        A[c], A[p] = A[p], A[c]
        inv = 1 / A[c][c]
        A[c] = [x * inv for x in A[c]]
        for r in range(size):
            if r != c and A[r][c]:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    # m_mu = sum_nu X[nu][mu] p_nu, X = A^{-1}
    out = {}
    for j, mu in enumerate(parts):
        out[mu] = {nu: A[i][size + j] for i, nu in enumerate(parts) if A[i][size + j] != 0}
    return out


Key = tuple[Partition, ...]


class Series:
    """Truncated balanced series in ``k`` alphabets, power-sum basis."""

    def __init__(self, k: int, top: int, parts: Mapping[int, Mapping[Key, Fraction]] | None = None) -> None:
        self.k, self.top = k, top
        self.parts: dict[int, dict[Key, Fraction]] = {}
        for d, piece in (parts or {}).items():
            if d <= top:
                clean = {key: Fraction(c) for key, c in piece.items() if c != 0}
                if clean:
                    self.parts[d] = clean

    @classmethod
    def one(cls, k: int, top: int) -> Series:
        return cls(k, top, {0: {((),) * k: Fraction(1)}})

    def copy(self) -> Series:
        return Series(self.k, self.top, self.parts)

    def constant(self) -> Fraction:
        return self.parts.get(0, {}).get(((),) * self.k, Fraction(0))

    def __add__(self, other: Series) -> Series:
        out = {d: dict(p) for d, p in self.parts.items()}
        for d, piece in other.parts.items():
            tgt = out.setdefault(d, {})
            for key, c in piece.items():
                tgt[key] = tgt.get(key, 0) + c
        return Series(self.k, self.top, out)

    def __sub__(self, other: Series) -> Series:
        return self + other.scale(-1)

    def scale(self, c) -> Series:
        return Series(self.k, self.top, {d: {key: v * c for key, v in p.items()} for d, p in self.parts.items()})

    def __mul__(self, other: Series) -> Series:
        out: dict[int, dict[Key, Fraction]] = {}
        for d1, p1 in self.parts.items():
            for d2, p2 in other.parts.items():
                if d1 + d2 > self.top:
                    continue
                tgt = out.setdefault(d1 + d2, {})
                for k1, c1 in p1.items():
                    for k2, c2 in p2.items():
                        key = tuple(tuple(sorted(a + b, reverse=True)) for a, b in zip(k1, k2))
                        tgt[key] = tgt.get(key, 0) + c1 * c2
        return Series(self.k, self.top, out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Series) and self.k == other.k and self.parts == other.parts

    def adams(self, d: int) -> Series:
        """``p_r -> p_{rd}`` on the symmetric function side only."""
        out: dict[int, dict[Key, Fraction]] = {}
        for deg, piece in self.parts.items():
            if deg * d > self.top:
                continue
            tgt = out.setdefault(deg * d, {})
            for key, c in piece.items():
                nk = tuple(tuple(x * d for x in nu) for nu in key)
                tgt[nk] = tgt.get(nk, 0) + c
        return Series(self.k, self.top, out)

    def monomial_coefficient(self, mus: Key) -> Fraction:
        """Coefficient of ``m_{mu_1}[X_1] ... m_{mu_k}[X_k]``."""
        d = sum(mus[0])
        total = Fraction(0)
        R = p_to_m(d)
        for key, c in self.parts.get(d, {}).items():
            term = c
            for nu, mu in zip(key, mus):
                term *= R[nu].get(mu, 0)
                if not term:
                    break
            total += term
        return total

    def monomial_expansion(self, d: int) -> dict[Key, Fraction]:
        out = {}
        for mus in itertools.product(partitions(d), repeat=self.k):
            c = self.monomial_coefficient(mus)
            if c:
                out[mus] = c
        return out


def from_monomials(k: int, top: int, d: int, coeffs: Mapping[Key, Fraction]) -> Series:
    """Series with degree-``d`` piece ``sum coeffs[mus] prod m_{mus_i}``."""
    X = m_to_p(d)
    piece: dict[Key, Fraction] = {}
    for mus, c in coeffs.items():
        for nus in itertools.product(*[X[mu].items() for mu in mus]):
            key = tuple(nu for nu, _ in nus)
            val = Fraction(c)
            for _, x in nus:
                val *= x
            piece[key] = piece.get(key, 0) + val
    return Series(k, top, {d: piece})


def tensor_power_of(single: Mapping[Partition, Fraction], k: int) -> dict[Key, Fraction]:
    """``f[X_1] ... f[X_k]`` in the power-sum basis, for a single-alphabet ``f`` in the p basis."""
    out: dict[Key, Fraction] = {}
    for combo in itertools.product(single.items(), repeat=k):
        c = Fraction(1)
        for _, x in combo:
            c *= x
        out[tuple(nu for nu, _ in combo)] = c
    return out


def to_power_sums(mono: Mapping[Partition, Fraction], d: int) -> dict[Partition, Fraction]:
    X = m_to_p(d)
    out: dict[Partition, Fraction] = {}
    for mu, c in mono.items():
        for nu, x in X[mu].items():
            out[nu] = out.get(nu, 0) + c * x
    return {nu: c for nu, c in out.items() if c}


def log_series(F: Series) -> Series:
    if F.constant() != 1:
        raise ValueError("logarithm needs constant term 1")
    G = F - Series.one(F.k, F.top)
    out = Series(F.k, F.top)
    power = Series.one(F.k, F.top)
    for j in range(1, F.top + 1):
        power = power * G
        out = out + power.scale(Fraction((-1) ** (j + 1), j))
    return out


def exp_series(G: Series) -> Series:
    if G.parts.get(0):
        raise ValueError("exponential needs zero constant term")
    out = Series.one(G.k, G.top)
    power = Series.one(G.k, G.top)
    for j in range(1, G.top + 1):
        power = power * G
        out = out + power.scale(Fraction(1, math.factorial(j)))
    return out


def mobius(n: int) -> int:
    out, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    return -out if m > 1 else out


Point = tuple[Fraction, Fraction]
SeriesAt = Callable[[Point], Series]


def _power_point(point: Point, d: int) -> Point:
    return tuple(Fraction(x) ** d for x in point)


def plethystic_log(series_at: SeriesAt, point: Point = (Fraction(1), Fraction(1))) -> Series:
    """``sum_d mu(d)/d psi_d[log F]`` at ``point``.

    ``psi_d`` also raises the coefficient variables to the ``d``-th power, so
    the series is requested at ``point^d`` for each ``d``.
    """
    base = series_at(point)
    out = Series(base.k, base.top)
    for d in range(1, base.top + 1):
        mu = mobius(d)
        if mu == 0:
            continue
        L = log_series(base if d == 1 else series_at(_power_point(point, d)))
        out = out + L.adams(d).scale(Fraction(mu, d))
    return out


def plethystic_exp(series_at: SeriesAt, point: Point = (Fraction(1), Fraction(1))) -> Series:
    base = series_at(point)
    total = Series(base.k, base.top)
    for d in range(1, base.top + 1):
        G = base if d == 1 else series_at(_power_point(point, d))
        total = total + G.adams(d).scale(Fraction(1, d))
    return exp_series(total)
