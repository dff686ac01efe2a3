"""Character-variety specs, strata, cells and the E-polynomial.

A spec fixes genus ``g``, rank ``n``, ``k`` punctures and the eigenvalue
multiplicities ``mult[i]`` of each local monodromy ``C_i``.  The last
puncture must have distinct eigenvalues.  Strata are indexed by minimal
coset representatives ``pi_i`` for the first ``k-1`` punctures and by pairs of
permutations for each handle.  Each stratum gives a braid and each walk on
the braid gives a cell ``C^a x (C*)^r``.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .coxeter import BraidWord, Permutation, all_permutations, length, min_coset_reps, positive_lift
from .finite_field import field as finite_field
from .lattice_tsv import (ReducedCell, ToricTSV, convolve_all, fiber_reduction, handle_tsv,
                          is_connected, stay_tsv)
from .laurent import LaurentQ
from .walks import CellShape, Walk, cell_shape, enumerate_walks


class SpecError(ValueError):
    """The spec is malformed."""


class UnsupportedSpec(ValueError):
    """The spec is well formed but outside what the cell machinery handles."""


class NotGeneric(ValueError):
    """The eigenvalue data is not generic."""


BACKENDS = ("formal", "rational", "finite_field")


@dataclass(frozen=True)
class EigenvalueSpec:
    """Eigenvalues of the ``C_i``.

    ``values[i]`` lists one value per multiplicity block of puncture ``i``.
    Rationals are Fractions, finite-field values are field element codes.
    The formal backend has no values: block ``j`` of puncture ``i`` is a
    free symbol ``alpha_{i,j}``, subject only to the determinant relation.
    """

    backend: str = "formal"
    values: tuple[tuple, ...] | None = None
    q: int | None = None


@dataclass(frozen=True)
class CharVarSpec:
    g: int
    n: int
    k: int
    mult: tuple[tuple[int, ...], ...]
    eigen: EigenvalueSpec = field(default_factory=EigenvalueSpec)

    def __post_init__(self) -> None:
        if self.g < 0 or self.n < 1 or self.k < 1:
            raise SpecError("need g >= 0, n >= 1, k >= 1")
        if len(self.mult) != self.k:
            raise SpecError(f"expected {self.k} multiplicity compositions, got {len(self.mult)}")
        for mu in self.mult:
            if any(x <= 0 for x in mu) or sum(mu) != self.n:
                raise SpecError(f"composition {list(mu)} does not split n={self.n}")
        e = self.eigen
        if e.backend not in BACKENDS:
            raise SpecError(f"unknown eigenvalue backend {e.backend!r}")
        if e.backend != "formal":
            if e.values is None or len(e.values) != self.k:
                raise SpecError("eigenvalue values must be given for every puncture")
            for mu, vals in zip(self.mult, e.values):
                if len(vals) != len(mu):
                    raise SpecError("one eigenvalue per multiplicity block is required")
        if e.backend == "finite_field" and e.q is None:
            raise SpecError("finite_field backend needs q")

    @property
    def regular_last(self) -> bool:
        return all(x == 1 for x in self.mult[-1])

    def diagonal(self, i: int) -> list:
        """Diagonal of ``C_i`` in the chosen backend (formal: exponent vectors)."""
        out = []
        for j, part in enumerate(self.mult[i]):
            out.extend([self._block_value(i, j)] * part)
        return out

    def _block_value(self, i: int, j: int):
        if self.eigen.backend == "formal":
            vec = [0] * self.symbol_count
            vec[self._symbol_index(i, j)] = 1
            return tuple(vec)
        return self.eigen.values[i][j]

    @property
    def symbol_count(self) -> int:
        return sum(len(mu) for mu in self.mult)

    def _symbol_index(self, i: int, j: int) -> int:
        return sum(len(mu) for mu in self.mult[:i]) + j

    def relation(self) -> tuple[int, ...]:
        """Exponent vector of ``prod det C_i`` in the formal backend."""
        return tuple(part for mu in self.mult for part in mu)

    def to_json(self) -> dict:
        eig: dict = {"backend": self.eigen.backend}
        if self.eigen.values is not None:
            eig["values"] = [[v if isinstance(v, int) else str(v) for v in vals] for vals in self.eigen.values]
        if self.eigen.q is not None:
            eig["q"] = self.eigen.q
        return {"g": self.g, "n": self.n, "k": self.k, "mult": [list(m) for m in self.mult], "eigen": eig}


def parse_spec(data: dict) -> CharVarSpec:
    """Build a spec from its JSON form, raising :class:`SpecError` on bad input."""
    if not isinstance(data, dict):
        raise SpecError("spec must be a JSON object")
    try:
        g, n, k = int(data["g"]), int(data["n"]), int(data["k"])
        mult = tuple(tuple(int(x) for x in mu) for mu in data.get("mult", [[1] * n] * k))
    except (KeyError, TypeError, ValueError) as exc:
        raise SpecError(f"malformed spec: {exc}") from exc
    eig = data.get("eigen", {"backend": "formal"})
    if not isinstance(eig, dict):
        raise SpecError("eigen must be an object")
    backend = eig.get("backend", "formal")
    q = eig.get("q")
    values = None
    try:
        if backend == "rational":
            values = tuple(tuple(Fraction(str(v)) for v in vals) for vals in eig["values"])
        elif backend == "finite_field":
            F = finite_field(int(q))
            if "exponents" in eig:
                values = tuple(tuple(F.power_of_generator(int(e)) for e in vals) for vals in eig["exponents"])
            else:
                values = tuple(tuple(F.element(int(v)) for v in vals) for vals in eig["values"])
            q = int(q)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise SpecError(f"malformed eigenvalues: {exc}") from exc
    if values is not None:
        # full diagonals are accepted too, as long as they are constant on blocks
        fixed = []
        for mu, vals in zip(mult, values):
            if len(vals) == n and len(mu) != n:
                blocks, start = [], 0
                for part in mu:
                    blk = vals[start:start + part]
                    if len(set(blk)) != 1:
                        raise SpecError("eigenvalues must be constant on multiplicity blocks")
                    blocks.append(blk[0])
                    start += part
                vals = tuple(blocks)
            fixed.append(vals)
        values = tuple(fixed)
    return CharVarSpec(g, n, k, mult, EigenvalueSpec(backend, values, q))


# --- backend arithmetic ------------------------------------------------------

class _Arith:
    """Multiplicative group operations for one backend."""

    def __init__(self, spec: CharVarSpec) -> None:
        self.spec = spec
        self.backend = spec.eigen.backend
        if self.backend == "finite_field":
            self.F = finite_field(spec.eigen.q)

    def one(self):
        if self.backend == "formal":
            return (0,) * self.spec.symbol_count
        return Fraction(1) if self.backend == "rational" else 1

    def mul(self, a, b):
        if self.backend == "formal":
            return tuple(x + y for x, y in zip(a, b))
        if self.backend == "rational":
            return a * b
        return self.F.mul(a, b)

    def inv(self, a):
        if self.backend == "formal":
            return tuple(-x for x in a)
        if self.backend == "rational":
            return 1 / a
        return self.F.inv(a)

    def pow(self, a, k: int):
        out = self.one()
        base = a if k >= 0 else self.inv(a)
        for _ in range(abs(k)):
            out = self.mul(out, base)
        return out

    def equals_sign(self, a, sign: int) -> bool:
        """Is ``a`` equal to ``sign`` (which is +1 or -1)?"""
        if self.backend == "formal":
            rel = self.spec.relation()
            # a = lambda * rel for an integer lambda means a = 1; -1 is never reached
            if sign != 1:
                return False
            nz = [(x, r) for x, r in zip(a, rel) if r]
            if any(x for x, r in zip(a, rel) if not r):
                return False
            lam = Fraction(nz[0][0], nz[0][1]) if nz else Fraction(0)
            return lam.denominator == 1 and all(Fraction(x, r) == lam for x, r in nz)
        if self.backend == "rational":
            return a == sign
        return a == (1 if sign == 1 else self.F.neg_t[1])

    def key(self, a):
        """Hashable normal form (formal values modulo the relation)."""
        if self.backend != "formal":
            return a
        rel = self.spec.relation()
        # normalize: subtract multiples of rel so that the first coordinate lies in [0, rel0)
        shift = a[0] // rel[0]
        return tuple(x - shift * r for x, r in zip(a, rel))


def _partial_products(ar: _Arith, values: Sequence, mu: Sequence[int], r: int) -> set:
    out = set()
    for counts in itertools.product(*[range(min(part, r) + 1) for part in mu]):
        if sum(counts) != r:
            continue
        prod = ar.one()
        for v, c in zip(values, counts):
            prod = ar.mul(prod, ar.pow(v, c))
        out.add(ar.key(prod))
    return out


def _block_values(spec: CharVarSpec, i: int) -> list:
    return [spec._block_value(i, j) for j in range(len(spec.mult[i]))]


def determinant_product(spec: CharVarSpec):
    ar = _Arith(spec)
    prod = ar.one()
    for i in range(spec.k):
        for v, part in zip(_block_values(spec, i), spec.mult[i]):
            prod = ar.mul(prod, ar.pow(v, part))
    return prod


def genericity_check(spec: CharVarSpec) -> bool:
    ar = _Arith(spec)
    if not ar.equals_sign(determinant_product(spec), 1):
        return False
    one = ar.key(ar.one())
    for r in range(1, spec.n):
        acc = {one}
        for i in range(spec.k):
            parts = _partial_products(ar, _block_values(spec, i), spec.mult[i], r)
            acc = {ar.key(ar.mul(a, b)) for a in acc for b in parts}
        if any(ar.equals_sign(x, 1) for x in acc):
            return False
    return True


def dim_charvar(spec: CharVarSpec) -> int:
    n = spec.n
    return (2 * spec.g + spec.k - 2) * n * n + 2 - sum(x * x for mu in spec.mult for x in mu)


# --- strata -------------------------------------------------------------------

@dataclass(frozen=True)
class Stratum:
    punct_perms: tuple[Permutation, ...]
    handle_perms: tuple[Permutation, ...] = ()

    def label(self) -> dict:
        return {"punctures": [list(p.one_line) for p in self.punct_perms],
                "handles": [list(p.one_line) for p in self.handle_perms]}


def enumerate_strata(spec: CharVarSpec) -> Iterator[Stratum]:
    if not spec.regular_last:
        raise UnsupportedSpec("the last puncture must have distinct eigenvalues")
    handle_choices = [list(all_permutations(spec.n))] * (2 * spec.g)
    punct_choices = [min_coset_reps(mu) for mu in spec.mult[:-1]]
    for handles in itertools.product(*handle_choices):
        for puncts in itertools.product(*punct_choices):
            yield Stratum(tuple(puncts), tuple(handles))


@dataclass(frozen=True)
class StratumLayout:
    """The braid of a stratum with the crossings after which handles sit."""

    braid: BraidWord
    handles: tuple[tuple[int, ToricTSV], ...]


def stratum_layout(s: Stratum, n: int) -> StratumLayout:
    """Matrix-order factors ``f(a) f(b) H f(a^-1) f(b^-1)`` per handle, then ``f(p) f(p^-1)`` per puncture."""
    factors: list = []
    hp = s.handle_perms
    for j in range(0, len(hp), 2):
        a, b = hp[j], hp[j + 1]
        factors += [positive_lift(a), positive_lift(b), handle_tsv(a, b),
                    positive_lift(a.inverse()), positive_lift(b.inverse())]
    for p in s.punct_perms:
        factors += [positive_lift(p), positive_lift(p.inverse())]
    letters: tuple[int, ...] = ()
    handles = []
    for f in reversed(factors):
        if isinstance(f, ToricTSV):
            handles.append((len(letters), f))
        else:
            letters += f.letters
    return StratumLayout(BraidWord(n, letters), tuple(handles))


def stratum_braid(s: Stratum, n: int | None = None) -> BraidWord:
    n = n if n is not None else (s.punct_perms or s.handle_perms)[0].n
    return stratum_layout(s, n).braid


def assemble_cell(layout: StratumLayout, walk: Walk, shape: CellShape) -> ToricTSV:
    """Convolve stays and handle tori, each twisted by the walk state where it sits."""
    n = layout.braid.n
    pieces: list[tuple[int, int, ToricTSV]] = []
    for rec in shape.stays:
        pieces.append((rec.k, 1, stay_tsv(n, rec.a_pos, rec.b_pos)))
    for pos, H in layout.handles:
        # a handle after crossing ``pos`` comes after the stay at crossing ``pos``
        pieces.append((pos, 2, H.relabel(walk.states[pos])))
    pieces.sort(key=lambda x: (x[0], x[1]))
    return convolve_all(n, [p for _, _, p in reversed(pieces)])


def stratum_constant(s: Stratum, spec: CharVarSpec) -> tuple[tuple, bool]:
    """``C_k^{-1} prod_i pi_i(C_i^{-1})`` and whether it is braid-generic."""
    ar = _Arith(spec)
    n = spec.n
    point = [ar.inv(v) for v in spec.diagonal(spec.k - 1)]
    for i, p in enumerate(s.punct_perms):
        diag = spec.diagonal(i)
        pinv = p.inverse()
        point = [ar.mul(point[j], ar.inv(diag[pinv(j + 1) - 1])) for j in range(n)]
    total = Permutation.identity(n)  # the assembled stratum is equivariant for Id
    ok = True
    for size in range(1, n):
        for S in itertools.combinations(range(n), size):
            prod = ar.one()
            for j in S:
                prod = ar.mul(prod, point[j])
            sign = 1  # sign of the identity restricted to S
            if ar.equals_sign(prod, sign):
                ok = False
    return tuple(point), ok and total.is_identity()


# --- census ---------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CellRecord:
    stratum: int
    walk: int
    affine_dim: int
    r1: int
    middle_weight: int
    connected: bool
    generic_ok: bool
    up: int = 0
    stays: int = 0
    handles: int = 0
    omega_red: np.ndarray | None = None
    torsion: tuple[int, ...] = ()

    def as_dict(self) -> dict:
        return {"stratum": self.stratum, "walk": self.walk, "affine_dim": self.affine_dim, "r1": self.r1,
                "middle_weight": self.middle_weight, "connected": self.connected,
                "generic_ok": self.generic_ok}


def _affine_base(spec: CharVarSpec, s: Stratum) -> int:
    n = spec.n
    base = 0
    for mu, p in zip(spec.mult[:-1], s.punct_perms):
        base += (n * n - sum(x * x for x in mu)) // 2 - length(p)
    hp = s.handle_perms
    for j in range(0, len(hp), 2):
        base += n * (n - 1) - length(hp[j]) - length(hp[j + 1])
    return base


def stratum_cells(spec: CharVarSpec, index: int, s: Stratum) -> list[CellRecord]:
    n = spec.n
    layout = stratum_layout(s, n)
    _, generic_ok = stratum_constant(s, spec)
    base = _affine_base(spec, s)
    out = []
    for w_id, w in enumerate(enumerate_walks(layout.braid)):
        shape = cell_shape(layout.braid, w)
        X = assemble_cell(layout, w, shape)
        if not X.pi.is_identity():
            raise AssertionError("assembled stratum is not equivariant for the identity")
        connected = is_connected(X)
        red = fiber_reduction(X)
        aff = len(shape.up) + base
        out.append(CellRecord(index, w_id, aff, red.r1, 2 * aff + red.r1 - n * (n - 1), connected,
                              generic_ok, len(shape.up), len(shape.stay), len(layout.handles),
                              red.Omega_red, red.torsion))
    return out


def _stratum_job(args):
    spec, index, s = args
    return stratum_cells(spec, index, s)


def cell_census(spec: CharVarSpec, jobs: int = 1) -> list[CellRecord]:
    """All cells of all strata (disconnected ones flagged, not dropped)."""
    if not spec.regular_last:
        raise UnsupportedSpec("the last puncture must have distinct eigenvalues")
    if not genericity_check(spec):
        raise NotGeneric("eigenvalue data is not generic")
    tasks = [(spec, i, s) for i, s in enumerate(enumerate_strata(spec))]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_stratum_job, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        chunks = [_stratum_job(t) for t in tasks]
    return [rec for chunk in chunks for rec in chunk]


def default_jobs() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)


def e_polynomial_from_cells(cells: Sequence[CellRecord], n: int) -> LaurentQ:
    q = LaurentQ.q()
    total = LaurentQ()
    for c in cells:
        if c.connected:
            total = total + q ** c.affine_dim * (q - 1) ** c.r1
    shift = math.comb(n, 2)
    out = total.divide_by_q_power(shift)
    if not out.is_polynomial():
        raise ArithmeticError(f"bundle shift left negative exponents: {out}")
    return out


def e_polynomial(spec: CharVarSpec, jobs: int = 1) -> LaurentQ:
    return e_polynomial_from_cells(cell_census(spec, jobs), spec.n)


@dataclass
class WeightsReport:
    ok: bool
    dim: int
    rows: list[dict]


def weights_report(spec: CharVarSpec, cells: Sequence[CellRecord] | None = None) -> WeightsReport:
    cells = cell_census(spec) if cells is None else cells
    dim = dim_charvar(spec)
    rows = [c.as_dict() for c in cells if c.connected]
    return WeightsReport(all(r["middle_weight"] == dim for r in rows), dim, rows)


def cell_decomposition_summary(cells: Sequence[CellRecord], n: int) -> dict[tuple[int, int], int]:
    """Count connected cells of ``X`` by ``(torus rank, affine rank after the bundle shift)``."""
    out: dict[tuple[int, int], int] = {}
    shift = math.comb(n, 2)
    for c in cells:
        if c.connected:
            key = (c.r1, c.affine_dim - shift)
            out[key] = out.get(key, 0) + 1
    return out
