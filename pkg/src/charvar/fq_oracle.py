"""Brute-force point counts over finite fields.

Counts tuples ``(a_1, b_1, ..., a_g, b_g, M_1, ..., M_k)`` in ``GL_2(F_q)`` with
``[a_1, b_1] ... [a_g, b_g] M_1 ... M_k = 1`` and ``M_i`` conjugate to ``C_i``,
then divides by ``|PGL_2(F_q)|``, which acts freely for generic data.

Products of class lists are accumulated as dictionaries ``matrix -> count``
and matched at the end.  Commutator counts come either from direct
enumeration of pairs or, for larger fields, from the orbit-stabilizer
identity ``#{a : a b a^-1 = X b} = |Z(b)| [X b ~ b]``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from typing import Iterable, Sequence

from .coxeter import BraidWord
from .finite_field import FiniteField, field
from .strata import CharVarSpec, NotGeneric, UnsupportedSpec, genericity_check

Mat = tuple[int, int, int, int]  # (a, b, c, d) = [[a, b], [c, d]]


class BudgetExceeded(RuntimeError):
    pass


class _Budget:
    def __init__(self, limit: int) -> None:
        self.limit, self.used = limit, 0

    def spend(self, k: int) -> None:
        self.used += k
        if self.used > self.limit:
            raise BudgetExceeded(f"iteration budget {self.limit} exceeded")


class GL2:
    """Arithmetic in ``GL_2(F_q)``."""

    def __init__(self, F: FiniteField) -> None:
        self.F = F
        A, M = F.add_t, F.mul_t
        self.one: Mat = (1, 0, 0, 1)
        q = F.q
        self.elements = [m for m in itertools.product(range(q), repeat=4)
                         if A[M[m[0]][m[3]]][F.neg_t[M[m[1]][m[2]]]] != 0]

    def mul(self, x: Mat, y: Mat) -> Mat:
        A, M = self.F.add_t, self.F.mul_t
        return (A[M[x[0]][y[0]]][M[x[1]][y[2]]], A[M[x[0]][y[1]]][M[x[1]][y[3]]],
                A[M[x[2]][y[0]]][M[x[3]][y[2]]], A[M[x[2]][y[1]]][M[x[3]][y[3]]])

    def det(self, x: Mat) -> int:
        F = self.F
        return F.sub(F.mul(x[0], x[3]), F.mul(x[1], x[2]))

    def trace(self, x: Mat) -> int:
        return self.F.add(x[0], x[3])

    def inv(self, x: Mat) -> Mat:
        F = self.F
        di = F.inv(self.det(x))
        return (F.mul(di, x[3]), F.mul(di, F.neg_t[x[1]]), F.mul(di, F.neg_t[x[2]]), F.mul(di, x[0]))

    def class_key(self, x: Mat) -> tuple[int, int, bool]:
        """Conjugacy invariant for ``GL_2``: characteristic polynomial and centrality."""
        return (self.trace(x), self.det(x), x[1] == 0 and x[2] == 0 and x[0] == x[3])

    def commutator(self, a: Mat, b: Mat) -> Mat:
        return self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))

    @property
    def order(self) -> int:
        return len(self.elements)


def _group(q: int) -> GL2:
    return _GROUPS.setdefault(q, GL2(field(q)))


_GROUPS: dict[int, GL2] = {}


def conjugacy_class(C: Sequence[int], n: int, q: int) -> list[Mat]:
    """All matrices conjugate to ``diag(C)``, by conjugating with every group element."""
    if n != 2:
        raise UnsupportedSpec("the finite-field oracle only handles n = 2")
    G = _group(q)
    D: Mat = (C[0], 0, 0, C[1])
    return sorted({G.mul(G.mul(g, D), G.inv(g)) for g in G.elements})


def class_sizes(q: int) -> Counter:
    G = _group(q)
    return Counter(G.class_key(x) for x in G.elements)


def commutator_counts_direct(q: int, budget: _Budget | None = None) -> Counter:
    """``X -> #{(a, b) : [a, b] = X}`` by enumerating all pairs."""
    G = _group(q)
    if budget:
        budget.spend(G.order ** 2)
    return Counter(G.commutator(a, b) for a in G.elements for b in G.elements)


def commutator_counts(q: int, budget: _Budget | None = None) -> Counter:
    """Same as :func:`commutator_counts_direct`, through centralizer orders."""
    G = _group(q)
    sizes = class_sizes(q)
    centralizer = {key: G.order // s for key, s in sizes.items()}
    keys = {x: G.class_key(x) for x in G.elements}
    if budget:
        budget.spend(G.order * len(sizes))
    # the count only depends on the class of X; compute it once per class
    per_class: dict[tuple, int] = {}
    reps: dict[tuple, Mat] = {}
    for x in G.elements:
        reps.setdefault(keys[x], x)
    for key, X in reps.items():
        total = 0
        for b in G.elements:
            if keys[G.mul(X, b)] == keys[b]:
                total += centralizer[keys[b]]
        per_class[key] = total
    return Counter({x: per_class[keys[x]] for x in G.elements if per_class[keys[x]]})


def _convolve(G: GL2, left: Counter, right: Iterable[tuple[Mat, int]], budget: _Budget | None) -> Counter:
    right = list(right)
    if budget:
        budget.spend(len(left) * len(right))
    out: Counter = Counter()
    for x, cx in left.items():
        for y, cy in right:
            out[G.mul(x, y)] += cx * cy
    return out


def count_points(spec: CharVarSpec, budget: int = 10 ** 8, direct_pairs: bool | None = None) -> int:
    """``#X(F_q)`` for a spec on the finite-field backend."""
    if spec.eigen.backend != "finite_field":
        raise UnsupportedSpec("count_points needs finite-field eigenvalues")
    if not genericity_check(spec):
        raise NotGeneric("eigenvalues are not generic over this field")
    q = spec.eigen.q
    if spec.n == 1:
        # abelian: the equation is prod c_i = 1, handles are free
        return (q - 1) ** (2 * spec.g)
    if spec.n != 2:
        raise UnsupportedSpec("the finite-field oracle only handles n <= 2")
    classes = [conjugacy_class(spec.diagonal(i), 2, q) for i in range(spec.k)]
    return count_with_classes(spec.g, classes, q, budget, direct_pairs)


def count_with_classes(g: int, classes: Sequence[Sequence[Mat]], q: int, budget: int = 10 ** 8,
                       direct_pairs: bool | None = None) -> int:
    """Solutions of ``[a_1, b_1] ... [a_g, b_g] M_1 ... M_k = 1`` with ``M_i`` in ``classes[i]``, over ``|PGL_2|``.

    The classes are explicit matrix lists, so non-split classes can be
    counted too.  No genericity is checked.
    """
    bud = _Budget(budget)
    G = _group(q)
    acc: Counter = Counter({G.one: 1})
    if g:
        if direct_pairs is None:
            direct_pairs = G.order ** 2 <= 10 ** 6
        comm = commutator_counts_direct(q, bud) if direct_pairs else commutator_counts(q, bud)
        for _ in range(g):
            acc = _convolve(G, acc, comm.items(), bud)
    for cl in classes[:-1]:
        acc = _convolve(G, acc, ((m, 1) for m in cl), bud)
    last = set(classes[-1])
    bud.spend(len(acc))
    total = sum(c for x, c in acc.items() if G.inv(x) in last)
    pgl = q ** 3 - q
    if total % pgl:
        raise ArithmeticError(f"{total} solutions is not divisible by |PGL_2(F_{q})| = {pgl}")
    return total // pgl


def class_of(M: Mat, q: int) -> list[Mat]:
    """Conjugacy class of an arbitrary matrix in ``GL_2(F_q)``."""
    G = _group(q)
    return sorted({G.mul(G.mul(x, M), G.inv(x)) for x in G.elements})


def generic_eigenvalue_tuples(g: int, n: int, k: int, mult, q: int, limit: int | None = None):
    """Yield finite-field specs with generic eigenvalues, as generator exponents.

    Only ``n <= 2`` is searched.  Exponent tuples are ordered lexicographically.
    The last exponent is solved from the determinant condition when its
    block has size 1.
    """
    from .strata import EigenvalueSpec
    F = field(q)
    mult = tuple(tuple(m) for m in mult)
    block_counts = [len(m) for m in mult]
    parts = [x for mu in mult for x in mu]
    found = 0
    for head in itertools.product(range(q - 1), repeat=len(parts) - 1):
        partial = sum(e * part for e, part in zip(head, parts))
        if parts[-1] == 1:
            tails = [(-partial) % (q - 1)]
        else:
            tails = [t for t in range(q - 1) if (partial + t * parts[-1]) % (q - 1) == 0]
        for tail in tails:
            exps = head + (tail,)
            blocks, pos = [], 0
            for c in block_counts:
                blocks.append(exps[pos:pos + c])
                pos += c
            # distinct eigenvalues within a puncture
            if any(len(set(b)) != len(b) for b in blocks):
                continue
            vals = tuple(tuple(F.power_of_generator(e) for e in b) for b in blocks)
            spec = CharVarSpec(g, n, k, mult, EigenvalueSpec("finite_field", vals, q))
            if genericity_check(spec):
                yield spec
                found += 1
                if limit is not None and found >= limit:
                    return


def braid_variety_count(b: BraidWord, q: int) -> int:
    """``#{z in F_q^l : f_{i_l}(z_l) ... f_{i_1}(z_1)`` is upper triangular``}``.

    ``f_i(z)`` is the identity outside rows/columns ``i, i+1``, where it is
    ``[[0, 1], [1, z]]``.
    """
    F = field(q)
    n = b.n
    count = 0
    for zs in itertools.product(range(q), repeat=len(b)):
        M = [[int(i == j) for j in range(n)] for i in range(n)]
        for i, z in zip(b.letters, zs):
            # left-multiply by f_i(z): rows i-1, i mix
            r0, r1 = M[i - 1], M[i]
            M[i - 1] = r1[:]
            M[i] = [F.add(a, F.mul(z, c)) for a, c in zip(r0, r1)]
        if all(M[r][c] == 0 for r in range(n) for c in range(r)):
            count += 1
    return count
