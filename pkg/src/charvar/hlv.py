"""The Hausel-Letellier-Villegas generating function as an independent oracle.

For genus ``g`` and ``k`` punctures, the plethystic logarithm of

    sum_lambda  prod_cells (q^{a+1/2} - t^{l+1/2})^{2g} / ((q^{a+1} - t^l)(q^a - t^{l+1}))
                * prod_i Htilde_lambda[X_i; q, t]

times ``-(q-1)(t-1)`` has ``q^{-dim/2} W(q, t)`` as the coefficient of
``prod_i m_{mu_i}[X_i]``.  The kernel has poles, so it is evaluated at exact
rational points ``q = Q^2``, ``t = T^2`` and the Laurent polynomial is
interpolated on a grid.

Modified Macdonald polynomials come from the Haglund-Haiman-Loehr fillings
formula (an external algorithm).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .laurent import LaurentQT
from .symfunc import Partition, Series, partitions, plethystic_log, tensor_power_of, to_power_sums

MAX_DEGREE = 4


class UnsupportedHLV(ValueError):
    pass


def _cells(lam: Partition) -> list[tuple[int, int]]:
    """Cells ``(row, col)`` in French convention (row 0 at the bottom)."""
    return [(r, c) for r, part in enumerate(lam) for c in range(part)]


def arm(lam: Partition, cell) -> int:
    r, c = cell
    return lam[r] - c - 1


def leg(lam: Partition, cell) -> int:
    r, c = cell
    return sum(1 for rr in range(r + 1, len(lam)) if lam[rr] > c)


def _fillings_statistics(lam: Partition, filling: dict) -> tuple[int, int]:
    """``(inv, maj)`` of a filling."""
    cells = _cells(lam)
    descents = [u for u in cells if u[0] > 0 and filling[u] > filling[(u[0] - 1, u[1])]]
    maj = sum(leg(lam, u) + 1 for u in descents)

    def reading(u):
        return (-u[0], u[1])

    inversions = 0
    for u, v in itertools.combinations(cells, 2):
        a, b = (u, v) if reading(u) < reading(v) else (v, u)  # a is read first
        attacking = a[0] == b[0] or (a[0] == b[0] + 1 and a[1] > b[1])
        if attacking and filling[a] > filling[b]:
            inversions += 1
    inv = inversions - sum(arm(lam, u) for u in descents)
    return inv, maj


@lru_cache(maxsize=None)
def macdonald_htilde(lam: Partition, k_vars: int | None = None) -> dict[Partition, LaurentQT]:
    """Monomial expansion ``{mu: coefficient of m_mu}`` of ``Htilde_lam[X; q, t]``."""
    lam = tuple(lam)
    n = sum(lam)
    if n > MAX_DEGREE:
        raise UnsupportedHLV(f"|lambda| = {n} is beyond the supported {MAX_DEGREE}")
    cells = _cells(lam)
    out = {}
    for mu in partitions(n):
        if k_vars is not None and len(mu) > k_vars:
            continue
        content = [v + 1 for v, mult in enumerate(mu) for _ in range(mult)]
        coeff: dict[tuple[int, int], int] = {}
        for arrangement in set(itertools.permutations(content)):
            filling = dict(zip(cells, arrangement))
            inv, maj = _fillings_statistics(lam, filling)
            key = (2 * inv, 2 * maj)
            coeff[key] = coeff.get(key, 0) + 1
        poly = LaurentQT(coeff)
        if poly.terms:
            out[mu] = poly
    return out


def hook_kernel_term(lam: Partition, g: int, k: int) -> tuple[LaurentQT, LaurentQT, dict[Partition, LaurentQT]]:
    """``(numerator, denominator, Htilde_lam)`` of the ``lam`` summand.

    The summand is ``numerator / denominator * prod_{i<=k} Htilde_lam[X_i]``.
    """
    num = LaurentQT.const(1)
    den = LaurentQT.const(1)
    for cell in _cells(lam):
        a, l = arm(lam, cell), leg(lam, cell)
        num = num * (LaurentQT.monomial(2 * a + 1, 0) - LaurentQT.monomial(0, 2 * l + 1)) ** (2 * g)
        den = den * (LaurentQT.monomial(2 * a + 2, 0) - LaurentQT.monomial(0, 2 * l))
        den = den * (LaurentQT.monomial(2 * a, 0) - LaurentQT.monomial(0, 2 * l + 2))
    return num, den, macdonald_htilde(lam)


def kernel_series(g: int, k: int, n: int, point) -> Series:
    """The kernel at ``(q^{1/2}, t^{1/2}) = point``, truncated at degree ``n``."""
    Q, T = point
    parts: dict[int, dict] = {0: {((),) * k: Fraction(1)}}
    for d in range(1, n + 1):
        piece: dict = {}
        for lam in partitions(d):
            num, den, H = hook_kernel_term(lam, g, k)
            pref = num.evaluate(Q, T) / den.evaluate(Q, T)
            mono = {mu: c.evaluate(Q, T) for mu, c in H.items()}
            single = to_power_sums(mono, d)
            for key, c in tensor_power_of(single, k).items():
                piece[key] = piece.get(key, 0) + pref * c
        parts[d] = piece
    return Series(k, n, parts)


def dim_from_mu(g: int, mus: Sequence[Partition]) -> int:
    n = sum(mus[0])
    return (2 * g + len(mus) - 2) * n * n + 2 - sum(x * x for mu in mus for x in mu)


def hlv_value(g: int, mus: Sequence[Partition], point) -> Fraction:
    """``q^{-dim/2} W(q, t)`` at one point, straight from the generating function."""
    k = len(mus)
    n = sum(mus[0])
    Q, T = (Fraction(x) for x in point)
    L = plethystic_log(lambda pt: kernel_series(g, k, n, pt), (Q, T))
    c = L.monomial_coefficient(tuple(tuple(sorted(mu, reverse=True)) for mu in mus))
    return -(Q * Q - 1) * (T * T - 1) * c


def _vandermonde_solve(nodes: Sequence[Fraction], values: Sequence[Fraction]) -> list[Fraction]:
    """Coefficients ``c_j`` with ``sum_j c_j x^j = value`` at every node.

    Newton divided differences, expanded to the monomial basis.
    """
    n = len(nodes)
    coef = list(values)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (nodes[i] - nodes[i - j])
    poly = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        # poly = poly * (x - nodes[i]) + coef[i]
        new = [Fraction(0)] * n
        for e, c in enumerate(poly):
            if c:
                if e + 1 < n:
                    new[e + 1] += c
                new[e] -= c * nodes[i]
        new[0] += coef[i]
        poly = new
    return poly


def hlv_prediction(g: int, k: int, mu_tuple: Sequence[Sequence[int]], window: int = 2) -> LaurentQT:
    """``W(q, t)`` predicted by the generating function.

    Exponents of ``q^{-dim/2} W`` in ``q^{1/2}`` lie in ``[0, dim]`` and in
    ``t^{1/2}`` in ``[0, 2 dim]``.  The grid is widened by ``window`` on each
    side and the result is re-checked at off-grid points.
    """
    mus = tuple(tuple(int(x) for x in mu) for mu in mu_tuple)
    if len(mus) != k:
        raise UnsupportedHLV(f"expected {k} partitions, got {len(mus)}")
    n = sum(mus[0])
    if any(sum(mu) != n for mu in mus):
        raise UnsupportedHLV("all partitions must have the same size")
    if n > 3:
        raise UnsupportedHLV("the generating-function oracle is limited to n <= 3")
    dim = dim_from_mu(g, mus)
    if dim < 0:
        return LaurentQT()
    q_lo, q_hi = -window, dim + window
    t_lo, t_hi = -window, 2 * dim + window
    q_nodes = [Fraction(2 + i) for i in range(q_hi - q_lo + 1)]
    t_nodes = [Fraction(1, 2 + j) for j in range(t_hi - t_lo + 1)]
    # shifted polynomial P(Q,T) = Q^{-q_lo} T^{-t_lo} V(Q,T) has exponents in [0, q_hi-q_lo] x [0, t_hi-t_lo]
    grid = [[hlv_value(g, mus, (Q, T)) * Q ** (-q_lo) * T ** (-t_lo) for T in t_nodes] for Q in q_nodes]
    by_q = [_vandermonde_solve(t_nodes, row) for row in grid]          # by_q[a][b] : coefficient of T^b at Q_a
    coeffs: dict[tuple[int, int], Fraction] = {}
    for b in range(len(t_nodes)):
        column = _vandermonde_solve(q_nodes, [by_q[a][b] for a in range(len(q_nodes))])
        for a, c in enumerate(column):
            if c:
                coeffs[(a + q_lo, b + t_lo)] = c
    reduced = LaurentQT(coeffs)
    for check in ((Fraction(7, 3), Fraction(2, 7)), (Fraction(5, 2), Fraction(3, 5)), (Fraction(13, 4), Fraction(1, 9))):
        if reduced.evaluate(*check) != hlv_value(g, mus, check):
            raise ArithmeticError("the generating function is not a Laurent polynomial in the expected window")
    # W = q^{dim/2} * reduced; doubled exponents: shift q by dim
    return reduced.shift(q2=dim)


def hlv_e_polynomial(g: int, k: int, mu_tuple):
    """``W(q, 1/q)``."""
    return hlv_prediction(g, k, mu_tuple).specialize_t_inverse_q()


def reduced_symmetric(W: LaurentQT, dim: int) -> bool:
    """Is ``q^{-dim/2} W`` symmetric under ``q <-> t``?"""
    return W.shift(q2=-dim).is_symmetric()


def nonnegative_at_t_one(W: LaurentQT, twist: bool = False) -> bool:
    """Are the coefficients of ``W(q, 1)`` nonnegative integers?

    With ``twist`` the half-integral powers of ``q`` are first multiplied by
    ``-1``, i.e. ``q^{1/2} -> -q^{1/2}``.
    """
    if twist:
        W = LaurentQT({(a, b): (-c if a % 2 else c) for (a, b), c in W.terms.items()})
    return all(c >= 0 and c.denominator == 1 for c in W.specialize_t_one().terms.values())
