import math
import random
from fractions import Fraction

import pytest

from charvar.hlv import (UnsupportedHLV, arm, dim_from_mu, hlv_prediction, hlv_value, hook_kernel_term,
                         kernel_series, leg, macdonald_htilde, nonnegative_at_t_one, reduced_symmetric)
from charvar.laurent import LaurentQ, LaurentQT
from charvar.strata import e_polynomial
from charvar.symfunc import (Series, conjugate, from_monomials, m_to_p, p_to_m, partitions, plethystic_exp,
                             plethystic_log)

from _sweeps import regular_spec

Q, T, ONE = LaurentQT.monomial(2, 0), LaurentQT.monomial(0, 2), LaurentQT.const(1)


def test_partitions():
    assert partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert conjugate((3, 1)) == (2, 1, 1)


def test_p_m_round_trip():
    for n in range(1, 5):
        P, M = p_to_m(n), m_to_p(n)
        for mu in partitions(n):
            back = {}
            for nu, x in M[mu].items():
                for lam, c in P[nu].items():
                    back[lam] = back.get(lam, 0) + x * c
            assert {k: v for k, v in back.items() if v} == {mu: 1}


def test_p_to_m_small():
    assert p_to_m(2)[(1, 1)] == {(2,): 1, (1, 1): 2}
    assert p_to_m(2)[(2,)] == {(2,): 1}


def test_macdonald_examples():
    assert macdonald_htilde((1,)) == {(1,): ONE}
    assert macdonald_htilde((2,)) == {(2,): ONE, (1, 1): ONE + Q}
    assert macdonald_htilde((1, 1)) == {(2,): ONE, (1, 1): ONE + T}
    H = macdonald_htilde((2, 1))
    assert H[(2, 1)] == ONE + Q + T and H[(1, 1, 1)] == ONE + 2 * Q + 2 * T + Q * T


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_macdonald_conjugate_symmetry(n):
    for lam in partitions(n):
        H, Hc = macdonald_htilde(lam), macdonald_htilde(conjugate(lam))
        assert {mu: c.swap() for mu, c in H.items()} == Hc


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_macdonald_at_one_is_h1_power(n):
    for lam in partitions(n):
        for mu, c in macdonald_htilde(lam).items():
            assert c.evaluate(1, 1) == math.factorial(n) // math.prod(math.factorial(x) for x in mu)


def test_macdonald_too_big():
    with pytest.raises(UnsupportedHLV):
        macdonald_htilde((5,))


def test_hook_terms():
    num, den, H = hook_kernel_term((1,), 0, 3)
    assert num == ONE and den == (Q - 1) * (1 - T)
    num, _, _ = hook_kernel_term((1,), 1, 1)
    half = LaurentQT.monomial(1, 0) - LaurentQT.monomial(0, 1)
    assert num == half * half
    assert sorted((arm((2,), c), leg((2,), c)) for c in [(0, 0), (0, 1)]) == [(0, 0), (1, 0)]


def test_plog_of_free_generator():
    p1 = lambda pt: Series(1, 4, {1: {((1,),): Fraction(1)}})
    E = plethystic_exp(p1)
    # the exponential is sum_n h_n, i.e. every m_mu with coefficient 1
    for d in range(1, 5):
        assert all(c == 1 for c in E.monomial_expansion(d).values())
        assert len(E.monomial_expansion(d)) == len(partitions(d))
    L = plethystic_log(lambda pt: E)
    assert L.parts == {1: {((1,),): 1}}
    assert L.monomial_coefficient(((1,),)) == 1
    assert all(L.monomial_coefficient((mu,)) == 0 for mu in partitions(2))


def test_plog_round_trip_random():
    rng = random.Random(4)
    for _ in range(5):
        k = rng.randint(1, 2)
        top = 3
        G = Series(k, top)
        for d in range(1, top + 1):
            coeffs = {tuple(rng.choice(partitions(d)) for _ in range(k)): Fraction(rng.randint(-3, 3))
                      for _ in range(2)}
            G = G + from_monomials(k, top, d, coeffs)
        # G has constant coefficients, so psi_d leaves them unchanged
        E = plethystic_exp(lambda pt: G)
        assert plethystic_log(lambda pt: E) == G


def test_n1_kernel_coefficient():
    for k in (1, 2, 3):
        assert hlv_value(0, [(1,)] * k, (Fraction(3), Fraction(1, 2))) == 1


def test_quartic_prediction():
    W = hlv_prediction(0, 4, [(1, 1)] * 4)
    assert W == Q * (Q + T + 4)
    assert W.specialize_t_inverse_q() == e_polynomial(regular_spec(0, 4, 2))


@pytest.mark.parametrize("g,k", [(0, 1), (0, 2), (0, 3), (0, 5), (1, 1), (2, 1)])
def test_point_cases(g, k):
    expected = (LaurentQT.monomial(1, 0) - LaurentQT.monomial(0, 1)) ** (2 * g) * LaurentQT.monomial(2 * g, 0)
    W = hlv_prediction(g, k, [(1,)] * k)
    assert W == (ONE if g == 0 else expected)


@pytest.mark.parametrize("g,k", [(0, 3), (0, 4), (0, 5), (1, 1), (1, 2)])
def test_rank_two_cases(g, k):
    mus = [(1, 1)] * k
    W = hlv_prediction(g, k, mus)
    dim = dim_from_mu(g, mus)
    assert reduced_symmetric(W, dim)
    assert W.specialize_t_inverse_q() == e_polynomial(regular_spec(g, k, 2))
    assert nonnegative_at_t_one(W, twist=True)


def test_mixed_types():
    mus = [(2,), (1, 1), (1, 1), (1, 1)]
    W = hlv_prediction(0, 4, mus)
    assert W == ONE
    from charvar.strata import CharVarSpec
    assert e_polynomial(CharVarSpec(0, 2, 4, ((2,), (1, 1), (1, 1), (1, 1)))) == LaurentQ.const(1)


def test_rank_three_best_effort():
    W = hlv_prediction(0, 3, [(1, 1, 1)] * 3)
    assert reduced_symmetric(W, 2)
    assert W.specialize_t_inverse_q() == e_polynomial(regular_spec(0, 3, 3))


def test_unsupported():
    with pytest.raises(UnsupportedHLV):
        hlv_prediction(0, 3, [(1, 1, 1, 1)] * 3)
    with pytest.raises(UnsupportedHLV):
        hlv_prediction(0, 3, [(1, 1)] * 2)
    with pytest.raises(UnsupportedHLV):
        hlv_prediction(0, 2, [(1, 1), (1,)])
