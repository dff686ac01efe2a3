from fractions import Fraction

from hypothesis import given, strategies as st

from charvar.laurent import LaurentQ, LaurentQT

lq = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5)).map(LaurentQ)
lqt = st.dictionaries(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), st.integers(-5, 5)).map(LaurentQT)


@given(lq, lq, lq)
def test_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == LaurentQ()


@given(lq)
def test_json_round_trip(a):
    assert LaurentQ.from_json(a.to_json()) == a
    assert 0 not in a.terms.values()


@given(lq, st.integers(2, 5))
def test_evaluation_is_a_homomorphism(a, x):
    assert (a * a)(x) == a(x) ** 2


@given(lqt, lqt)
def test_two_variable(a, b):
    Q, T = Fraction(3, 2), Fraction(2, 5)
    assert (a * b).evaluate(Q, T) == a.evaluate(Q, T) * b.evaluate(Q, T)
    assert a.swap().swap() == a
    assert (a + a.swap()).is_symmetric()


def test_specializations():
    W = LaurentQT({(4, 0): 1, (2, 2): 1, (2, 0): 4})  # q(q + t + 4)
    assert W.specialize_t_inverse_q() == LaurentQ({2: 1, 1: 4, 0: 1})
    assert W.specialize_t_one() == LaurentQT({(4, 0): 1, (2, 0): 5})
    assert str(W) and LaurentQ({2: 1, 1: 4, 0: 1}).to_json() == {"2": 1, "1": 4, "0": 1}


def test_monomial_inverse_power():
    q = LaurentQ.q()
    assert q ** -2 * q ** 2 == LaurentQ.const(1)
    assert (q ** 3 + q).divide_by_q_power(1) == q ** 2 + 1
