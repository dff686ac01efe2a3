import itertools

import pytest
from hypothesis import given, strategies as st

from charvar.coxeter import (BraidWord, Permutation, all_permutations, goes_up, length, min_coset_reps,
                             positive_lift)


def perms(max_n=5):
    return st.integers(1, max_n).flatmap(
        lambda n: st.permutations(range(1, n + 1)).map(lambda line: Permutation(tuple(line))))


def test_length_examples():
    assert length(Permutation.identity(3)) == 0
    assert length(Permutation((2, 1))) == 1
    assert length(Permutation((3, 2, 1))) == 3


def test_goes_up_examples():
    assert goes_up(Permutation.identity(2), 1)
    assert not goes_up(Permutation((2, 1)), 1)
    assert goes_up(Permutation((2, 3, 1)), 2)


def test_positive_lift_examples():
    assert positive_lift(Permutation.identity(3)).letters == ()
    assert positive_lift(Permutation((2, 1))).letters == (1,)
    w = positive_lift(Permutation((3, 2, 1)))
    assert len(w) == 3 and w.permutation() == Permutation((3, 2, 1))


def test_positive_lift_is_lexicographically_smallest():
    for n in range(1, 5):
        for p in all_permutations(n):
            words = [w for w in itertools.product(range(1, n), repeat=length(p))
                     if BraidWord(n, w).permutation() == p]
            assert positive_lift(p).letters == min(words)


def test_min_coset_reps_examples():
    assert min_coset_reps((3,)) == [Permutation.identity(3)]
    assert min_coset_reps((1, 1)) == [Permutation((1, 2)), Permutation((2, 1))]
    reps = min_coset_reps((2, 1))
    assert [length(p) for p in reps] == [0, 1, 2]


@pytest.mark.parametrize("mu", [(1, 1, 1), (2, 2), (1, 3), (2, 1, 1), (4,)])
def test_min_coset_rep_count(mu):
    from math import factorial, prod
    assert len(min_coset_reps(mu)) == factorial(sum(mu)) // prod(factorial(x) for x in mu)


@given(perms())
def test_goes_up_xor(p):
    for i in range(1, p.n):
        assert goes_up(p, i) != goes_up(p.swap_values(i), i)
        assert goes_up(p, i) == (length(p.swap_values(i)) > length(p))


@given(perms())
def test_lift_round_trip(p):
    w = positive_lift(p)
    assert w.permutation() == p and len(w) == length(p)


@given(perms())
def test_sign_and_cycles(p):
    assert p.sign() == (-1) ** length(p)
    assert (-1) ** (p.n - p.cycle_count()) == p.sign()
    assert sorted(i for c in p.cycles() for i in c) == list(range(1, p.n + 1))


@given(perms(), st.data())
def test_matrix_is_multiplicative(p, data):
    q = data.draw(perms().filter(lambda r: r.n == p.n) if p.n > 1 else st.just(Permutation.identity(1)))
    assert ((p * q).matrix() == p.matrix() @ q.matrix()).all()


def test_braid_relations_preserve_permutation():
    n = 4
    for word in itertools.product(range(1, n), repeat=5):
        b = BraidWord(n, word)
        for k in range(len(word) - 2):
            a, c, d = word[k:k + 3]
            if a == d and abs(a - c) == 1:
                new = word[:k] + (c, a, c) + word[k + 3:]
                assert BraidWord(n, new).permutation() == b.permutation()
        for k in range(len(word) - 1):
            a, c = word[k:k + 2]
            if abs(a - c) > 1:
                new = word[:k] + (c, a) + word[k + 2:]
                assert BraidWord(n, new).permutation() == b.permutation()


def test_invalid_inputs():
    with pytest.raises(ValueError):
        Permutation((1, 1))
    with pytest.raises(ValueError):
        BraidWord(2, (2,))


def test_matmul_acts_right_first():
    a, b = BraidWord(3, (1,)), BraidWord(3, (2,))
    assert (a @ b).letters == (2, 1)
    assert (a @ b).permutation() == a.permutation() * b.permutation()
