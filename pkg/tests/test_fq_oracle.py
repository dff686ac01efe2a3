import pytest

from charvar.finite_field import field, prime_power
from charvar.fq_oracle import (BudgetExceeded, class_sizes, commutator_counts, commutator_counts_direct,
                               conjugacy_class, count_points, generic_eigenvalue_tuples, _group)
from charvar.strata import NotGeneric, UnsupportedSpec, e_polynomial, parse_spec

from _sweeps import regular_spec


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_field_axioms(q):
    F = field(q)
    p, _ = prime_power(q)
    for a in range(q):
        assert F.add(a, F.neg_t[a]) == 0
        assert F.mul(a, 1) == a
        if a:
            assert F.mul(a, F.inv(a)) == 1
    assert sorted(F.power_of_generator(k) for k in range(q - 1)) == list(range(1, q))
    assert all(F.add(*([a] * 1 + [a])) == (0 if p == 2 else F.add(a, a)) for a in range(q))


def test_not_prime_power():
    with pytest.raises(ValueError):
        field(6)


def test_class_examples():
    assert conjugacy_class((1, 1), 2, 3) == [(1, 0, 0, 1)]
    assert len(conjugacy_class((3, 5), 2, 7)) == 56
    with pytest.raises(UnsupportedSpec):
        conjugacy_class((1, 1, 1), 3, 3)


@pytest.mark.parametrize("q", [2, 3, 5, 7])
def test_class_sizes_sum(q):
    assert sum(class_sizes(q).values()) == (q * q - 1) * (q * q - q) == _group(q).order


@pytest.mark.parametrize("q", [3, 5])
def test_commutator_identity(q):
    assert commutator_counts(q) == commutator_counts_direct(q)


def test_examples_genus_zero():
    spec7 = parse_spec({"g": 0, "n": 2, "k": 4, "eigen": {"backend": "finite_field", "q": 7,
                                                           "exponents": [[1, 5], [1, 5], [1, 5], [2, 4]]}})
    assert count_points(spec7) == 78
    one = parse_spec({"g": 0, "n": 1, "k": 3, "eigen": {"backend": "finite_field", "q": 5,
                                                         "exponents": [[1], [2], [1]]}})
    assert count_points(one) == 1


@pytest.mark.parametrize("g,k,q", [(0, 3, 5), (0, 3, 7), (0, 3, 9), (0, 4, 7), (1, 1, 5), (1, 1, 7)])
def test_counts_match_e_polynomial(g, k, q):
    E = e_polynomial(regular_spec(g, k, 2))
    specs = list(generic_eigenvalue_tuples(g, 2, k, [(1, 1)] * k, q, limit=40))
    assert specs
    chosen = [specs[0], specs[-1]]
    counts = {count_points(s) for s in chosen}
    assert counts == {E(q)}


def test_f11_quartic():
    spec = next(generic_eigenvalue_tuples(0, 2, 4, [(1, 1)] * 4, 11))
    assert count_points(spec) == 166


def test_no_split_generic_over_f3():
    assert list(generic_eigenvalue_tuples(1, 2, 1, [(1, 1)], 3)) == []


def test_errors():
    spec = parse_spec({"g": 0, "n": 2, "k": 4, "eigen": {"backend": "finite_field", "q": 7,
                                                          "exponents": [[1, 5], [1, 5], [1, 5], [2, 4]]}})
    with pytest.raises(BudgetExceeded):
        count_points(spec, budget=1000)
    with pytest.raises(UnsupportedSpec):
        count_points(regular_spec(0, 4, 2))
    bad = parse_spec({"g": 0, "n": 2, "k": 4, "eigen": {"backend": "finite_field", "q": 7,
                                                         "exponents": [[1, 5], [1, 5], [1, 5], [3, 3]]}})
    with pytest.raises(NotGeneric):
        count_points(bad)
