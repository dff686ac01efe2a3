from hypothesis import given, settings, strategies as st

from charvar.coxeter import BraidWord, Permutation
from charvar.fq_oracle import braid_variety_count
from charvar.walks import (Walk, cell_shape, count_walks, enumerate_walks, stay_graph_components,
                           stay_graph_connected, validate_walk)

from _sweeps import all_braids

TAU, ID = Permutation((2, 1)), Permutation((1, 2))


def s1(m):
    return BraidWord(2, (1,) * m)


def test_walk_counts():
    assert [count_walks(s1(2 * m)) for m in (1, 2, 3)] == [1, 2, 5]
    assert list(enumerate_walks(s1(2))) == [Walk((ID, TAU, ID))]
    assert count_walks(BraidWord(3, ())) == 1


def test_dfs_order_stays_first():
    walks = list(enumerate_walks(s1(6)))
    assert walks[0].states == (ID, TAU, TAU, TAU, TAU, TAU, ID)
    assert walks[-1].states == (ID, TAU, ID, TAU, ID, TAU, ID)


def test_cell_shape_examples():
    sh = cell_shape(s1(6), Walk((ID,) + (TAU,) * 5 + (ID,)))
    assert (sh.up, sh.stay, sh.down) == ((1,), (2, 3, 4, 5), (6,))
    sh = cell_shape(s1(4), Walk((ID, TAU, ID, TAU, ID)))
    assert (sh.up, sh.down, sh.stay) == ((1, 3), (2, 4), ())
    sh = cell_shape(s1(2), next(enumerate_walks(s1(2))))
    assert (sh.up, sh.down, sh.stay) == ((1,), (2,), ())


def test_stay_graph_examples():
    walks = list(enumerate_walks(s1(6)))
    assert stay_graph_connected(cell_shape(s1(6), walks[0]), 2)
    assert not stay_graph_connected(cell_shape(s1(2), next(enumerate_walks(s1(2)))), 2)
    assert sum(stay_graph_connected(cell_shape(s1(6), w)) for w in walks) == 4


def test_shape_invariants_on_sweep():
    for b in all_braids(6, 3):
        for w in enumerate_walks(b):
            assert validate_walk(b, w)
            sh = cell_shape(b, w)
            assert len(sh.up) == len(sh.down)
            assert len(sh.stay) == len(b) - 2 * len(sh.up)
            for r in sh.stays:
                assert r.a_pos != r.b_pos and r.a_act != r.b_act


def test_enumeration_is_complete():
    # brute force over all state sequences for short braids
    import itertools
    from charvar.coxeter import all_permutations
    for b in all_braids(4, 3):
        perms = list(all_permutations(b.n))
        brute = 0
        for mid in itertools.product(perms, repeat=max(len(b) - 1, 0)):
            states = (Permutation.identity(b.n),) + mid + (Permutation.identity(b.n),) if len(b) else \
                (Permutation.identity(b.n),)
            brute += validate_walk(b, Walk(states))
        assert brute == count_walks(b)


def test_invalid_walk_rejected():
    assert not validate_walk(s1(2), Walk((ID, ID, ID)))
    bad = Walk((ID, TAU, TAU))
    assert not validate_walk(s1(2), bad)


def _walk_sum(b, q):
    return sum(q ** len(sh.up) * (q - 1) ** len(sh.stay)
               for sh in (cell_shape(b, w) for w in enumerate_walks(b)))


def test_braid_variety_counts_two_strands():
    for l in range(7):
        for q in (2, 3):
            assert _walk_sum(s1(l), q) == braid_variety_count(s1(l), q)


def test_braid_variety_counts_three_strands():
    for b in all_braids(4, 3):
        if b.n == 3:
            assert _walk_sum(b, 2) == braid_variety_count(b, 2)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(1, 3), max_size=7))
def test_walks_revalidate(letters):
    b = BraidWord(4, tuple(letters))
    for w in enumerate_walks(b):
        assert validate_walk(b, w)
        comps = stay_graph_components(cell_shape(b, w))
        assert sorted(v for c in comps for v in c) == [1, 2, 3, 4]
