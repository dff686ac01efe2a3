from fractions import Fraction

from hypothesis import given, settings, strategies as st

from charvar import linalg

matrices = st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=80, deadline=None)
@given(matrices)
def test_smith_form(a):
    cols = len(a[0])
    S = linalg.smith_normal_form(a, cols)
    assert linalg.matmul(linalg.matmul(S.U, a), S.V) == S.D
    assert linalg.matmul(S.U, S.U_inv) == linalg.identity(len(a))
    assert linalg.matmul(S.V, S.V_inv) == linalg.identity(cols)
    d = S.diagonal
    assert all(x > 0 for x in d[:S.rank])
    assert all(d[i + 1] % d[i] == 0 for i in range(S.rank - 1))
    off = [S.D[i][j] for i in range(len(a)) for j in range(cols) if i != j]
    assert not any(off)
    assert S.rank == linalg.rational_rank(a) == linalg.bareiss_rank(a)


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_kernel_is_saturated(a):
    cols = len(a[0])
    K = linalg.integer_kernel(a, cols)
    k = len(K[0]) if K and K[0] else 0
    assert k == cols - linalg.integer_rank(a, cols)
    if k:
        assert not any(any(row) for row in linalg.matmul(a, K))
        # saturated: Smith form of the kernel basis has unit divisors
        S = linalg.smith_normal_form(K, k)
        assert all(x == 1 for x in S.diagonal[:S.rank])


def test_determinant():
    assert linalg.determinant([[2, 1], [1, 1]]) == 1
    assert linalg.determinant([[0, 2], [-2, 0]]) == 4
    assert linalg.determinant([[1, 2], [2, 4]]) == 0


def test_subspace_lattice_operations():
    V = linalg.Subspace(3, [[1, 0, 0], [0, 1, 0]])
    W = linalg.Subspace(3, [[0, 1, 0], [0, 0, 1]])
    assert len(V + W) == 3
    assert len(V & W) == 1
    assert (V & W).contains([0, Fraction(5), 0])
    assert V & W <= V
