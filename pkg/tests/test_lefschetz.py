import random
from fractions import Fraction

import numpy as np
import pytest

from charvar.lefschetz import (Filtration, GradedSkewModule, LefschetzError, check_cell,
                               check_lefschetz_filtration, curious_lefschetz_check, exterior_wedge_operator,
                               jordan_weights, mh_closed_form, mh_from_kernels, monodromic_filtration)
from charvar.linalg import Subspace
from charvar.strata import cell_census

from _sweeps import LEFSCHETZ_MATRIX, jordan_nilpotent, random_nilpotent, regular_spec


def standard(r, c=1):
    J = np.zeros((r, r), dtype=int)
    for j in range(r // 2):
        J[2 * j, 2 * j + 1], J[2 * j + 1, 2 * j] = c, -c
    return J


def test_rank_two():
    rep = curious_lefschetz_check(GradedSkewModule(2, standard(2, 3), 1), Fraction(2))
    assert rep and rep.middle_weight == 2


def test_rank_four_ranks():
    rep = curious_lefschetz_check(GradedSkewModule(4, standard(4)))
    assert rep and rep.ranks == {1: (4, 4), 2: (1, 1)}


def test_degenerate_fails():
    assert not curious_lefschetz_check(GradedSkewModule(2, np.zeros((2, 2), dtype=int)))
    assert not curious_lefschetz_check(GradedSkewModule(2, standard(2)), d=5)


def test_errors():
    with pytest.raises(LefschetzError):
        curious_lefschetz_check(GradedSkewModule(3, np.zeros((3, 3), dtype=int)))
    with pytest.raises(LefschetzError):
        GradedSkewModule(22, np.zeros((22, 22), dtype=int))
    with pytest.raises(LefschetzError):
        mh_from_kernels(GradedSkewModule(2, np.zeros((2, 2), dtype=int)))
    with pytest.raises(LefschetzError):
        monodromic_filtration([[1, 0], [0, 0]])


def test_mh_examples():
    assert mh_from_kernels(GradedSkewModule(2, standard(2))) == {(2, 0): 1, (3, 1): 2, (4, 2): 1}
    assert mh_from_kernels(GradedSkewModule(0, np.zeros((0, 0), dtype=int), 1)) == {(2, 1): 1}


def test_mh_random_forms():
    rng = random.Random(2)
    for r in (2, 4, 6):
        for _ in range(5):
            A = np.triu(np.array([[rng.randint(-3, 3) for _ in range(r)] for _ in range(r)]), 1)
            Om = A - A.T
            M = GradedSkewModule(r, Om, rng.randint(0, 2))
            if curious_lefschetz_check(M):
                assert mh_from_kernels(M) == mh_closed_form(r, M.a)


@pytest.mark.parametrize("g,k,n", LEFSCHETZ_MATRIX)
def test_cells_pass(g, k, n):
    for c in cell_census(regular_spec(g, k, n)):
        if c.connected:
            assert check_cell(c.r1, c.omega_red, c.affine_dim)
            M = GradedSkewModule(c.r1, c.omega_red, c.affine_dim)
            assert mh_from_kernels(M) == mh_closed_form(c.r1, c.affine_dim)


def test_filtration_examples():
    F = monodromic_filtration([[0, 0], [0, 0]])
    assert F.graded_dims() == {0: 2} and len(F[1]) == 0
    F = monodromic_filtration(jordan_nilpotent([3]))
    assert F.graded_dims() == {-2: 1, 0: 1, 2: 1}


def test_filtration_on_exterior_algebra_splits_degrees():
    N, degrees = exterior_wedge_operator(standard(2))
    F = monodromic_filtration(N)
    assert check_lefschetz_filtration(N, F)
    # the step F^m is Lambda^{>= m + r/2}: index m tracks degree minus r/2
    assert F.graded_dims() == {-1: 1, 0: 2, 1: 1}
    assert degrees == [0, 1, 1, 2]
    assert len(F[1]) == 1 and F[1].contains([0, 0, 0, 1])
    assert len(F[0]) == 3 and not F[0].contains([1, 0, 0, 0])


def test_random_nilpotents():
    rng = random.Random(7)
    for _ in range(10):
        N, blocks = random_nilpotent(rng, 8)
        F = monodromic_filtration(N)
        assert F.graded_dims() == jordan_weights(blocks)
        assert check_lefschetz_filtration(N, F)


def test_perturbed_filtration_fails():
    N = jordan_nilpotent([3, 2])
    F = monodromic_filtration(N)
    for m in range(F.lo, F.hi + 1):
        cur = F.steps[m]
        # enlarge or shrink one step by a vector not already accounted for
        if len(cur) < F.dim:
            extra = next(v for v in ([int(i == j) for i in range(F.dim)] for j in range(F.dim))
                         if not cur.contains(v))
            steps = dict(F.steps)
            steps[m] = cur + Subspace(F.dim, [extra])
            assert not check_lefschetz_filtration(N, Filtration(F.dim, steps, F.lo, F.hi))
        if len(cur) > 0 and len(F.steps.get(m + 1, Subspace(F.dim))) < len(cur):
            steps = dict(F.steps)
            steps[m] = F.steps.get(m + 1, Subspace(F.dim)) if m + 1 <= F.hi else Subspace(F.dim)
            assert not check_lefschetz_filtration(N, Filtration(F.dim, steps, F.lo, F.hi))
