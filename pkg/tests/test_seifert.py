from charvar.coxeter import BraidWord
from charvar.lattice_tsv import cell_tsv, fiber_reduction
from charvar.seifert import alternates, boundary_cycles, build_surface, surface_invariants, to_dot
from charvar.walks import cell_shape, enumerate_walks, stay_graph_components

from _sweeps import all_braids


def _surf(b, idx=0):
    w = list(enumerate_walks(b))[idx]
    sh = cell_shape(b, w)
    return build_surface(b, sh), sh


def test_two_disks():
    S, _ = _surf(BraidWord(2, ()))
    inv = surface_invariants(S)
    assert (inv.components, inv.boundary_components, inv.euler_char, inv.h1_closed_rank) == (2, 2, 2, 0)


def test_sigma_squared_disconnected():
    S, _ = _surf(BraidWord(2, (1, 1)))
    assert surface_invariants(S).components == 2


def test_sigma_six_big_walk():
    S, _ = _surf(BraidWord(2, (1,) * 6))
    inv = surface_invariants(S)
    assert inv.components == 1 and inv.euler_char == -2 and inv.h1_closed_rank == 2


def test_t24_open_cell():
    S, _ = _surf(BraidWord(2, (1,) * 4))
    assert surface_invariants(S).h1_closed_rank == 0


def test_sweep_agrees_with_lattice():
    for b in all_braids(8, 3):
        for w in enumerate_walks(b):
            sh = cell_shape(b, w)
            S = build_surface(b, sh)
            inv = surface_invariants(S)
            assert sorted(S.involution.values()) == sorted(S.half_edges)
            assert all(S.involution[S.involution[h]] == h != S.involution[h] for h in S.half_edges)
            assert alternates(S)
            assert inv.components == len(stay_graph_components(sh, b.n))
            assert inv.euler_char == b.n - len(sh.stay)
            assert inv.boundary_components == b.permutation().cycle_count() == len(boundary_cycles(S))
            assert inv.h1_closed_rank == fiber_reduction(cell_tsv(b, sh)).r1


def test_dot_export():
    S, _ = _surf(BraidWord(2, (1,) * 4))
    dot = to_dot(S)
    assert dot.startswith("graph") or dot.startswith("digraph")
    assert "B:1" in dot
