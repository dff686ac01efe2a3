"""Walks over a braid word and the shapes of the corresponding cells.

A walk is a sequence ``p_0, ..., p_l`` starting and ending at the identity.
At crossing ``k`` (letter ``i = i_k``) the walk must go up if it can; if it
cannot, it either stays at ``p_{k-1}`` or goes down to ``tau_i p_{k-1}``.
Crossings are numbered from 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .coxeter import BraidWord, Permutation, goes_up, length


@dataclass(frozen=True)
class Walk:
    states: tuple[Permutation, ...]

    def __len__(self) -> int:
        return len(self.states) - 1


@dataclass(frozen=True)
class StayRecord:
    """Data of a stay at crossing ``k``.

    ``a_pos``/``b_pos`` are the torus coordinates hit by the stay coordinate
    (positive and negative exponent), ``a_act``/``b_act`` the coordinates of
    the torus action weight on it.
    """

    k: int
    a_pos: int
    b_pos: int
    a_act: int
    b_act: int


@dataclass(frozen=True)
class CellShape:
    n: int
    up: tuple[int, ...]
    down: tuple[int, ...]
    stay: tuple[int, ...]
    stays: tuple[StayRecord, ...]

    @property
    def length(self) -> int:
        return len(self.up) + len(self.down) + len(self.stay)


def enumerate_walks(b: BraidWord) -> Iterator[Walk]:
    """Yield every walk over ``b`` depth first, staying before going down.

    States with ``length(p_k) > l - k`` can never return to the identity and
    are pruned.
    """
    n, letters = b.n, b.letters
    total = len(letters)
    start = Permutation.identity(n)
    path = [start]

    def dfs(k: int) -> Iterator[Walk]:
        p = path[-1]
        if k == total:
            if p.is_identity():
                yield Walk(tuple(path))
            return
        i = letters[k]
        if goes_up(p, i):
            options = [p.swap_values(i)]
        else:
            options = [p, p.swap_values(i)]
        for nxt in options:
            if length(nxt) > total - k - 1:
                continue
            path.append(nxt)
            yield from dfs(k + 1)
            path.pop()

    yield from dfs(0)


def count_walks(b: BraidWord) -> int:
    return sum(1 for _ in enumerate_walks(b))


def validate_walk(b: BraidWord, w: Walk) -> bool:
    """Re-check the walk rule step by step."""
    if len(w) != len(b):
        return False
    if not (w.states[0].is_identity() and w.states[-1].is_identity()):
        return False
    for k, i in enumerate(b.letters):
        p, nxt = w.states[k], w.states[k + 1]
        moved = p.swap_values(i)
        if goes_up(p, i):
            if nxt != moved:
                return False
        elif nxt not in (p, moved):
            return False
    return True


def cell_shape(b: BraidWord, w: Walk) -> CellShape:
    if len(w) != len(b):
        raise ValueError(f"walk has {len(w)} steps but braid has {len(b)} letters")
    if w.states[0].n != b.n:
        raise ValueError("walk and braid live on different strand counts")
    prefixes = b.prefix_permutations()
    up, down, stay, records = [], [], [], []
    for k, i in enumerate(b.letters, start=1):
        p, nxt = w.states[k - 1], w.states[k]
        if nxt == p:
            stay.append(k)
            pinv = p.inverse()
            act = prefixes[k].inverse()
            records.append(StayRecord(k, pinv(i + 1), pinv(i), act(i + 1), act(i)))
        elif nxt == p.swap_values(i):
            (up if goes_up(p, i) else down).append(k)
        else:
            raise ValueError(f"step {k} of the walk is not allowed by letter {i}")
    return CellShape(b.n, tuple(up), tuple(down), tuple(stay), tuple(records))


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n + 1))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        self.parent[self.find(a)] = self.find(b)


def stay_graph_components(shape: CellShape, n: int | None = None) -> list[frozenset[int]]:
    n = shape.n if n is None else n
    uf = _UnionFind(n)
    for rec in shape.stays:
        uf.union(rec.a_pos, rec.b_pos)
    groups: dict[int, set[int]] = {}
    for v in range(1, n + 1):
        groups.setdefault(uf.find(v), set()).add(v)
    return sorted((frozenset(g) for g in groups.values()), key=min)


def stay_graph_connected(shape: CellShape, n: int | None = None) -> bool:
    return len(stay_graph_components(shape, n)) == 1
