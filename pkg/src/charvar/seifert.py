"""Ribbon-graph model of the surface attached to a braid and a walk.

The surface is glued from disks and strips:

* a bottom disk under each strand position (carrying a black marked point),
* a top disk over each position (carrying a white marked point),
* a four-legged junction disk at each stay,
* strips joining all of these, following the strands.

At a crossing where the walk moves, the two strips just cross.  At a stay
they meet in a junction whose legs are, in cyclic order, bottom-left,
top-left, bottom-right, top-right.  With this rotation, following the left
edges of the strips upward permutes positions like ``pi_k``, while the
right edges track the walk ``p_k``.

Everything is combinatorial: half-edges, the edge involution and the
rotation at each vertex.  Boundary cycles are the orbits of
``rotation o involution``.  The surface is never embedded.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import BraidWord
from .walks import CellShape


@dataclass(frozen=True)
class RibbonSurface:
    n: int
    half_edges: tuple[int, ...]
    vertex_of: dict[int, str]
    involution: dict[int, int]
    rotation: dict[int, int]
    black_labels: dict[str, int]
    white_labels: dict[str, int]

    @property
    def next_at_boundary(self) -> dict[int, int]:
        return {h: self.rotation[self.involution[h]] for h in self.half_edges}

    @property
    def vertices(self) -> list[str]:
        return sorted(set(self.vertex_of.values()), key=_vertex_key)


def _vertex_key(v: str):
    kind, _, num = v.partition(":")
    return ({"B": 0, "J": 1, "T": 2}[kind], int(num))


@dataclass(frozen=True)
class SurfaceInvariants:
    components: int
    boundary_components: int
    euler_char: int
    h1_closed_rank: int

    def as_dict(self) -> dict:
        return {"components": self.components, "boundary_components": self.boundary_components,
                "euler_char": self.euler_char, "h1_closed_rank": self.h1_closed_rank}


def build_surface(b: BraidWord, shape: CellShape) -> RibbonSurface:
    if shape.n != b.n or shape.length != len(b):
        raise ValueError("cell shape does not belong to this braid")
    n = b.n
    counter = iter(range(10 ** 9))
    vertex_of: dict[int, str] = {}
    involution: dict[int, int] = {}
    rotation: dict[int, int] = {}

    def leg(vertex: str) -> int:
        h = next(counter)
        vertex_of[h] = vertex
        return h

    def glue(h1: int, h2: int) -> None:
        involution[h1], involution[h2] = h2, h1

    black = {f"B:{j}": j for j in range(1, n + 1)}
    white = {f"T:{j}": j for j in range(1, n + 1)}
    slots = []
    for j in range(1, n + 1):
        h = leg(f"B:{j}")
        rotation[h] = h
        slots.append(h)
    stay_set = set(shape.stay)
    for k, i in enumerate(b.letters, start=1):
        if k not in stay_set:
            slots[i - 1], slots[i] = slots[i], slots[i - 1]
            continue
        v = f"J:{k}"
        bl, tl, br, tr = leg(v), leg(v), leg(v), leg(v)
        rotation.update({bl: tl, tl: br, br: tr, tr: bl})
        glue(slots[i - 1], bl)
        glue(slots[i], br)
        slots[i - 1], slots[i] = tl, tr
    for j in range(1, n + 1):
        h = leg(f"T:{j}")
        rotation[h] = h
        glue(slots[j - 1], h)
    return RibbonSurface(n, tuple(sorted(vertex_of)), vertex_of, involution, rotation, black, white)


def boundary_cycles(S: RibbonSurface) -> list[list[int]]:
    nxt = S.next_at_boundary
    seen: set[int] = set()
    cycles = []
    for h in S.half_edges:
        if h in seen:
            continue
        cyc = []
        while h not in seen:
            seen.add(h)
            cyc.append(h)
            h = nxt[h]
        cycles.append(cyc)
    return cycles


def marked_points_on(S: RibbonSurface, cycle: list[int]) -> list[str]:
    """Colors of the marked points met along a boundary cycle, in order."""
    out = []
    for h in cycle:
        v = S.vertex_of[S.involution[h]]
        if v in S.black_labels:
            out.append("black")
        elif v in S.white_labels:
            out.append("white")
    return out


def alternates(S: RibbonSurface) -> bool:
    for cyc in boundary_cycles(S):
        colors = marked_points_on(S, cyc)
        if len(colors) % 2 or any(colors[t] == colors[(t + 1) % len(colors)] for t in range(len(colors))):
            return False
    return True


def components(S: RibbonSurface) -> list[frozenset[str]]:
    parent = {v: v for v in S.vertex_of.values()}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for h, g in S.involution.items():
        parent[find(S.vertex_of[h])] = find(S.vertex_of[g])
    groups: dict[str, set[str]] = {}
    for v in parent:
        groups.setdefault(find(v), set()).add(v)
    return sorted((frozenset(g) for g in groups.values()), key=lambda g: min(map(_vertex_key, g)))


def surface_invariants(S: RibbonSurface) -> SurfaceInvariants:
    comps = len(components(S))
    bdry = len(boundary_cycles(S))
    chi = len(set(S.vertex_of.values())) - len(S.involution) // 2
    # each closed component has chi = 2 - h1
    h1 = 2 * comps - (chi + bdry)
    return SurfaceInvariants(comps, bdry, chi, h1)


def to_dot(S: RibbonSurface, name: str = "surface") -> str:
    """Graphviz description: vertices are disks, edges are strips."""
    lines = [f"graph {name} {{"]
    for v in S.vertices:
        shape = "box" if v.startswith("J") else "circle"
        color = ' style=filled fillcolor=black fontcolor=white' if v in S.black_labels else ""
        lines.append(f'  "{v}" [shape={shape}{color}];')
    done = set()
    for h in S.half_edges:
        g = S.involution[h]
        if g in done:
            continue
        done.add(h)
        lines.append(f'  "{S.vertex_of[h]}" -- "{S.vertex_of[g]}" [label="{h}-{g}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
