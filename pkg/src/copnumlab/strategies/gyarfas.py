"""Induced-path chase for connected (P5,H)-free graphs,
H in {C3, C4, C5, claw, banner}, plus the paw-free reduction to it.

Both cops open on one vertex; the robber picks a component of the leftover
graph; cop 2 steps to a door vertex of that component.  P5-freeness forces
the robber to sit at distance exactly two behind the door, which pins down
an induced path v1-v2-v3-x.  The two side sets of that path decide a two-
or three-move endgame.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..engine import StrategyContradiction
from ..graph import Graph, lowest_bit, mask_of
from ..patterns import find_induced
from .base import Script, ScriptStrategy, claim, cover, trapped

GYARFAS_CLASSES = ("c3", "c4", "c5", "claw", "banner")


@dataclass(frozen=True)
class ChaseState:
    """Designated induced path {v1, v2, v3, x} with its two side sets.

    ``sees_v1_x`` holds the vertices whose trace on the path is exactly
    {v1, x}; ``sees_v2_x`` those (other than v3) seeing exactly {v2, x}.
    """

    v1: int
    v2: int
    v3: int
    x: int
    sees_v1_x: int
    sees_v2_x: int

    @classmethod
    def compute(cls, g: Graph, v1: int, v2: int, v3: int, x: int) -> "ChaseState":
        quad = (v1, v2, v3, x)
        path_edges = {(v1, v2), (v2, v3), (v3, x)}
        for i in range(4):
            for j in range(i + 1, 4):
                a, b = quad[i], quad[j]
                expect = (a, b) in path_edges or (b, a) in path_edges
                claim(g.has_edge(a, b) == expect, "gyarfas.designated-path",
                      f"{quad} must induce a path")
        qmask = mask_of(quad)
        s_set = 0
        t_set = 0
        want_s = mask_of((v1, x))
        want_t = mask_of((v2, x))
        for v in range(g.n):
            if qmask >> v & 1:
                continue
            tr = g.adj[v] & qmask
            if tr == want_s:
                s_set |= 1 << v
            elif tr == want_t:
                t_set |= 1 << v
        return cls(v1, v2, v3, x, s_set, t_set)


def _gyarfas(g: Graph, h: str) -> Script:
    v1 = 0
    robber = yield ((v1, v1), f"gyarfas-{h}: both cops open at {v1}")
    outside = g.all_mask & ~g.closed_neighbors(v1)
    comp = 0
    for c in g.components(outside):
        if c >> robber & 1:
            comp = c
            break
    claim(comp != 0, "gyarfas.robber-outside", "resumed robber must sit outside N[v1]")
    doors = g.neighbors(v1) & g.neighbors_of_set(comp)
    claim(doors != 0, "gyarfas.door-exists", "connectivity gives N(v1) a component door")
    v2 = lowest_bit(doors)

    x = yield ((v1, v2), f"gyarfas-{h}: cop 2 takes the door {v2}")
    claim(comp >> x & 1, "gyarfas.confined", "robber cannot leave its component")
    mids = g.neighbors(v2) & g.neighbors(x) & comp
    claim(mids != 0, "gyarfas.distance-two",
          "P5-freeness forces a common neighbor of the door and the robber")
    v3 = lowest_bit(mids)
    chase = ChaseState.compute(g, v1, v2, v3, x)

    if chase.sees_v1_x == 0:
        claim(trapped(g, x, v2, v3), "gyarfas.side1-empty.trapped")
        yield ((v2, v3), f"gyarfas-{h}: side set one empty, advancing both cops")
        raise StrategyContradiction("gyarfas.side1-empty.trapped", "robber escaped the trap")
    if chase.sees_v2_x == 0:
        claim(trapped(g, x, v1, v3), "gyarfas.side2-empty.trapped")
        yield ((v1, v3), f"gyarfas-{h}: side set two empty, cop 2 to the middle")
        raise StrategyContradiction("gyarfas.side2-empty.trapped", "robber escaped the trap")

    claim(h == "c3", f"gyarfas.{h}.side-set-must-vanish",
          "for this class one side set of the path is always empty")
    s = lowest_bit(chase.sees_v1_x)
    r = yield ((v1, v3), "gyarfas-c3: pinning the path end")
    claim(chase.sees_v2_x >> r & 1, "gyarfas.c3.retreat-cell",
          "safe retreat must see exactly {v2, x}")
    claim(not g.has_edge(r, s), "gyarfas.c3.triangle-free-detour")
    claim(trapped(g, r, v2, v3), "gyarfas.c3.trapped")
    yield ((v2, v3), "gyarfas-c3: closing the trap")
    raise StrategyContradiction("gyarfas.c3.trapped", "robber escaped the final trap")


def _paw_free(g: Graph) -> Script:
    tri = find_induced(g, "c3")
    if tri is None:
        yield from _gyarfas(g, "c3")
        return
    u1, u2, _ = tri.vertices
    claim(g.is_dominating(mask_of((u1, u2))), "pawfree.triangle-edge-dominates",
          "an edge of any triangle dominates a (P5,paw)-free graph")
    yield ((u1, u2), "paw-free: cops on a dominating triangle edge")
    raise StrategyContradiction("pawfree.dominated", "robber placed outside a dominating set")


def strategy_gyarfas(g: Graph, h: str) -> ScriptStrategy:
    if h not in GYARFAS_CLASSES:
        raise ValueError(f"unsupported class {h!r}")
    return ScriptStrategy(g, f"gyarfas-{h}", _gyarfas(g, h))


def strategy_paw_free(g: Graph) -> ScriptStrategy:
    return ScriptStrategy(g, "paw", _paw_free(g))
