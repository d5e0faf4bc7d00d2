"""Two-cop capture on connected graphs without an induced P3+P1.

Every component left after deleting a closed neighborhood is complete, so
one cop holds the base vertex while the other walks through a door vertex
into the robber's component and wins by completeness.
"""

from __future__ import annotations

from ..engine import StrategyContradiction
from ..graph import Graph, lowest_bit
from .base import Script, ScriptStrategy, claim


def _p3p1(g: Graph) -> Script:
    base = 0
    robber = yield ((base, base), "p3p1: both cops on the base vertex")
    outside = g.all_mask & ~g.closed_neighbors(base)
    comp = 0
    for c in g.components(outside):
        if c >> robber & 1:
            comp = c
            break
    claim(comp != 0, "p3p1.robber-outside")
    claim(g.is_complete(comp), "p3p1.leftover-components-complete",
          "deleting N[base] must leave complete components")
    doors = g.neighbors(base) & g.neighbors_of_set(comp)
    claim(doors != 0, "p3p1.door-exists")
    door = lowest_bit(doors)
    robber = yield ((base, door), "p3p1: cop 2 walks to the component door")
    claim(comp >> robber & 1, "p3p1.confined")
    entry = g.neighbors(door) & comp
    claim(entry != 0, "p3p1.door-adjacent")
    yield ((base, lowest_bit(entry)), "p3p1: cop 2 steps into the complete component")
    raise StrategyContradiction("p3p1.trapped", "complete component should pin the robber")


def strategy_p3p1(g: Graph) -> ScriptStrategy:
    return ScriptStrategy(g, "p3p1", _p3p1(g))
