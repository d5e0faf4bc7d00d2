"""Two-cop capture on connected (P5, K3+K1)-free graphs.

Every triangle dominates such a graph, so the partition around any induced
paw has no far vertices; the two cases split on whether some vertex sees
exactly the pendant and the hub.
"""

from __future__ import annotations

from ..engine import StrategyContradiction
from ..graph import Graph, lowest_bit
from ..patterns import find_induced, paw_partition
from .base import Script, ScriptStrategy, claim, trapped
from .gyarfas import _paw_free


def _k3k1(g: Graph) -> Script:
    emb = find_induced(g, "paw")
    if emb is None:
        yield from _paw_free(g)
        return
    pt = paw_partition(g, emb)
    pend, hub, rim1, rim2 = pt.paw_vertices
    claim(pt.far == 0, "k3k1.triangles-dominate",
          "no vertex may sit at distance two from the paw")
    claim(pt.exactly(pend) == 0, "k3k1.only-pendant-empty")
    claim(pt.exactly(rim1, rim2) == 0, "k3k1.rim-pair-empty")

    pend_hub = pt.exactly(pend, hub)
    if pend_hub:
        claim(pt.exactly(rim1) == 0 and pt.exactly(rim2) == 0,
              "k3k1.case-pendhub.lone-rim-cells-empty")
        claim(pt.exactly(pend, rim2) | pt.all_but(rim1) == 0,
              "k3k1.case-pendhub.pend-rim2-and-not-rim1-empty")
        x = yield ((rim1, rim2), "k3k1 case pend-hub: cops on the rim")
        safe_cells = pt.exactly(hub) | (1 << pend) | pend_hub
        claim(safe_cells >> x & 1, "k3k1.case-pendhub.placement-cell")
        claim(trapped(g, x, hub, rim1), "k3k1.case-pendhub.trapped")
        yield ((rim1, hub), "k3k1 case pend-hub: cop 2 drops to the hub")
        raise StrategyContradiction("k3k1.case-pendhub.trapped", "robber escaped the trap")

    # no vertex sees exactly {pendant, hub}
    x = yield ((pend, hub), "k3k1 case empty: cops on pendant and hub")
    if pt.exactly(rim2) >> x & 1:
        pt = pt.swapped_rims()
        pend, hub, rim1, rim2 = pt.paw_vertices
    claim(pt.exactly(rim1) >> x & 1, "k3k1.case-empty.placement-cell",
          "safe placement must see exactly one rim vertex")

    xp = yield ((hub, rim2), "k3k1 case empty: sweep toward the far rim")
    claim(g.neighbors(x) & pt.exactly(pend, rim1) == 0,
          "k3k1.case-empty.no-pendant-rim1-detour")
    claim(pt.exactly(rim1) >> xp & 1, "k3k1.case-empty.held-at-rim1-cell")

    r = yield ((rim1, rim2), "k3k1 case empty: cops take the rim")
    claim(pt.exactly(hub) >> r & 1, "k3k1.case-empty.pushed-to-hub-cell")

    rp = yield ((xp, rim1), "k3k1 case empty: cop 1 backtracks to the old cell")
    claim(pt.exactly(rim2) >> rp & 1, "k3k1.case-empty.pushed-to-rim2-cell")
    claim(trapped(g, rp, r, hub), "k3k1.case-empty.trapped")
    yield ((r, hub), "k3k1 case empty: closing the trap")
    raise StrategyContradiction("k3k1.case-empty.trapped", "robber escaped the final trap")


def strategy_k3k1(g: Graph) -> ScriptStrategy:
    return ScriptStrategy(g, "k3k1", _k3k1(g))
