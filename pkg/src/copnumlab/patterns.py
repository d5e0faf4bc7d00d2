"""Induced-subgraph detection for a fixed catalog of small patterns.

The catalog covers every 3-to-5 vertex pattern the strategy layer and the
class predicates need.  Embeddings are induced both ways: pattern edges map
to host edges and pattern non-edges to host non-edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import Graph, bits, mask_of


class PatternError(ValueError):
    pass


def _pat(n: int, edges: list[tuple[int, int]]) -> Graph:
    return Graph.from_edges(n, edges)


# Edge lists are fixed once and for all; several later modules rely on the
# vertex roles (e.g. paw vertex 0 is the pendant, 1 the hub, 2 and 3 the
# triangle rim; kite/banner/cobanner/butterfly keep the paw roles embedded).
CATALOG: dict[str, Graph] = {
    "p3p1": _pat(4, [(0, 1), (1, 2)]),
    "p4": _pat(4, [(0, 1), (1, 2), (2, 3)]),
    "p5": _pat(5, [(0, 1), (1, 2), (2, 3), (3, 4)]),
    "c3": _pat(3, [(0, 1), (1, 2), (2, 0)]),
    "c4": _pat(4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
    "c5": _pat(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
    "claw": _pat(4, [(0, 1), (0, 2), (0, 3)]),
    "paw": _pat(4, [(0, 1), (1, 2), (2, 3), (1, 3)]),
    "diamond": _pat(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
    "k4": _pat(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    # paw 0..3 plus 4 seeing exactly the rim {2,3}
    "kite": _pat(5, [(0, 1), (1, 2), (2, 3), (1, 3), (2, 4), (3, 4)]),
    # 4-cycle 1-2-3-4 with pendant 0 on 1
    "banner": _pat(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 1)]),
    # paw 1..4 (pendant 1, hub 2) with pendant 0 hung on 1
    "cobanner": _pat(5, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 4)]),
    # paw 0..3 plus 4 seeing exactly {pendant, hub}: two triangles sharing 1
    "butterfly": _pat(5, [(0, 1), (1, 2), (2, 3), (1, 3), (0, 4), (1, 4)]),
    "k3k1": _pat(4, [(0, 1), (1, 2), (2, 0)]),
    "2k1k2": _pat(4, [(0, 1)]),
    "2k2": _pat(4, [(0, 1), (2, 3)]),
    "k1k2": _pat(3, [(0, 1)]),
}


@dataclass(frozen=True)
class Embedding:
    """Injective pattern-vertex -> host-vertex map of an induced copy."""

    pattern: str
    vertices: tuple[int, ...]

    def mask(self) -> int:
        return mask_of(self.vertices)

    def validate(self, host: Graph) -> None:
        pat = CATALOG[self.pattern]
        vs = self.vertices
        if len(vs) != pat.n or len(set(vs)) != pat.n:
            raise PatternError(f"embedding {vs} is not injective on {self.pattern}")
        for a in range(pat.n):
            for b in range(a + 1, pat.n):
                if pat.has_edge(a, b) != host.has_edge(vs[a], vs[b]):
                    raise PatternError(
                        f"{self.pattern} embedding {vs} not induced at pair ({a},{b})"
                    )


def _search(host: Graph, pat: Graph) -> Iterator[tuple[int, ...]]:
    """Backtracking over ordered tuples, ascending host vertices, with
    degree and adjacency pruning.  Yields assignments in lexicographic
    order of the assignment tuple."""
    pn = pat.n
    if pn > host.n:
        return
    pat_deg = [pat.degree(v) for v in range(pn)]
    assigned: list[int] = []
    used = 0

    def extend(i: int) -> Iterator[tuple[int, ...]]:
        nonlocal used
        if i == pn:
            yield tuple(assigned)
            return
        need = pat.adj[i]
        for cand in range(host.n):
            if used >> cand & 1:
                continue
            if host.degree(cand) < pat_deg[i]:
                continue
            ok = True
            for j in range(i):
                if (need >> j & 1) != (host.adj[assigned[j]] >> cand & 1):
                    ok = False
                    break
            if not ok:
                continue
            assigned.append(cand)
            used |= 1 << cand
            yield from extend(i + 1)
            used &= ~(1 << cand)
            assigned.pop()

    yield from extend(0)


def find_induced(host: Graph, pattern: str) -> Embedding | None:
    """First induced embedding of the named pattern, or None."""
    for vs in _search(host, CATALOG[pattern]):
        emb = Embedding(pattern, vs)
        emb.validate(host)
        return emb
    return None


def find_induced_all(host: Graph, pattern: str) -> Iterator[Embedding]:
    for vs in _search(host, CATALOG[pattern]):
        yield Embedding(pattern, vs)


def is_free(host: Graph, patterns: Iterable) -> tuple[bool, Embedding | None]:
    """True iff no listed pattern embeds; otherwise the first witness."""
    for name in patterns:
        emb = find_induced(host, name)
        if emb is not None:
            return False, emb
    return True, None


# Class labels the lab verifies.  Each maps to the pattern set that must
# be absent.
CLASS_PREDICATES: dict[str, tuple[str, ...]] = {
    **{f"(p5,{h})-free": ("p5", h) for h in CATALOG if h != "p5"},
    "p4-free": ("p4",),
    "2k2-free": ("2k2",),
    "p3p1-free": ("p3p1",),
    "k1k2-free": ("k1k2",),
    "2k1k2-free": ("2k1k2",),
}


def classify(g: Graph) -> set[str]:
    """Labels of every catalog class the graph belongs to."""
    hits: dict[str, bool] = {}

    def free_of(name: str) -> bool:
        if name not in hits:
            hits[name] = find_induced(g, name) is None
        return hits[name]

    labels = set()
    for label, pats in CLASS_PREDICATES.items():
        if all(free_of(p) for p in pats):
            labels.add(label)
    return labels


def class_witness(g: Graph, label: str) -> Embedding | None:
    """Witness embedding showing the graph is outside the labeled class."""
    for name in CLASS_PREDICATES[label]:
        emb = find_induced(g, name)
        if emb is not None:
            return emb
    return None


def dump_catalog() -> str:
    """One "name<TAB>graph6" line per catalog pattern."""
    from .graph import to_graph6

    return "\n".join(f"{name}\t{to_graph6(pat)}" for name, pat in CATALOG.items()) + "\n"


# partition around an induced paw ----------------------------------------


class PawPartition:
    """Classification of all vertices by their adjacency trace on a paw.

    The paw has a pendant vertex, a hub (the pendant's neighbor, adjacent
    to everything else in the paw), and two rim vertices completing the
    triangle.  Every outside vertex lands in exactly one cell keyed by the
    subset of paw vertices it sees; ``far`` holds the trace-empty ones.
    """

    __slots__ = ("graph", "pendant", "hub", "rim_a", "rim_b", "_cells")

    def __init__(self, graph: Graph, pendant: int, hub: int, rim_a: int, rim_b: int):
        self.graph = graph
        self.pendant = pendant
        self.hub = hub
        self.rim_a = rim_a
        self.rim_b = rim_b
        paw = (pendant, hub, rim_a, rim_b)
        cells = [0] * 16
        pmask = mask_of(paw)
        for v in range(graph.n):
            if pmask >> v & 1:
                continue
            trace = 0
            for k, w in enumerate(paw):
                if graph.has_edge(v, w):
                    trace |= 1 << k
            cells[trace] |= 1 << v
        self._cells = tuple(cells)

    @property
    def paw_vertices(self) -> tuple[int, int, int, int]:
        return (self.pendant, self.hub, self.rim_a, self.rim_b)

    def paw_mask(self) -> int:
        return mask_of(self.paw_vertices)

    def _role_bit(self, v: int) -> int:
        try:
            return 1 << self.paw_vertices.index(v)
        except ValueError:
            raise PatternError(f"{v} is not a paw vertex") from None

    def exactly(self, *paw_verts: int) -> int:
        """Outside vertices whose paw trace is exactly the given set."""
        trace = 0
        for v in paw_verts:
            trace |= self._role_bit(v)
        return self._cells[trace]

    def all_but(self, paw_vert: int) -> int:
        return self._cells[15 ^ self._role_bit(paw_vert)]

    @property
    def all_four(self) -> int:
        return self._cells[15]

    @property
    def far(self) -> int:
        """Vertices with no neighbor on the paw (distance >= 2 from it)."""
        return self._cells[0]

    def near(self) -> int:
        """N(P): outside vertices with at least one paw neighbor."""
        out = 0
        for t in range(1, 16):
            out |= self._cells[t]
        return out

    def swapped_rims(self) -> PawPartition:
        return PawPartition(self.graph, self.pendant, self.hub, self.rim_b, self.rim_a)

    def validate(self) -> None:
        g = self.graph
        union = self.paw_mask()
        for cell in self._cells:
            if cell & union:
                raise PatternError("overlapping partition cells")
            union |= cell
        if union != g.all_mask:
            raise PatternError("partition does not cover the graph")


def paw_partition(g: Graph, emb: Embedding) -> PawPartition:
    """Partition around an induced paw embedding (roles: pendant, hub, rim, rim)."""
    if emb.pattern != "paw":
        raise PatternError(f"expected a paw embedding, got {emb.pattern}")
    emb.validate(g)
    pendant, hub, rim_a, rim_b = emb.vertices
    part = PawPartition(g, pendant, hub, rim_a, rim_b)
    part.validate()
    return part
