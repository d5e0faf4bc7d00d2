"""Immutable simple undirected graphs on at most 64 vertices.

Adjacency is stored as one Python int bitmask per vertex, so every set
operation used by the solvers (neighborhoods, domination, components)
is a couple of machine-word operations.  Vertex sets everywhere in this
package are plain int bitmasks over 0..n-1.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator

MAX_VERTICES = 64


class GraphError(ValueError):
    pass


class Graph6Error(GraphError):
    """Malformed graph6 input."""


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Vertices of a bitmask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask: int) -> int:
    if not mask:
        raise ValueError("empty vertex set")
    return (mask & -mask).bit_length() - 1


class Graph:
    """Simple undirected graph with bitset rows, vertices 0..n-1."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Iterable[int]):
        if not 0 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        rows = tuple(adj)
        if len(rows) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"row {v} has bits outside 0..{n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
        for v, row in enumerate(rows):
            for u in bits(row):
                if not rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", rows)

    def __setattr__(self, *_):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    # basic queries ----------------------------------------------------

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range")
        return self.adj[v]

    def closed_neighbors(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range")
        return self.adj[v] | 1 << v

    def neighbors_of_set(self, s: int) -> int:
        """N(S): vertices outside S with a neighbor in S."""
        out = 0
        for v in bits(s):
            out |= self.adj[v]
        return out & ~s

    def closed_neighbors_of_set(self, s: int) -> int:
        out = s
        for v in bits(s):
            out |= self.adj[v]
        return out

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    # structure --------------------------------------------------------

    def components(self, s: int | None = None) -> list[int]:
        """Connected components of the subgraph induced on mask ``s``."""
        rem = self.all_mask if s is None else s
        comps = []
        while rem:
            seed = rem & -rem
            comp = seed
            frontier = seed
            while frontier:
                grow = 0
                for v in bits(frontier):
                    grow |= self.adj[v]
                frontier = grow & rem & ~comp
                comp |= frontier
            comps.append(comp)
            rem &= ~comp
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_dominating(self, d: int) -> bool:
        return self.closed_neighbors_of_set(d) == self.all_mask

    def distance(self, u: int, s: int) -> float:
        """BFS distance from vertex ``u`` to the set ``s`` (inf if unreachable)."""
        if s == 0:
            return math.inf
        if s >> u & 1:
            return 0
        seen = 1 << u
        frontier = seen
        dist = 0
        while frontier:
            dist += 1
            grow = 0
            for v in bits(frontier):
                grow |= self.adj[v]
            frontier = grow & ~seen
            if frontier & s:
                return dist
            seen |= frontier
        return math.inf

    def induced(self, s: int) -> Graph:
        """Induced subgraph, vertices relabeled 0..|S|-1 in sorted order."""
        verts = list(bits(s))
        index = {v: i for i, v in enumerate(verts)}
        rows = []
        for v in verts:
            row = 0
            for u in bits(self.adj[v] & s):
                row |= 1 << index[u]
            rows.append(row)
        return Graph(len(verts), rows)

    def relabeled(self, perm: list[int]) -> Graph:
        """Copy with vertex v renamed perm[v]."""
        rows = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in bits(self.adj[v]):
                row |= 1 << perm[u]
            rows[perm[v]] = row
        return Graph(self.n, rows)

    def complement(self) -> Graph:
        full = self.all_mask
        return Graph(self.n, ((full & ~self.adj[v]) & ~(1 << v) for v in range(self.n)))

    def is_complete(self, s: int) -> bool:
        for v in bits(s):
            if self.adj[v] & s != s & ~(1 << v):
                return False
        return True

    def is_complete_multipartite(self) -> list[int] | None:
        """Partite sets (as masks) when the graph is complete multipartite, else None.

        Computed from the complement: its components must each be complete
        in the complement.
        """
        co = self.complement()
        parts = co.components()
        for part in parts:
            if not co.is_complete(part):
                return None
        return parts

    # dunder -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


# graph6 codec ----------------------------------------------------------
#
# Bit-exact per the published format: header byte(s) 63+n (or '~' plus
# three 6-bit groups for n >= 63), then the upper triangle in column-major
# order packed 6 bits per printable byte at offset 63, zero padded.


def _pair_stream(n: int) -> Iterator[tuple[int, int]]:
    for j in range(1, n):
        for i in range(j):
            yield (i, j)


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(63 + n)
    else:
        head = "~" + chr(63 + (n >> 12 & 63)) + chr(63 + (n >> 6 & 63)) + chr(63 + (n & 63))
    chunk = 0
    filled = 0
    out = [head]
    for i, j in _pair_stream(n):
        chunk = chunk << 1 | (g.adj[i] >> j & 1)
        filled += 1
        if filled == 6:
            out.append(chr(63 + chunk))
            chunk = 0
            filled = 0
    if filled:
        chunk <<= 6 - filled
        out.append(chr(63 + chunk))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    vals = []
    for ch in s:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise Graph6Error(f"byte {ord(ch)} outside graph6 range")
        vals.append(v)
    if vals[0] == 63:
        if len(vals) < 4 or vals[1] == 63:
            raise Graph6Error("unsupported or truncated graph6 header")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    if n > MAX_VERTICES:
        raise Graph6Error(f"{n} vertices exceeds the {MAX_VERTICES}-vertex cap")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) != nbytes:
        raise Graph6Error(f"expected {nbytes} data bytes for n={n}, got {len(body)}")
    bitstream = 0
    for v in body:
        bitstream = bitstream << 6 | v
    pad = 6 * nbytes - nbits
    if bitstream & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    bitstream >>= pad
    rows = [0] * n
    for k, (i, j) in enumerate(_pair_stream(n)):
        if bitstream >> (nbits - 1 - k) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, rows)


# edge-list text format ("n m" then one "u v" line per edge) -------------


def to_edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> Graph:
    rows = [ln.strip() for ln in text.splitlines()]
    rows = [ln for ln in rows if ln and not ln.startswith("#")]
    if not rows:
        raise GraphError("empty edge-list text")
    try:
        n, m = (int(tok) for tok in rows[0].split())
    except ValueError as exc:
        raise GraphError(f"bad header line {rows[0]!r}") from exc
    if len(rows) - 1 != m:
        raise GraphError(f"header promises {m} edges, found {len(rows) - 1}")
    edges = []
    for ln in rows[1:]:
        try:
            u, v = (int(tok) for tok in ln.split())
        except ValueError as exc:
            raise GraphError(f"bad edge line {ln!r}") from exc
        edges.append((u, v))
    return Graph.from_edges(n, edges)
