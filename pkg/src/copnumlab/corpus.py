"""Test-graph generation: exhaustive connected enumeration up to
isomorphism, canonical forms, seeded random graphs, and corpus files.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Iterable, Iterator

import numpy as np

from . import patterns
from .graph import Graph, bits, from_graph6, to_graph6

ENUM_VERTEX_CAP = 8


class CorpusError(ValueError):
    pass


# canonical form ------------------------------------------------------------
#
# The canonical form is the minimum graph6 string over all n! relabelings.
# The scan really is exhaustive (that is what makes it a certificate); numpy
# evaluates all permutations at once, which keeps n = 8 at a few ms.

_PERM_TABLES: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _pair_index(n: int) -> dict[tuple[int, int], int]:
    idx = {}
    k = 0
    for j in range(1, n):
        for i in range(j):
            idx[(i, j)] = k
            k += 1
    return idx


def _perm_table(n: int) -> tuple[np.ndarray, np.ndarray]:
    if n not in _PERM_TABLES:
        m = n * (n - 1) // 2
        pair_id = _pair_index(n)
        perms = list(permutations(range(n)))
        table = np.empty((len(perms), m), dtype=np.int32)
        for pi, p in enumerate(perms):
            k = 0
            for j in range(1, n):
                for i in range(j):
                    a, b = p[i], p[j]
                    table[pi, k] = pair_id[(a, b) if a < b else (b, a)]
                    k += 1
        weights = (1 << np.arange(m - 1, -1, -1)).astype(object) if m > 62 else \
            (np.int64(1) << np.arange(m - 1, -1, -1, dtype=np.int64))
        _PERM_TABLES[n] = (table, weights)
    return _PERM_TABLES[n]


def canonical_form(g: Graph) -> str:
    """Minimum graph6 string over all vertex permutations (n <= 8)."""
    n = g.n
    if n > ENUM_VERTEX_CAP:
        raise CorpusError(f"exhaustive canonicalization capped at n={ENUM_VERTEX_CAP}")
    if n <= 1:
        return to_graph6(g)
    m = n * (n - 1) // 2
    flat = np.zeros(m, dtype=bool)
    pair_id = _pair_index(n)
    for u, v in g.edges():
        flat[pair_id[(u, v)]] = True
    table, weights = _perm_table(n)
    codes = flat[table] @ weights
    best = int(codes.min())
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if best >> (m - 1 - k) & 1:
                edges.append((i, j))
            k += 1
    return to_graph6(Graph.from_edges(n, edges))


def automorphism_count(g: Graph) -> int:
    """|Aut(G)| by the same exhaustive permutation scan."""
    n = g.n
    if n > ENUM_VERTEX_CAP:
        raise CorpusError(f"automorphism scan capped at n={ENUM_VERTEX_CAP}")
    if n <= 1:
        return 1
    m = n * (n - 1) // 2
    flat = np.zeros(m, dtype=bool)
    pair_id = _pair_index(n)
    for u, v in g.edges():
        flat[pair_id[(u, v)]] = True
    table, weights = _perm_table(n)
    codes = flat[table] @ weights
    base = int(flat @ weights)
    return int(np.count_nonzero(codes == base))


# isomorphism (used only to deduplicate the enumeration) --------------------


def _invariant_key(g: Graph):
    degs = [g.degree(v) for v in range(g.n)]
    tri = []
    nbr_profile = []
    for v in range(g.n):
        t = 0
        for u in bits(g.adj[v]):
            t += (g.adj[u] & g.adj[v]).bit_count()
        tri.append(t // 2)
        nbr_profile.append((degs[v], tri[-1], tuple(sorted(degs[u] for u in bits(g.adj[v])))))
    return (g.n, g.edge_count(), tuple(sorted(degs)), tuple(sorted(tri)),
            tuple(sorted(nbr_profile)))


def isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    n = g1.n
    d1 = [g1.degree(v) for v in range(n)]
    d2 = [g2.degree(v) for v in range(n)]
    if sorted(d1) != sorted(d2):
        return False
    mapping = [-1] * n
    used = 0

    def extend(v: int) -> bool:
        nonlocal used
        if v == n:
            return True
        row = g1.adj[v]
        for cand in range(n):
            if used >> cand & 1 or d1[v] != d2[cand]:
                continue
            ok = True
            for u in range(v):
                if (row >> u & 1) != (g2.adj[mapping[u]] >> cand & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = cand
            used |= 1 << cand
            if extend(v + 1):
                return True
            used &= ~(1 << cand)
            mapping[v] = -1
        return False

    return extend(0)


# exhaustive connected enumeration ------------------------------------------

_ENUM_CACHE: dict[int, tuple[Graph, ...]] = {}


def connected_graphs(n: int) -> tuple[Graph, ...]:
    """All connected graphs on n vertices, one per isomorphism class.

    Built by extending every (n-1)-vertex class with a new vertex over all
    nonempty neighbor subsets.  Every connected graph has a non-cutting
    vertex, so the extension step is exhaustive; duplicates are rejected by
    invariant bucketing plus exact isomorphism tests.
    """
    if not 1 <= n <= ENUM_VERTEX_CAP:
        raise CorpusError(f"enumeration supports 1..{ENUM_VERTEX_CAP} vertices")
    if n in _ENUM_CACHE:
        return _ENUM_CACHE[n]
    if n == 1:
        out = (Graph(1, [0]),)
    else:
        buckets: dict[tuple, list[Graph]] = {}
        found: list[Graph] = []
        for parent in connected_graphs(n - 1):
            base_rows = list(parent.adj) + [0]
            for subset in range(1, 1 << (n - 1)):
                rows = list(base_rows)
                rows[n - 1] = subset
                for u in bits(subset):
                    rows[u] |= 1 << (n - 1)
                child = Graph(n, rows)
                key = _invariant_key(child)
                bucket = buckets.setdefault(key, [])
                if any(isomorphic(child, rep) for rep in bucket):
                    continue
                bucket.append(child)
                found.append(child)
        out = tuple(found)
    _ENUM_CACHE[n] = out
    return out


def enumerate_connected(n: int) -> Iterator[Graph]:
    yield from connected_graphs(n)


# seeded random graphs -------------------------------------------------------


class Xorshift64Star:
    """Portable 64-bit xorshift* generator; identical streams on every host.

    The state is seeded through one splitmix64 step so that seed 0 is usable.
    Floats are the top 53 bits over 2^53.
    """

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        z = (seed + 0x9E3779B97F4A7C15) & self.MASK
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        self.state = (z ^ (z >> 31)) or 0x2545F4914F6CDD1D

    def next_u64(self) -> int:
        x = self.state
        x ^= (x >> 12)
        x ^= (x << 25) & self.MASK
        x ^= (x >> 27)
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & self.MASK

    def next_float(self) -> float:
        return (self.next_u64() >> 11) / float(1 << 53)

    def next_below(self, n: int) -> int:
        return self.next_u64() % n


def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with one PRNG draw per pair (u, v), u < v, in that order."""
    if not 0 <= p <= 1:
        raise CorpusError(f"edge probability {p} outside [0, 1]")
    rng = Xorshift64Star(seed)
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.next_float() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, rows)


def filter_class(stream: Iterable[Graph], predicate: Callable[[Graph], bool]) -> Iterator[Graph]:
    """Keep the connected graphs satisfying the predicate."""
    for g in stream:
        if g.is_connected() and predicate(g):
            yield g


# corpus files ---------------------------------------------------------------


@dataclass
class Corpus:
    name: str
    predicate_id: str
    entries: list[str] = field(default_factory=list)
    metadata: dict[str, str] = field(default_factory=dict)

    def graphs(self) -> Iterator[Graph]:
        for line in self.entries:
            yield from_graph6(line)

    def write(self, path: str) -> None:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(self.dumps())

    def dumps(self) -> str:
        buf = io.StringIO()
        buf.write(f"# name={self.name}\n")
        buf.write(f"# predicate={self.predicate_id}\n")
        for key in sorted(self.metadata):
            buf.write(f"# {key}={self.metadata[key]}\n")
        for line in self.entries:
            buf.write(line + "\n")
        return buf.getvalue()

    @classmethod
    def loads(cls, text: str, revalidate: bool = True) -> Corpus:
        name = ""
        predicate_id = ""
        metadata: dict[str, str] = {}
        entries: list[str] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line.lstrip("#").strip()
                if "=" not in body:
                    raise CorpusError(f"line {lineno}: malformed header {raw!r}")
                key, val = body.split("=", 1)
                key, val = key.strip(), val.strip()
                if key == "name":
                    name = val
                elif key == "predicate":
                    predicate_id = val
                else:
                    metadata[key] = val
            else:
                entries.append(line)
        corpus = cls(name, predicate_id, entries, metadata)
        if revalidate:
            corpus.revalidate()
        return corpus

    @classmethod
    def load(cls, path: str, revalidate: bool = True) -> Corpus:
        with open(path, encoding="ascii") as fh:
            return cls.loads(fh.read(), revalidate=revalidate)

    def revalidate(self) -> None:
        """Entries must parse, be connected, be distinct, and satisfy the predicate."""
        pred = None
        if self.predicate_id and self.predicate_id != "connected":
            if self.predicate_id not in patterns.CLASS_PREDICATES:
                raise CorpusError(f"unknown predicate id {self.predicate_id!r}")
            pats = patterns.CLASS_PREDICATES[self.predicate_id]
            pred = lambda g: patterns.is_free(g, pats)[0]
        seen = set()
        for i, line in enumerate(self.entries, start=1):
            g = from_graph6(line)
            if not g.is_connected():
                raise CorpusError(f"entry {i} ({line}) is not connected")
            if line in seen:
                raise CorpusError(f"entry {i} ({line}) is a duplicate")
            seen.add(line)
            if pred is not None and not pred(g):
                raise CorpusError(f"entry {i} ({line}) violates {self.predicate_id}")


def build_class_corpus(name: str, predicate_id: str, n_max: int,
                       canonical: bool = True) -> Corpus:
    pats = patterns.CLASS_PREDICATES[predicate_id] if predicate_id != "connected" else ()
    entries = []
    for n in range(1, n_max + 1):
        for g in connected_graphs(n):
            if predicate_id == "connected" or patterns.is_free(g, pats)[0]:
                entries.append(canonical_form(g) if canonical else to_graph6(g))
    return Corpus(name, predicate_id, entries, {"n_min": "1", "n_max": str(n_max)})


# named graphs beyond the pattern catalog ------------------------------------


def _lcf(shifts: list[int], repeats: int) -> Graph:
    n = len(shifts) * repeats
    edges = [(i, (i + 1) % n) for i in range(n)]
    for i in range(n):
        j = (i + shifts[i % len(shifts)]) % n
        edges.append((min(i, j), max(i, j)))
    return Graph.from_edges(n, set((min(a, b), max(a, b)) for a, b in edges))


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def dodecahedron() -> Graph:
    return _lcf([10, 7, 4, -4, -7, 10, -4, 7, -7, 4], 2)


def named_graph(name: str) -> Graph:
    if name in patterns.CATALOG:
        return patterns.CATALOG[name]
    specials = {"petersen": petersen, "dodecahedron": dodecahedron}
    if name in specials:
        return specials[name]()
    raise CorpusError(f"unknown catalog graph {name!r}")
