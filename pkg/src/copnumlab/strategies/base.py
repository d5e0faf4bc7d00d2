"""Driver for scripted two-cop strategies.

Each strategy is a generator transcribing one constructive capture proof:
its first yield is the cop placement, every later yield a pair of target
vertices, and it receives the robber's position whenever the robber still
has a safe reply.  The driver owns the one universal move: whenever the
robber sits in a cop's closed neighborhood at the cops' turn, that cop
steps onto it.  Consequently a script is resumed only when the robber
escaped the previous move's coverage, so a resume after a coverage claim
is itself a contradiction.
"""

from __future__ import annotations

from typing import Generator

from ..engine import IllegalMoveError, Strategy, StrategyContradiction
from ..graph import Graph, bits

Script = Generator[tuple[tuple[int, ...], str], int, None]


def claim(cond: bool, claim_id: str, detail: str = "") -> None:
    """Assert one claim of a capture proof; violation aborts the game."""
    if not cond:
        raise StrategyContradiction(claim_id, detail)


def cover(g: Graph, *vs: int) -> int:
    """Union of closed neighborhoods: every vertex a cop there can take next turn."""
    out = 0
    for v in vs:
        out |= g.closed_neighbors(v)
    return out


def trapped(g: Graph, robber: int, *cops: int) -> bool:
    """All robber moves (including staying) land under the given cops."""
    return g.closed_neighbors(robber) & ~cover(g, *cops) == 0


def component_of(g: Graph, region: int, v: int) -> int:
    for comp in g.components(region):
        if comp >> v & 1:
            return comp
    raise ValueError(f"vertex {v} not in region")


def bfs_path(g: Graph, src: int, targets: int) -> list[int]:
    """Lexicographically least shortest path from src into the target set."""
    if targets >> src & 1:
        return [src]
    parent = {src: -1}
    frontier = [src]
    while frontier:
        grow = []
        for u in frontier:
            for w in bits(g.adj[u]):
                if w not in parent:
                    parent[w] = u
                    grow.append(w)
        hit = [w for w in grow if targets >> w & 1]
        if hit:
            path = [min(hit)]
            while parent[path[-1]] != -1:
                path.append(parent[path[-1]])
            return path[::-1]
        frontier = grow
    raise ValueError("target set unreachable")


def assign_targets(g: Graph, cops: tuple[int, ...], targets: tuple[int, ...]) -> tuple[int, ...]:
    """Order the target pair so both cop moves are legal; in-order preferred."""
    if len(targets) != len(cops):
        raise IllegalMoveError(f"expected {len(cops)} targets, got {targets}")
    from itertools import permutations

    for cand in permutations(targets):
        if all(t == c or g.has_edge(c, t) for c, t in zip(cops, cand)):
            return tuple(cand)
    raise IllegalMoveError(f"no legal assignment of cops {cops} onto {targets}")


class ScriptStrategy(Strategy):
    """Runs a proof script with the universal pounce move layered on top."""

    def __init__(self, g: Graph, name: str, script: Script, k: int = 2):
        super().__init__(g)
        self.name = name
        self.k = k
        self._script = script
        self._moves = 0

    def place(self) -> tuple[int, ...]:
        placement, note = next(self._script)
        self.note = note
        return placement

    def move(self, cops: tuple[int, ...], robber: int) -> tuple[int, ...]:
        g = self.g
        for i, c in enumerate(cops):
            if robber == c or g.has_edge(c, robber):
                self.note = "pounce"
                self._moves += 1
                return cops[:i] + (robber,) + cops[i + 1:]
        try:
            targets, note = self._script.send(robber)
        except StopIteration:
            raise StrategyContradiction(
                f"{self.name}.script-exhausted",
                "script ended while the robber was still free") from None
        self.note = note
        self._moves += 1
        return assign_targets(g, cops, targets)

    def state_key(self):
        return self._moves
