"""Rules and exact solver for the cops-and-robber game.

States are (sorted cop tuple, robber vertex, side to move); the solver is a
retrograde breadth-first fixed point over that space.  ``rank`` counts
rounds to capture under optimal play: a round is one cop turn followed by
one robber turn, and capture during the cops' half of round t yields rank t
at the round's opening state.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
import struct
from array import array
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, permutations, product
from typing import Iterator

from .graph import Graph, bits, to_graph6

COPS_TURN = 0
ROBBER_TURN = 1

# One machine word per adjacency row keeps these exact caps cheap to state:
# the joint-move table is the real cost and grows as n^k.
SOLVE_VERTEX_CAP = {1: 64, 2: 24, 3: 20}


class EngineError(RuntimeError):
    pass


class BudgetExceededError(EngineError):
    """State space larger than the solver is willing to enumerate."""


class IllegalMoveError(EngineError):
    pass


class StrategyContradiction(Exception):
    """A strategy's case analysis was violated during play.

    Raised with the identifier of the violated claim; surfacing one of
    these on an in-class graph falsifies the guard, the transcription, or
    the claim itself.
    """

    def __init__(self, claim: str, detail: str = ""):
        super().__init__(f"{claim}: {detail}" if detail else claim)
        self.claim = claim
        self.detail = detail


@dataclass(frozen=True)
class GameState:
    cops: tuple[int, ...]
    robber: int
    turn: int


class WinTable:
    """Cop-win fixed point for a fixed graph and cop count."""

    __slots__ = ("graph", "k", "_cts", "_ct_index", "_ct_succs", "_win", "_rank")

    def __init__(self, graph, k, cts, ct_index, ct_succs, win, rank):
        self.graph = graph
        self.k = k
        self._cts = cts
        self._ct_index = ct_index
        self._ct_succs = ct_succs
        self._win = win
        self._rank = rank

    def _sid(self, cops, robber, turn) -> int:
        ct = tuple(sorted(cops))
        return (self._ct_index[ct] * self.graph.n + robber) * 2 + turn

    def win(self, cops, robber, turn=COPS_TURN) -> bool:
        return bool(self._win[self._sid(cops, robber, turn)])

    def rank(self, cops, robber, turn=COPS_TURN) -> int:
        sid = self._sid(cops, robber, turn)
        if not self._win[sid]:
            raise EngineError("rank undefined on non-winning state")
        return self._rank[sid]

    def cop_tuples(self) -> list[tuple[int, ...]]:
        return list(self._cts)

    def cop_moves(self, cops) -> list[tuple[int, ...]]:
        """Joint cop moves (each cop within its closed neighborhood), sorted."""
        ct = tuple(sorted(cops))
        return [self._cts[i] for i in self._ct_succs[self._ct_index[ct]]]

    def is_winning_opening(self, cops) -> bool:
        return all(self.win(cops, r, COPS_TURN) for r in range(self.graph.n))

    def winning_openings(self) -> Iterator[tuple[int, ...]]:
        for ct in self._cts:
            if self.is_winning_opening(ct):
                yield ct

    def best_opening(self) -> tuple[int, ...] | None:
        """Lexicographically least cop placement that wins every opening."""
        for ct in self._cts:
            if self.is_winning_opening(ct):
                return ct
        return None

    def states(self) -> Iterator[GameState]:
        for ct in self._cts:
            for r in range(self.graph.n):
                yield GameState(ct, r, COPS_TURN)
                yield GameState(ct, r, ROBBER_TURN)


def solve(g: Graph, k: int) -> WinTable:
    """Least fixed point of the k-cop capture game on a connected graph."""
    if k not in SOLVE_VERTEX_CAP:
        raise EngineError(f"cop count {k} outside 1..3")
    if not g.is_connected():
        raise EngineError("solve requires a connected graph")
    n = g.n
    if n == 0:
        raise EngineError("solve requires a nonempty graph")
    if n > SOLVE_VERTEX_CAP[k]:
        raise BudgetExceededError(f"n={n} exceeds the k={k} cap of {SOLVE_VERTEX_CAP[k]}")

    closed = [g.closed_neighbors(v) for v in range(n)]
    closed_list = [list(bits(m)) for m in closed]
    cts = list(combinations_with_replacement(range(n), k))
    ct_index = {ct: i for i, ct in enumerate(cts)}
    ct_succs: list[list[int]] = []
    for ct in cts:
        seen = set()
        for moved in product(*(closed_list[c] for c in ct)):
            seen.add(ct_index[tuple(sorted(moved))])
        ct_succs.append(sorted(seen))

    num_states = len(cts) * n * 2
    win = bytearray(num_states)
    rank = array("i", [-1]) * num_states
    pending = array("i", [0]) * num_states

    def sid(ct_i: int, r: int, turn: int) -> int:
        return (ct_i * n + r) * 2 + turn

    buckets: list[list[int]] = [[]]
    for ct_i, ct in enumerate(cts):
        members = set(ct)
        for r in range(n):
            s_rob = sid(ct_i, r, ROBBER_TURN)
            pending[s_rob] = closed[r].bit_count()
            if r in members:
                for s in (sid(ct_i, r, COPS_TURN), s_rob):
                    win[s] = 1
                    rank[s] = 0
                    buckets[0].append(s)

    level = 0
    while level < len(buckets):
        bucket = buckets[level]
        i = 0
        while i < len(bucket):
            s = bucket[i]
            i += 1
            turn = s & 1
            rest = s >> 1
            r = rest % n
            ct_i = rest // n
            if turn == ROBBER_TURN:
                # cop-turn predecessors reach here by one joint move
                nxt = level + 1
                if nxt == len(buckets):
                    buckets.append([])
                target = buckets[nxt]
                for cp in ct_succs[ct_i]:
                    p = sid(cp, r, COPS_TURN)
                    if not win[p]:
                        win[p] = 1
                        rank[p] = nxt
                        target.append(p)
            else:
                # robber-turn predecessors lose one escape option
                for rp in bits(closed[r]):
                    p = sid(ct_i, rp, ROBBER_TURN)
                    if win[p]:
                        continue
                    pending[p] -= 1
                    if pending[p] == 0:
                        win[p] = 1
                        rank[p] = level
                        bucket.append(p)
        level += 1

    return WinTable(g, k, cts, ct_index, ct_succs, win, rank)


# cop number --------------------------------------------------------------


@dataclass(frozen=True)
class CopNumber:
    """Per-component cop numbers; ``total`` is their sum (None past k_max)."""

    per_component: tuple[int | None, ...]
    k_max: int

    @property
    def total(self) -> int | None:
        if any(v is None for v in self.per_component):
            return None
        return sum(self.per_component)

    @property
    def max_component(self) -> int | None:
        if any(v is None for v in self.per_component):
            return None
        return max(self.per_component, default=0)

    def __str__(self) -> str:
        t = self.total
        return f">{self.k_max}" if t is None else str(t)


def is_dismantlable(g: Graph) -> list[int] | None:
    """Corner-elimination order down to a single vertex, or None.

    A corner is a vertex whose closed neighborhood lies inside another
    vertex's closed neighborhood; corner removal order is immaterial for
    the outcome, so the lexicographically least corner is taken each step.
    """
    if g.n == 0:
        return []
    remaining = g.all_mask
    order: list[int] = []
    while remaining.bit_count() > 1:
        corner = -1
        for u in bits(remaining):
            cn_u = (g.adj[u] | 1 << u) & remaining
            for v in bits(remaining & ~(1 << u)):
                if cn_u & ~((g.adj[v] | 1 << v) & remaining) == 0:
                    corner = u
                    break
            if corner >= 0:
                break
        if corner < 0:
            return None
        order.append(corner)
        remaining &= ~(1 << corner)
    order.extend(bits(remaining))
    return order


def cop_number(g: Graph, k_max: int = 3) -> CopNumber:
    """Least k per component; dismantlability answers k=1 without solving."""
    per: list[int | None] = []
    for comp_mask in g.components():
        comp = g.induced(comp_mask)
        if is_dismantlable(comp) is not None:
            per.append(1)
            continue
        found: int | None = None
        for k in range(2, k_max + 1):
            if solve(comp, k).best_opening() is not None:
                found = k
                break
        per.append(found)
    return CopNumber(tuple(per), k_max)


def doomed(g: Graph, cops, robber: int) -> bool:
    """True when the robber ended its turn inside some cop's closed neighborhood."""
    return any(robber == c or g.has_edge(c, robber) for c in cops)


# policies ----------------------------------------------------------------


class Adversary:
    """Robber policy: a placement rule and a move rule."""

    name = "adversary"

    def place(self, cops: tuple[int, ...]) -> int:
        raise NotImplementedError

    def move(self, cops: tuple[int, ...], robber: int) -> int:
        raise NotImplementedError


class OptimalRobber(Adversary):
    """Escapes forever when the fixed point allows it, else maximizes rank."""

    name = "optimal"

    def __init__(self, table: WinTable):
        self.table = table

    def _best(self, cops, candidates) -> int:
        t = self.table
        losing = [r for r in candidates if not t.win(cops, r, COPS_TURN)]
        if losing:
            return min(losing)
        best_r = -1
        best_rank = -1
        for r in candidates:
            rk = t.rank(cops, r, COPS_TURN)
            if rk > best_rank:
                best_rank, best_r = rk, r
        return best_r

    def place(self, cops):
        return self._best(cops, range(self.table.graph.n))

    def move(self, cops, robber):
        return self._best(cops, list(bits(self.table.graph.closed_neighbors(robber))))


class RandomRobber(Adversary):
    name = "random"

    def __init__(self, g: Graph, seed: int):
        from .corpus import Xorshift64Star

        self.g = g
        self.rng = Xorshift64Star(seed)

    def place(self, cops):
        return self.rng.next_below(self.g.n)

    def move(self, cops, robber):
        options = list(bits(self.g.closed_neighbors(robber)))
        return options[self.rng.next_below(len(options))]


class GreedyFarRobber(Adversary):
    """Maximizes the distance to the nearest cop; ties to the lowest id."""

    name = "greedy-far"

    def __init__(self, g: Graph):
        self.g = g

    def _best(self, cops, candidates) -> int:
        best_r, best_d = -1, -1.0
        cop_mask = 0
        for c in cops:
            cop_mask |= 1 << c
        for r in candidates:
            d = self.g.distance(r, cop_mask)
            if d > best_d:
                best_d, best_r = d, r
        return best_r

    def place(self, cops):
        return self._best(cops, range(self.g.n))

    def move(self, cops, robber):
        return self._best(cops, list(bits(self.g.closed_neighbors(robber))))


class Strategy:
    """Cop policy: placement plus one move per round."""

    name = "strategy"
    k = 2

    def __init__(self, g: Graph):
        self.g = g
        self.note = ""

    def place(self) -> tuple[int, ...]:
        raise NotImplementedError

    def move(self, cops: tuple[int, ...], robber: int) -> tuple[int, ...]:
        raise NotImplementedError

    def state_key(self):
        """Hashable internal-state token folded into loop detection."""
        return None


def _assign_positionally(g: Graph, cops, targets) -> tuple[int, ...]:
    """Order ``targets`` so each cop's move stays in its closed neighborhood."""
    for perm in permutations(targets):
        if all(t == c or g.has_edge(c, t) for c, t in zip(cops, perm)):
            return tuple(perm)
    raise IllegalMoveError(f"no legal assignment of cops {cops} onto {targets}")


class OracleStrategy(Strategy):
    """Rank-decreasing play straight out of a WinTable."""

    name = "oracle"

    def __init__(self, g: Graph, table: WinTable):
        super().__init__(g)
        self.table = table
        self.k = table.k

    def place(self):
        opening = self.table.best_opening()
        if opening is None:
            opening = self.table.cop_tuples()[0]
        self.note = "oracle placement"
        return opening

    def move(self, cops, robber):
        t = self.table
        if not t.win(cops, robber, COPS_TURN):
            self.note = "oracle: position not winning, holding"
            return cops
        best = None
        best_rank = None
        for ct in t.cop_moves(cops):
            if not t.win(ct, robber, ROBBER_TURN):
                continue
            rk = t.rank(ct, robber, ROBBER_TURN)
            if best_rank is None or rk < best_rank or (rk == best_rank and ct < best):
                best, best_rank = ct, rk
        self.note = f"oracle: rank {best_rank}"
        return _assign_positionally(self.g, cops, best)


class GreedyStrategy(Strategy):
    """Each cop walks a shortest path toward the robber."""

    name = "greedy"

    def __init__(self, g: Graph, k: int = 1):
        super().__init__(g)
        self.k = k

    def place(self):
        self.note = "greedy placement"
        return (0,) * self.k

    def move(self, cops, robber):
        new = []
        rmask = 1 << robber
        for c in cops:
            best, best_d = c, self.g.distance(c, rmask)
            for u in bits(self.g.closed_neighbors(c)):
                d = self.g.distance(u, rmask)
                if d < best_d or (d == best_d and u < best):
                    best, best_d = u, d
            new.append(best)
        self.note = "greedy step"
        return tuple(new)


class FixedPlacementStrategy(Strategy):
    """Places on fixed vertices and then only pounces; test scaffolding."""

    name = "fixed"

    def __init__(self, g: Graph, placement: tuple[int, ...]):
        super().__init__(g)
        self.placement = placement
        self.k = len(placement)

    def place(self):
        return self.placement

    def move(self, cops, robber):
        for i, c in enumerate(cops):
            if robber == c or self.g.has_edge(c, robber):
                return cops[:i] + (robber,) + cops[i + 1:]
        return cops


# referee -----------------------------------------------------------------

CAPTURED = "captured"
ESCAPED = "escaped"
LOOP = "loop"
CONTRADICTION = "contradiction"


@dataclass(frozen=True)
class Outcome:
    kind: str
    round: int | None = None
    claim: str | None = None

    def __str__(self) -> str:
        if self.kind == CAPTURED:
            return f"CapturedAtRound({self.round})"
        if self.kind == ESCAPED:
            return "RobberEscapes"
        if self.kind == LOOP:
            return "LoopDetected"
        return f"StrategyContradiction({self.claim})"


@dataclass
class TraceStep:
    round: int
    cops: tuple[int, ...]
    robber: int
    note: str


@dataclass
class GameTrace:
    graph6: str
    strategy: str
    adversary: str
    k: int
    steps: list[TraceStep] = field(default_factory=list)
    outcome: Outcome | None = None

    @property
    def rounds(self) -> int:
        return self.steps[-1].round if self.steps else 0

    def to_json_lines(self) -> str:
        lines = [json.dumps({
            "graph6": self.graph6, "strategy": self.strategy,
            "adversary": self.adversary, "k": self.k,
        })]
        for s in self.steps:
            lines.append(json.dumps({
                "round": s.round, "cops": list(s.cops),
                "robber": s.robber, "note": s.note,
            }))
        lines.append(json.dumps({"outcome": str(self.outcome)}))
        return "\n".join(lines) + "\n"


def run_game(g: Graph, strategy: Strategy, adversary: Adversary,
             max_rounds: int | None = None) -> GameTrace:
    """Alternating referee: cops place and move first; robber answers.

    Stops at capture, at ``max_rounds`` (robber escapes), or when the
    (state, strategy-internal-state) pair repeats (loop).  A strategy may
    abort by raising StrategyContradiction, recorded as its own outcome.
    """
    if max_rounds is None:
        max_rounds = 10 * g.n * g.n
    trace = GameTrace(to_graph6(g), strategy.name, adversary.name, strategy.k)

    def checked_cops(prev, new):
        if len(new) != strategy.k:
            raise IllegalMoveError(f"expected {strategy.k} cops, got {new}")
        for c, t in zip(prev, new):
            if t != c and not g.has_edge(c, t):
                raise IllegalMoveError(f"cop move {c}->{t} is not an edge")
        return tuple(new)

    try:
        cops = tuple(strategy.place())
        if len(cops) != strategy.k or not all(0 <= c < g.n for c in cops):
            raise IllegalMoveError(f"bad placement {cops}")
        robber = adversary.place(cops)
        if not 0 <= robber < g.n:
            raise IllegalMoveError(f"bad robber placement {robber}")
        trace.steps.append(TraceStep(0, cops, robber, strategy.note or "placement"))
        if robber in cops:
            trace.outcome = Outcome(CAPTURED, round=0)
            return trace
        seen = {(cops, robber, strategy.state_key())}
        for t in range(1, max_rounds + 1):
            cops = checked_cops(cops, strategy.move(cops, robber))
            if robber in cops:
                trace.steps.append(TraceStep(t, cops, robber, strategy.note))
                trace.outcome = Outcome(CAPTURED, round=t)
                return trace
            moved = adversary.move(cops, robber)
            if moved != robber and not g.has_edge(robber, moved):
                raise IllegalMoveError(f"robber move {robber}->{moved} is not an edge")
            robber = moved
            trace.steps.append(TraceStep(t, cops, robber, strategy.note))
            if robber in cops:
                trace.outcome = Outcome(CAPTURED, round=t)
                return trace
            key = (cops, robber, strategy.state_key())
            if key in seen:
                trace.outcome = Outcome(LOOP)
                return trace
            seen.add(key)
        trace.outcome = Outcome(ESCAPED)
        return trace
    except StrategyContradiction as exc:
        trace.outcome = Outcome(CONTRADICTION, claim=exc.claim)
        return trace


# binary WinTable cache ----------------------------------------------------

_CACHE_MAGIC = b"CRWT"
CACHE_ENV = "COPNUMLAB_CACHE"


def dump_wintable(table: WinTable) -> bytes:
    g6 = to_graph6(table.graph).encode("ascii")
    num = len(table._win)
    head = struct.pack("<4sBBBH", _CACHE_MAGIC, 1, table.k, table.graph.n, len(g6))
    return head + g6 + struct.pack("<I", num) + bytes(table._win) + table._rank.tobytes()


def load_wintable(g: Graph, k: int, blob: bytes) -> WinTable:
    magic, version, bk, bn, g6len = struct.unpack_from("<4sBBBH", blob, 0)
    if magic != _CACHE_MAGIC or version != 1:
        raise EngineError("bad WinTable cache blob")
    off = struct.calcsize("<4sBBBH")
    g6 = blob[off:off + g6len].decode("ascii")
    off += g6len
    if bk != k or bn != g.n or g6 != to_graph6(g):
        raise EngineError("WinTable cache blob is for a different graph or k")
    (num,) = struct.unpack_from("<I", blob, off)
    off += 4
    win = bytearray(blob[off:off + num])
    off += num
    rank = array("i")
    rank.frombytes(blob[off:off + 4 * num])
    n = g.n
    closed_list = [list(bits(g.closed_neighbors(v))) for v in range(n)]
    cts = list(combinations_with_replacement(range(n), k))
    ct_index = {ct: i for i, ct in enumerate(cts)}
    ct_succs = []
    for ct in cts:
        seen = set()
        for moved in product(*(closed_list[c] for c in ct)):
            seen.add(ct_index[tuple(sorted(moved))])
        ct_succs.append(sorted(seen))
    return WinTable(g, k, cts, ct_index, ct_succs, win, rank)


def cache_path(cache_dir: str, g: Graph, k: int) -> str:
    key = f"{to_graph6(g)}:{k}".encode("ascii")
    return os.path.join(cache_dir, hashlib.sha256(key).hexdigest()[:24] + ".wtb")


def cached_solve(g: Graph, k: int, cache_dir: str | None = None) -> WinTable:
    """solve() with an optional on-disk cache keyed by graph6 string + k."""
    if cache_dir is None:
        cache_dir = os.environ.get(CACHE_ENV) or None
    if not cache_dir:
        return solve(g, k)
    os.makedirs(cache_dir, exist_ok=True)
    path = cache_path(cache_dir, g, k)
    if os.path.exists(path):
        try:
            with open(path, "rb") as fh:
                return load_wintable(g, k, fh.read())
        except (EngineError, OSError, struct.error):
            pass
    table = solve(g, k)
    with open(path, "wb") as fh:
        fh.write(dump_wintable(table))
    return table
