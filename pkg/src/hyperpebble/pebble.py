"""The basic (k,l)-pebble game for hypergraphs.

A game starts with k pebbles on every vertex and an empty oriented hypergraph
H. Two moves change it:

* add edge: an edge whose ends carry at least l+1 pebbles is added to H; one
  pebble is picked up from an end, which becomes the tail;
* pebble shift: a pebble on an end v of an edge travels to the edge's tail w,
  and v becomes the new tail.

To test an edge, pebbles are gathered onto its ends by depth-first search from
the ends (lower ids first), following edges from tail to the other ends, and
the path to a free pebble is reversed by a sequence of shifts. Edges whose
ends cannot gather l+1 pebbles are rejected; they are exactly the edges that
would break sparsity.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import IllegalMove
from .hypercore import Hypergraph, SparsityParams, _normalize_edge


class Verdict(enum.Enum):
    SPARSE = "sparse"
    TIGHT = "tight"
    DEPENDENT = "dependent"

    def __str__(self):
        return self.value


@dataclass
class GameVerdict:
    kind: Verdict
    accepted: list
    rejected: list
    game: Optional["GameState"] = field(default=None, repr=False, compare=False)


class GameState:
    """A pebble game configuration: oriented hypergraph H plus pebble counts.

    Edges of H are numbered in the order they were added. ``labels[i]`` keeps
    whatever the caller passed when adding edge ``i`` (typically the index of
    the edge in an input hypergraph). When ``record`` is set every legal move
    is appended to ``moves`` as ``("add", ends, tail)`` or ``("shift", i, v)``.
    """

    def __init__(self, n: int, params: SparsityParams, record: bool = False):
        if n < 1:
            raise ValueError("a pebble game needs at least one vertex")
        self.params = params
        self.k, self.l = params.k, params.l
        self.n = n
        self.peb = [params.k] * n
        self.edges: list = []
        self.tails: list = []
        self.labels: list = []
        self.tailed = [[] for _ in range(n)]  # edge ids whose tail is v
        self.incident = [[] for _ in range(n)]  # edge ids having v as an end
        self.moves: Optional[list] = [] if record else None
        self._mark = [0] * n
        self._stamp = 0
        self._via = [-1] * n
        self._journal: Optional[list] = None

    # -- bookkeeping ---------------------------------------------------------

    def add_vertex(self) -> int:
        self.n += 1
        self.peb.append(self.k)
        self.tailed.append([])
        self.incident.append([])
        self._mark.append(0)
        self._via.append(-1)
        return self.n - 1

    def clone(self) -> "GameState":
        """An independent copy of the configuration (the move log is not kept)."""
        other = object.__new__(type(self))
        other.__dict__.update(self.__dict__)
        other.peb = list(self.peb)
        other.edges = list(self.edges)
        other.tails = list(self.tails)
        other.labels = list(self.labels)
        other.tailed = [list(t) for t in self.tailed]
        other.incident = [list(t) for t in self.incident]
        other.moves = None
        other._mark = [0] * self.n
        other._stamp = 0
        other._via = [-1] * self.n
        other._journal = None
        if hasattr(self, "rep"):
            other.rep = [list(r) for r in self.rep]
        return other

    def total_pebbles(self) -> int:
        return sum(self.peb)

    def pebbles_on(self, ends) -> int:
        return sum(self.peb[v] for v in ends)

    def graph(self) -> Hypergraph:
        return Hypergraph(self.n, self.edges, None, self.params)

    # -- moves ---------------------------------------------------------------

    def add_edge(self, ends, tail: int, label=None) -> int:
        e = _normalize_edge(ends, self.n)
        if tail not in e:
            raise IllegalMove(f"tail {tail} is not an end of {e}")
        if self.peb[tail] < 1:
            raise IllegalMove(f"tail {tail} holds no pebble")
        if self.pebbles_on(e) < self.l + 1:
            raise IllegalMove(f"ends of {e} hold {self.pebbles_on(e)} pebbles, "
                              f"need {self.l + 1}")
        eid = len(self.edges)
        self.edges.append(e)
        self.tails.append(tail)
        self.labels.append(eid if label is None else label)
        self.tailed[tail].append(eid)
        for v in e:
            self.incident[v].append(eid)
        self.peb[tail] -= 1
        if self.moves is not None:
            self.moves.append(("add", e, tail))
        return eid

    def shift(self, eid: int, v: int) -> None:
        if not 0 <= eid < len(self.edges):
            raise IllegalMove(f"no edge {eid}")
        w = self.tails[eid]
        if v not in self.edges[eid] or v == w:
            raise IllegalMove(f"{v} is not a non-tail end of edge {eid}")
        if self.peb[v] < 1:
            raise IllegalMove(f"vertex {v} holds no pebble")
        if self._journal is not None:
            self._journal.append(self._undo_record(eid))
        self.peb[v] -= 1
        self.peb[w] += 1
        self.tails[eid] = v
        self.tailed[w].remove(eid)
        self.tailed[v].append(eid)
        if self.moves is not None:
            self.moves.append(("shift", eid, v))

    def _undo_record(self, eid):
        return (eid, self.tails[eid])

    def _undo(self, record) -> None:
        eid, old_tail = record
        v = self.tails[eid]
        self.peb[v] += 1
        self.peb[old_tail] -= 1
        self.tails[eid] = old_tail
        self.tailed[v].remove(eid)
        self.tailed[old_tail].append(eid)

    # -- search --------------------------------------------------------------

    def _next_stamp(self) -> int:
        self._stamp += 1
        return self._stamp

    def _neighbours(self, x):
        tailed = self.tailed[x]
        if len(tailed) == 1:
            eid = tailed[0]
            return [(u, eid) for u in self.edges[eid] if u != x]
        pairs = [(u, eid) for eid in tailed for u in self.edges[eid] if u != x]
        pairs.sort()
        return pairs

    def reach(self, v: int, blocked=None) -> list:
        """Vertices reachable from ``v`` in DFS order; ``blocked`` vertices are not entered."""
        stamp = self._next_stamp()
        mark = self._mark
        if blocked:
            for b in blocked:
                mark[b] = stamp
        mark[v] = stamp
        order = [v]
        stack = [iter(self._neighbours(v))]
        while stack:
            for u, _ in stack[-1]:
                if mark[u] != stamp:
                    mark[u] = stamp
                    order.append(u)
                    stack.append(iter(self._neighbours(u)))
                    break
            else:
                stack.pop()
        return order

    def _find_pebble(self, ends) -> bool:
        """Bring one free pebble from outside ``ends`` onto an end; False if none."""
        stamp = self._next_stamp()
        mark, via, peb = self._mark, self._via, self.peb
        for v in ends:
            mark[v] = stamp
        for root in ends:
            stack = [iter(self._neighbours(root))]
            while stack:
                for u, eid in stack[-1]:
                    if mark[u] == stamp:
                        continue
                    mark[u] = stamp
                    via[u] = eid
                    if peb[u]:
                        self._reverse_path(u, root)
                        return True
                    stack.append(iter(self._neighbours(u)))
                    break
                else:
                    stack.pop()
        return False

    def _reverse_path(self, u: int, root: int) -> None:
        via, tails = self._via, self.tails
        while u != root:
            eid = via[u]
            w = tails[eid]
            self.shift(eid, u)
            u = w

    def collect(self, ends, target: int) -> bool:
        """Gather ``target`` pebbles on ``ends`` using pebble shifts.

        On failure every shift made by this call is undone (and dropped from
        the move log), so the configuration is exactly as before.
        """
        ends = sorted(set(ends))
        if target > len(ends) * self.k:
            raise ValueError(f"{target} pebbles cannot fit on {len(ends)} vertices")
        if self.pebbles_on(ends) >= target:
            return True
        self._journal = []
        moves_before = None if self.moves is None else len(self.moves)
        try:
            while self.pebbles_on(ends) < target:
                if not self._find_pebble(ends):
                    for rec in reversed(self._journal):
                        self._undo(rec)
                    if self.moves is not None:
                        del self.moves[moves_before:]
                    return False
            return True
        finally:
            self._journal = None

    # -- acceptance ----------------------------------------------------------

    def can_ever_accept(self, ends) -> bool:
        return len(ends) * self.k >= self.l + 1

    def choose_tail(self, ends) -> int:
        return min(v for v in ends if self.peb[v] > 0)

    def try_add(self, ends, label=None) -> Optional[int]:
        """Collect l+1 pebbles and add the edge; returns the new edge id or None."""
        e = _normalize_edge(ends, self.n)
        if not self.can_ever_accept(e) or not self.collect(e, self.l + 1):
            return None
        return self.add_edge(e, self.choose_tail(e), label)

    def verdict_kind(self, rejected) -> Verdict:
        if rejected:
            return Verdict.DEPENDENT
        if self.total_pebbles() == self.l:
            return Verdict.TIGHT
        return Verdict.SPARSE


# -- functional surface ----------------------------------------------------------


def new_game(n: int, params: SparsityParams, record: bool = False) -> GameState:
    return GameState(n, params, record)


def add_edge_move(state: GameState, e, tail: int) -> int:
    return state.add_edge(e, tail)


def pebble_shift_move(state: GameState, e: int, v: int) -> None:
    state.shift(e, v)


def collect_pebbles(state: GameState, e, target: int) -> bool:
    return state.collect(e, target)


def play(G: Hypergraph, params: SparsityParams, order: Optional[Sequence[int]] = None,
         record: bool = False, game_cls=GameState) -> GameVerdict:
    """Run the basic pebble game over the edges of ``G`` in the given order."""
    if G.n == 0:
        kind = Verdict.TIGHT if params.l == 0 else Verdict.SPARSE
        return GameVerdict(kind, [], [], None)
    game = game_cls(G.n, params, record)
    accepted, rejected = [], []
    for i in (range(G.m) if order is None else order):
        if game.try_add(G.edges[i], label=i) is None:
            rejected.append(i)
        else:
            accepted.append(i)
    return GameVerdict(game.verdict_kind(rejected), accepted, rejected, game)


def decide(G: Hypergraph, params: SparsityParams, record: bool = False) -> GameVerdict:
    """Sparse / tight / dependent verdict, processing edges in input order."""
    return play(G, params, record=record)


def extract(G: Hypergraph, params: SparsityParams) -> Hypergraph:
    """A maximum-size sparse subgraph (the edges the game accepts)."""
    return G.sub(decide(G, params).accepted)


def weight_order(weights: Sequence[float]) -> list:
    return sorted(range(len(weights)), key=lambda i: (weights[i], i))


def optimize(G: Hypergraph, params: SparsityParams, weights: Sequence[float]) -> Hypergraph:
    """A minimum-weight maximum-size sparse subgraph (greedy by increasing weight)."""
    if len(weights) != G.m:
        raise ValueError("need one weight per edge")
    return G.sub(play(G, params, order=weight_order(weights)).accepted)


# -- invariants ------------------------------------------------------------------


def replay(n: int, params: SparsityParams, moves, game_cls=GameState, on_move=None) -> GameState:
    """Apply a recorded move log to a fresh game, calling ``on_move`` after each move."""
    game = game_cls(n, params, record=True)
    for move in moves:
        if move[0] == "add":
            game.add_edge(move[1], move[2])
        else:
            game.shift(move[1], move[2])
        if on_move is not None:
            on_move(game)
    return game


def _subset_array(n):
    return np.arange(1 << n, dtype=np.int64)


def invariant_violations(n: int, k: int, l: int, edges, tails, peb,
                         subsets_limit: int = 12) -> list:
    """Check I1-I3 on an oriented hypergraph with pebble counts.

    I1: at least l pebbles remain (at least min(l, kn), since a game with
    fewer than l pebbles in total can never add an edge).
    I2: for every vertex, loops at v + non-loop edges tailed at v + pebbles = k.
    I3: for every vertex set, span + out-degree + pebbles = k|V'|; checked over
    all subsets when n <= ``subsets_limit``.
    """
    bad = []
    total = sum(peb)
    if total < min(l, k * n):
        bad.append(f"I1: {total} pebbles < l={l}")
    if any(p < 0 or p > k for p in peb):
        bad.append(f"pebble counts out of range: {peb}")
    loops = [0] * n
    outs = [0] * n
    for e, t in zip(edges, tails):
        if len(e) == 1:
            loops[t] += 1
        else:
            outs[t] += 1
    for v in range(n):
        if loops[v] + outs[v] + peb[v] != k:
            bad.append(f"I2 at vertex {v}: {loops[v]}+{outs[v]}+{peb[v]} != {k}")
    if n <= subsets_limit:
        S = _subset_array(n)
        lhs = np.zeros(S.shape, dtype=np.int64)
        for v in range(n):
            lhs += peb[v] * ((S >> v) & 1)
        for e, t in zip(edges, tails):
            em = sum(1 << v for v in e)
            spanned = (S & em) == em
            lhs += spanned
            lhs += (~spanned) & (((S >> t) & 1) == 1)
        rhs = k * np.bitwise_count(S).astype(np.int64)
        wrong = np.nonzero(lhs != rhs)[0]
        if len(wrong):
            bad.append(f"I3 fails on {len(wrong)} vertex sets, e.g. mask {int(wrong[0]):b}")
    return bad


def state_violations(game: GameState, subsets_limit: int = 12) -> list:
    return invariant_violations(game.n, game.k, game.l, game.edges, game.tails,
                                game.peb, subsets_limit)
