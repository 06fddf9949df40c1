"""Component detection and the pebble game with components.

After an edge is accepted with tail w, the edge lies in a block exactly when
reach(w) holds no more than l pebbles. The component is then grown from
reach(w) breadth-first: any vertex u that is the tail of an edge pointing
into the current set C joins, together with reach(u), provided reach(u)
adds no pebbles. Edges spanned by a known component are rejected without
any pebble search.

Components are kept in per-vertex membership lists instead of a table of
spanned vertex tuples; a spanned-edge query inspects the components at one
end of the edge.
"""

from __future__ import annotations

from collections import deque
from typing import Optional, Sequence

from .hypercore import Hypergraph, SparsityParams
from .oracle import Component
from .pebble import GameState, GameVerdict

__all__ = ["Component", "ComponentIndex", "spanned_by_component", "detect_component",
           "decide_with_components", "components"]


class ComponentIndex:
    """Vertex sets of the current components plus per-vertex membership."""

    def __init__(self, n: int):
        self.members = [set() for _ in range(n)]
        self.store: dict = {}
        self._next_id = 0

    def add_vertex(self) -> None:
        self.members.append(set())

    def spans(self, ends) -> bool:
        first, rest = ends[0], ends[1:]
        for cid in self.members[first]:
            comp = self.store[cid]
            if all(v in comp for v in rest):
                return True
        return False

    def add(self, vertices) -> int:
        """Store a new component, dropping every stored one it contains."""
        vertices = frozenset(vertices)
        for cid in {c for v in vertices for c in self.members[v]}:
            if self.store[cid] <= vertices:
                self.remove(cid)
        cid = self._next_id
        self._next_id += 1
        self.store[cid] = vertices
        for v in vertices:
            self.members[v].add(cid)
        return cid

    def remove(self, cid: int) -> None:
        for v in self.store.pop(cid):
            self.members[v].discard(cid)

    def vertex_sets(self) -> list:
        return list(self.store.values())


def spanned_by_component(idx: ComponentIndex, e) -> bool:
    return idx.spans(tuple(e))


def detect_component(game: GameState, eid: int) -> Optional[frozenset]:
    """Vertex set of the component spanning the just-added edge, or None if free."""
    w = game.tails[eid]
    peb = game.peb
    C = set(game.reach(w))
    if sum(peb[v] for v in C) > game.l:
        return None
    queue = deque()
    queued = set()

    def expose(vertices):
        for c in vertices:
            for j in game.incident[c]:
                t = game.tails[j]
                if t not in C and t not in queued:
                    queued.add(t)
                    queue.append(t)

    expose(sorted(C))
    while queue:
        u = queue.popleft()
        if u in C:
            continue
        region = game.reach(u, blocked=C)
        if any(peb[x] for x in region):
            continue
        C.update(region)
        expose(region)
    return frozenset(C)


def decide_with_components(G: Hypergraph, params: SparsityParams,
                           order: Optional[Sequence[int]] = None,
                           record: bool = False, game_cls=GameState) -> tuple:
    """Pebble game with components; returns ``(verdict, components)``.

    The components are those of the accepted (sparse) subgraph.
    """
    game = game_cls(max(G.n, 1), params, record)
    idx = ComponentIndex(max(G.n, 1))
    accepted, rejected = [], []
    for i in (range(G.m) if order is None else order):
        e = G.edges[i]
        if not game.can_ever_accept(e) or idx.spans(e):
            rejected.append(i)
            continue
        if not game.collect(e, params.l + 1):
            raise AssertionError(f"edge {i} outside every component failed to collect pebbles")
        surplus = game.pebbles_on(e)
        eid = game.add_edge(e, game.choose_tail(e), label=i)
        accepted.append(i)
        if surplus > params.l + 1:
            continue
        C = detect_component(game, eid)
        if C is None:
            continue
        if params.l == 0 and idx.store:
            C = C.union(*idx.store.values())
        idx.add(C)
    if G.n == 0:
        from .pebble import play
        return play(G, params), []
    verdict = GameVerdict(game.verdict_kind(rejected), accepted, rejected, game)
    return verdict, _as_components(G, accepted, idx)


def _as_components(G: Hypergraph, accepted, idx: ComponentIndex) -> list:
    acc = sorted(accepted)
    comps = [Component(vs, tuple(i for i in acc if vs.issuperset(G.edges[i])))
             for vs in idx.vertex_sets()]
    return sorted(comps, key=Component.sort_key)


def components(G: Hypergraph, params: SparsityParams) -> list:
    return decide_with_components(G, params)[1]
