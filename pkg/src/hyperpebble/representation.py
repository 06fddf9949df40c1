"""The represented pebble game and lower-dimensional representations.

Alongside H, every accepted edge e carries a subset r(e) of its ends:

* when e is added, r(e) is the set of ends holding the l+1 pebbles that
  certified it. The certificate takes pebbles from the fullest ends first,
  so r(e) is as small as the current pebble placement allows;
* when a shift makes an end v outside r(e) the tail of e, v joins r(e).
  One older member leaves in exchange, trying members oldest first and
  taking the first whose removal keeps R sparse. If every exchange would
  break sparsity, r(e) keeps all its members and simply grows by v, which
  is always safe.

Since R shares its tails and pebbles with H, it stays a pebble-game graph
throughout and is therefore sparse.

The hypergraph R with edges r(e) represents the input. An input equal to its
own R is critical.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .components import decide_with_components
from .errors import IllegalMove, NotSparse
from .hypercore import Hypergraph, SparsityParams, _normalize_edge
from .pebble import GameState, Verdict


class RepresentedGame(GameState):
    """A :class:`GameState` that also maintains r(e) for every edge of H.

    ``rep[i]`` lists r(e_i) in insertion order, oldest first.
    """

    def __init__(self, n, params, record=False):
        super().__init__(n, params, record)
        self.rep: list = []
        self.swaps = 0
        self.growths = 0

    def certificate(self, ends, tail: Optional[int] = None) -> list:
        """Ends supplying l+1 pebbles, taking from the fullest ends first.

        When ``tail`` is given it is always part of the certificate.
        """
        need = self.l + 1
        chosen = []
        if tail is not None:
            chosen.append(tail)
            need -= self.peb[tail]
        for v in sorted(ends, key=lambda x: (-self.peb[x], x)):
            if need <= 0:
                break
            if v == tail or self.peb[v] == 0:
                continue
            chosen.append(v)
            need -= self.peb[v]
        if need > 0:
            raise IllegalMove(f"ends of {tuple(ends)} hold fewer than {self.l + 1} pebbles")
        return sorted(chosen)

    def choose_tail(self, ends) -> int:
        return self.certificate(ends)[0]

    def add_edge(self, ends, tail: int, label=None) -> int:
        e = _normalize_edge(ends, self.n)
        if tail not in e or self.peb[tail] < 1:
            raise IllegalMove(f"tail {tail} is not a pebbled end of {e}")
        r = self.certificate(e, tail)
        eid = super().add_edge(e, tail, label)
        self.rep.append(r)
        return eid

    def shift(self, eid: int, v: int) -> None:
        super().shift(eid, v)
        r = self.rep[eid]
        if v in r:
            return
        for x in list(r):
            swapped = [y for y in r if y != x] + [v]
            if self._swap_keeps_sparse(eid, swapped, v):
                r.remove(x)
                r.append(v)
                self.swaps += 1
                return
        r.append(v)
        self.growths += 1

    def _swap_keeps_sparse(self, eid: int, new_r, v: int) -> bool:
        """Is R - r(e) + new_r sparse?

        R without r(e) is a pebble-game graph once the pebble spent on ``v`` is
        handed back, so the swap is safe exactly when l+1 pebbles can be
        collected on ``new_r`` there. The collection runs on copies; the live
        orientation of R is left untouched.
        """
        need = self.l + 1
        peb = list(self.peb)
        peb[v] += 1
        tails = list(self.tails)
        tailed = [list(t) for t in self.tailed]
        tailed[v].remove(eid)
        rep = self.rep
        targets = set(new_r)
        mark = [False] * self.n
        via = [0] * self.n
        while sum(peb[u] for u in targets) < need:
            for i in range(self.n):
                mark[i] = False
            for u in targets:
                mark[u] = True
            hit = None
            stack = sorted(targets)
            while stack and hit is None:
                x = stack.pop()
                for j in tailed[x]:
                    for y in rep[j]:
                        if not mark[y]:
                            mark[y] = True
                            via[y] = j
                            if peb[y]:
                                hit = y
                                break
                            stack.append(y)
                    if hit is not None:
                        break
            if hit is None:
                return False
            u = hit
            while u not in targets:
                j = via[u]
                w = tails[j]
                peb[u] -= 1
                peb[w] += 1
                tails[j] = u
                tailed[w].remove(j)
                tailed[u].append(j)
                u = w
        return True

    def _undo_record(self, eid):
        return (eid, self.tails[eid], list(self.rep[eid]))

    def _undo(self, record) -> None:
        eid, old_tail, old_rep = record
        super()._undo((eid, old_tail))
        self.rep[eid] = old_rep

    def representation(self) -> list:
        return [tuple(sorted(r)) for r in self.rep]


def new_represented_game(n: int, params: SparsityParams, record: bool = False) -> RepresentedGame:
    return RepresentedGame(n, params, record)


def represented_add_edge(state: RepresentedGame, e, tail: int) -> int:
    return state.add_edge(e, tail)


def represented_pebble_shift(state: RepresentedGame, e: int, v: int) -> None:
    state.shift(e, v)


@dataclass(frozen=True)
class RepresentationMap:
    """Per input edge: its representative r(e) and its tail in the final orientation."""

    r: tuple
    tails: tuple
    game: object = None


def representation_map(G: Hypergraph, params: SparsityParams, record: bool = False) -> RepresentationMap:
    verdict, _ = decide_with_components(G, params, record=record, game_cls=RepresentedGame)
    if verdict.kind is Verdict.DEPENDENT:
        raise NotSparse(f"input is not {params}-sparse; rejected edges {verdict.rejected}",
                        verdict.rejected)
    game = verdict.game
    r = [None] * G.m
    tails = [None] * G.m
    for eid, i in enumerate(game.labels):
        r[i] = tuple(sorted(game.rep[eid]))
        tails[i] = game.tails[eid]
    return RepresentationMap(tuple(r), tuple(tails), game)


def represent(G: Hypergraph, params: SparsityParams) -> Hypergraph:
    """The representation R: edge i of R is r(e_i), in input order."""
    if G.m == 0:
        return G
    return Hypergraph(G.n, representation_map(G, params).r, G.weights, G.params)


def is_critical(G: Hypergraph, params: SparsityParams) -> bool:
    return represent(G, params).edges == G.edges
