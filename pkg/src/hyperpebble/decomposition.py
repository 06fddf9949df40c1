"""Map decompositions, arborescences, maps-and-trees, and the add-edges checks.

A (k,0)-tight graph splits into k maps: after the (k,0)-pebble game accepts
every edge no pebbles are left, so every vertex is the tail of exactly k
edges (loops included). Handing those k edges to maps 1..k gives each map an
orientation in which every vertex has out-degree one.

The two augmentation checks test, on a concrete tight graph, that adding
edges from a complete hypergraph keeps the result tight for a weaker class:

* ``lovasz-recski``: adding any l-k edges of dimension at least 2 to a
  (k,l)-tight graph gives a (k,k)-tight graph (a k-arborescence);
* ``maps-adding``: adding any l edges from K_n^{k,0} - G to a (k,l)-tight
  graph gives a (k,0)-tight graph (a k-map).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Optional, Sequence

from .errors import CapExceeded, HypergraphError, NotTight
from .hypercore import Hypergraph, SparsityParams
from .pebble import GameState, Verdict, play

DEFAULT_AUGMENT_CAP = 2_000_000


@dataclass(frozen=True)
class MapDecomposition:
    """Per edge: the map it belongs to (1..k) and its tail in that map."""

    k: int
    assignment: tuple
    tails: tuple

    def parts(self) -> list:
        return [[i for i, a in enumerate(self.assignment) if a == j] for j in range(1, self.k + 1)]


@dataclass(frozen=True)
class MixedDecomposition:
    """Edge index lists: l tree parts followed by k-l map parts."""

    tree_parts: tuple
    map_parts: tuple


def _split_tailed(game: GameState, k: int) -> MapDecomposition:
    assignment = [0] * len(game.edges)
    tails = [0] * len(game.edges)
    for v in range(game.n):
        for slot, eid in enumerate(sorted(game.tailed[v], key=lambda j: game.labels[j]), start=1):
            assignment[game.labels[eid]] = slot
            tails[game.labels[eid]] = v
    return MapDecomposition(k, tuple(assignment), tuple(tails))


def k_map_decompose(G: Hypergraph, k: int) -> MapDecomposition:
    """Split a (k,0)-tight graph into k maps; raises :class:`NotTight` otherwise."""
    params = SparsityParams(k, 0)
    verdict = play(G, params)
    if verdict.kind is not Verdict.TIGHT:
        raise NotTight(f"graph is not (k,0)-tight for k={k} (verdict: {verdict.kind})", verdict)
    if verdict.game is None:
        return MapDecomposition(k, (), ())
    return _split_tailed(verdict.game, k)


def verify_map_decomposition(G: Hypergraph, d: MapDecomposition) -> bool:
    if len(d.assignment) != G.m or len(d.tails) != G.m:
        return False
    out = [[0] * G.n for _ in range(d.k)]
    for e, a, t in zip(G.edges, d.assignment, d.tails):
        if not 1 <= a <= d.k or t not in e:
            return False
        out[a - 1][t] += 1
    return all(c == 1 for row in out for c in row)


def is_k_arborescence(G: Hypergraph, k: int) -> bool:
    return play(G, SparsityParams(k, k)).kind is Verdict.TIGHT


def verify_maps_and_trees(G: Hypergraph, k: int, l: int, d: MixedDecomposition) -> bool:
    """Check that ``d`` splits G into l spanning trees and k-l spanning maps."""
    if not 0 <= l <= k:
        raise HypergraphError(f"maps-and-trees needs 0 <= l <= k, got k={k}, l={l}")
    if len(d.tree_parts) != l or len(d.map_parts) != k - l:
        return False
    used = sorted(i for part in (*d.tree_parts, *d.map_parts) for i in part)
    if used != list(range(G.m)):
        return False
    trees_ok = all(is_k_arborescence(G.sub(part), 1) for part in d.tree_parts)
    maps_ok = all(play(G.sub(part), SparsityParams(1, 0)).kind is Verdict.TIGHT
                  for part in d.map_parts)
    return trees_ok and maps_ok


# -- augmentation checks ---------------------------------------------------------


@dataclass
class Report:
    """Outcome of an augmentation check.

    ``counterexamples`` keeps the first few failing augmentations (as lists of
    added edges); ``failures`` counts all of them.
    """

    theorem: str
    params: SparsityParams
    mode: str
    added: int
    tested: int = 0
    failures: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def lines(self) -> list:
        out = [f"theorem={self.theorem}", f"k={self.params.k}", f"l={self.params.l}",
               f"mode={self.mode}", f"added={self.added}", f"tested={self.tested}",
               f"failures={self.failures}"]
        for extra in self.counterexamples:
            out.append("counterexample=" + ",".join(" ".join(map(str, e)) for e in extra))
        return out


def candidate_pool(G: Hypergraph, k: int, l: int, dims: Optional[Sequence[int]] = None) -> list:
    """(edge, available copies) for K_n^{k,l} minus G as multisets.

    ``dims`` defaults to every dimension 1..n.
    """
    dims = range(1, G.n + 1) if dims is None else sorted(set(dims))
    present: dict = {}
    for e in G.edges:
        present[e] = present.get(e, 0) + 1
    pool = []
    for s in dims:
        mult = k * s - l
        if mult <= 0 or s > G.n:
            continue
        for e in combinations(range(G.n), s):
            left = mult - present.get(e, 0)
            if left > 0:
                pool.append((e, left))
    return pool


def count_multisets(caps: Sequence[int], size: int) -> int:
    """Number of multisets of ``size`` items where item i is used at most caps[i] times."""
    caps = tuple(caps)

    @lru_cache(maxsize=None)
    def go(i, left):
        if left == 0:
            return 1
        if i == len(caps):
            return 0
        return sum(go(i + 1, left - c) for c in range(min(caps[i], left) + 1))

    return go(0, size)


def _require_tight(G: Hypergraph, params: SparsityParams):
    verdict = play(G, params)
    if verdict.kind is not Verdict.TIGHT:
        raise NotTight(f"graph is not {params}-tight (verdict: {verdict.kind})", verdict)


def _augment(G: Hypergraph, target: SparsityParams, pool: list, t: int, report: Report,
             mode: str, seed: int, trials: int, cap: int, want_maps: bool,
             keep: int = 10) -> Report:
    base = play(G, target)
    if base.kind is Verdict.DEPENDENT:
        raise NotTight(f"graph is not {target}-sparse, so no augmentation can succeed", base)
    start = base.game if base.game is not None else GameState(max(G.n, 1), target)

    def finished(game, path):
        report.tested += 1
        ok = game.total_pebbles() == target.l
        if ok and want_maps:
            d = _split_tailed(game, target.k)
            ok = verify_map_decomposition(game.graph().reordered(
                sorted(range(len(game.labels)), key=lambda j: game.labels[j])), d)
        if not ok:
            report.failures += 1
            if len(report.counterexamples) < keep:
                report.counterexamples.append(list(path))

    if mode == "exhaustive":
        total = count_multisets([c for _, c in pool], t)
        if total > cap:
            raise CapExceeded(f"{total} augmentations exceed cap {cap}")
        labels = G.m
        used = [0] * len(pool)
        path: list = []

        def walk(i, left, game, alive):
            if left == 0:
                if alive:
                    finished(game, path)
                else:
                    report.tested += 1
                    report.failures += 1
                    if len(report.counterexamples) < keep:
                        report.counterexamples.append(list(path))
                return
            for j in range(i, len(pool)):
                e, c = pool[j]
                if used[j] == c:
                    continue
                used[j] += 1
                path.append(e)
                nxt, ok = game, alive
                if alive:
                    nxt = game.clone()
                    ok = nxt.try_add(e, label=labels + len(path) - 1) is not None
                walk(j, left - 1, nxt, ok)
                path.pop()
                used[j] -= 1

        walk(0, t, start, True)
    elif mode == "sampled":
        rng = random.Random(seed)
        flat = [e for e, c in pool for _ in range(c)]
        if len(flat) < t:
            return report
        for _ in range(trials):
            picks = sorted(rng.sample(range(len(flat)), t))
            path = [flat[i] for i in picks]
            game = start.clone()
            alive = True
            for off, e in enumerate(path):
                if game.try_add(e, label=G.m + off) is None:
                    alive = False
                    break
            if alive:
                finished(game, path)
            else:
                report.tested += 1
                report.failures += 1
                if len(report.counterexamples) < keep:
                    report.counterexamples.append(path)
    else:
        raise HypergraphError(f"unknown mode {mode!r}; use exhaustive or sampled")
    return report


def check_lovasz_recski(G: Hypergraph, params: SparsityParams, mode: str = "exhaustive",
                        trials: int = 200, seed: int = 0, dims: Optional[Sequence[int]] = None,
                        cap: int = DEFAULT_AUGMENT_CAP) -> Report:
    """Add l-k edges of dimension >= 2 (from K_n^{k,k} - G) and expect (k,k)-tightness."""
    k, l = params.k, params.l
    if l < k:
        raise HypergraphError(f"this check needs l >= k, got {params}")
    _require_tight(G, params)
    dims = [s for s in (range(2, G.n + 1) if dims is None else dims) if s >= 2]
    pool = candidate_pool(G, k, k, dims)
    report = Report("lovasz-recski", params, mode, l - k)
    return _augment(G, SparsityParams(k, k), pool, l - k, report, mode, seed, trials, cap,
                    want_maps=False)


def check_maps_after_adding(G: Hypergraph, params: SparsityParams, mode: str = "exhaustive",
                            trials: int = 200, seed: int = 0,
                            dims: Optional[Sequence[int]] = None,
                            cap: int = DEFAULT_AUGMENT_CAP) -> Report:
    """Add l edges from K_n^{k,0} - G and expect a (k,0)-tight, map-decomposable graph."""
    _require_tight(G, params)
    pool = candidate_pool(G, params.k, 0, dims)
    report = Report("maps-adding", params, mode, params.l)
    return _augment(G, SparsityParams(params.k, 0), pool, params.l, report, mode, seed, trials,
                    cap, want_maps=True)
