"""Complete hypergraphs, tight-graph generation, and random inputs.

``K_n^{k,l}`` has every s-subset of the vertices with multiplicity ks - l
(dimensions where that is not positive contribute nothing). No s-uniform
(k,l)-sparse graph can repeat an s-edge more often, so for a single
dimension it is the universe every such graph lives in.
"""

from __future__ import annotations

import random
from itertools import combinations
from math import comb
from typing import Optional, Sequence

from .errors import HypergraphError
from .hypercore import Hypergraph, SparsityParams
from .pebble import GameState

RANDOM_TRIES_PER_EDGE = 50


def complete_hypergraph(n: int, k: int, l: int, dims: Sequence[int]) -> Hypergraph:
    params = SparsityParams(k, l)
    edges = []
    for s in sorted(set(dims)):
        if s < 1:
            raise HypergraphError(f"dimensions must be positive, got {s}")
        mult = k * s - l
        if mult <= 0:
            continue
        for e in combinations(range(n), s):
            edges.extend([e] * mult)
    return Hypergraph(n, edges, None, params)


def _check_compatible(s: int, k: int, l: int) -> SparsityParams:
    params = SparsityParams(k, l)
    if s < 1:
        raise HypergraphError(f"edge dimension must be positive, got {s}")
    if not params.compatible(s):
        raise HypergraphError(f"no {s}-edge is {params}-sparse (need l <= {s * k - 1})")
    return params


def _count_fits(n: int, s: int, k: int, l: int) -> bool:
    return k * n - l <= (s * k - l) * comb(n, s)


def min_n1(s: int, k: int, l: int) -> int:
    """Smallest n1 such that s-uniform (k,l)-tight graphs exist for every n >= n1.

    The only obstruction is counting: kn - l edges must fit into the C(n,s)
    distinct s-edges, each repeated at most sk - l times. For s = 1 and l > 0
    a tight graph exists only on a single vertex, so n1 = 1 describes the
    whole (one-point) range there.
    """
    _check_compatible(s, k, l)
    if s == 1:
        return 1
    # (sk-l)C(n,s) - kn is increasing once C(n,s) >= kn, which holds well before this bound
    horizon = s + 4 * (k + l + s) + 8
    failing = [n for n in range(s, horizon) if not _count_fits(n, s, k, l)]
    return failing[-1] + 1 if failing else s


def _single_vertex_family(n: int, k: int, l: int) -> Hypergraph:
    if l == 0:
        return Hypergraph(n, [(v,) for v in range(n) for _ in range(k)], None, SparsityParams(k, l))
    if n != 1:
        raise HypergraphError(f"no 1-uniform ({k},{l})-tight graph exists on {n} vertices")
    return Hypergraph(1, [(0,)] * (k - l), None, SparsityParams(k, l))


def generate_tight(n: int, s: int, k: int, l: int, seed: Optional[int] = 0) -> Hypergraph:
    """A seeded s-uniform (k,l)-tight hypergraph on n vertices.

    Base case on n1 vertices: the edges of K_{n1}^{k,l} are fed to the pebble
    game with the edges at the last vertex last, so excess edges are discarded
    there. Each further vertex receives k new s-edges containing it, drawn at
    random and validated by the game, with a lexicographic fallback.
    """
    params = _check_compatible(s, k, l)
    if s == 1:
        return _single_vertex_family(n, k, l)
    n1 = min_n1(s, k, l)
    if n < n1:
        raise HypergraphError(f"no {s}-uniform {params}-tight graph on {n} < {n1} vertices")
    rng = random.Random(seed)
    game = GameState(n1, params)
    mult = s * k - l
    base = [e for e in combinations(range(n1), s) for _ in range(mult)]
    pivot = n1 - 1
    base.sort(key=lambda e: pivot in e)
    for e in base:
        game.try_add(e)
        if len(game.edges) == params.bound(n1):
            break
    if len(game.edges) != params.bound(n1):
        raise HypergraphError(f"base case on {n1} vertices reached only {len(game.edges)} edges")
    for u in range(n1, n):
        game.add_vertex()
        _attach_vertex(game, u, s, k, rng)
    return Hypergraph(n, game.edges, None, params)


def _attach_vertex(game: GameState, u: int, s: int, k: int, rng: random.Random) -> None:
    added = 0
    for _ in range(RANDOM_TRIES_PER_EDGE * k):
        if added == k:
            return
        e = tuple(sorted(rng.sample(range(u), s - 1) + [u]))
        if game.try_add(e) is not None:
            added += 1
    for rest in combinations(range(u), s - 1):
        while added < k and game.try_add(rest + (u,)) is not None:
            added += 1
        if added == k:
            return
    if added < k:
        raise HypergraphError(f"could not attach vertex {u} with {k} edges")


def random_hypergraph(n: int, m: int, dims: Sequence[int], seed: Optional[int] = 0) -> Hypergraph:
    """m edges, each with a uniformly chosen dimension and a uniform vertex subset."""
    dims = list(dims)
    if not dims or min(dims) < 1:
        raise HypergraphError("dims must list positive dimensions")
    if max(dims) > n:
        raise HypergraphError(f"dimension {max(dims)} exceeds vertex count {n}")
    rng = random.Random(seed)
    edges = []
    for _ in range(m):
        s = rng.choice(dims)
        edges.append(tuple(sorted(rng.sample(range(n), s))))
    return Hypergraph(n, edges)
