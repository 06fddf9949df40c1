"""Exponential-time ground truth for the sparsity predicates.

Everything here enumerates subsets directly and is meant for graphs with a
handful of vertices. Each routine takes an explicit cap and raises
:class:`CapExceeded` instead of approximating when the input is too large.

A vertex set whose span is empty is exempt from the count ``m' <= k n' - l``;
otherwise a single vertex would violate it whenever ``l > k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from .errors import CapExceeded, HypergraphError, NotSparse, NotTight
from .hypercore import Hypergraph, SparsityParams

DEFAULT_VERTEX_CAP = 16
DEFAULT_EDGE_CAP = 20
DEFAULT_PARTITION_CAP = 10


@dataclass(frozen=True)
class Component:
    """A maximal tight induced sub-hypergraph: vertex set plus spanned edge indices."""

    vertices: frozenset
    edge_indices: tuple

    def sort_key(self):
        return (-len(self.vertices), sorted(self.vertices))

    def __str__(self):
        return " ".join(map(str, sorted(self.vertices))) + f" |E|={len(self.edge_indices)}"


def _masks(G: Hypergraph) -> list:
    return [sum(1 << v for v in e) for e in G.edges]


def _support(G: Hypergraph) -> list:
    return sorted({v for e in G.edges for v in e})


def _subset_masks(vertices: Sequence[int]):
    """Yield (mask, size) for every nonempty subset of ``vertices``."""
    for r in range(1, len(vertices) + 1):
        for combo in combinations(vertices, r):
            yield sum(1 << v for v in combo), r


def _check_vertex_cap(count, cap):
    if count > cap:
        raise CapExceeded(f"brute force over {count} vertices exceeds cap {cap}")


def is_sparse_bruteforce(G: Hypergraph, params: SparsityParams,
                         cap: int = DEFAULT_VERTEX_CAP) -> bool:
    support = _support(G)
    _check_vertex_cap(len(support), cap)
    masks = _masks(G)
    for S, size in _subset_masks(support):
        spanned = sum(1 for em in masks if em & S == em)
        if spanned and spanned > params.k * size - params.l:
            return False
    return True


def is_tight_bruteforce(G: Hypergraph, params: SparsityParams,
                        cap: int = DEFAULT_VERTEX_CAP) -> bool:
    return G.m == params.bound(G.n) and is_sparse_bruteforce(G, params, cap)


def blocks_bruteforce(G: Hypergraph, params: SparsityParams,
                      cap: int = DEFAULT_VERTEX_CAP) -> list:
    """Every vertex set with nonempty span that spans exactly k|V'| - l edges."""
    support = _support(G)
    _check_vertex_cap(len(support), cap)
    masks = _masks(G)
    found = []
    for S, size in _subset_masks(support):
        spanned = sum(1 for em in masks if em & S == em)
        if spanned and spanned == params.k * size - params.l:
            found.append(frozenset(v for v in support if S >> v & 1))
    return found


def components_bruteforce(G: Hypergraph, params: SparsityParams,
                          cap: int = DEFAULT_VERTEX_CAP) -> list:
    """Inclusion-maximal blocks, sorted by (size desc, vertex list)."""
    if not is_sparse_bruteforce(G, params, cap):
        raise NotSparse("components are defined only for sparse graphs")
    blocks = blocks_bruteforce(G, params, cap)
    maximal = [b for b in blocks if not any(b < other for other in blocks)]
    comps = [Component(b, tuple(i for i, e in enumerate(G.edges) if b.issuperset(e)))
             for b in maximal]
    return sorted(comps, key=Component.sort_key)


def set_partitions(items: Sequence):
    """Yield every partition of ``items`` as a list of lists."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def is_partition_connected_bruteforce(G: Hypergraph, k: int,
                                      cap: int = DEFAULT_PARTITION_CAP) -> bool:
    """Every partition into t parts is crossed by at least k(t-1) edges."""
    if G.n > cap:
        raise CapExceeded(f"partition enumeration over {G.n} vertices exceeds cap {cap}")
    for parts in set_partitions(list(range(G.n))):
        label = {}
        for idx, part in enumerate(parts):
            for v in part:
                label[v] = idx
        crossing = sum(1 for e in G.edges if len({label[v] for v in e}) > 1)
        if crossing < k * (len(parts) - 1):
            return False
    return True


def _popcount_table(n_edges):
    """Every edge subset encoded as an integer 0..2^m-1."""
    return np.arange(1 << n_edges, dtype=np.int64)


def sparse_edge_subsets(G: Hypergraph, params: SparsityParams,
                        cap: int = DEFAULT_EDGE_CAP) -> np.ndarray:
    """Boolean array indexed by edge-subset bitmask: is that subset sparse?"""
    if G.m > cap:
        raise CapExceeded(f"enumerating 2^{G.m} edge subsets exceeds cap {cap}")
    support = _support(G)
    _check_vertex_cap(len(support), DEFAULT_VERTEX_CAP)
    masks = _masks(G)
    subsets = _popcount_table(G.m)
    ok = np.ones(subsets.shape, dtype=bool)
    for S, size in _subset_masks(support):
        inside = sum(1 << i for i, em in enumerate(masks) if em & S == em)
        if not inside:
            continue
        count = np.bitwise_count(subsets & inside).astype(np.int64)
        ok &= (count == 0) | (count <= params.k * size - params.l)
    return ok


def max_sparse_subgraph_bruteforce(G: Hypergraph, params: SparsityParams,
                                   weights: Optional[Sequence[float]] = None,
                                   cap: int = DEFAULT_EDGE_CAP) -> list:
    """A maximum sparse edge subset; minimum weight among those when weighted.

    Remaining ties go to the lexicographically smallest sorted index list.
    """
    ok = sparse_edge_subsets(G, params, cap)
    subsets = _popcount_table(G.m)
    sizes = np.where(ok, np.bitwise_count(subsets).astype(np.int64), -1)
    best = sizes.max()
    candidates = subsets[sizes == best]
    if weights is not None:
        w = np.asarray(weights, dtype=float)
        bits = (candidates[:, None] >> np.arange(G.m)) & 1
        totals = bits @ w if G.m else np.zeros(len(candidates))
        candidates = candidates[totals <= totals.min() + 1e-9]
    as_lists = [[i for i in range(G.m) if int(c) >> i & 1] for c in candidates]
    return min(as_lists)


def max_sparse_size_bruteforce(G: Hypergraph, params: SparsityParams,
                               cap: int = DEFAULT_EDGE_CAP) -> int:
    ok = sparse_edge_subsets(G, params, cap)
    return int(np.bitwise_count(_popcount_table(G.m)[ok]).max())


def _multiset(edges):
    out = {}
    for e in edges:
        out[e] = out.get(e, 0) + 1
    return out


def basis_exchange_check(B1: Hypergraph, B2: Hypergraph, params: SparsityParams,
                         cap: int = DEFAULT_EDGE_CAP) -> bool:
    """Search for e1 in B1-B2 and e2 in B2-B1 such that B1-e1+e2 is tight.

    Edges are compared as a multiset, so parallel copies are interchangeable.
    True vacuously when B1 and B2 are the same multiset.
    """
    if B1.n != B2.n:
        raise HypergraphError("bases must live on the same vertex set")
    if max(B1.m, B2.m) > cap:
        raise CapExceeded(f"exchange search over {max(B1.m, B2.m)} edges exceeds cap {cap}")
    for B in (B1, B2):
        if not is_tight_bruteforce(B, params):
            raise NotTight(f"input is not {params}-tight")
    c1, c2 = _multiset(B1.edges), _multiset(B2.edges)
    only1 = [e for e in c1 if c1[e] > c2.get(e, 0)]
    only2 = [e for e in c2 if c2[e] > c1.get(e, 0)]
    if not only1 and not only2:
        return True
    for e1 in only1:
        rest = list(B1.edges)
        rest.remove(e1)
        for e2 in only2:
            if is_tight_bruteforce(Hypergraph(B1.n, rest + [e2]), params):
                return True
    return False
