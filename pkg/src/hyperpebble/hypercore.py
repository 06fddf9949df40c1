"""Hypergraph data model, orientations, spans, degrees and directed reachability.

Vertices are dense integer ids ``0..n-1``. An edge is stored as a sorted tuple
of distinct vertex ids; parallel edges are repeated entries of the edge list.
An orientation is a sequence holding, for every edge, the endpoint chosen as
its tail.

Text format (UTF-8, line oriented)::

    n k l
    0 1 2
    1 3 w=2.5
    # comments and blank lines are ignored
    2 3 t=3

The header carries the vertex count and the sparsity parameters. Each edge
line lists vertex ids, optionally followed by ``w=<weight>`` and ``t=<tail>``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import HypergraphError, ParseError

Edge = tuple  # sorted tuple of distinct vertex ids


@dataclass(frozen=True)
class SparsityParams:
    """The pair (k, l) of a (k,l)-sparsity class."""

    k: int
    l: int

    def __post_init__(self):
        if int(self.k) != self.k or self.k < 1:
            raise HypergraphError(f"k must be a positive integer, got {self.k}")
        if int(self.l) != self.l or self.l < 0:
            raise HypergraphError(f"l must be a non-negative integer, got {self.l}")

    def compatible(self, s: int) -> bool:
        """True when some edge of dimension ``s`` can be sparse, i.e. l <= s*k - 1."""
        return self.l <= s * self.k - 1

    def bound(self, n_vertices: int) -> int:
        return self.k * n_vertices - self.l

    def rank(self, edges: Iterable[Sequence[int]]) -> int:
        """k|V(E')| - l for nonempty E', and 0 for the empty edge set."""
        edges = list(edges)
        if not edges:
            return 0
        return self.bound(len(span_of_edge_sets(edges)))

    def __str__(self):
        return f"({self.k},{self.l})"


def _normalize_edge(ends, n=None) -> Edge:
    e = tuple(sorted(int(v) for v in ends))
    if not e:
        raise HypergraphError("an edge needs at least one endpoint")
    if len(set(e)) != len(e):
        raise HypergraphError(f"edge {list(ends)} repeats a vertex")
    if e[0] < 0 or (n is not None and e[-1] >= n):
        raise HypergraphError(f"edge {list(ends)} has a vertex outside 0..{n - 1}")
    return e


@dataclass(frozen=True)
class Hypergraph:
    """An immutable multi-hypergraph on vertices ``0..n-1``.

    ``weights`` is either None or a tuple with one entry per edge (an entry may
    itself be None when the edge carries no weight). ``params`` records the
    (k, l) pair from a file header, when there was one.
    """

    n: int
    edges: tuple = ()
    weights: Optional[tuple] = None
    params: Optional[SparsityParams] = field(default=None, compare=True)

    def __post_init__(self):
        if self.n < 0:
            raise HypergraphError("vertex count must be non-negative")
        edges = tuple(_normalize_edge(e, self.n) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.weights is not None:
            weights = tuple(None if w is None else float(w) for w in self.weights)
            if len(weights) != len(edges):
                raise HypergraphError("weights must have one entry per edge")
            if all(w is None for w in weights):
                weights = None
            object.__setattr__(self, "weights", weights)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def dimension(self) -> Optional[int]:
        """Minimum edge size (None for an edgeless graph)."""
        return min((len(e) for e in self.edges), default=None)

    @property
    def max_dimension(self) -> Optional[int]:
        return max((len(e) for e in self.edges), default=None)

    def is_uniform(self) -> bool:
        return len({len(e) for e in self.edges}) <= 1

    def sub(self, indices: Iterable[int]) -> "Hypergraph":
        """The spanning subgraph keeping the given edges, in input order."""
        idx = sorted(set(indices))
        weights = None if self.weights is None else [self.weights[i] for i in idx]
        return Hypergraph(self.n, [self.edges[i] for i in idx], weights, self.params)

    def plus(self, extra: Iterable[Sequence[int]]) -> "Hypergraph":
        """A copy with the extra edges appended (unweighted)."""
        extra = [tuple(e) for e in extra]
        weights = None
        if self.weights is not None:
            weights = list(self.weights) + [None] * len(extra)
        return Hypergraph(self.n, list(self.edges) + extra, weights, self.params)

    def reordered(self, order: Sequence[int]) -> "Hypergraph":
        weights = None if self.weights is None else [self.weights[i] for i in order]
        return Hypergraph(self.n, [self.edges[i] for i in order], weights, self.params)

    def with_params(self, params: Optional[SparsityParams]) -> "Hypergraph":
        return Hypergraph(self.n, self.edges, self.weights, params)


def _check_vertices(G: Hypergraph, vertices) -> frozenset:
    vs = frozenset(int(v) for v in vertices)
    bad = [v for v in vs if not 0 <= v < G.n]
    if bad:
        raise HypergraphError(f"vertex ids out of range: {sorted(bad)}")
    return vs


def check_orientation(G: Hypergraph, tails: Sequence[int]) -> None:
    if len(tails) != G.m:
        raise HypergraphError("orientation must name one tail per edge")
    for i, (e, t) in enumerate(zip(G.edges, tails)):
        if t not in e:
            raise HypergraphError(f"tail {t} of edge {i} is not one of its ends {e}")


def span_of_vertices(G: Hypergraph, Vp: Iterable[int]) -> list:
    """Indices of the edges whose ends all lie in ``Vp``, in input order."""
    vs = _check_vertices(G, Vp)
    return [i for i, e in enumerate(G.edges) if vs.issuperset(e)]


def span_of_edges(G: Hypergraph, Ep: Iterable[int]) -> frozenset:
    """Union of the endpoint sets of the given edges."""
    out = set()
    for i in Ep:
        if not 0 <= i < G.m:
            raise HypergraphError(f"edge index {i} out of range")
        out.update(G.edges[i])
    return frozenset(out)


def span_of_edge_sets(edges: Iterable[Sequence[int]]) -> frozenset:
    out = set()
    for e in edges:
        out.update(e)
    return frozenset(out)


def degrees(G: Hypergraph, tails: Sequence[int], Vp: Iterable[int]) -> tuple:
    """(out-degree, in-degree, undirected degree) of the vertex set ``Vp``.

    Only edges with ends on both sides of the cut count, so loops never
    contribute.
    """
    vs = _check_vertices(G, Vp)
    check_orientation(G, tails)
    out = inn = 0
    for e, t in zip(G.edges, tails):
        inside = sum(1 for v in e if v in vs)
        if inside == 0 or inside == len(e):
            continue
        if t in vs:
            out += 1
        else:
            inn += 1
    return out, inn, out + inn


def out_adjacency(n: int, edges: Sequence[Sequence[int]], tails: Sequence[int]) -> list:
    """Per vertex, the (head, edge index) pairs leaving it, sorted by (head, index)."""
    adj = [[] for _ in range(n)]
    for i, (e, t) in enumerate(zip(edges, tails)):
        for u in e:
            if u != t:
                adj[t].append((u, i))
    for row in adj:
        row.sort()
    return adj


def reach(G: Hypergraph, tails: Sequence[int], v: int) -> frozenset:
    """Vertices reachable from ``v`` by directed paths.

    An edge is crossed only from its tail to one of its other ends. The search
    is a depth-first search visiting lower vertex ids first, then lower edge
    indices.
    """
    _check_vertices(G, [v])
    check_orientation(G, tails)
    return frozenset(dfs_order(out_adjacency(G.n, G.edges, tails), v))


def dfs_order(adj: Sequence[Sequence[tuple]], root: int) -> list:
    """Depth-first visit order over an adjacency built by :func:`out_adjacency`."""
    seen = {root}
    order = [root]
    stack = [iter(adj[root])]
    while stack:
        for u, _ in stack[-1]:
            if u not in seen:
                seen.add(u)
                order.append(u)
                stack.append(iter(adj[u]))
                break
        else:
            stack.pop()
    return order


# -- text format ---------------------------------------------------------------


def parse_oriented(text: str) -> tuple:
    """Parse the text format, returning ``(hypergraph, tails)``.

    ``tails`` is None unless every edge line carries ``t=``.
    """
    header = None
    edges, weights, tails = [], [], []
    n = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 3:
                raise ParseError(lineno, "header must be 'n k l'")
            try:
                n, k, l = (int(t) for t in tokens)
            except ValueError:
                raise ParseError(lineno, "header must hold three integers") from None
            if n < 0 or k < 0 or l < 0:
                raise ParseError(lineno, "header values must be non-negative")
            if k == 0 and l != 0:
                raise ParseError(lineno, "k = 0 (no parameters) requires l = 0")
            header = (n, k, l)
            continue
        ends, w, t = [], None, None
        for tok in tokens:
            key, sep, value = tok.partition("=")
            if sep:
                try:
                    if key == "w" and w is None:
                        w = float(value)
                    elif key == "t" and t is None:
                        t = int(value)
                    else:
                        raise ValueError
                except ValueError:
                    raise ParseError(lineno, f"bad annotation {tok!r}") from None
                continue
            if w is not None or t is not None:
                raise ParseError(lineno, "vertex ids must precede annotations")
            try:
                ends.append(int(tok))
            except ValueError:
                raise ParseError(lineno, f"bad vertex id {tok!r}") from None
        if not ends:
            raise ParseError(lineno, "empty edge")
        if any(v < 0 or v >= n for v in ends):
            raise ParseError(lineno, f"vertex id out of range 0..{n - 1}")
        if len(set(ends)) != len(ends):
            raise ParseError(lineno, "edge repeats a vertex")
        if t is not None and t not in ends:
            raise ParseError(lineno, f"tail {t} is not an end of the edge")
        edges.append(ends)
        weights.append(w)
        tails.append(t)
    if header is None:
        raise ParseError(1, "missing header line 'n k l'")
    n, k, l = header
    params = SparsityParams(k, l) if k >= 1 else None
    G = Hypergraph(n, edges, weights, params)
    oriented = None
    if tails and all(t is not None for t in tails):
        oriented = tuple(tails)
    return G, oriented


def parse_hypergraph(text: str) -> Hypergraph:
    return parse_oriented(text)[0]


def serialize_hypergraph(G: Hypergraph, tails: Optional[Sequence[int]] = None,
                         params: Optional[SparsityParams] = None,
                         comments: Sequence[str] = ()) -> str:
    """Render ``G`` in the text format; ``tails`` adds ``t=`` annotations."""
    params = params or G.params
    k, l = (params.k, params.l) if params else (0, 0)
    lines = [f"{G.n} {k} {l}"]
    lines.extend(f"# {c}" for c in comments)
    for i, e in enumerate(G.edges):
        parts = [str(v) for v in e]
        if G.weights is not None and G.weights[i] is not None:
            parts.append(f"w={G.weights[i]!r}")
        if tails is not None:
            parts.append(f"t={tails[i]}")
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"
