import random

import pytest
from hypothesis import strategies as st

from hyperpebble.hypercore import Hypergraph, SparsityParams


def valid_params(s: int, kmax: int = 3):
    """Every (k, l) with k <= kmax that admits s-edges."""
    return [SparsityParams(k, l) for k in range(1, kmax + 1) for l in range(s * k)]


def random_instance(rng: random.Random, nmax=7, mmax=14, dims_pool=(1, 2, 3)):
    n = rng.randint(1, nmax)
    usable = [d for d in dims_pool if d <= n]
    dims = rng.sample(usable, rng.randint(1, len(usable)))
    m = rng.randint(0, mmax)
    edges = [tuple(sorted(rng.sample(range(n), rng.choice(dims)))) for _ in range(m)]
    return Hypergraph(n, edges)


@st.composite
def hypergraphs(draw, nmax=6, mmax=10, dims=(1, 2, 3)):
    n = draw(st.integers(1, nmax))
    usable = [d for d in dims if d <= n]
    edges = draw(st.lists(
        st.sampled_from(usable).flatmap(
            lambda s: st.lists(st.integers(0, n - 1), min_size=s, max_size=s, unique=True)),
        max_size=mmax))
    return Hypergraph(n, [tuple(sorted(e)) for e in edges])


@st.composite
def graphs_with_params(draw, nmax=6, mmax=10, dims=(1, 2, 3), kmax=3):
    G = draw(hypergraphs(nmax, mmax, dims))
    s = G.dimension or 1
    k = draw(st.integers(1, kmax))
    l = draw(st.integers(0, s * k - 1))
    return G, SparsityParams(k, l)


@pytest.fixture
def triangle():
    return Hypergraph(3, [(0, 1), (1, 2), (0, 2)])
