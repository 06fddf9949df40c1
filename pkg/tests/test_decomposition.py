import random
from itertools import product

import pytest

from hyperpebble.decomposition import (MapDecomposition, MixedDecomposition,
                                       check_lovasz_recski, check_maps_after_adding,
                                       count_multisets, is_k_arborescence, k_map_decompose,
                                       verify_map_decomposition, verify_maps_and_trees)
from hyperpebble.errors import CapExceeded, HypergraphError, NotTight
from hyperpebble.generators import generate_tight, min_n1
from hyperpebble.hypercore import Hypergraph, SparsityParams
from hyperpebble.oracle import is_tight_bruteforce

# two maps on a 3-graph: each vertex is the tail of one edge in each map
TWO_MAPS = Hypergraph(3, [(0, 1, 2), (0, 1), (1, 2), (0, 2), (0, 1, 2), (1,)])


def test_two_maps_on_a_3_graph():
    d = k_map_decompose(TWO_MAPS, 2)
    assert verify_map_decomposition(TWO_MAPS, d)
    assert sorted(d.assignment) == [1, 1, 1, 2, 2, 2]


def test_loops_form_one_map():
    G = Hypergraph(3, [(0,), (1,), (2,)])
    d = k_map_decompose(G, 1)
    assert d.assignment == (1, 1, 1) and d.tails == (0, 1, 2)


def test_triangle_map_is_cyclic(triangle):
    d = k_map_decompose(triangle, 1)
    assert verify_map_decomposition(triangle, d)
    assert sorted(d.tails) == [0, 1, 2]


def test_non_tight_input_raises(triangle):
    with pytest.raises(NotTight):
        k_map_decompose(triangle.sub([0, 1]), 1)
    with pytest.raises(NotTight):
        k_map_decompose(triangle, 2)


def test_verifier_rejects_bad_decompositions(triangle):
    d = k_map_decompose(triangle, 1)
    t = list(d.tails)
    # swap the tails of edges 0 and 1 (they share vertex 1)
    swapped = MapDecomposition(1, d.assignment, (t[1], t[0], t[2]))
    assert not verify_map_decomposition(triangle, swapped)
    assert not verify_map_decomposition(Hypergraph(2), MapDecomposition(1, (), ()))
    assert not verify_map_decomposition(triangle, MapDecomposition(1, (1, 1), (0, 1)))
    assert not verify_map_decomposition(triangle, MapDecomposition(1, (2, 1, 1), d.tails))


def test_arborescences():
    assert is_k_arborescence(Hypergraph(4, [(0, 1), (1, 2), (1, 3)]), 1)
    assert is_k_arborescence(Hypergraph(5, [(0, 1, 2), (0, 1, 2), (0, 2, 3), (0, 1, 4)]), 1)
    assert not is_k_arborescence(Hypergraph(4, [(0, 1), (1, 2), (0, 2)]), 1)


def test_maps_and_trees_verifier(triangle):
    tree = Hypergraph(3, [(0, 1), (1, 2)])
    assert verify_maps_and_trees(tree, 1, 1, MixedDecomposition(((0, 1),), ()))
    assert verify_maps_and_trees(triangle, 1, 0, MixedDecomposition((), ((0, 1, 2),)))
    assert not verify_maps_and_trees(tree, 1, 1, MixedDecomposition(((0,),), ()))
    assert not verify_maps_and_trees(tree, 1, 1, MixedDecomposition(((0, 1, 1),), ()))
    assert not verify_maps_and_trees(tree, 1, 1, MixedDecomposition((), ((0, 1),)))
    with pytest.raises(HypergraphError):
        verify_maps_and_trees(tree, 1, 2, MixedDecomposition(((0, 1),), ()))


def _find_mixed(G, k, l):
    for labels in product(range(k), repeat=G.m):
        parts = [tuple(i for i in range(G.m) if labels[i] == j) for j in range(k)]
        d = MixedDecomposition(tuple(parts[:l]), tuple(parts[l:]))
        if verify_maps_and_trees(G, k, l, d):
            return d
    return None


def test_maps_and_trees_exist_for_small_tight_graphs():
    for s, k, l in ((2, 1, 1), (2, 2, 1), (2, 2, 2), (3, 2, 1), (3, 2, 2), (2, 2, 0)):
        for n in range(min_n1(s, k, l), 6):
            if k * n - l > 10:
                continue
            G = generate_tight(n, s, k, l, seed=n)
            assert _find_mixed(G, k, l) is not None, (s, k, l, n)


def test_every_verified_map_decomposition_is_tight():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(1, 5)
        k = rng.randint(1, 2)
        edges, tails, assignment = [], [], []
        for j in range(1, k + 1):
            for v in range(n):
                size = rng.randint(1, min(3, n))
                others = rng.sample([u for u in range(n) if u != v], size - 1)
                edges.append(tuple(sorted(others + [v])))
                tails.append(v)
                assignment.append(j)
        G = Hypergraph(n, edges)
        d = MapDecomposition(k, tuple(assignment), tuple(tails))
        assert verify_map_decomposition(G, d)
        assert is_tight_bruteforce(G, SparsityParams(k, 0))


def test_count_multisets():
    assert count_multisets([1, 1, 1], 2) == 3
    assert count_multisets([2, 1], 2) == 2
    assert count_multisets([], 0) == 1


def test_lovasz_recski_zero_additions():
    tree = Hypergraph(3, [(0, 1), (1, 2)])
    r = check_lovasz_recski(tree, SparsityParams(1, 1))
    assert r.passed and r.tested == 1 and r.added == 0


def test_lovasz_recski_on_laman_graphs():
    for n in range(2, 7):
        G = generate_tight(n, 2, 2, 3, seed=1)
        r = check_lovasz_recski(G, SparsityParams(2, 3))
        assert r.passed and r.tested > 0


def test_checks_need_tight_input(triangle):
    with pytest.raises(NotTight):
        check_lovasz_recski(triangle.sub([0]), SparsityParams(1, 1))
    with pytest.raises(HypergraphError):
        check_lovasz_recski(triangle, SparsityParams(1, 0))
    with pytest.raises(NotTight):
        check_maps_after_adding(triangle.sub([0]), SparsityParams(1, 0))


def test_maps_after_adding_examples(triangle):
    r = check_maps_after_adding(triangle, SparsityParams(1, 0))
    assert r.passed and r.tested == 1
    G = Hypergraph(3, [(0, 1), (1, 2), (0, 2), (0, 1)])
    r = check_maps_after_adding(G, SparsityParams(2, 2))
    assert r.passed and r.tested > 10


def test_sampled_mode_is_deterministic():
    G = generate_tight(5, 2, 2, 3, seed=4)
    a = check_maps_after_adding(G, SparsityParams(2, 3), mode="sampled", trials=50, seed=9)
    b = check_maps_after_adding(G, SparsityParams(2, 3), mode="sampled", trials=50, seed=9)
    assert a == b and a.tested == 50


def test_maps_after_adding_counterexample_for_3_2_5():
    G = Hypergraph(3, [(0, 1, 2)])
    r = check_maps_after_adding(G, SparsityParams(2, 5))
    assert not r.passed
    assert [(0,), (0,), (1,), (1,), (0, 1)] in r.counterexamples


def test_uniform_additions_avoid_that_counterexample():
    G = Hypergraph(3, [(0, 1, 2)])
    assert check_maps_after_adding(G, SparsityParams(2, 5), dims=[3]).passed


def test_cap_and_mode_validation():
    G = generate_tight(5, 2, 2, 3, seed=0)
    with pytest.raises(CapExceeded):
        check_maps_after_adding(G, SparsityParams(2, 3), cap=10)
    with pytest.raises(HypergraphError):
        check_maps_after_adding(G, SparsityParams(2, 3), mode="other")
