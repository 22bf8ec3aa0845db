import itertools
import math
import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from symbreak.errors import LengthMismatch
from symbreak.families import complete, complete_bipartite, cycle, mycielski_sequence, path, star, wheel
from symbreak.graph import EdgeLabeling, VertexLabeling, build_graph, relabel
from symbreak.group import (
    automorphisms,
    canonical_form,
    canonical_graph,
    compose,
    cycles,
    edge_action_is_faithful,
    inverse,
    is_automorphism,
    labeled_automorphisms,
    labeled_stabilizer_is_trivial,
    orbits,
    preserves_edge_labeling,
    preserves_vertex_labeling,
    preserving_automorphism,
)

from helpers import brute_automorphisms, graphs


def test_orders_of_standard_groups():
    assert automorphisms(cycle(6)).order == 12
    assert automorphisms(complete(4)).order == 24
    assert automorphisms(mycielski_sequence(4)).order == 10
    assert automorphisms(mycielski_sequence(5)).order == 10
    assert automorphisms(complete_bipartite(4, 4)).order == 2 * 24 * 24
    assert automorphisms(wheel(4)).order == 8
    assert automorphisms(complete(10)).order == math.factorial(10)


def test_is_automorphism_examples():
    assert is_automorphism(cycle(4), (1, 2, 3, 0))
    assert is_automorphism(path(3), (2, 1, 0))
    assert not is_automorphism(path(3), (1, 2, 0))
    with pytest.raises(LengthMismatch):
        is_automorphism(path(3), (0, 1))


def test_preserves_examples():
    assert preserves_vertex_labeling((0, 1, 2), VertexLabeling((1, 2, 3)))
    assert not preserves_vertex_labeling((1, 2, 0), VertexLabeling((1, 2, 3)))
    assert preserves_vertex_labeling((1, 2, 3, 0), VertexLabeling((1, 1, 1, 1)))
    p3 = path(3)
    assert preserves_edge_labeling((2, 1, 0), EdgeLabeling.for_graph(p3, [1, 1]))
    assert not preserves_edge_labeling((2, 1, 0), EdgeLabeling.for_graph(p3, [1, 2]))
    k3 = complete(3)
    lab = EdgeLabeling.for_graph(k3, [1, 2, 3])
    for p in itertools.permutations(range(3)):
        if p != (0, 1, 2):
            assert not preserves_edge_labeling(p, lab)


def test_stabilizer_examples():
    c6 = cycle(6)
    assert labeled_stabilizer_is_trivial(c6, VertexLabeling((2, 2, 1, 2, 1, 1)))
    assert not labeled_stabilizer_is_trivial(c6, VertexLabeling((1,) * 6))
    asym = build_graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)])
    assert automorphisms(asym).order == 1
    assert labeled_stabilizer_is_trivial(asym, VertexLabeling((1,) * 7))
    w = preserving_automorphism(c6, VertexLabeling((1,) * 6))
    assert w is not None and is_automorphism(c6, w) and w != tuple(range(6))


def test_orbit_examples():
    assert orbits(automorphisms(cycle(5))) == [[0, 1, 2, 3, 4]]
    assert sorted(orbits(automorphisms(path(3)))) == [[0, 2], [1]]
    assert sorted(orbits(automorphisms(star(3)))) == [[0], [1, 2, 3]]


def test_edge_faithfulness():
    assert not edge_action_is_faithful(complete(2))
    assert not edge_action_is_faithful(build_graph(3, []))
    assert edge_action_is_faithful(build_graph(1, []))
    assert edge_action_is_faithful(path(3))
    # two K_2 components: swapping endpoints of one is invisible on edges, so
    # only maps that move an edge count against an edge labeling
    two_k2 = build_graph(4, [(0, 1), (2, 3)])
    assert not edge_action_is_faithful(two_k2)
    assert preserving_automorphism(two_k2, EdgeLabeling.for_graph(two_k2, [1, 2])) is None
    assert preserving_automorphism(two_k2, EdgeLabeling.for_graph(two_k2, [1, 1])) is not None


@given(graphs(max_n=7))
def test_order_equals_brute_force_count(g):
    a = automorphisms(g)
    assert a.order == len(brute_automorphisms(g))


@given(graphs(max_n=8))
def test_generators_are_automorphisms_and_orbits_divide(g):
    a = automorphisms(g)
    for p in a.generators:
        assert is_automorphism(g, p)
    for orb in a.orbits():
        assert a.order % len(orb) == 0
    assert math.prod(a.basic_orbit_sizes) == a.order


@given(graphs(max_n=6))
def test_elements_form_the_group(g):
    a = automorphisms(g)
    elems = a.elements()
    assert len(set(elems)) == a.order
    assert set(elems) == set(brute_automorphisms(g))
    s = set(elems)
    for p in a.generators:
        for q in elems:
            assert compose(p, q) in s
            assert inverse(q) in s


@given(graphs(max_n=9), st.randoms(use_true_random=False))
def test_isomorphism_invariance(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = relabel(g, perm)
    assert automorphisms(h).order == automorphisms(g).order
    assert canonical_form(h) == canonical_form(g)
    assert canonical_graph(h) == canonical_graph(g)


@given(graphs(max_n=7), graphs(max_n=7))
def test_canonical_form_decides_isomorphism(g, h):
    def nxg(x):
        y = nx.Graph()
        y.add_nodes_from(range(x.n))
        y.add_edges_from(x.edges)
        return y

    same = g.n == h.n and nx.is_isomorphic(nxg(g), nxg(h))
    assert (canonical_form(g) == canonical_form(h)) == same


@given(graphs(max_n=6), st.data())
def test_labeled_group_matches_brute_force(g, data):
    labels = tuple(data.draw(st.lists(st.integers(1, 2), min_size=g.n, max_size=g.n)))
    lab = VertexLabeling(labels)
    ref = [p for p in brute_automorphisms(g) if all(labels[p[v]] == labels[v] for v in range(g.n))]
    assert labeled_automorphisms(g, lab).order == len(ref)
    assert labeled_stabilizer_is_trivial(g, lab) == (len(ref) == 1)


@given(graphs(max_n=6), st.data())
def test_edge_labeled_stabilizer_matches_brute_force(g, data):
    labels = data.draw(st.lists(st.integers(1, 2), min_size=g.m, max_size=g.m))
    lab = EdgeLabeling.for_graph(g, labels)
    idx = {frozenset(e): i for i, e in enumerate(g.edges)}
    moving = []
    for p in brute_automorphisms(g):
        act = [idx[frozenset((p[u], p[v]))] for u, v in g.edges]
        if act != list(range(g.m)) and all(labels[act[i]] == labels[i] for i in range(g.m)):
            moving.append(p)
    assert labeled_stabilizer_is_trivial(g, lab) == (not moving)


def test_cycles_notation():
    assert cycles((1, 2, 0, 3)) == [(0, 1, 2)]


def test_large_random_graph_has_small_group():
    rnd = random.Random(7)
    pairs = [p for p in itertools.combinations(range(40), 2) if rnd.random() < 0.2]
    g = build_graph(40, pairs)
    a = automorphisms(g)
    for p in a.generators:
        assert is_automorphism(g, p)
