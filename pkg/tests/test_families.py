import itertools

import networkx as nx
import pytest

from symbreak.errors import BadParams, InvalidTree, SizeLimitExceeded
from symbreak.families import (
    complete,
    complete_bipartite,
    count_triangulations_up_to_dihedral,
    cycle,
    enumerate_graphs,
    enumerate_halin,
    enumerate_halin_structures,
    enumerate_mops,
    enumerate_mops_with_cycle,
    enumerate_trees,
    gen_standard,
    halin_from_plane_tree,
    irreducible_trees,
    k4_core_graph,
    mycielski_sequence,
    mycielskian,
    path,
    plane_tree,
    polygon_triangulations,
    star,
    wheel,
)
from symbreak.graph import (
    build_graph,
    chromatic_number,
    clique_number,
    hamiltonian_cycles,
    induced_subgraph,
    is_connected,
    max_degree,
)
from symbreak.group import canonical_form
from hypothesis import given

from helpers import graphs

MOP_COUNTS = {3: 1, 4: 1, 5: 1, 6: 3, 7: 4, 8: 12, 9: 27, 10: 82}
HALIN_COUNTS = {4: 1, 5: 1, 6: 2, 7: 2, 8: 4, 9: 6}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def nxg(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def pairwise_non_isomorphic(gs):
    return len({canonical_form(g) for g in gs}) == len(gs)


def test_standard_generators():
    assert cycle(5).m == 5
    w4 = wheel(4)
    assert (w4.n, w4.m) == (5, 8)
    assert complete_bipartite(3, 3).m == 9
    assert gen_standard("wheel", 4) == w4
    with pytest.raises(BadParams):
        cycle(2)
    with pytest.raises(BadParams):
        gen_standard("nonsense", 3)


def test_mycielskian_examples():
    g, mmap = mycielskian(cycle(5))
    assert (g.n, g.m) == (11, 20)
    c5, _ = mycielskian(complete(2))
    assert canonical_form(c5) == canonical_form(cycle(5))
    k1, mmap = mycielskian(build_graph(1, []))
    assert (k1.n, k1.m) == (3, 1) and k1.has_edge(mmap.u_ids[0], mmap.w_id)
    assert canonical_form(mycielski_sequence(3)) == canonical_form(cycle(5))
    assert (mycielski_sequence(4).n, mycielski_sequence(4).m) == (11, 20)
    assert (mycielski_sequence(5).n, mycielski_sequence(5).m) == (23, 71)
    with pytest.raises(SizeLimitExceeded):
        mycielski_sequence(7)


@given(graphs(max_n=8))
def test_mycielskian_size_law_and_triangle_freeness(g):
    mg, mmap = mycielskian(g)
    assert (mg.n, mg.m) == (2 * g.n + 1, 3 * g.m + g.n)
    assert mmap.v_ids == tuple(range(g.n)) and mmap.w_id == 2 * g.n
    if clique_number(g)[0] <= 2:
        assert clique_number(mg)[0] <= 2
    if g.m and g.n <= 6:
        assert chromatic_number(mg) == chromatic_number(g) + 1


@pytest.mark.parametrize("n", range(3, 11))
def test_mop_counts_match_dihedral_oracle(n):
    mops = enumerate_mops(n)
    assert len(mops) == MOP_COUNTS[n] == count_triangulations_up_to_dihedral(n)
    assert pairwise_non_isomorphic(mops)


def test_catalan_triangulation_counts():
    assert [sum(1 for _ in polygon_triangulations(n)) for n in range(3, 10)] == [1, 2, 5, 14, 42, 132, 429]


def _is_outerplanar(g):
    h = nxg(g)
    h.add_edges_from((g.n, v) for v in range(g.n))
    return nx.check_planarity(h)[0]


@pytest.mark.parametrize("n", range(3, 8))
def test_mops_match_outerplanarity_oracle(n):
    # a MOP is an outerplanar graph with 2n - 3 edges; recognise them among all graphs
    ref = [g for g in enumerate_graphs(n) if g.m == 2 * n - 3 and _is_outerplanar(g)]
    assert {canonical_form(g) for g in enumerate_mops(n)} == {canonical_form(g) for g in ref}


@pytest.mark.parametrize("n", range(3, 10))
def test_mop_invariants(n):
    for mop in enumerate_mops_with_cycle(n):
        g = mop.graph
        assert g.m == 2 * n - 3
        assert len(hamiltonian_cycles(g)) == 1
        cyc = mop.outer_cycle
        assert all(g.has_edge(cyc[i], cyc[(i + 1) % n]) for i in range(n))


def test_tree_counts_match_networkx():
    assert len(enumerate_trees(1)) == 1
    for n in range(2, 12):
        assert len(enumerate_trees(n)) == sum(1 for _ in nx.nonisomorphic_trees(n))
    assert [len(irreducible_trees(n)) for n in range(4, 12)] == [1, 1, 2, 2, 4, 5, 10, 14]


def test_halin_examples():
    k4 = halin_from_plane_tree(plane_tree(star(3)))
    assert canonical_form(k4.graph) == canonical_form(complete(4))
    for k in range(3, 9):
        h = halin_from_plane_tree(plane_tree(star(k)))
        assert canonical_form(h.graph) == canonical_form(wheel(k))
    assert [canonical_form(g) for g in enumerate_halin(4)] == [canonical_form(complete(4))]
    assert [canonical_form(g) for g in enumerate_halin(5)] == [canonical_form(wheel(4))]
    forms7 = {canonical_form(g) for g in enumerate_halin(7)}
    assert canonical_form(wheel(6)) in forms7
    double_star = build_graph(7, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (1, 6)])
    h = halin_from_plane_tree(plane_tree(double_star))
    assert canonical_form(h.graph) in forms7
    assert hamiltonian_cycles(h.graph, limit=1)


def test_spider_is_not_a_halin_tree():
    spider = build_graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    with pytest.raises(InvalidTree):
        halin_from_plane_tree(plane_tree(spider))
    with pytest.raises(InvalidTree):
        halin_from_plane_tree(plane_tree(path(3)))
    with pytest.raises(InvalidTree):
        halin_from_plane_tree(plane_tree(star(3), rotation={0: (1, 2)}))


def _is_halin_brute(g):
    if not nx.check_planarity(nxg(g))[0]:
        return False
    edges = list(g.edges)
    for tree_edges in itertools.combinations(edges, g.n - 1):
        t = build_graph(g.n, tree_edges)
        if not is_connected(t) or any(t.degree(v) == 2 for v in range(g.n)):
            continue
        leaves = {v for v in range(g.n) if t.degree(v) == 1}
        rest = nx.Graph([tuple(e) for e in edges if e not in set(tree_edges)])
        if set(rest.nodes) == leaves and len(rest) >= 3 and nx.is_connected(rest) \
                and all(d == 2 for _, d in rest.degree()):
            return True
    return False


@pytest.mark.parametrize("n", range(4, 8))
def test_halin_enumeration_matches_recognition_oracle(n):
    ref = {canonical_form(g) for g in enumerate_graphs(n)
           if n + 1 <= g.m <= 2 * n - 2 and _is_halin_brute(g)}
    assert {canonical_form(g) for g in enumerate_halin(n)} == ref


@pytest.mark.parametrize("n", range(4, 10))
def test_halin_invariants(n):
    structs = enumerate_halin_structures(n)
    assert len(structs) == HALIN_COUNTS[n]
    assert pairwise_non_isomorphic([h.graph for h in structs])
    for h in structs:
        g = h.graph
        assert nx.check_planarity(nxg(g))[0]
        assert nx.node_connectivity(nxg(g)) >= 3
        assert hamiltonian_cycles(g, limit=1)
        for v in range(g.n):
            rest = induced_subgraph(g, [u for u in range(g.n) if u != v])
            assert hamiltonian_cycles(rest, limit=1), (n, v)
        lc = h.leaf_cycle
        assert all(g.has_edge(lc[i], lc[(i + 1) % len(lc)]) for i in range(len(lc)))
        assert set(lc) == {v for v in range(n) if h.tree.degree(v) == 1}


def test_halin_json_shape():
    h = enumerate_halin_structures(6)[0]
    d = h.to_json_dict()
    assert set(d) >= {"tree_edges", "child_order", "leaf_cycle"}
    assert len(d["tree_edges"]) == 5


@pytest.mark.parametrize("n", range(1, 8))
def test_connected_graph_counts(n):
    gs = enumerate_graphs(n)
    assert len(gs) == CONNECTED_COUNTS[n]
    assert all(is_connected(g) for g in gs)


@pytest.mark.parametrize("n", range(1, 6))
def test_graph_enumeration_matches_edge_subset_oracle(n):
    pairs = list(itertools.combinations(range(n), 2))
    ref = set()
    for r in range(len(pairs) + 1):
        for es in itertools.combinations(pairs, r):
            g = build_graph(n, es)
            if is_connected(g):
                ref.add(canonical_form(g))
    assert {canonical_form(g) for g in enumerate_graphs(n)} == ref


def test_enumerations_are_deterministic():
    assert enumerate_mops(8) == enumerate_mops(8)
    assert enumerate_halin(8) == enumerate_halin(8)
    assert enumerate_graphs(5) == enumerate_graphs(5)


@pytest.mark.parametrize("seed", range(40))
def test_k4_core_graphs(seed):
    g = k4_core_graph(seed)
    assert is_connected(g)
    assert clique_number(g)[0] == 4
    assert max_degree(g) >= 5
