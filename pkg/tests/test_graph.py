import networkx as nx
import pytest
from hypothesis import given

from symbreak.errors import Disconnected, OutOfRange, SelfLoop
from symbreak.families import complete, complete_bipartite, cycle, path, star, wheel
from symbreak.graph import (
    Edge,
    EdgeLabeling,
    VertexLabeling,
    bfs_tree,
    build_graph,
    chromatic_number,
    clique_number,
    components,
    hamiltonian_cycles,
    has_hamiltonian_path,
    has_k2_component,
    is_r_thin,
    relabel,
)

from helpers import graphs


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_build_graph_normalizes_and_dedups():
    g = build_graph(3, [(1, 0), (0, 1), (2, 1)])
    assert g.edges == (Edge(0, 1), Edge(1, 2))
    assert g.m == 2 and g.degrees() == [1, 2, 1]


def test_build_graph_errors():
    with pytest.raises(OutOfRange):
        build_graph(3, [(0, 3)])
    with pytest.raises(SelfLoop):
        build_graph(3, [(1, 1)])


@given(graphs())
def test_adjacency_symmetric_and_edges_sorted(g):
    for u in range(g.n):
        for v in g.adj[u]:
            assert u in g.adj[v]
    assert list(g.edges) == sorted(g.edges)
    assert sum(g.degrees()) == 2 * g.m


def test_edge_labeling_keys_and_roundtrip():
    g = cycle(4)
    lab = EdgeLabeling.for_graph(g, [1, 2, 1, 1])
    assert lab.to_json_dict() == {"0-1": 1, "0-3": 2, "1-2": 1, "2-3": 1}
    assert EdgeLabeling.from_mapping(g, lab.to_json_dict()) == lab
    v = VertexLabeling((1, 2, 2))
    assert v.label_count == 2 and v.to_json_dict() == {"0": 1, "1": 2, "2": 2}


def test_r_thin_examples():
    assert not is_r_thin(complete_bipartite(2, 3))
    assert is_r_thin(cycle(5))
    assert not is_r_thin(cycle(4))
    assert not is_r_thin(star(3))


def test_components_and_k2():
    g = build_graph(5, [(0, 1), (2, 3), (3, 4)])
    assert components(g) == [[0, 1], [2, 3, 4]]
    assert has_k2_component(g)
    assert not has_k2_component(path(3))


@given(graphs())
def test_clique_number_matches_networkx(g):
    w, clique = clique_number(g)
    ref = max((len(c) for c in nx.find_cliques(to_nx(g))), default=0)
    assert w == ref
    assert all(g.has_edge(a, b) for i, a in enumerate(clique) for b in clique[i + 1:])


def test_chromatic_examples():
    assert chromatic_number(wheel(5)) == 4
    assert chromatic_number(wheel(4)) == 3
    assert chromatic_number(cycle(7)) == 3
    assert chromatic_number(complete(5)) == 5


def test_hamiltonian_cycles_counts():
    assert len(hamiltonian_cycles(complete(5))) == 12
    assert len(hamiltonian_cycles(cycle(7))) == 1
    assert hamiltonian_cycles(complete_bipartite(2, 3)) == []
    assert has_hamiltonian_path(path(6))
    assert not has_hamiltonian_path(star(3))


@given(graphs(min_n=1, max_n=7))
def test_hamiltonicity_agrees_with_brute_force(g):
    import itertools
    brute = any(all(g.has_edge(p[i], p[(i + 1) % g.n]) for i in range(g.n))
                for p in itertools.permutations(range(g.n)) if p and p[0] == 0) if g.n >= 3 else False
    assert bool(hamiltonian_cycles(g, limit=1)) == brute


@given(graphs(min_n=1, max_n=9))
def test_bfs_levels_are_distances(g):
    h = to_nx(g)
    if not nx.is_connected(h):
        with pytest.raises(Disconnected):
            bfs_tree(g, 0)
        return
    t = bfs_tree(g, 0)
    dist = nx.single_source_shortest_path_length(h, 0)
    assert [t.level[v] for v in range(g.n)] == [dist[v] for v in range(g.n)]
    for v in range(1, g.n):
        assert g.has_edge(v, t.parent[v]) and t.level[t.parent[v]] == t.level[v] - 1


@given(graphs(max_n=7))
def test_relabel_preserves_degree_sequence(g):
    perm = list(reversed(range(g.n)))
    h = relabel(g, perm)
    assert sorted(h.degrees()) == sorted(g.degrees())
    assert h.m == g.m


def test_spec_examples_graph_module():
    from symbreak.families import mycielski_sequence
    from symbreak.graph import max_degree, open_neighborhood

    assert build_graph(3, [(0, 1), (1, 2), (0, 2)]).m == 3
    assert build_graph(1, []).m == 0
    assert build_graph(4, [(0, 1), (0, 1), (1, 2)]).m == 2
    assert max_degree(cycle(6)) == 2 and max_degree(complete(5)) == 4 and max_degree(star(7)) == 7
    groetzsch = mycielski_sequence(4)
    assert clique_number(complete(4))[0] == 4
    assert clique_number(cycle(7))[0] == 2
    assert clique_number(groetzsch)[0] == 2
    assert chromatic_number(cycle(5)) == 3
    assert chromatic_number(groetzsch) == 4
    assert chromatic_number(complete(4)) == 4
    assert open_neighborhood(cycle(4), 0) == {1, 3}
    assert open_neighborhood(complete(3), 2) == {0, 1}
    assert open_neighborhood(star(3), 0) == {1, 2, 3}
    assert is_r_thin(mycielski_sequence(2))
    assert len(hamiltonian_cycles(cycle(6))) == 1
    assert len(hamiltonian_cycles(complete(4))) == 3
    assert hamiltonian_cycles(path(4)) == []
    assert has_hamiltonian_path(path(7))
    t = bfs_tree(cycle(4), 0)
    assert t.level == {0: 0, 1: 1, 3: 1, 2: 2}
    assert bfs_tree(complete(4), 0).level == {0: 0, 1: 1, 2: 1, 3: 1}
    assert bfs_tree(path(5), 0).level == {k: k for k in range(5)}
