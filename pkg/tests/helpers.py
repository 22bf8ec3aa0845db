"""Hypothesis strategies and brute-force oracles shared by the tests."""

import itertools

from hypothesis import strategies as st

from symbreak.graph import Graph, build_graph


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [p for p, keep in zip(pairs, mask) if keep])


def brute_automorphisms(g: Graph) -> list[tuple[int, ...]]:
    edges = {frozenset(e) for e in g.edges}
    return [p for p in itertools.permutations(range(g.n))
            if all(frozenset((p[u], p[v])) in edges for u, v in g.edges)]


def brute_distinguishing(g: Graph, kind: str) -> int:
    """Least d with a labeling fixed only by the identity, from the full
    automorphism list and all d**N labelings."""
    autos = [p for p in brute_automorphisms(g) if list(p) != list(range(g.n))]
    if kind == "edge":
        idx = {frozenset(e): i for i, e in enumerate(g.edges)}
        acts = []
        for p in autos:
            q = tuple(idx[frozenset((p[u], p[v]))] for u, v in g.edges)
            if q != tuple(range(g.m)):
                acts.append(q)
        N = g.m
    else:
        acts, N = autos, g.n
    d = 1
    while True:
        for lab in itertools.product(range(d), repeat=N):
            if all(any(lab[q[i]] != lab[i] for i in range(N)) for q in acts):
                return d
        d += 1
