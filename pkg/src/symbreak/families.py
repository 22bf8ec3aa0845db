"""Generators for the graph families under study: standard graphs, Mycielskians,
maximal outerplanar graphs, Halin graphs, and exhaustive small-graph lists.

Every enumerator returns pairwise non-isomorphic graphs, deduplicated by
``group.canonical_form`` and emitted in a fixed order (by edge count, then by
canonical certificate).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import BadParams, InvalidTree, SizeLimitExceeded
from .graph import Graph, build_graph, components, is_connected
from .group import canonical_form, canonical_graph

MOP_CAP = 12
HALIN_CAP = 11
MYCIELSKI_CAP = 6
GRAPH_CAP = 8


# -- standard graphs -------------------------------------------------------------


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParams(f"cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return build_graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(p: int, q: int) -> Graph:
    return build_graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def star(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def wheel(k: int) -> Graph:
    """W_k: hub 0 joined to every vertex of the rim cycle 1..k (k + 1 vertices)."""
    if k < 3:
        raise BadParams(f"wheel rim needs at least 3 vertices, got {k}")
    rim = [(1 + i, 1 + (i + 1) % k) for i in range(k)]
    return build_graph(k + 1, rim + [(0, i) for i in range(1, k + 1)])


_STANDARD = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "star": (star, 1),
    "wheel": (wheel, 1),
}


def gen_standard(kind: str, *params: int) -> Graph:
    if kind not in _STANDARD:
        raise BadParams(f"unknown family {kind!r}; choose from {sorted(_STANDARD)}")
    fn, arity = _STANDARD[kind]
    if len(params) != arity or any(int(p) < 1 for p in params):
        raise BadParams(f"{kind} takes {arity} positive integer parameter(s), got {params}")
    return fn(*(int(p) for p in params))


# -- Mycielskian -----------------------------------------------------------------


@dataclass(frozen=True)
class MycielskianMap:
    base_n: int
    v_ids: tuple[int, ...]
    u_ids: tuple[int, ...]
    w_id: int


def mycielskian(g: Graph) -> tuple[Graph, MycielskianMap]:
    """mu(g) numbered v_i = i, u_i = n + i, w = 2n."""
    n = g.n
    edges = list(g.edges)
    for a, b in g.edges:
        edges.append((n + a, b))
        edges.append((a, n + b))
    edges.extend((n + i, 2 * n) for i in range(n))
    mg = build_graph(2 * n + 1, edges)
    return mg, MycielskianMap(n, tuple(range(n)), tuple(range(n, 2 * n)), 2 * n)


def mycielski_sequence(i: int, max_i: int = MYCIELSKI_CAP) -> Graph:
    """M_2 = K_2 and M_i = mu(M_{i-1})."""
    if i < 2:
        raise BadParams(f"Mycielski index starts at 2, got {i}")
    if i > max_i:
        raise SizeLimitExceeded(f"M_{i} exceeds the cap M_{max_i}")
    g = complete(2)
    for _ in range(i - 2):
        g, _ = mycielskian(g)
    return g


# -- dedup -------------------------------------------------------------------------


def dedup(graphs: Iterable[Graph]) -> list[Graph]:
    """Pairwise non-isomorphic representatives in canonical numbering, sorted."""
    seen: dict[tuple, Graph] = {}
    for g in graphs:
        cf = canonical_form(g)
        if cf not in seen:
            seen[cf] = canonical_graph(g)
    return [seen[k] for k in sorted(seen, key=lambda c: (seen[c].n, seen[c].m, repr(c)))]


# -- maximal outerplanar graphs ------------------------------------------------------


@dataclass(frozen=True)
class Mop:
    graph: Graph
    outer_cycle: tuple[int, ...]


def _mop_classes(n: int) -> list[Mop]:
    """MOPs of order n up to isomorphism, each with its outer Hamiltonian cycle.

    Order n+1 arises from order n by a new vertex adjacent to two consecutive
    vertices of the outer cycle; every MOP of order >= 4 has a degree-2 vertex
    whose removal leaves a MOP, so this reaches every class.
    """
    level = [Mop(complete(3), (0, 1, 2))]
    for k in range(3, n):
        found: dict[tuple, Mop] = {}
        for mop in level:
            cyc = mop.outer_cycle
            for i in range(k):
                a, b = cyc[i], cyc[(i + 1) % k]
                g = build_graph(k + 1, list(mop.graph.edges) + [(a, k), (b, k)])
                cf = canonical_form(g)
                if cf not in found:
                    found[cf] = Mop(g, cyc[: i + 1] + (k,) + cyc[i + 1:])
        level = [found[c] for c in sorted(found, key=repr)]
    return level


def enumerate_mops(n: int, max_n: int = MOP_CAP) -> list[Graph]:
    return [m.graph for m in enumerate_mops_with_cycle(n, max_n)]


def enumerate_mops_with_cycle(n: int, max_n: int = MOP_CAP) -> list[Mop]:
    if n < 3:
        raise BadParams(f"a MOP has at least 3 vertices, got {n}")
    if n > max_n:
        raise SizeLimitExceeded(f"MOP enumeration capped at {max_n} vertices")
    out = []
    for mop in _mop_classes(n):
        perm = _canonical_perm(mop.graph)
        g = build_graph(n, ((perm[a], perm[b]) for a, b in mop.graph.edges))
        cyc = tuple(perm[v] for v in mop.outer_cycle)
        out.append(Mop(g, _rotate_min(cyc)))
    out.sort(key=lambda m: m.graph.edges)
    return out


def _canonical_perm(g: Graph) -> tuple[int, ...]:
    from .group import canonical_labeling

    return canonical_labeling(g)


def _rotate_min(cyc: Sequence[int]) -> tuple[int, ...]:
    i = cyc.index(min(cyc))
    fwd = tuple(cyc[i:]) + tuple(cyc[:i])
    back = (fwd[0],) + tuple(reversed(fwd[1:]))
    return min(fwd, back)


def polygon_triangulations(n: int) -> Iterator[frozenset[tuple[int, int]]]:
    """Diagonal sets of every triangulation of the labeled convex n-gon."""

    def tri(lo: int, hi: int) -> Iterator[frozenset]:
        # triangulations of the sub-polygon lo, lo+1, ..., hi
        if hi - lo < 2:
            yield frozenset()
            return
        for apex in range(lo + 1, hi):
            for left in tri(lo, apex):
                for right in tri(apex, hi):
                    diag = set(left) | set(right)
                    if apex - lo > 1:
                        diag.add((lo, apex))
                    if hi - apex > 1:
                        diag.add((apex, hi))
                    yield frozenset(diag)

    for t in tri(0, n - 1):
        yield t


def count_triangulations_up_to_dihedral(n: int) -> int:
    """Orbit count of polygon triangulations under rotations and reflections."""
    reps = set()
    for t in polygon_triangulations(n):
        images = []
        for r in range(n):
            for flip in (False, True):
                f = (lambda x: (r - x) % n) if flip else (lambda x: (x + r) % n)
                images.append(tuple(sorted(tuple(sorted((f(a), f(b)))) for a, b in t)))
        reps.add(min(images))
    return len(reps)


def mop_from_triangulation(n: int, diagonals: Iterable[tuple[int, int]]) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)] + list(diagonals))


# -- trees and Halin graphs ----------------------------------------------------------


@dataclass(frozen=True)
class PlaneTree:
    """A tree with a cyclic order of neighbours at every vertex."""

    tree: Graph
    child_order: tuple[tuple[int, ...], ...]
    root: int

    def validate(self) -> None:
        t = self.tree
        if t.n < 4:
            raise InvalidTree(f"tree needs at least 4 vertices, got {t.n}")
        if t.m != t.n - 1 or not is_connected(t):
            raise InvalidTree("not a tree")
        if any(t.degree(v) == 2 for v in range(t.n)):
            raise InvalidTree("tree has a vertex of degree two")
        for v in range(t.n):
            if sorted(self.child_order[v]) != sorted(t.adj[v]):
                raise InvalidTree(f"rotation at {v} is not a cyclic order of its neighbours")


def plane_tree(tree: Graph, rotation: dict[int, Sequence[int]] | None = None, root: int | None = None) -> PlaneTree:
    """Wrap a tree; vertices missing from ``rotation`` use ascending neighbour order."""
    rotation = rotation or {}
    order = tuple(tuple(rotation.get(v, sorted(tree.adj[v]))) for v in range(tree.n))
    if root is None:
        root = next((v for v in range(tree.n) if tree.degree(v) > 1), 0)
    return PlaneTree(tree, order, root)


@dataclass(frozen=True)
class HalinStructure:
    plane_tree: PlaneTree
    leaf_cycle: tuple[int, ...]
    graph: Graph

    @property
    def tree(self) -> Graph:
        return self.plane_tree.tree

    def internal_vertices(self) -> list[int]:
        return [v for v in range(self.tree.n) if self.tree.degree(v) > 1]

    def to_json_dict(self) -> dict:
        return {
            "tree_edges": [list(e) for e in self.tree.edges],
            "child_order": {str(v): list(o) for v, o in enumerate(self.plane_tree.child_order)},
            "leaf_cycle": list(self.leaf_cycle),
            "root": self.plane_tree.root,
        }


def _boundary_leaves(t: PlaneTree) -> list[int]:
    leaves: list[int] = []
    tree = t.tree

    def walk(v: int, parent: int | None) -> None:
        if tree.degree(v) == 1 and parent is not None:
            leaves.append(v)
            return
        rot = list(t.child_order[v])
        if parent is not None:
            i = rot.index(parent)
            rot = rot[i + 1:] + rot[:i]
        for w in rot:
            walk(w, v)

    walk(t.root, None)
    return leaves


def halin_from_plane_tree(t: PlaneTree) -> HalinStructure:
    t.validate()
    if t.tree.degree(t.root) == 1:
        raise InvalidTree("root must be an internal vertex")
    leaves = _boundary_leaves(t)
    k = len(leaves)
    cyc_edges = [(leaves[i], leaves[(i + 1) % k]) for i in range(k)]
    g = build_graph(t.tree.n, list(t.tree.edges) + cyc_edges)
    return HalinStructure(t, tuple(leaves), g)


def enumerate_trees(n: int) -> list[Graph]:
    """All trees of order n up to isomorphism (leaf addition plus dedup)."""
    if n < 1:
        raise BadParams("tree order must be positive")
    level = [build_graph(1, [])]
    for k in range(1, n):
        level = dedup(build_graph(k + 1, list(t.edges) + [(v, k)]) for t in level for v in range(k))
    return level


def irreducible_trees(n: int) -> list[Graph]:
    """Trees of order n with no vertex of degree two."""
    return [t for t in enumerate_trees(n) if all(d != 2 for d in t.degrees())]


def _multiset_permutations(items: Sequence) -> Iterator[tuple]:
    counts: dict = {}
    for x in items:
        counts[x] = counts.get(x, 0) + 1
    keys = sorted(counts)
    out: list = []

    def rec() -> Iterator[tuple]:
        if len(out) == len(items):
            yield tuple(out)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                out.append(k)
                yield from rec()
                out.pop()
                counts[k] += 1

    return rec()


def _plane_variants(tree: Graph, v: int, parent: int) -> set[tuple]:
    """Distinct rooted plane shapes of the branch at v (nested tuples, leaf = ())."""
    kids = [w for w in sorted(tree.adj[v]) if w != parent]
    if not kids:
        return {()}
    options = [sorted(_plane_variants(tree, w, v)) for w in kids]
    out = set()
    for choice in itertools.product(*options):
        out.update(_multiset_permutations(choice))
    return out


def _tree_from_shape(shape: tuple) -> PlaneTree:
    """Build a plane tree from a cyclic root sequence of child shapes."""
    edges: list[tuple[int, int]] = []
    rotation: dict[int, list[int]] = {}
    counter = itertools.count()

    def build(sh: tuple, parent: int | None) -> int:
        v = next(counter)
        kids = [build(c, v) for c in sh]
        rotation[v] = ([parent] if parent is not None else []) + kids
        for c in kids:
            edges.append((v, c))
        return v

    root = build(shape, None)
    n = len(rotation)
    tree = build_graph(n, edges)
    return PlaneTree(tree, tuple(tuple(rotation[v]) for v in range(n)), root)


def plane_embeddings(tree: Graph) -> list[PlaneTree]:
    """Every combinatorially distinct plane embedding of the tree, rooted at its
    lowest-id internal vertex (rotations of the root sequence identified)."""
    root = next(v for v in range(tree.n) if tree.degree(v) > 1)
    kids = sorted(tree.adj[root])
    options = [sorted(_plane_variants(tree, w, root)) for w in kids]
    seqs = set()
    for choice in itertools.product(*options):
        for perm in _multiset_permutations(choice):
            rots = [perm[i:] + perm[:i] for i in range(len(perm))]
            seqs.add(min(rots))
    return [_tree_from_shape(s) for s in sorted(seqs)]


def enumerate_halin_structures(n: int, max_n: int = HALIN_CAP) -> list[HalinStructure]:
    if n < 4:
        raise BadParams(f"a Halin graph has at least 4 vertices, got {n}")
    if n > max_n:
        raise SizeLimitExceeded(f"Halin enumeration capped at {max_n} vertices")
    found: dict[tuple, HalinStructure] = {}
    for tree in irreducible_trees(n):
        for pt in plane_embeddings(tree):
            h = halin_from_plane_tree(pt)
            cf = canonical_form(h.graph)
            if cf not in found:
                found[cf] = h
    return [found[c] for c in sorted(found, key=lambda c: (found[c].graph.m, repr(c)))]


def enumerate_halin(n: int, max_n: int = HALIN_CAP) -> list[Graph]:
    return [h.graph for h in enumerate_halin_structures(n, max_n)]


# -- exhaustive small graphs -------------------------------------------------------------


def enumerate_graphs(n: int, connected: bool = True, max_n: int = GRAPH_CAP) -> list[Graph]:
    """All graphs of order n up to isomorphism.

    Graphs of order k+1 are obtained from those of order k by adding a vertex
    with every possible neighbourhood; deleting any vertex of a graph shows the
    construction is exhaustive.
    """
    if n > max_n:
        raise SizeLimitExceeded(f"graph enumeration capped at {max_n} vertices")
    if n < 1:
        return []
    level = [build_graph(1, [])]
    for k in range(1, n):
        grown = []
        for g in level:
            for r in range(k + 1):
                for nbrs in itertools.combinations(range(k), r):
                    grown.append(build_graph(k + 1, list(g.edges) + [(v, k) for v in nbrs]))
        level = dedup(grown)
    if connected:
        level = [g for g in level if is_connected(g)]
    return level


def is_tree_without_degree_two(t: Graph) -> bool:
    return t.m == t.n - 1 and len(components(t)) == 1 and all(d != 2 for d in t.degrees())


def k4_core_graph(seed: int, extra_cliques: int | None = None, max_n: int = 20) -> Graph:
    """A connected graph with clique number 4 and maximum degree at least 5.

    A K_4 on 0..3, optionally more K_4 blocks glued on by a shared vertex or a
    bridge, then random pendant trees and paths until the maximum degree
    reaches 5 (no step can create a K_5).
    """
    import random

    rng = random.Random(seed)
    edges = [(a, b) for a, b in itertools.combinations(range(4), 2)]
    n = 4
    blocks = rng.randint(0, 2) if extra_cliques is None else extra_cliques
    for _ in range(blocks):
        anchor = rng.randrange(n)
        if rng.random() < 0.5:
            new = [anchor, n, n + 1, n + 2]
            n += 3
        else:
            new = [n, n + 1, n + 2, n + 3]
            edges.append((anchor, n))
            n += 4
        edges.extend(itertools.combinations(new, 2))
    deg = [0] * n

    def degrees() -> list[int]:
        d = [0] * n
        for a, b in edges:
            d[a] += 1
            d[b] += 1
        return d

    deg = degrees()
    target = rng.randint(5, 6)
    while max(deg) < target or rng.random() < 0.5:
        if n >= max_n:
            break
        anchor = rng.randrange(n)
        length = rng.randint(1, 3)
        prev = anchor
        for _ in range(length):
            if n >= max_n:
                break
            edges.append((prev, n))
            prev = n if rng.random() < 0.6 else prev
            n += 1
        deg = degrees()
    if max(deg) < 5:
        hub = max(range(n), key=lambda v: deg[v])
        while deg[hub] < 5:
            edges.append((hub, n))
            n += 1
            deg = degrees()
    return build_graph(n, edges)
