"""Automorphism groups of small vertex- and edge-coloured graphs.

The search follows the usual individualisation-refinement scheme:

* an ordered partition is refined to an equitable one (colour-refinement on
  neighbour-cell multisets, edge colours included), and every split is
  recorded in a trace;
* a first path individualises the first vertex of the first non-singleton
  cell until the partition is discrete, which fixes a base b_0 .. b_{K-1};
* working from the deepest level upwards, the orbit of b_k in the pointwise
  stabiliser of b_0 .. b_{k-1} is completed by searching, for every candidate
  not yet reached by known generators, a leaf whose traces match the first
  path and whose induced map is an automorphism.

The generators found this way form a strong generating set for the base, so
the group order is the product of the basic orbit lengths.  Labelings are
handled by folding vertex labels into the initial partition and edge labels
into the edge colours.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .errors import LengthMismatch, SizeLimitExceeded
from .graph import EdgeLabeling, Graph, VertexLabeling

Perm = tuple[int, ...]

DEFAULT_MAX_N = 256
DEFAULT_ELEMENT_CAP = 10**6


# -- permutations --------------------------------------------------------------


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """p after q."""
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def is_identity(p: Sequence[int]) -> bool:
    return all(i == x for i, x in enumerate(p))


def support(p: Sequence[int]) -> list[int]:
    return [i for i, x in enumerate(p) if i != x]


def cycles(p: Sequence[int]) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def orbit_partition(n: int, gens: Sequence[Perm]) -> list[list[int]]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for i, x in enumerate(g):
            a, b = find(i), find(x)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def _orbit(point: int, gens: Sequence[Perm]) -> set[int]:
    orb = {point}
    stack = [point]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in orb:
                orb.add(y)
                stack.append(y)
    return orb


def edge_action(g: Graph, p: Perm) -> Perm:
    """The permutation p induces on the edge indices of g."""
    idx = g.edge_index
    out = []
    for u, v in g.edges:
        a, b = p[u], p[v]
        out.append(idx[(a, b) if a < b else (b, a)])
    return tuple(out)


# -- coloured structure and refinement -----------------------------------------


class Structure:
    """A graph with a colour per vertex (any sortable key) and an int per edge."""

    __slots__ = ("n", "adj", "cells0", "colors0")

    def __init__(self, n: int, adj: list[dict[int, int]], vertex_colors: Sequence | None = None):
        self.n = n
        self.adj = adj
        if vertex_colors is None:
            self.cells0 = [list(range(n))] if n else []
            self.colors0 = (0,) if n else ()
        else:
            classes: dict = {}
            for v, c in enumerate(vertex_colors):
                classes.setdefault(c, []).append(v)
            keys = sorted(classes)
            self.cells0 = [classes[k] for k in keys]
            self.colors0 = tuple((k, len(classes[k])) for k in keys)


def structure(g: Graph, vertex_colors: Sequence | None = None,
              edge_colors: Sequence[int] | None = None) -> Structure:
    """edge_colors, when given, is aligned with g.edges."""
    adj: list[dict[int, int]] = [dict.fromkeys(g.adj[v], 0) for v in range(g.n)]
    if edge_colors is not None:
        for (u, v), c in zip(g.edges, edge_colors):
            adj[u][v] = c
            adj[v][u] = c
    return Structure(g.n, adj, vertex_colors)


def refine(adj: list[dict[int, int]], cells: list[list[int]]) -> tuple[list[list[int]], tuple]:
    """Refine an ordered partition until equitable; return it with the split trace."""
    n = len(adj)
    trace = []
    cell_of = [0] * n
    while True:
        for i, c in enumerate(cells):
            for v in c:
                cell_of[v] = i
        new: list[list[int]] = []
        split = False
        for i, c in enumerate(cells):
            if len(c) == 1:
                new.append(c)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in c:
                key = tuple(sorted([(cell_of[w], col) for w, col in adj[v].items()]))
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                new.append(c)
                continue
            split = True
            for key in sorted(groups):
                part = groups[key]
                new.append(part)
                trace.append((i, key, len(part)))
        cells = new
        if not split:
            return cells, tuple(trace)


def _individualize(cells: list[list[int]], ci: int, v: int) -> list[list[int]]:
    rest = [x for x in cells[ci] if x != v]
    return cells[:ci] + [[v], rest] + cells[ci + 1:]


def _target_cell(cells: list[list[int]]) -> int:
    for i, c in enumerate(cells):
        if len(c) > 1:
            return i
    return -1


def _is_auto(adj: list[dict[int, int]], p: Sequence[int]) -> bool:
    for v, nbrs in enumerate(adj):
        img = adj[p[v]]
        if len(img) != len(nbrs):
            return False
        for w, col in nbrs.items():
            if img.get(p[w]) != col:
                return False
    return True


@dataclass
class _Level:
    cells: list[list[int]]
    ci: int
    base: int
    trace: tuple


class _Search:
    def __init__(self, st: Structure):
        self.st = st
        self.adj = st.adj
        cells, _ = refine(st.adj, [list(c) for c in st.cells0])
        levels: list[_Level] = []
        while True:
            ci = _target_cell(cells)
            if ci < 0:
                break
            b = cells[ci][0]
            nxt, tr = refine(st.adj, _individualize(cells, ci, b))
            levels.append(_Level(cells, ci, b, tr))
            cells = nxt
        self.levels = levels
        self.leaf = [c[0] for c in cells]

    def find(self, k: int, c: int) -> Perm | None:
        """An automorphism fixing base[:k] and sending base[k] to c, if any."""
        lv = self.levels[k]
        cells, tr = refine(self.adj, _individualize(lv.cells, lv.ci, c))
        if tr != lv.trace:
            return None
        return self._descend(k + 1, cells)

    def _descend(self, j: int, cells: list[list[int]]) -> Perm | None:
        if j == len(self.levels):
            p = [0] * self.st.n
            for x, cell in zip(self.leaf, cells):
                p[x] = cell[0]
            return tuple(p) if _is_auto(self.adj, p) else None
        lv = self.levels[j]
        for x in cells[lv.ci]:
            nxt, tr = refine(self.adj, _individualize(cells, lv.ci, x))
            if tr == lv.trace:
                found = self._descend(j + 1, nxt)
                if found is not None:
                    return found
        return None


# -- groups --------------------------------------------------------------------


@dataclass(frozen=True)
class AutGroup:
    n: int
    generators: tuple[Perm, ...]
    order: int
    base: tuple[int, ...] = ()
    # strong_generators[k] generate the pointwise stabiliser of base[:k]
    strong_generators: tuple[tuple[Perm, ...], ...] = ()
    basic_orbit_sizes: tuple[int, ...] = ()
    orbit_partition: tuple[tuple[int, ...], ...] = field(default=())

    def orbits(self) -> list[list[int]]:
        return [list(o) for o in self.orbit_partition]

    def is_trivial(self) -> bool:
        return self.order == 1

    def transversals(self) -> list[dict[int, Perm]]:
        out = []
        for k, b in enumerate(self.base):
            gens = self.strong_generators[k]
            reps = {b: identity(self.n)}
            queue = [b]
            for x in queue:
                for s in gens:
                    y = s[x]
                    if y not in reps:
                        reps[y] = compose(s, reps[x])
                        queue.append(y)
            out.append(reps)
        return out

    def elements(self, cap: int = DEFAULT_ELEMENT_CAP) -> list[Perm]:
        """Every group element, built as products of coset representatives."""
        if self.order > cap:
            raise SizeLimitExceeded(f"group order {self.order} exceeds element cap {cap}")
        current = [identity(self.n)]
        for reps in self.transversals():
            current = [compose(p, u) for p in current for u in reps.values()]
        return current

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "order": str(self.order),
            "generators": [list(p) for p in self.generators],
            "orbits": [list(o) for o in self.orbit_partition],
        }


def _check_size(n: int, max_n: int) -> None:
    if n > max_n:
        raise SizeLimitExceeded(f"automorphism search capped at {max_n} vertices, got {n}")


def group_of_structure(st: Structure) -> AutGroup:
    search = _Search(st)
    levels = search.levels
    K = len(levels)
    gens: list[Perm] = []
    sizes = [1] * K
    strong: list[tuple[Perm, ...]] = [()] * K
    for k in reversed(range(K)):
        lv = levels[k]
        orb = _orbit(lv.base, gens)
        for c in lv.cells[lv.ci]:
            if c in orb:
                continue
            p = search.find(k, c)
            if p is not None:
                gens.append(p)
                orb = _orbit(lv.base, gens)
        sizes[k] = len(orb)
        strong[k] = tuple(gens)
    order = math.prod(sizes)
    return AutGroup(
        n=st.n,
        generators=tuple(gens),
        order=order,
        base=tuple(lv.base for lv in levels),
        strong_generators=tuple(strong),
        basic_orbit_sizes=tuple(sizes),
        orbit_partition=tuple(tuple(o) for o in orbit_partition(st.n, gens)),
    )


def nontrivial_automorphism(st: Structure) -> Perm | None:
    """Some non-identity automorphism of the structure, or None if the group is trivial."""
    search = _Search(st)
    for k in reversed(range(len(search.levels))):
        lv = search.levels[k]
        for c in lv.cells[lv.ci][1:]:
            p = search.find(k, c)
            if p is not None:
                return p
    return None


def automorphisms(g: Graph, max_n: int = DEFAULT_MAX_N) -> AutGroup:
    _check_size(g.n, max_n)
    return group_of_structure(structure(g))


def labeled_structure(g: Graph, labeling: VertexLabeling | EdgeLabeling) -> Structure:
    if isinstance(labeling, VertexLabeling):
        if len(labeling.labels) != g.n:
            raise LengthMismatch(f"labeling covers {len(labeling.labels)} vertices, graph has {g.n}")
        return structure(g, vertex_colors=labeling.labels)
    if len(labeling.labels) != g.m or tuple(labeling.edges) != g.edges:
        raise LengthMismatch("edge labeling does not match the graph's edge set")
    return structure(g, edge_colors=labeling.labels)


def labeled_automorphisms(g: Graph, labeling: VertexLabeling | EdgeLabeling,
                          max_n: int = DEFAULT_MAX_N) -> AutGroup:
    _check_size(g.n, max_n)
    return group_of_structure(labeled_structure(g, labeling))


def preserving_automorphism(g: Graph, labeling: VertexLabeling | EdgeLabeling,
                            max_n: int = DEFAULT_MAX_N) -> Perm | None:
    """A non-identity automorphism of g preserving the labeling, if one exists.

    For edge labelings a vertex map counts as non-identity only if it moves
    some edge, so K_2 components never produce a witness.
    """
    _check_size(g.n, max_n)
    st = labeled_structure(g, labeling)
    if isinstance(labeling, EdgeLabeling) and not edge_action_is_faithful(g):
        for p in group_of_structure(st).generators:
            if not is_identity(edge_action(g, p)):
                return p
        return None
    return nontrivial_automorphism(st)


def edge_action_is_faithful(g: Graph) -> bool:
    """Whether every non-identity automorphism moves some edge.

    Only K_2 components (endpoint swap) and pairs of isolated vertices can be
    permuted without moving an edge.
    """
    from .graph import components

    comps = components(g)
    return not any(len(c) == 2 for c in comps) and sum(1 for c in comps if len(c) == 1) <= 1


def labeled_stabilizer_is_trivial(g: Graph, labeling: VertexLabeling | EdgeLabeling,
                                  max_n: int = DEFAULT_MAX_N) -> bool:
    """True iff only the identity preserves the labeling, i.e. it is distinguishing."""
    if isinstance(labeling, VertexLabeling):
        _check_size(g.n, max_n)
        return nontrivial_automorphism(labeled_structure(g, labeling)) is None
    return preserving_automorphism(g, labeling, max_n) is None


def is_automorphism(g: Graph, p: Sequence[int]) -> bool:
    if len(p) != g.n:
        raise LengthMismatch(f"permutation has length {len(p)}, graph has {g.n} vertices")
    if sorted(p) != list(range(g.n)):
        return False
    for u, v in g.edges:
        if p[v] not in g.adj[p[u]]:
            return False
    return True


def preserves_vertex_labeling(p: Sequence[int], labeling: VertexLabeling) -> bool:
    labels = labeling.labels
    if len(p) != len(labels):
        raise LengthMismatch(f"permutation length {len(p)} vs {len(labels)} labels")
    return all(labels[p[v]] == labels[v] for v in range(len(p)))


def preserves_edge_labeling(p: Sequence[int], labeling: EdgeLabeling) -> bool:
    ends = {x for e in labeling.edges for x in e}
    if ends and max(ends) >= len(p):
        raise LengthMismatch("permutation shorter than the labeled vertex range")
    lookup = labeling.as_dict()
    for (u, v), lab in lookup.items():
        a, b = p[u], p[v]
        if lookup.get((a, b) if a < b else (b, a)) != lab:
            return False
    return True


def orbits(a: AutGroup) -> list[list[int]]:
    return a.orbits()


# -- canonical form ------------------------------------------------------------


def canonical_form(g: Graph, vertex_colors: Sequence | None = None,
                   edge_colors: Sequence[int] | None = None) -> tuple:
    """An isomorphism-invariant certificate: equal iff the coloured graphs are isomorphic."""
    cert, _ = _canonical(structure(g, vertex_colors, edge_colors))
    return cert


def canonical_labeling(g: Graph) -> Perm:
    """perm[v] = position of v in the canonical order."""
    _, leaf = _canonical(structure(g))
    perm = [0] * g.n
    for pos, v in enumerate(leaf):
        perm[v] = pos
    return tuple(perm)


def canonical_graph(g: Graph) -> Graph:
    from .graph import relabel

    return relabel(g, canonical_labeling(g))


def _leaf_cert(adj: list[dict[int, int]], leaf: list[int]) -> tuple:
    pos = {v: i for i, v in enumerate(leaf)}
    return tuple(sorted((pos[u], pos[w], c) for u in leaf for w, c in adj[u].items() if pos[u] < pos[w]))


def _canonical(st: Structure) -> tuple[tuple, list[int]]:
    adj = st.adj
    cells, root_trace = refine(adj, [list(c) for c in st.cells0])
    best_traces: list[tuple] = []
    best: dict = {"cert": None, "leaf": None}
    autos: list[Perm] = []

    def visit(cells: list[list[int]], traces: list[tuple], prefix: list[int]) -> None:
        depth = len(traces)
        if best["cert"] is not None:
            mine, theirs = tuple(traces), tuple(best_traces[:depth])
            if mine < theirs:
                return
        ci = _target_cell(cells)
        if ci < 0:
            leaf = [c[0] for c in cells]
            cert = (tuple(traces), _leaf_cert(adj, leaf))
            if best["cert"] is None or cert > best["cert"]:
                best["cert"], best["leaf"] = cert, leaf
                best_traces[:] = traces
            elif cert == best["cert"]:
                p = [0] * st.n
                for x, y in zip(best["leaf"], leaf):
                    p[x] = y
                autos.append(tuple(p))
            return
        done: list[int] = []
        for x in cells[ci]:
            if done:
                fixing = [a for a in autos if all(a[v] == v for v in prefix)]
                if fixing and any(y in _orbit(x, fixing) for y in done):
                    continue
            done.append(x)
            nxt, tr = refine(adj, _individualize(cells, ci, x))
            visit(nxt, traces + [tr], prefix + [x])

    visit(cells, [], [])
    cert = (st.n, st.colors0, root_trace, best["cert"])
    return cert, best["leaf"]
