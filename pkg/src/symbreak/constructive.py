"""Symmetry-breaking labelings built by explicit procedures.

Each builder returns a :class:`CertifiedLabeling`: the labeling is always
re-checked with ``labeled_stabilizer_is_trivial`` before it is handed back,
and a labeling that fails the check raises ``ConstructionFailed`` instead of
being returned.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Literal, Sequence

from .distinguish import distinguishing_index, distinguishing_number, seeded_search
from .errors import (
    BaseNotDistinguishing,
    ConstructionFailed,
    K3Exception,
    K4Exception,
    NotRThin,
    PreconditionFailed,
    TooSmall,
    UndefinedForK2Component,
)
from .families import (
    HalinStructure,
    MycielskianMap,
    cycle,
    mycielski_sequence,
    mycielskian,
)
from .graph import (
    Edge,
    EdgeLabeling,
    Graph,
    VertexLabeling,
    bfs_tree,
    clique_number,
    hamiltonian_cycles,
    has_k2_component,
    is_connected,
    is_r_thin,
    max_degree,
)
from .group import labeled_stabilizer_is_trivial, preserving_automorphism, support

Labeling = VertexLabeling | EdgeLabeling


@dataclass(frozen=True)
class CertifiedLabeling:
    graph: Graph
    labeling: Labeling
    labels_used: int
    theorem: str
    bound: int
    certified: bool

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "labels_used": self.labels_used,
            "labeling": self.labeling.to_json_dict(),
            "certified": self.certified,
        }


def _certify(g: Graph, labeling: Labeling, theorem: str, bound: int) -> CertifiedLabeling:
    if not labeled_stabilizer_is_trivial(g, labeling):
        raise ConstructionFailed(f"{theorem}: labeling is preserved by a non-identity automorphism")
    used = labeling.label_count
    if used > bound:
        raise ConstructionFailed(f"{theorem}: used {used} labels, bound is {bound}")
    return CertifiedLabeling(g, labeling, used, theorem, bound, True)


# -- cycles ----------------------------------------------------------------------


def cycle_pattern(n: int, labels: int | None = None) -> list[int]:
    """Distinguishing labels for positions 0..n-1 of an n-cycle.

    Two labels (2 at positions 0, 1, 3) for n >= 6: the circular gaps between
    the 2s are 1, 2 and n-3, which no rotation or reflection preserves.
    Otherwise 1, 2, 3 followed by 1s.
    """
    if n < 3:
        raise TooSmall(f"cycle needs at least 3 vertices, got {n}")
    if labels is None:
        labels = 2 if n >= 6 else 3
    if labels == 2:
        if n < 6:
            raise TooSmall(f"C_{n} has no distinguishing 2-labeling")
        return [2 if i in (0, 1, 3) else 1 for i in range(n)]
    return [1, 2, 3] + [1] * (n - 3)


def cycle_vertex_labeling(n: int) -> CertifiedLabeling:
    g = cycle(n)
    pat = cycle_pattern(n)
    return _certify(g, VertexLabeling(tuple(pat)), "cycle-vertex", max(pat))


def cycle_edge_labeling(n: int) -> CertifiedLabeling:
    g = cycle(n)
    pat = cycle_pattern(n)
    # edge i of the cycle joins i and i+1; C_n's edges are again permuted dihedrally
    lab = {Edge.of(i, (i + 1) % n): pat[i] for i in range(n)}
    return _certify(g, EdgeLabeling.for_graph(g, lab), "cycle-edge", max(pat))


# -- clique number four, maximum degree at least five ------------------------------------


def _children(tree) -> dict[int, list[int]]:
    kids: dict[int, list[int]] = {v: [] for v in tree.order}
    for v in tree.order:
        p = tree.parent[v]
        if p is not None:
            kids[p].append(v)
    return kids


def _duplicate_core(g: Graph, labels: dict[int, int], core: tuple[int, ...], delta: int) -> tuple[int, ...] | None:
    """Another K_4 whose labels are exactly {1, 2, 3, delta-1}."""
    want = sorted([1, 2, 3, delta - 1])
    for a in range(g.n):
        for b in sorted(g.adj[a]):
            if b <= a:
                continue
            common = sorted(w for w in g.adj[a] & g.adj[b] if w > b)
            for c, d in itertools.combinations(common, 2):
                if d in g.adj[c]:
                    q = (a, b, c, d)
                    if q != core and sorted(labels[x] for x in q) == want:
                        return q
    return None


def clique4_bfs_labeling(g: Graph) -> CertifiedLabeling:
    """At most Delta-1 labels for a connected graph with clique number 4 and Delta >= 5.

    A K_4 core v0..v3 gets labels Delta-1, 1, 2, 3; the rest of N(v0) gets
    distinct labels from {1..Delta-2} minus {3}; walking the BFS tree from v0,
    the children of every vertex get pairwise distinct labels from
    {1..Delta-1}.  While another K_4 repeats the core's label set, or a
    non-identity automorphism still preserves the labeling, the labels on the
    children of one offending vertex's BFS parent are replaced by the next
    injective assignment.
    """
    if not is_connected(g):
        raise PreconditionFailed("graph must be connected")
    omega, core = clique_number(g)
    delta = max_degree(g)
    if omega != 4:
        raise PreconditionFailed(f"clique number is {omega}, need 4")
    if delta < 5:
        raise PreconditionFailed(f"maximum degree is {delta}, need at least 5")
    v0, v1, v2, v3 = core
    tree = bfs_tree(g, v0)
    kids = _children(tree)
    labels = {v0: delta - 1, v1: 1, v2: 2, v3: 3}
    pool = [x for x in range(1, delta - 1) if x != 3]
    for w, x in zip([w for w in sorted(g.adj[v0]) if w not in labels], pool):
        labels[w] = x

    for x in tree.order:
        if x == v0:
            continue
        nxt = tree.level[x] + 1
        # prefer labels not already on x's other neighbours one level down
        taken = {labels[w] for w in g.adj[x] if w in labels and tree.level[w] == nxt}
        order = [c for c in range(1, delta) if c not in taken] + [c for c in range(1, delta) if c in taken]
        for w, c in zip(kids[x], order):
            labels[w] = c

    cursors: dict[int, object] = {}
    limit = g.n * math.factorial(delta)
    attempts = 0
    while True:
        dup = _duplicate_core(g, labels, core, delta)
        if dup is not None:
            culprits = list(dup)
        else:
            lab = VertexLabeling(tuple(labels[v] for v in range(g.n)))
            p = preserving_automorphism(g, lab)
            if p is None:
                break
            culprits = support(p)
        parents = sorted({tree.parent[v] for v in culprits if tree.parent[v] not in (None, v0)})
        moved = False
        for x in parents:
            it = cursors.setdefault(x, itertools.permutations(range(1, delta), len(kids[x])))
            current = tuple(labels[w] for w in kids[x])
            for assign in it:
                if assign != current:
                    for w, c in zip(kids[x], assign):
                        labels[w] = c
                    moved = True
                    break
            if moved:
                break
        attempts += 1
        if not moved or attempts > limit:
            raise ConstructionFailed(
                f"repair did not converge after {attempts} attempts; possible counterexample"
            )
    lab = VertexLabeling(tuple(labels[v] for v in range(g.n)))
    return _certify(g, lab, "clique4-bfs", delta - 1)


# -- unique Hamiltonian cycle and maximal outerplanar graphs ------------------------------


def unique_hamiltonian_labeling(g: Graph) -> CertifiedLabeling:
    if g.n < 6:
        raise PreconditionFailed(f"need at least 6 vertices, got {g.n}")
    cycles_found = hamiltonian_cycles(g, max_n=max(16, g.n), limit=2)
    if len(cycles_found) != 1:
        raise PreconditionFailed(f"graph has {'no' if not cycles_found else 'several'} Hamiltonian cycles")
    (cyc,) = cycles_found
    pat = cycle_pattern(g.n, 2)
    labels = [0] * g.n
    for pos, v in enumerate(cyc):
        labels[v] = pat[pos]
    return _certify(g, VertexLabeling(tuple(labels)), "unique-hamiltonian-cycle", 2)


def _check_mop_shape(g: Graph) -> None:
    if g.m != 2 * g.n - 3:
        raise PreconditionFailed(f"a MOP on {g.n} vertices has {2 * g.n - 3} edges, got {g.m}")
    if g.n >= 4 and len(hamiltonian_cycles(g, max_n=max(16, g.n), limit=2)) != 1:
        raise PreconditionFailed("a MOP has exactly one Hamiltonian cycle")


def _exact_witness(g: Graph, kind: str, theorem: str) -> CertifiedLabeling:
    res = distinguishing_number(g) if kind == "vertex" else distinguishing_index(g)
    return _certify(g, res.witness, theorem, res.value)


def mop_vertex_labeling(g: Graph) -> CertifiedLabeling:
    if g.n < 3:
        raise PreconditionFailed("a MOP has at least 3 vertices")
    _check_mop_shape(g)
    if g.n == 3:
        raise K3Exception("K_3 needs 3 labels", _exact_witness(g, "vertex", "mop-vertex-exception"))
    if g.n >= 6:
        res = unique_hamiltonian_labeling(g)
        return CertifiedLabeling(g, res.labeling, res.labels_used, "mop-vertex", 2, True)
    res = distinguishing_number(g, max_d=2)
    return _certify(g, res.witness, "mop-vertex", 2)


def _seeded_two_labeling(g: Graph, seed_path: Sequence[Edge], theorem: str) -> CertifiedLabeling:
    seed = [1] * g.m
    for pos, e in enumerate(seed_path):
        if pos in (0, 1, 3):
            seed[g.edge_index[Edge.of(*e)]] = 2
    found = seeded_search(g, "edge", 2, seed)
    if found is None:
        raise ConstructionFailed(f"{theorem}: no distinguishing 2-edge-labeling exists")
    return _certify(g, EdgeLabeling(g.edges, found), theorem, 2)


def mop_edge_labeling(g: Graph) -> CertifiedLabeling:
    """Two edge labels, searched exhaustively starting from a Hamiltonian-path seed."""
    if g.n < 3:
        raise PreconditionFailed("a MOP has at least 3 vertices")
    _check_mop_shape(g)
    if g.n == 3:
        raise K3Exception("K_3 needs 3 edge labels", _exact_witness(g, "edge", "mop-edge-exception"))
    (cyc,) = hamiltonian_cycles(g, max_n=max(16, g.n), limit=1)
    path_edges = [Edge.of(cyc[i], cyc[i + 1]) for i in range(g.n - 1)]
    return _seeded_two_labeling(g, path_edges, "mop-edge")


# -- Halin graphs -------------------------------------------------------------------------


def halin_case(h: HalinStructure) -> tuple[str, int]:
    """The strongest applicable vertex bound: (case name, number of labels)."""
    t = h.tree
    has_deg3 = any(t.degree(v) == 3 for v in range(t.n))
    if not has_deg3 and len(h.leaf_cycle) >= 6:
        return "halin-vertex-2", 2
    if not has_deg3:
        return "halin-vertex-3", 3
    return "halin-vertex-4", 4


def halin_vertex_labeling(h: HalinStructure) -> CertifiedLabeling:
    h.plane_tree.validate()
    name, bound = halin_case(h)
    leaves = h.leaf_cycle
    pat = cycle_pattern(len(leaves), 2 if bound == 2 else 3)
    inner = 4 if bound == 4 else 1
    labels = [inner] * h.graph.n
    for pos, v in enumerate(leaves):
        labels[v] = pat[pos]
    return _certify(h.graph, VertexLabeling(tuple(labels)), name, bound)


def halin_edge_labeling(h: HalinStructure) -> CertifiedLabeling:
    h.plane_tree.validate()
    g = h.graph
    if g.n == 4:
        raise K4Exception("K_4 needs 3 edge labels", _exact_witness(g, "edge", "halin-edge-exception"))
    (cyc,) = hamiltonian_cycles(g, max_n=max(16, g.n), limit=1)
    ring = [Edge.of(cyc[i], cyc[(i + 1) % g.n]) for i in range(g.n)]
    return _seeded_two_labeling(g, ring, "halin-edge")


# -- Mycielskians ---------------------------------------------------------------------------


def _check_myc_map(g: Graph, mg: Graph, mmap: MycielskianMap) -> None:
    if mmap.base_n != g.n or mg.n != 2 * g.n + 1:
        raise PreconditionFailed("Mycielskian map does not match the base graph")
    if set(mg.adj[mmap.w_id]) != set(mmap.u_ids):
        raise PreconditionFailed("apex must be adjacent exactly to the u-layer")


def mycielskian_extend_vertex(g: Graph, base: VertexLabeling,
                              mmap: MycielskianMap | None = None) -> CertifiedLabeling:
    """Copy a distinguishing labeling of g onto both layers of mu(g); the apex
    gets a fresh label."""
    if g.n < 2:
        raise PreconditionFailed("need at least 2 vertices")
    if not is_r_thin(g):
        raise NotRThin("two vertices share an open neighbourhood")
    if not labeled_stabilizer_is_trivial(g, base):
        raise BaseNotDistinguishing("base labeling is not distinguishing")
    mg, built = mycielskian(g)
    mmap = mmap or built
    _check_myc_map(g, mg, mmap)
    fresh = max(base.labels) + 1
    labels = [0] * mg.n
    for i in range(g.n):
        labels[mmap.v_ids[i]] = base.labels[i]
        labels[mmap.u_ids[i]] = base.labels[i]
    labels[mmap.w_id] = fresh
    return _certify(mg, VertexLabeling(tuple(labels)), "mycielskian-vertex", base.label_count + 1)


def _myc_edge_labels(g: Graph, mg: Graph, mmap: MycielskianMap, base: EdgeLabeling,
                     apex_label: int) -> EdgeLabeling:
    by_edge = base.as_dict()
    layer = {}
    for i in range(g.n):
        layer[mmap.v_ids[i]] = ("v", i)
        layer[mmap.u_ids[i]] = ("u", i)
    out = {}
    for a, b in mg.edges:
        if mmap.w_id in (a, b):
            out[Edge(a, b)] = apex_label
            continue
        (_, i), (_, j) = layer[a], layer[b]
        out[Edge(a, b)] = by_edge[Edge.of(i, j)]
    return EdgeLabeling.for_graph(mg, out)


def mycielskian_extend_edge(g: Graph, base: EdgeLabeling,
                            mmap: MycielskianMap | None = None) -> CertifiedLabeling:
    """Base labels on v_iv_j and on both u_iv_j and v_iu_j; a fresh label on
    every apex edge."""
    if g.n < 3:
        raise PreconditionFailed("need at least 3 vertices")
    if has_k2_component(g):
        raise UndefinedForK2Component("base graph has a K_2 component")
    if not is_r_thin(g):
        raise NotRThin("two vertices share an open neighbourhood")
    if not labeled_stabilizer_is_trivial(g, base):
        raise BaseNotDistinguishing("base edge labeling is not distinguishing")
    mg, built = mycielskian(g)
    mmap = mmap or built
    _check_myc_map(g, mg, mmap)
    lab = _myc_edge_labels(g, mg, mmap, base, max(base.labels) + 1)
    return _certify(mg, lab, "mycielskian-edge", base.label_count + 1)


def mycielski_iterate_labeling(i: int, kind: Literal["vertex", "edge"] = "vertex",
                               max_i: int = 6) -> CertifiedLabeling:
    """Witness for M_i: exact search up to M_4, then copy both layers from
    M_{i-1}'s labeling with label 1 on the apex (or on every apex edge)."""
    g = mycielski_sequence(i, max_i)
    if i <= 4:
        if kind == "edge" and i == 2:
            raise UndefinedForK2Component("M_2 = K_2 has no distinguishing index")
        return _exact_witness(g, kind, "mycielski-exact")
    prev_cert = mycielski_iterate_labeling(i - 1, kind, max_i)
    prev = prev_cert.graph
    mg, mmap = mycielskian(prev)
    if kind == "vertex":
        base = prev_cert.labeling.labels
        labels = [0] * mg.n
        for k in range(prev.n):
            labels[mmap.v_ids[k]] = base[k]
            labels[mmap.u_ids[k]] = base[k]
        labels[mmap.w_id] = 1
        lab: Labeling = VertexLabeling(tuple(labels))
    else:
        lab = _myc_edge_labels(prev, mg, mmap, prev_cert.labeling, 1)
    return _certify(mg, lab, "mycielski-iterate", prev_cert.labels_used)

