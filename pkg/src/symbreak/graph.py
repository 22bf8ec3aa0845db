"""Simple undirected graphs on vertices 0..n-1, labelings, and the basic invariants
the rest of the package is built on.

All tie-breaking is by ascending vertex id so that every search below returns
the same witness on every run.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import Disconnected, IncompleteLabeling, OutOfRange, SelfLoop, SizeLimitExceeded


class Edge(NamedTuple):
    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        return cls(a, b) if a < b else cls(b, a)

    def key(self) -> str:
        return f"{self.u}-{self.v}"


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(Edge(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise OutOfRange(f"negative vertex count {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(frozenset(s) for s in nbrs))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """The isomorphic copy of g in which vertex v is renamed perm[v]."""
    return build_graph(g.n, ((perm[u], perm[v]) for u, v in g.edges))


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    keep = sorted(set(keep))
    idx = {v: i for i, v in enumerate(keep)}
    return build_graph(len(keep), ((idx[u], idx[v]) for u, v in g.edges if u in idx and v in idx))


# -- labelings ---------------------------------------------------------------


@dataclass(frozen=True)
class VertexLabeling:
    labels: tuple[int, ...]

    @property
    def label_count(self) -> int:
        return len(set(self.labels))

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    def to_json_dict(self) -> dict[str, int]:
        return {str(v): lab for v, lab in enumerate(self.labels)}

    @classmethod
    def from_mapping(cls, g: Graph, data: Mapping) -> "VertexLabeling":
        try:
            labels = tuple(int(data[str(v)] if str(v) in data else data[v]) for v in range(g.n))
        except KeyError as exc:
            raise IncompleteLabeling(f"vertex {exc} has no label") from None
        return cls(labels)


@dataclass(frozen=True)
class EdgeLabeling:
    edges: tuple[Edge, ...]
    labels: tuple[int, ...]

    @property
    def label_count(self) -> int:
        return len(set(self.labels))

    def as_dict(self) -> dict[Edge, int]:
        return dict(zip(self.edges, self.labels))

    def __getitem__(self, e: Edge) -> int:
        return self.labels[self.edges.index(Edge.of(*e))]

    def to_json_dict(self) -> dict[str, int]:
        return {e.key(): lab for e, lab in zip(self.edges, self.labels)}

    @classmethod
    def for_graph(cls, g: Graph, labels: Mapping[Edge, int] | Sequence[int]) -> "EdgeLabeling":
        if isinstance(labels, Mapping):
            norm = {Edge.of(*e): lab for e, lab in labels.items()}
            missing = [e for e in g.edges if e not in norm]
            if missing:
                raise IncompleteLabeling(f"edges without label: {missing[:5]}")
            return cls(g.edges, tuple(int(norm[e]) for e in g.edges))
        labels = tuple(int(x) for x in labels)
        if len(labels) != g.m:
            raise IncompleteLabeling(f"expected {g.m} edge labels, got {len(labels)}")
        return cls(g.edges, labels)

    @classmethod
    def from_mapping(cls, g: Graph, data: Mapping) -> "EdgeLabeling":
        parsed = {}
        for key, lab in data.items():
            a, b = (int(x) for x in str(key).split("-"))
            parsed[Edge.of(a, b)] = int(lab)
        return cls.for_graph(g, parsed)


def labeling_to_json(lab: VertexLabeling | EdgeLabeling) -> str:
    return json.dumps(lab.to_json_dict(), sort_keys=False)


# -- invariants ----------------------------------------------------------------


def max_degree(g: Graph) -> int:
    return max(g.degrees(), default=0)


def open_neighborhood(g: Graph, v: int) -> frozenset[int]:
    if not 0 <= v < g.n:
        raise OutOfRange(f"vertex {v} outside 0..{g.n - 1}")
    return g.adj[v]


def is_r_thin(g: Graph) -> bool:
    """True when no two distinct vertices share an open neighborhood."""
    seen: set[frozenset[int]] = set()
    for nb in g.adj:
        if nb in seen:
            return False
        seen.add(nb)
    return True


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def has_k2_component(g: Graph) -> bool:
    return any(len(c) == 2 for c in components(g))


def clique_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Exact clique number and the lexicographically smallest maximum clique.

    Depth-first over cliques in lexicographic order; a clique only replaces the
    incumbent when strictly larger, so the first maximum clique reached wins.
    """
    if g.n == 0:
        return 0, ()
    best: list[int] = []

    def extend(clique: list[int], cand: list[int]) -> None:
        nonlocal best
        if len(clique) > len(best):
            best = clique[:]
        for i, v in enumerate(cand):
            if len(clique) + len(cand) - i <= len(best):
                return
            nxt = [w for w in cand[i + 1:] if w in g.adj[v]]
            clique.append(v)
            extend(clique, nxt)
            clique.pop()

    extend([], list(range(g.n)))
    return len(best), tuple(best)


def chromatic_number(g: Graph, max_n: int = 20) -> int:
    if g.n > max_n:
        raise SizeLimitExceeded(f"chromatic number capped at {max_n} vertices, got {g.n}")
    if g.n == 0:
        return 0
    if g.m == 0:
        return 1
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    # greedy upper bound
    colors: dict[int, int] = {}
    for v in order:
        used = {colors[w] for w in g.adj[v] if w in colors}
        colors[v] = next(c for c in range(g.n) if c not in used)
    upper = max(colors.values()) + 1
    lower = clique_number(g)[0]
    for k in range(lower, upper):
        if _colorable(g, order, k):
            return k
    return upper


def _colorable(g: Graph, order: list[int], k: int) -> bool:
    color = [-1] * g.n

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {color[w] for w in g.adj[v] if color[w] >= 0}
        # colors are interchangeable, so only one unused color needs trying
        for c in range(min(k, used + 1)):
            if c in taken:
                continue
            color[v] = c
            if place(i + 1, max(used, c + 1)):
                return True
            color[v] = -1
        return False

    return place(0, 0)


def hamiltonian_cycles(g: Graph, max_n: int = 16, limit: int | None = None) -> list[tuple[int, ...]]:
    """All Hamiltonian cycles, each starting at vertex 0 and oriented so that the
    second vertex is smaller than the last."""
    if g.n > max_n:
        raise SizeLimitExceeded(f"Hamiltonian cycle enumeration capped at {max_n} vertices")
    n = g.n
    if n < 3 or any(len(a) < 2 for a in g.adj) or not is_connected(g):
        return []
    out: list[tuple[int, ...]] = []
    path = [0]
    visited = [False] * n
    visited[0] = True

    def dead_end(last: int) -> bool:
        # an unvisited vertex needs two usable neighbours (unvisited, or a path end)
        for v in range(n):
            if visited[v]:
                continue
            free = sum(1 for w in g.adj[v] if not visited[w] or w == last or w == 0)
            if free < 2:
                return True
        return False

    def walk() -> bool:
        last = path[-1]
        if len(path) == n:
            if 0 in g.adj[last] and path[1] < path[-1]:
                out.append(tuple(path))
                return limit is not None and len(out) >= limit
            return False
        for w in sorted(g.adj[last]):
            if visited[w]:
                continue
            visited[w] = True
            path.append(w)
            if not dead_end(w) and walk():
                return True
            path.pop()
            visited[w] = False
        return False

    walk()
    return out


def has_hamiltonian_path(g: Graph, max_n: int = 16) -> bool:
    if g.n > max_n:
        raise SizeLimitExceeded(f"Hamiltonian path search capped at {max_n} vertices")
    n = g.n
    if n <= 1:
        return True
    if not is_connected(g):
        return False
    if sum(1 for a in g.adj if len(a) == 1) > 2:
        return False
    visited = [False] * n

    def walk(v: int, count: int) -> bool:
        if count == n:
            return True
        for w in sorted(g.adj[v]):
            if not visited[w]:
                visited[w] = True
                if walk(w, count + 1):
                    return True
                visited[w] = False
        return False

    leaves = [v for v in range(n) if g.degree(v) == 1]
    starts = leaves[:1] if leaves else range(n)
    for s in starts:
        visited[s] = True
        if walk(s, 1):
            return True
        visited[s] = False
    return False


class BFSTree(NamedTuple):
    root: int
    parent: dict[int, int | None]
    level: dict[int, int]
    order: list[int]

    def children(self, v: int) -> list[int]:
        return [w for w in self.order if self.parent[w] == v]


def bfs_tree(g: Graph, root: int) -> BFSTree:
    if not 0 <= root < g.n:
        raise OutOfRange(f"root {root} outside 0..{g.n - 1}")
    parent: dict[int, int | None] = {root: None}
    level = {root: 0}
    order = [root]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in sorted(g.adj[v]):
            if w not in level:
                level[w] = level[v] + 1
                parent[w] = v
                order.append(w)
                queue.append(w)
    if len(order) != g.n:
        raise Disconnected(f"only {len(order)} of {g.n} vertices reachable from {root}")
    return BFSTree(root, parent, level, order)
