"""Simple labeled graphs and bipartite graphs.

Vertices of a :class:`LabeledGraph` are positive integers.  Induced
subgraphs keep their original labels, so a block cut out of a bigger graph
still talks about the same vertex numbers.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np


class GraphError(ValueError):
    """Malformed graph data."""


class DisconnectedGraphError(GraphError):
    """An operation that needs a connected graph got a disconnected one."""


def _normalize_edge(a: int, b: int) -> tuple[int, int]:
    if a == b:
        raise GraphError(f"self-loop at vertex {a}")
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class LabeledGraph:
    """Finite simple graph with integer vertex labels.

    Use :meth:`on` for the usual vertex set ``1..n``.
    """

    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        verts = tuple(sorted(set(self.vertices)))
        if len(verts) != len(self.vertices):
            raise GraphError("duplicate vertex labels")
        object.__setattr__(self, "vertices", verts)
        vset = set(verts)
        norm = set()
        for e in self.edges:
            a, b = e
            a, b = _normalize_edge(int(a), int(b))
            if a not in vset or b not in vset:
                raise GraphError(f"edge {{{a},{b}}} has an endpoint outside the vertex set")
            norm.add((a, b))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def on(cls, n: int, edges: Iterable[Sequence[int]] = ()) -> LabeledGraph:
        """Graph on ``1..n``; duplicate edges in *edges* are merged."""
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        return cls(tuple(range(1, n + 1)), frozenset(tuple(e) for e in edges))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @cached_property
    def _adj(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return {v: frozenset(nb) for v, nb in adj.items()}

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def upper_neighbors(self, v: int) -> list[int]:
        """Neighbors with a larger label, sorted."""
        return sorted(u for u in self._adj[v] if u > v)

    def lower_neighbors(self, v: int) -> list[int]:
        return sorted(u for u in self._adj[v] if u < v)

    def has_edge(self, a: int, b: int) -> bool:
        return b in self._adj.get(a, ())

    def induced(self, keep: Iterable[int]) -> LabeledGraph:
        keep = set(keep)
        return LabeledGraph(
            tuple(v for v in self.vertices if v in keep),
            frozenset(e for e in self.edges if e[0] in keep and e[1] in keep),
        )

    def remove(self, drop: Iterable[int]) -> LabeledGraph:
        drop = set(drop)
        return self.induced(v for v in self.vertices if v not in drop)

    def vertex_list(self) -> list[int]:
        return list(self.vertices)

    def adjacency_masks(self) -> list[int]:
        """Neighborhoods as bitmasks over positions in :meth:`vertex_list`."""
        pos = {v: k for k, v in enumerate(self.vertices)}
        masks = [0] * len(self.vertices)
        for a, b in self.edges:
            masks[pos[a]] |= 1 << pos[b]
            masks[pos[b]] |= 1 << pos[a]
        return masks

    def __str__(self):
        body = ",".join(f"{a}-{b}" for a, b in self.sorted_edges())
        return f"LabeledGraph(n={self.n}, edges={body or '-'})"


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with labeled sides.

    ``edges`` holds pairs ``(i, j)`` meaning ``{x_i, y_j}``.  Vertices are
    addressed as ``("x", i)`` and ``("y", j)``.
    """

    x_labels: tuple[int, ...]
    y_labels: tuple[int, ...]
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        xs = tuple(sorted(set(self.x_labels)))
        ys = tuple(sorted(set(self.y_labels)))
        object.__setattr__(self, "x_labels", xs)
        object.__setattr__(self, "y_labels", ys)
        xset, yset = set(xs), set(ys)
        edges = frozenset((int(i), int(j)) for i, j in self.edges)
        for i, j in edges:
            if i not in xset or j not in yset:
                raise GraphError(f"edge x{i}-y{j} has an endpoint outside the bipartition")
        object.__setattr__(self, "edges", edges)

    @property
    def matrix(self) -> np.ndarray:
        """0/1 biadjacency matrix, rows ``x_labels``, columns ``y_labels``."""
        row = {i: k for k, i in enumerate(self.x_labels)}
        col = {j: k for k, j in enumerate(self.y_labels)}
        m = np.zeros((len(self.x_labels), len(self.y_labels)), dtype=np.int8)
        for i, j in self.edges:
            m[row[i], col[j]] = 1
        return m

    @property
    def n_vertices(self) -> int:
        return len(self.x_labels) + len(self.y_labels)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @cached_property
    def _x_adj(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {i: set() for i in self.x_labels}
        for i, j in self.edges:
            adj[i].add(j)
        return {i: frozenset(v) for i, v in adj.items()}

    @cached_property
    def _y_adj(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {j: set() for j in self.y_labels}
        for i, j in self.edges:
            adj[j].add(i)
        return {j: frozenset(v) for j, v in adj.items()}

    def x_neighbors(self, i: int) -> frozenset[int]:
        return self._x_adj[i]

    def y_neighbors(self, j: int) -> frozenset[int]:
        return self._y_adj[j]

    def neighbors(self, v: tuple[str, int]) -> frozenset[tuple[str, int]]:
        side, k = v
        if side == "x":
            return frozenset(("y", j) for j in self._x_adj[k])
        return frozenset(("x", i) for i in self._y_adj[k])

    def degree(self, v: tuple[str, int]) -> int:
        side, k = v
        return len(self._x_adj[k] if side == "x" else self._y_adj[k])

    def vertex_list(self) -> list[tuple[str, int]]:
        return [("x", i) for i in self.x_labels] + [("y", j) for j in self.y_labels]

    def adjacency_masks(self) -> list[int]:
        nx = len(self.x_labels)
        row = {i: k for k, i in enumerate(self.x_labels)}
        col = {j: nx + k for k, j in enumerate(self.y_labels)}
        masks = [0] * (nx + len(self.y_labels))
        for i, j in self.edges:
            masks[row[i]] |= 1 << col[j]
            masks[col[j]] |= 1 << row[i]
        return masks

    def induced(self, xs: Iterable[int], ys: Iterable[int]) -> BipartiteGraph:
        xs, ys = set(xs), set(ys)
        return BipartiteGraph(
            tuple(i for i in self.x_labels if i in xs),
            tuple(j for j in self.y_labels if j in ys),
            frozenset(e for e in self.edges if e[0] in xs and e[1] in ys),
        )

    def remove(self, drop: Iterable[tuple[str, int]]) -> BipartiteGraph:
        drop = set(drop)
        return self.induced(
            (i for i in self.x_labels if ("x", i) not in drop),
            (j for j in self.y_labels if ("y", j) not in drop),
        )

    def relabel(self, x_map: dict[int, int], y_map: dict[int, int]) -> BipartiteGraph:
        return BipartiteGraph(
            tuple(x_map[i] for i in self.x_labels),
            tuple(y_map[j] for j in self.y_labels),
            frozenset((x_map[i], y_map[j]) for i, j in self.edges),
        )

    def to_labeled(self) -> tuple[LabeledGraph, list[tuple[str, int]]]:
        """Plain graph on ``1..|V|`` plus the vertex each label stands for."""
        verts = self.vertex_list()
        masks = self.adjacency_masks()
        edges = [
            (a + 1, b + 1)
            for a, m in enumerate(masks)
            for b in range(a + 1, len(verts))
            if m >> b & 1
        ]
        return LabeledGraph.on(len(verts), edges), verts

    def __str__(self):
        body = ",".join(f"x{i}y{j}" for i, j in self.sorted_edges())
        return f"BipartiteGraph(|X|={len(self.x_labels)}, |Y|={len(self.y_labels)}, edges={body or '-'})"


def _components_of_masks(masks: Sequence[int], within: int) -> list[int]:
    """Connected components of the subgraph induced on bitmask *within*."""
    comps = []
    rest = within
    while rest:
        low = rest & -rest
        comp = frontier = low
        while frontier:
            reach = 0
            f = frontier
            while f:
                b = f & -f
                reach |= masks[b.bit_length() - 1]
                f ^= b
            frontier = reach & within & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def connected_components(G: LabeledGraph | BipartiteGraph) -> list[set]:
    """Vertex sets of the connected components, ordered by least vertex."""
    verts = G.vertex_list()
    masks = G.adjacency_masks()
    comps = _components_of_masks(masks, (1 << len(verts)) - 1)
    out = [{verts[k] for k in range(len(verts)) if c >> k & 1} for c in comps]
    return sorted(out, key=min)


def is_connected(G: LabeledGraph | BipartiteGraph) -> bool:
    return len(connected_components(G)) <= 1


def cut_points(G: LabeledGraph) -> set[int]:
    """Articulation points of a connected graph (iterative low-link DFS)."""
    if not is_connected(G):
        raise DisconnectedGraphError("cut_points needs a connected graph")
    if G.n <= 2:
        return set()
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    result = set()
    root = G.vertices[0]
    disc[root] = low[root] = 0
    counter = 1
    root_children = 0
    stack = [(root, None, iter(sorted(G.neighbors(root))))]
    while stack:
        v, parent, it = stack[-1]
        for w in it:
            if w == parent:
                continue
            if w in disc:
                low[v] = min(low[v], disc[w])
            else:
                disc[w] = low[w] = counter
                counter += 1
                stack.append((w, v, iter(sorted(G.neighbors(w)))))
                break
        else:
            stack.pop()
            if parent is not None:
                low[parent] = min(low[parent], low[v])
                if parent == root:
                    root_children += 1
                elif low[v] >= disc[parent]:
                    result.add(parent)
    if root_children >= 2:
        result.add(root)
    return result


def induced_matching_number(G: LabeledGraph | BipartiteGraph) -> int:
    """Largest induced matching, by branch and bound over the edge list.

    Picking an edge blocks the closed neighborhoods of both endpoints; every
    later edge must avoid the blocked set entirely.
    """
    masks = G.adjacency_masks()
    nv = len(masks)
    closed = [masks[v] | (1 << v) for v in range(nv)]
    edges = [(a, b) for a in range(nv) for b in range(a + 1, nv) if masks[a] >> b & 1]
    best = 0

    def search(start: int, blocked: int, size: int):
        nonlocal best
        if size > best:
            best = size
        free = [k for k in range(start, len(edges))
                if not (blocked >> edges[k][0] & 1 or blocked >> edges[k][1] & 1)]
        # each further edge needs two free vertices of its own
        free_vertices = bin(((1 << nv) - 1) & ~blocked).count("1")
        if size + min(len(free), free_vertices // 2) <= best:
            return
        for idx, k in enumerate(free):
            if size + len(free) - idx <= best:
                return
            a, b = edges[k]
            if blocked >> a & 1 or blocked >> b & 1:
                continue
            search(k + 1, blocked | closed[a] | closed[b], size + 1)

    search(0, 0, 0)
    return best
