"""Closed graphs and their mu-vectors.

A connected graph that is closed for its labeling is pinned down by the
sequence ``mu_j = n - j - deg>(j)``: the larger neighbors of ``j`` are
exactly the interval ``[j+1, n - mu_j]``.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .graphs import (
    DisconnectedGraphError,
    GraphError,
    LabeledGraph,
    cut_points,
    is_connected,
)


class NotClosedError(GraphError):
    """The graph is not closed with respect to its labeling."""


class CutPointError(GraphError):
    """The graph has a cut point where a block was expected."""


class MuVectorError(ValueError):
    pass


@dataclass(frozen=True)
class MuVector:
    """Decreasing sequence ``(mu_1, ..., mu_n)`` of a connected closed graph.

    Checked on construction: entries are nonnegative and weakly decreasing,
    the last two vanish, and ``mu_i <= n - i - 1`` for ``i < n`` (every
    vertex but the last has a larger neighbor).
    """

    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        n = len(vals)
        if n == 0:
            raise MuVectorError("empty mu-vector")
        if any(v < 0 for v in vals):
            raise MuVectorError(f"negative entry in {vals}")
        for i in range(n - 1):
            if vals[i + 1] > vals[i]:
                raise MuVectorError(f"{vals} is not decreasing at position {i + 2}")
        if any(vals[-2:]):
            raise MuVectorError(f"{vals} must end in two zeros")
        for i in range(1, n):
            if vals[i - 1] > n - i - 1:
                raise MuVectorError(f"mu_{i} = {vals[i - 1]} exceeds n-i-1 = {n - i - 1}")

    @classmethod
    def of(cls, values: Iterable[int]) -> MuVector:
        return cls(tuple(values))

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def s(self) -> int:
        """Number of leading positive entries, ``min{k-1 : mu_k = 0}``."""
        for k, v in enumerate(self.values):
            if v == 0:
                return k
        return len(self.values)

    def __getitem__(self, i: int) -> int:
        """1-based access, ``mu[1]`` is the first entry."""
        if not 1 <= i <= len(self.values):
            raise IndexError(i)
        return self.values[i - 1]

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def is_block(self) -> bool:
        """True when the graph has no cut point: ``mu_i <= n-i-2`` for ``i <= n-2``."""
        n = self.n
        return all(self.values[i - 1] <= n - i - 2 for i in range(1, n - 1))

    def require_block(self) -> MuVector:
        if not self.is_block():
            raise MuVectorError(f"{self.values} describes a graph with a cut point")
        return self

    def __str__(self):
        return "(" + ",".join(map(str, self.values)) + ")"


@dataclass(frozen=True)
class Block:
    vertices: tuple[int, ...]
    mu: MuVector

    @property
    def single_edge(self) -> bool:
        return len(self.vertices) == 2


@dataclass(frozen=True)
class ChainDecomposition:
    """Blocks of a closed graph chained along its cut points ``v_1 < ... < v_l``."""

    blocks: tuple[Block, ...]
    cut_points: tuple[int, ...]

    def __len__(self):
        return len(self.blocks)

    @property
    def single_edge_blocks(self) -> list[int]:
        """Indices of blocks that are a bare edge (mu = (0,0))."""
        return [k for k, b in enumerate(self.blocks) if b.single_edge]


def as_mu(mu: MuVector | Iterable[int]) -> MuVector:
    return mu if isinstance(mu, MuVector) else MuVector(tuple(mu))


def check_closed(G: LabeledGraph) -> bool:
    """Closedness with respect to the given labeling."""
    for i in G.vertices:
        for side in (G.upper_neighbors(i), G.lower_neighbors(i)):
            for a in range(len(side)):
                for b in range(a + 1, len(side)):
                    if not G.has_edge(side[a], side[b]):
                        return False
    return True


def _positions(G: LabeledGraph) -> dict[int, int]:
    return {v: k + 1 for k, v in enumerate(G.vertices)}


def mu_vector(G: LabeledGraph) -> MuVector:
    """mu-vector of a connected closed graph.

    Labels are read in increasing order; a block with labels ``{3,4,5}`` is
    treated as the graph on ``1,2,3``.
    """
    if G.n < 2:
        raise GraphError("mu_vector needs at least two vertices")
    if not is_connected(G):
        raise DisconnectedGraphError("mu_vector needs a connected graph")
    if not check_closed(G):
        raise NotClosedError("graph is not closed for its labeling")
    n = G.n
    pos = _positions(G)
    return MuVector(tuple(n - pos[v] - len(G.upper_neighbors(v)) for v in G.vertices))


def from_mu(mu: MuVector | Iterable[int], block: bool = False) -> LabeledGraph:
    """Closed graph on ``1..n`` with ``N>(i) = [i+1, n - mu_i]``."""
    mu = as_mu(mu)
    if block:
        mu.require_block()
    n = mu.n
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n - mu[i] + 1)]
    return LabeledGraph.on(n, edges)


def _blocks(G: LabeledGraph) -> list[frozenset[int]]:
    """Biconnected components (vertex sets) by iterative DFS with an edge stack."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks = []
    edge_stack: list[tuple[int, int]] = []
    counter = 0
    for root in G.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        stack = [(root, None, iter(sorted(G.neighbors(root))))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w in disc:
                    if disc[w] < disc[v]:
                        edge_stack.append((v, w))
                        low[v] = min(low[v], disc[w])
                else:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, iter(sorted(G.neighbors(w)))))
                    advanced = True
                    break
            if advanced:
                continue
            stack.pop()
            if parent is not None:
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    comp = set()
                    while True:
                        e = edge_stack.pop()
                        comp.update(e)
                        if e == (parent, v):
                            break
                    blocks.append(frozenset(comp))
    return blocks


def chain_decompose(G: LabeledGraph) -> ChainDecomposition:
    """Split a connected closed graph at its cut points.

    Blocks come back ordered by least vertex.  For a closed graph they form
    a chain of label intervals; anything else is reported as an error.
    """
    if not is_connected(G) or G.n < 2:
        raise DisconnectedGraphError("chain_decompose needs a connected graph with an edge")
    if not check_closed(G):
        raise NotClosedError("graph is not closed for its labeling")
    cuts = tuple(sorted(cut_points(G)))
    vsets = sorted(_blocks(G), key=min)
    if len(vsets) != len(cuts) + 1:
        raise GraphError("block structure is not a chain")
    blocks = []
    for k, vs in enumerate(vsets):
        verts = tuple(sorted(vs))
        if k > 0 and vsets[k - 1] & vs != {cuts[k - 1]}:
            raise GraphError("consecutive blocks must meet in exactly one cut point")
        for other in vsets[k + 2:]:
            if other & vs:
                raise GraphError("non-consecutive blocks intersect")
        sub = G.induced(verts)
        mu = mu_vector(sub)
        if not mu.is_block():
            raise CutPointError(f"block {verts} still has a cut point")
        blocks.append(Block(verts, mu))
    return ChainDecomposition(tuple(blocks), cuts)


def glue_blocks(mus: Iterable[MuVector | Iterable[int]]) -> LabeledGraph:
    """Chain block graphs so the last vertex of each is the first of the next."""
    edges = []
    offset = 0
    n_total = 1
    for raw in mus:
        mu = as_mu(raw).require_block()
        part = from_mu(mu)
        edges.extend((a + offset, b + offset) for a, b in part.edges)
        offset += mu.n - 1
        n_total = offset + 1
    return LabeledGraph.on(n_total, edges)
