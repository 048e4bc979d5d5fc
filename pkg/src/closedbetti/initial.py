"""Bipartite graphs of the initial ideal of a closed graph's binomial edge ideal.

For a closed graph ``G`` the lex initial ideal is generated by ``x_i y_j``
over the edges ``{i, j}``, ``i < j``.  Read as an edge ideal this is the
bipartite graph ``H'`` of :func:`initial_graph`.  Dropping the isolated
vertices ``x_n, y_1`` and shifting ``y_j -> y_{j-1}`` gives the
initial-closed graph ``H`` with edges ``x_i y_j`` for
``i <= j <= n - mu_i - 1``.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

from .closed import (
    CutPointError,
    MuVector,
    NotClosedError,
    chain_decompose,
    check_closed,
    mu_vector,
)
from .graphs import BipartiteGraph, GraphError, LabeledGraph, is_connected


@dataclass(frozen=True)
class InitialClosedGraph:
    """Initial-closed graph of a block on ``n`` vertices.

    ``x_origin`` / ``y_origin`` map the labels of ``bipartite`` back to the
    vertex labels of the closed graph it came from.
    """

    n: int
    bipartite: BipartiteGraph
    mu: MuVector
    x_origin: dict[int, int] = field(default_factory=dict, compare=False)
    y_origin: dict[int, int] = field(default_factory=dict, compare=False)

    @classmethod
    def from_mu(cls, mu: MuVector | Iterable[int], n: int | None = None) -> InitialClosedGraph:
        """Build ``H`` straight from a mu-vector.

        *mu* is ``mu(G)`` of length ``n``; pass ``n`` explicitly to hand in
        ``mu(H)`` of length ``n - 1`` instead.
        """
        full = block_mu(mu, n)
        n = full.n
        edges = frozenset(
            (i, j) for i in range(1, n) for j in range(i, n - full[i])
        )
        labels = tuple(range(1, n))
        return cls(
            n,
            BipartiteGraph(labels, labels, edges),
            MuVector(full.values[:-1]),
            {i: i for i in labels},
            {j: j + 1 for j in labels},
        )

    def generators(self) -> list[tuple[int, int]]:
        """Monomials ``x_i y_j`` as pairs ``(i, j)`` in lex order."""
        return self.bipartite.sorted_edges()

    def original_generators(self) -> list[tuple[int, int]]:
        """Generators in the labels of the closed graph, before the y-shift."""
        return sorted((self.x_origin[i], self.y_origin[j]) for i, j in self.bipartite.edges)


def block_mu(mu: MuVector | Iterable[int], n: int | None = None) -> MuVector:
    """Normalize to the length-``n`` vector of a block.

    With ``n`` given, a vector of length ``n - 1`` (the vector of ``H``) is
    padded with the trailing zero it dropped.
    """
    vals = tuple(mu)
    if n is not None:
        if len(vals) == n - 1:
            vals = vals + (0,)
        elif len(vals) != n:
            raise ValueError(f"mu-vector of length {len(vals)} does not fit n = {n}")
    return MuVector(vals).require_block()


def initial_graph(G: LabeledGraph) -> BipartiteGraph:
    """Bipartite graph ``H'`` on ``x_1..x_n, y_1..y_n`` of the initial ideal."""
    if not check_closed(G):
        raise NotClosedError("the quadratic generators form a Groebner basis only for closed graphs")
    labels = G.vertices
    return BipartiteGraph(labels, labels, frozenset(G.edges))


def _trim(G: LabeledGraph) -> InitialClosedGraph:
    hp = initial_graph(G)
    verts = G.vertices
    pos = {v: k + 1 for k, v in enumerate(verts)}
    n = len(verts)
    x_map = {v: pos[v] for v in verts[:-1]}
    y_map = {v: pos[v] - 1 for v in verts[1:]}
    trimmed = hp.induced(verts[:-1], verts[1:]).relabel(x_map, y_map)
    mu = mu_vector(G)
    return InitialClosedGraph(
        n,
        trimmed,
        MuVector(mu.values[:-1]),
        {pos[v]: v for v in verts[:-1]},
        {pos[v] - 1: v for v in verts[1:]},
    )


def initial_closed_graph(G: LabeledGraph) -> InitialClosedGraph:
    """Initial-closed graph of a connected closed graph without cut points.

    Labels of ``G`` are read in increasing order and renumbered ``1..n``.
    """
    if not is_connected(G):
        raise GraphError("initial_closed_graph needs a connected graph")
    mu = mu_vector(G)
    if not mu.is_block():
        raise CutPointError("graph has a cut point; split it with split_at_cut_points first")
    return _trim(G)


def split_at_cut_points(G: LabeledGraph) -> list[InitialClosedGraph]:
    """One initial-closed graph per block of the chain decomposition."""
    chain = chain_decompose(G)
    return [_trim(G.induced(b.vertices)) for b in chain.blocks]


def trimmed_initial_graph(G: LabeledGraph) -> BipartiteGraph:
    """``H' \\ {x_n, y_1}`` in the original labels (no y-shift)."""
    hp = initial_graph(G)
    return hp.induced(G.vertices[:-1], G.vertices[1:])


def shifted_initial_graph(G: LabeledGraph) -> BipartiteGraph:
    """``H' \\ {x_n, y_1}`` renumbered ``1..n-1`` on both sides, cut points allowed.

    For a chain of blocks this is the disjoint union of the blocks'
    initial-closed graphs, placed diagonally: edges ``x_i y_j`` with
    ``i <= j <= n - mu_i - 1`` for ``mu = mu(G)``.
    """
    mu = mu_vector(G)
    n = mu.n
    labels = tuple(range(1, n))
    edges = frozenset((i, j) for i in labels for j in range(i, n - mu[i]))
    return BipartiteGraph(labels, labels, edges)


def recognize_initial_closed(B: BipartiteGraph) -> MuVector | None:
    """mu(H) if *B*, with both sides renumbered in order, is initial-closed; else ``None``."""
    k = len(B.x_labels)
    if k == 0 or len(B.y_labels) != k:
        return None
    xs = {v: a for a, v in enumerate(sorted(B.x_labels), start=1)}
    ys = {v: a for a, v in enumerate(sorted(B.y_labels), start=1)}
    R = B.relabel(xs, ys)
    mu = []
    for i in range(1, k + 1):
        nb = sorted(R.x_neighbors(i))
        if not nb:
            return None
        mu.append(k - nb[-1])
    try:
        H = InitialClosedGraph.from_mu(mu, n=k + 1)
    except ValueError:
        return None
    return H.mu if H.bipartite == R else None
