"""Shared strategies and brute-force oracles for the test suite."""

from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import strategies as st

from closedbetti.closed import from_mu
from closedbetti.graphs import BipartiteGraph, LabeledGraph
from closedbetti.skew_ferrers import SkewFerrersShape

SIX_BLOCK_MU = (3, 1, 0, 0, 0, 0)


@pytest.fixture
def six_block() -> LabeledGraph:
    return from_mu(SIX_BLOCK_MU)


def decreasing(length: int, top: int, lo: int = 0):
    """All weakly decreasing tuples of the given length with entries in [lo, top]."""
    if length == 0:
        yield ()
        return
    for v in range(lo, top + 1):
        for rest in decreasing(length - 1, v, lo):
            yield (v,) + rest


def all_shapes(max_rows: int, max_cols: int):
    for r in range(1, max_rows + 1):
        for m in range(1, max_cols + 1):
            for lam in decreasing(r, m):
                if lam[0] != m:
                    continue
                for mu in decreasing(r, m):
                    if all(b <= a for a, b in zip(lam, mu)):
                        yield SkewFerrersShape(lam, mu)


@st.composite
def shapes(draw, max_rows: int = 7, max_cols: int = 7):
    r = draw(st.integers(1, max_rows))
    m = draw(st.integers(1, max_cols))
    lam = sorted(draw(st.lists(st.integers(1, m), min_size=r - 1, max_size=r - 1)) + [m], reverse=True)
    mu = [draw(st.integers(0, lam[0]))]
    for a in lam[1:]:
        mu.append(draw(st.integers(0, min(a, mu[-1]))))
    return SkewFerrersShape(tuple(lam), tuple(mu))


@st.composite
def graphs(draw, max_vertices: int = 9, min_vertices: int = 0):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = list(combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return LabeledGraph.on(n, chosen)


def bfs_components(vertices, adj) -> int:
    seen, count = set(), 0
    for v in vertices:
        if v in seen:
            continue
        count += 1
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w in vertices and w not in seen:
                    seen.add(w)
                    stack.append(w)
    return count


def brute_cut_points(G: LabeledGraph) -> set[int]:
    adj = {v: set() for v in G.vertices}
    for a, b in G.edges:
        adj[a].add(b)
        adj[b].add(a)
    return {v for v in G.vertices if bfs_components(set(G.vertices) - {v}, adj) >= 2}


def brute_induced_matching(edges) -> int:
    """Largest edge subset that is a matching with no edge joining two of its edges."""
    edges = list(edges)
    eset = set(edges)

    def adjacent(a, b):
        return (a, b) in eset or (b, a) in eset

    best = 0
    for k in range(1, len(edges) + 1):
        found = False
        for sub in combinations(edges, k):
            verts = [v for e in sub for v in e]
            if len(set(verts)) != 2 * k:
                continue
            if any(adjacent(u, v) for e, f in combinations(sub, 2) for u in e for v in f):
                continue
            found = True
            break
        if not found:
            break
        best = k
    return best


def bipartite_edges(B: BipartiteGraph):
    return [(("x", i), ("y", j)) for i, j in B.edges]


def count_mu_vectors(n: int) -> int:
    """Count decreasing sequences under the staircase bound by dynamic programming."""
    # ways[v] = number of valid tails starting at the current position with first entry v
    if n < 2:
        return 0
    bound = [max(0, n - 2 - j) for j in range(1, n + 1)]
    ways = {v: 1 for v in range(bound[-1] + 1)}
    for j in range(n - 2, -1, -1):
        ways = {v: sum(c for w, c in ways.items() if w <= v) for v in range(bound[j] + 1)}
    return sum(ways.values())
