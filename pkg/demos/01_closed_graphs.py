"""
Closed graphs and their mu-vectors
==================================

A closed graph on 1..n is pinned down by how far each vertex reaches
upward.  This script builds one, reads off its vector, and looks at the
bipartite graph of the initial ideal as a 0/1 matrix.
"""

import numpy as np

from closedbetti import (
    LabeledGraph,
    chain_decompose,
    check_closed,
    cut_points,
    from_mu,
    initial_closed_graph,
    initial_graph,
    mu_vector,
)

# %% A six-vertex block
G = LabeledGraph.on(6, [(1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (3, 4),
                        (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)])
print(G)
print("closed:", check_closed(G), " cut points:", cut_points(G) or "none")

mu = mu_vector(G)
print("mu(G) =", mu, " s =", mu.s)

# the vector alone rebuilds the graph
assert from_mu(mu) == G

# %% Upper neighborhoods are intervals
for v in G.vertices:
    print(v, "->", G.upper_neighbors(v))

# %% The initial ideal as a bipartite graph
Hp = initial_graph(G)
print("H' biadjacency (rows x1..x6, columns y1..y6)")
print(Hp.matrix)

H = initial_closed_graph(G)
print("H after dropping x6, y1 and shifting y:")
print(H.bipartite.matrix)
print("mu(H) =", H.mu)

# the upper-triangular band is visible directly in the matrix
M = H.bipartite.matrix
print("row lengths:", M.sum(axis=1), " column lengths:", M.sum(axis=0))
assert np.all(np.tril(M, -1) == 0)

# %% A chain of blocks
path = LabeledGraph.on(4, [(1, 2), (2, 3), (3, 4)])
chain = chain_decompose(path)
for b in chain.blocks:
    print("block", b.vertices, "mu =", b.mu, "(single edge)" if b.single_edge else "")
print("cut points:", chain.cut_points)
