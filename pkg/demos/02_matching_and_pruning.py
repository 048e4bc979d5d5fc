"""
Induced matchings on skew Ferrers graphs
========================================

The greedy loop pairs the last row with the last column, deletes their
neighborhood and drops any column left empty.  The matched pairs form an
induced matching U, the dropped columns a set S.
"""

import numpy as np

from closedbetti import SkewFerrersShape, algorithm_32, induced_matching_number, to_graph
from closedbetti.initial import InitialClosedGraph

# %% The shape and its matrix
shape = SkewFerrersShape((6, 5, 4, 4, 2, 1), (4, 2, 1, 1, 0, 0))
B = to_graph(shape)
print(B.matrix)

# %% Run the loop and watch it
out = algorithm_32(B, shape)
for k, step in enumerate(out.trace, start=1):
    print(f"step {k}: pair x{step.edge[0]}y{step.edge[1]}, pruned {list(step.pruned)}")
print("U =", out.U)
print("S =", out.S)

# %% Rectangular blocks partition the edges
canvas = np.zeros(B.matrix.shape, dtype=int)
for label, (e, part) in enumerate(out.blocks.items(), start=1):
    for i, j in part:
        canvas[i - 1, j - 1] = label
print(canvas)

# |U| is the induced matching number
print("im =", induced_matching_number(B), " |U| =", len(out.U))

# %% Initial-closed graphs embed as staircase-cut shapes
H = InitialClosedGraph.from_mu((3, 1, 0, 0, 0, 0))
embedded = SkewFerrersShape.initial_closed(H.mu.values)
print("lambda =", embedded.lam, " mu =", embedded.mu)
assert to_graph(embedded) == H.bipartite
print(algorithm_32(H.bipartite).U)
