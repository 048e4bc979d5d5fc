"""
Betti tables from homology
==========================

Every graded Betti number of an edge ideal is a sum of reduced homology
dimensions of induced subcomplexes.  Here the oracle is run on the
initial-closed graph of a six-vertex block and compared with the closed
forms.
"""

from closedbetti import (
    betti_table,
    extremal_bettis,
    hilbert_numerator,
    predict_extremal,
    predict_pd,
)
from closedbetti.initial import InitialClosedGraph
from closedbetti.skew_ferrers import algorithm_32

mu = (3, 1, 0, 0, 0, 0)
H = InitialClosedGraph.from_mu(mu).bipartite

# %% The table
table = betti_table(H)
print(table.diagram())
print("pd =", table.pd, " reg =", table.reg, " depth =", table.depth)

# %% Extremal entries
rep = extremal_bettis(table)
print("extremal:", rep.extremals, " unique:", rep.unique)
print("predicted pd:", predict_pd(mu))
print("predicted corner:", predict_extremal(mu).extremal_predicted)

# %% The matching side of the story
out = algorithm_32(H)
n = len(mu)
corner = (2 * (n - 1) - len(out.U) - len(out.S), 2 * (n - 1) - len(out.S))
print("reg =", table.reg, "= |U| =", len(out.U))
print("beta at", corner, "=", table[corner])

# %% Fields and the Hilbert numerator
for field in (2, 3, 0):
    print(field, betti_table(H, field) == table)
print("K-polynomial numerator:", hilbert_numerator(table))
