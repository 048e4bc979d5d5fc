"""Betti tables of initial ideals of binomial edge ideals of closed graphs."""

from .betti import BettiTable, BudgetExceeded, ExtremalReport, betti_table, convolve, extremal_bettis, hilbert_numerator
from .closed import (
    Block,
    ChainDecomposition,
    CutPointError,
    MuVector,
    MuVectorError,
    NotClosedError,
    chain_decompose,
    check_closed,
    from_mu,
    glue_blocks,
    mu_vector,
)
from .enumeration import MuFamily, enumerate_glued, enumerate_mu_vectors, iter_glued_specs
from .graphs import (
    BipartiteGraph,
    DisconnectedGraphError,
    GraphError,
    LabeledGraph,
    connected_components,
    cut_points,
    induced_matching_number,
    is_connected,
)
from .homology import RATIONALS, reduced_homology_dims
from .initial import (
    InitialClosedGraph,
    initial_closed_graph,
    initial_graph,
    recognize_initial_closed,
    shifted_initial_graph,
    split_at_cut_points,
    trimmed_initial_graph,
)
from .skew_ferrers import AlgOutcome, AlgorithmError, ShapeError, SkewFerrersShape, algorithm_32, ferrers_pd, rect_decomposition, to_graph
from .theorems import (
    PdPrediction,
    VerificationReport,
    compose_glued,
    conjecture_scan,
    predict_extremal,
    predict_pd,
    verify_graph,
)

__version__ = "0.1.0"
