"""Skew Ferrers graphs and the induced-matching / pruning algorithm on them.

Row ``i`` of a skew Ferrers shape ``(lambda, mu)`` with ``m = lambda_1``
columns covers columns ``m - lambda_i + 1`` through ``m - mu_i``.  Both ends
move weakly right going down the rows, which is what keeps the greedy loop
in :func:`algorithm_32` honest: the last row and the last column always meet.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from .graphs import BipartiteGraph


class ShapeError(ValueError):
    pass


class AlgorithmError(RuntimeError):
    """The loop reached a state where the last x and last y are not adjacent.

    ``xs`` and ``ys`` hold the surviving vertices at that moment;
    ``zero_rows`` / ``zero_columns`` are the surviving ones with no
    surviving neighbor.
    """

    def __init__(self, message: str, xs=(), ys=(), zero_rows=(), zero_columns=()):
        super().__init__(message)
        self.xs = tuple(sorted(xs))
        self.ys = tuple(sorted(ys))
        self.zero_rows = tuple(sorted(zero_rows))
        self.zero_columns = tuple(sorted(zero_columns))


Edge = tuple[int, int]


@dataclass(frozen=True)
class SkewFerrersShape:
    lam: tuple[int, ...]
    mu: tuple[int, ...]

    def __post_init__(self):
        lam = tuple(int(v) for v in self.lam)
        mu = tuple(int(v) for v in self.mu)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        if not lam:
            raise ShapeError("shape needs at least one row")
        if len(lam) != len(mu):
            raise ShapeError(f"lambda has {len(lam)} rows but mu has {len(mu)}")
        if lam[0] < 1:
            raise ShapeError("lambda_1 must be positive")
        for i in range(len(lam) - 1):
            if lam[i + 1] > lam[i]:
                raise ShapeError(f"lambda is not decreasing at row {i + 2}")
            if mu[i + 1] > mu[i]:
                raise ShapeError(f"mu is not decreasing at row {i + 2}")
        for i, (a, b) in enumerate(zip(lam, mu), start=1):
            if b < 0 or a < 0:
                raise ShapeError(f"negative entry in row {i}")
            if b > a:
                raise ShapeError(f"mu_{i} = {b} exceeds lambda_{i} = {a}")

    @property
    def n_rows(self) -> int:
        return len(self.lam)

    @property
    def m_cols(self) -> int:
        return self.lam[0]

    def row_columns(self, i: int) -> range:
        """Columns of row ``i`` (1-based); empty when ``mu_i = lambda_i``."""
        m = self.m_cols
        return range(m - self.lam[i - 1] + 1, m - self.mu[i - 1] + 1)

    @classmethod
    def initial_closed(cls, mu_h: Sequence[int]) -> SkewFerrersShape:
        """Embedding of an initial-closed graph: ``n - 1`` rows, ``lambda_i = n - i``."""
        rows = len(mu_h)
        return cls(tuple(rows + 1 - i for i in range(1, rows + 1)), tuple(mu_h))


def to_graph(shape: SkewFerrersShape) -> BipartiteGraph:
    labels_x = tuple(range(1, shape.n_rows + 1))
    labels_y = tuple(range(1, shape.m_cols + 1))
    edges = frozenset((i, j) for i in labels_x for j in shape.row_columns(i))
    return BipartiteGraph(labels_x, labels_y, edges)


@dataclass
class Step:
    """One pass of the loop, recorded for traces and homology checks."""

    xs: tuple[int, ...]
    ys: tuple[int, ...]
    edge: Edge
    neighborhood: frozenset[tuple[str, int]]
    pruned: tuple[int, ...]


@dataclass
class AlgOutcome:
    U: list[Edge]
    S: list[int]
    blocks: dict[Edge, frozenset[Edge]] = field(default_factory=dict)
    trace: list[Step] = field(default_factory=list)


def _closed_neighborhood(H: BipartiteGraph, xs: set[int], ys: set[int], e: Edge):
    i, j = e
    nb = {("x", i), ("y", j)}
    nb.update(("y", c) for c in H.x_neighbors(i) if c in ys)
    nb.update(("x", r) for r in H.y_neighbors(j) if r in xs)
    return frozenset(nb)


def algorithm_32(H: BipartiteGraph, shape: SkewFerrersShape | None = None) -> AlgOutcome:
    """Greedy induced matching ``U`` and pruned column set ``S``.

    Each pass pairs the largest surviving x with the largest surviving y,
    deletes their joint neighborhood, and prunes every y whose column has
    gone to zero.  If *shape* is given it must describe *H* exactly.
    """
    if shape is not None and to_graph(shape) != H:
        raise ShapeError("graph does not match the given shape")
    xs, ys = set(H.x_labels), set(H.y_labels)
    U: list[Edge] = []
    S: list[int] = []
    trace = []
    while xs or ys:
        e = (max(xs, default=None), max(ys, default=None))
        if e not in H.edges:
            rows = sorted(i for i in xs if not H.x_neighbors(i) & ys)
            cols = sorted(j for j in ys if not H.y_neighbors(j) & xs)
            where = "".join([f"; zero rows {rows}" if rows else "", f"; zero columns {cols}" if cols else ""])
            raise AlgorithmError(f"x{e[0]} and y{e[1]} are not adjacent{where}", xs, ys, rows, cols)
        nb = _closed_neighborhood(H, xs, ys, e)
        before = (tuple(sorted(xs)), tuple(sorted(ys)))
        xs -= {k for side, k in nb if side == "x"}
        ys -= {k for side, k in nb if side == "y"}
        pruned = tuple(sorted(j for j in ys if not (H.y_neighbors(j) & xs)))
        ys -= set(pruned)
        U.append(e)
        S.extend(pruned)
        trace.append(Step(before[0], before[1], e, nb, pruned))
    out = AlgOutcome(U, sorted(S), trace=trace)
    out.blocks = rect_decomposition(out, H)
    return out


def rect_decomposition(outcome: AlgOutcome, H: BipartiteGraph) -> dict[Edge, frozenset[Edge]]:
    """Edges grouped by matching edge ``{x_i, y_j}``.

    ``E_{x_i y_j}`` holds the edges ``x_k y_l`` with ``k <= i``, ``l <= j``
    touching ``N_H({x_i, y_j})``, neighborhoods taken in the full graph.
    Raises if the groups fail to partition the edge set.
    """
    blocks = {}
    for i, j in outcome.U:
        near_y = H.x_neighbors(i) | {j}
        near_x = H.y_neighbors(j) | {i}
        blocks[(i, j)] = frozenset(
            (k, l) for k, l in H.edges
            if k <= i and l <= j and (k in near_x or l in near_y)
        )
    seen: set[Edge] = set()
    for part in blocks.values():
        if seen & part:
            raise AlgorithmError("rectangular blocks overlap")
        seen |= part
    if seen != H.edges:
        raise AlgorithmError("rectangular blocks do not cover the edge set")
    return blocks


def ferrers_pd(lam: Sequence[int]) -> int:
    """Projective dimension of a Ferrers graph: ``max_j (lambda_j + j - 1)``."""
    if not lam:
        raise ShapeError("empty partition")
    for a, b in zip(lam, lam[1:]):
        if b > a:
            raise ShapeError("partition must be decreasing")
    if lam[-1] < 1:
        raise ShapeError("Ferrers graphs have no empty rows")
    return max(v + j for j, v in enumerate(lam))
