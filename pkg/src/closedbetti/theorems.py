"""Closed-form pd / reg / extremal predictions and the harness that checks them.

Predictions take the mu-vector of a block (length ``n``, or length ``n - 1``
with ``n`` passed explicitly).  ``s`` is the number of leading positive
entries.  Every formula that applies is evaluated; when several give an
exact pd they must agree.

Source tags used in reports:

``cohen_macaulay``      ``s = 0``: pd ``n-1``, reg 1
``single_positive``     ``s = 1``: pd ``2(n-1) - (mu_1 + 1)``
``all_ones``            ``mu_1 = ... = mu_s = 1``: pd ``2(n-1) - (s + 1)``
``constant``            ``mu_1 = ... = mu_s = c``: pd ``2(n-1) - (c + s)``
``strictly_decreasing`` ``mu_s < ... < mu_1 < n - s``: pd ``2(n-1) - (mu_s + s)``
``staircase_bound``     ``mu_1 < n - s``: pd ``<= max_j 2(n-1) - (mu_j + j)``
``matching_bound``      always: pd ``>= 2(n-1) - (|U| + |S|)``
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .betti import DEFAULT_BUDGET, BettiTable, BudgetExceeded, betti_table, extremal_bettis
from .closed import MuVector, chain_decompose
from .enumeration import enumerate_mu_vectors
from .graphs import BipartiteGraph, LabeledGraph, induced_matching_number
from .initial import InitialClosedGraph, block_mu, trimmed_initial_graph
from .skew_ferrers import AlgOutcome, algorithm_32

TRANSFER_LABEL = "transferred by Hilbert-function argument"


class InconsistentPrediction(AssertionError):
    """Two exact formulas disagree on the same mu-vector."""


@dataclass(frozen=True)
class PdPrediction:
    """What the closed forms say about one block (or a glued chain).

    ``kind`` is ``"exact"``, ``"upper_bound"``, ``"lower_bound"`` or
    ``"none"``; ``value`` is the pd (or bound) it names.  ``lower`` and
    ``upper`` carry the two general bounds whenever they apply.
    """

    kind: str
    value: int | None
    sources: tuple[str, ...] = ()
    lower: int | None = None
    upper: int | None = None
    reg_predicted: int | None = None
    extremal_predicted: tuple[int, int] | None = None
    diagnostic: str = ""

    @property
    def interval(self) -> tuple[int | None, int | None]:
        if self.kind == "exact":
            return self.value, self.value
        return self.lower, self.upper


def _shape(mu, n):
    full = block_mu(mu, n)
    return full, full.n, full.values, full.s


def exact_pd_formulas(mu: MuVector | Sequence[int], n: int | None = None) -> dict[str, int]:
    """Every exact pd formula whose hypothesis holds, keyed by source tag."""
    _, n, m, s = _shape(mu, n)
    two = 2 * (n - 1)
    out = {}
    if s == 0:
        out["cohen_macaulay"] = n - 1
        return out
    if s == 1:
        out["single_positive"] = two - (m[0] + 1)
    if all(v == 1 for v in m[:s]):
        out["all_ones"] = two - (s + 1)
    if all(v == m[0] for v in m[:s]):
        out["constant"] = two - (m[0] + s)
    if all(m[k] > m[k + 1] for k in range(s - 1)) and m[0] < n - s:
        out["strictly_decreasing"] = two - (m[s - 1] + s)
    return out


def staircase_bound(mu: MuVector | Sequence[int], n: int | None = None) -> int | None:
    """Upper bound ``max_{j<=s} 2(n-1) - (mu_j + j)``, only when ``mu_1 < n - s``."""
    _, n, m, s = _shape(mu, n)
    if s == 0 or m[0] >= n - s:
        return None
    return max(2 * (n - 1) - (m[j - 1] + j) for j in range(1, s + 1))


def matching_bound(outcome: AlgOutcome, n: int) -> int:
    return 2 * (n - 1) - (len(outcome.U) + len(outcome.S))


def matching_corner(outcome: AlgOutcome, n: int) -> tuple[int, int]:
    """Position ``(2(n-1)-|U|-|S|, 2(n-1)-|S|)`` forced nonzero by the algorithm."""
    return matching_bound(outcome, n), 2 * (n - 1) - len(outcome.S)


def predict_pd(mu: MuVector | Sequence[int], n: int | None = None) -> PdPrediction:
    full, n, m, s = _shape(mu, n)
    H = InitialClosedGraph.from_mu(full)
    lower = matching_bound(algorithm_32(H.bipartite), n)
    upper = staircase_bound(full)
    exact = exact_pd_formulas(full)
    if exact:
        values = set(exact.values())
        if len(values) != 1:
            raise InconsistentPrediction(f"exact formulas disagree on {full}: {exact}")
        return PdPrediction("exact", values.pop(), tuple(exact), lower, upper)
    if upper is not None:
        return PdPrediction("upper_bound", upper, ("staircase_bound",), lower, upper)
    return PdPrediction("lower_bound", lower, ("matching_bound",), lower, None)


def predict_extremal(mu: MuVector | Sequence[int], n: int | None = None) -> PdPrediction:
    """Unique extremal corner ``(p, p + r)`` under one of the three block hypotheses."""
    full, n, m, s = _shape(mu, n)
    two = 2 * (n - 1)
    base = predict_pd(full)
    if s == 0:
        p, r, src = n - 1, 1, "cohen_macaulay"
    elif all(v == m[0] for v in m[:s]):
        p, r, src = two - (m[0] + s), 2, "constant"
    elif s >= 2 and all(m[k] > m[k + 1] for k in range(s - 1)) and m[0] < n - s:
        p, r, src = two - (m[s - 1] + s), 3, "strictly_decreasing"
    else:
        return PdPrediction("none", None, (), base.lower, base.upper,
                            diagnostic=f"{full} meets none of the three hypotheses")
    if base.kind == "exact" and base.value != p:
        raise InconsistentPrediction(f"extremal pd {p} disagrees with pd prediction {base.value}")
    return PdPrediction("exact", p, (src,), base.lower, base.upper, r, (p, p + r))


def meets_block_hypotheses(mu: MuVector | Sequence[int], n: int | None = None) -> bool:
    return predict_extremal(mu, n).kind == "exact"


def compose_glued(block_predictions: Iterable[PdPrediction]) -> PdPrediction:
    """Add corners over a chain of blocks: ``p = sum p_i``, ``r = sum r_i``."""
    preds = list(block_predictions)
    missing = [k for k, b in enumerate(preds, start=1) if b.extremal_predicted is None or b.reg_predicted is None]
    if missing:
        return PdPrediction("none", None, (),
                            diagnostic=f"blocks {missing} have no predicted unique extremal corner")
    p = sum(b.value for b in preds)
    r = sum(b.reg_predicted for b in preds)
    return PdPrediction("exact", p, ("gluing",), reg_predicted=r, extremal_predicted=(p, p + r))


# ---------------------------------------------------------------- verification


@dataclass
class Check:
    name: str
    scope: str
    passed: bool
    observed: object
    predicted: object

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"{mark} [{self.scope}] {self.name}: observed={self.observed} predicted={self.predicted}"


@dataclass
class BlockReport:
    vertices: tuple[int, ...]
    mu: MuVector
    initial: InitialClosedGraph
    outcome: AlgOutcome
    pd_prediction: PdPrediction
    extremal_prediction: PdPrediction
    table: BettiTable | None = None


@dataclass
class VerificationReport:
    graph: LabeledGraph
    field: int
    blocks: list[BlockReport]
    glued: PdPrediction
    table: BettiTable | None
    extremals: list[tuple[int, int, int]] | None
    checks: list[Check] = field(default_factory=list)
    oracle_skipped: bool = False
    transferred: dict | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def summary(self) -> str:
        lines = [f"graph: {self.graph}", f"field: {'QQ' if self.field == 0 else f'GF({self.field})'}"]
        for k, b in enumerate(self.blocks, start=1):
            lines.append(f"block {k}: vertices {b.vertices} mu={b.mu} U={b.outcome.U} S={b.outcome.S}")
        if self.oracle_skipped:
            lines.append("oracle skipped: over budget")
        elif self.table is not None:
            lines.append(f"pd={self.table.pd} reg={self.table.reg} extremal={self.extremals}")
        if self.transferred:
            lines.append(f"R/J_G extremal {self.transferred['corner']} = {self.transferred['value']} ({self.transferred['label']})")
        lines += [c.line() for c in self.checks]
        lines.append("ALL PASS" if self.passed else f"{len(self.failures())} FAILED")
        return "\n".join(lines)


def block_checks(mu: MuVector, table: BettiTable, outcome: AlgOutcome, H: BipartiteGraph, scope: str) -> list[Check]:
    """Oracle table of one initial-closed block against every applicable closed form."""
    n = mu.n
    checks = []
    im = induced_matching_number(H)
    checks.append(Check("reg = |U|", scope, table.reg == len(outcome.U), table.reg, len(outcome.U)))
    checks.append(Check("reg = im", scope, table.reg == im, table.reg, im))
    corner = matching_corner(outcome, n)
    checks.append(Check(f"beta{corner} != 0", scope, table[corner] != 0, table[corner], "nonzero"))
    lower = matching_bound(outcome, n)
    checks.append(Check("pd >= 2(n-1)-|U|-|S|", scope, table.pd >= lower, table.pd, f">= {lower}"))
    upper = staircase_bound(mu)
    if upper is not None:
        checks.append(Check("pd <= staircase bound", scope, table.pd <= upper, table.pd, f"<= {upper}"))
    for src, value in exact_pd_formulas(mu).items():
        checks.append(Check(f"pd exact ({src})", scope, table.pd == value, table.pd, value))
    ext = predict_extremal(mu)
    rep = extremal_bettis(table)
    if ext.extremal_predicted is not None:
        p, q = ext.extremal_predicted
        ok = rep.unique and rep.extremals[0][:2] == (p, q)
        checks.append(Check(f"unique extremal ({ext.sources[0]})", scope, ok,
                            [e[:2] for e in rep.extremals], [(p, q)]))
    cm = [table.pd == n - 1, mu.s == 0, table.reg == 1]
    checks.append(Check("pd=n-1 <=> mu=0 <=> reg=1", scope, len(set(cm)) == 1, cm, "all equal"))
    return checks


def verify_graph(G: LabeledGraph, field: int = 2, *, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> VerificationReport:
    """Run the oracle and every applicable prediction on a connected closed graph."""
    chain = chain_decompose(G)
    blocks = []
    for b in chain.blocks:
        H = InitialClosedGraph.from_mu(b.mu)
        blocks.append(BlockReport(b.vertices, b.mu, H, algorithm_32(H.bipartite),
                                  predict_pd(b.mu), predict_extremal(b.mu)))
    glued = compose_glued(b.extremal_prediction for b in blocks)
    report = VerificationReport(G, field, blocks, glued, None, None)

    whole = trimmed_initial_graph(G)
    try:
        table = betti_table(whole, field, budget=budget, jobs=jobs)
    except BudgetExceeded:
        report.oracle_skipped = True
        return report
    report.table = table
    rep = extremal_bettis(table)
    report.extremals = rep.extremals

    for k, b in enumerate(blocks, start=1):
        b.table = betti_table(b.initial.bipartite, field, budget=budget)
        report.checks += block_checks(b.mu, b.table, b.outcome, b.initial.bipartite, f"block {k}")

    p = sum(b.table.pd for b in blocks)
    r = sum(b.table.reg for b in blocks)
    report.checks.append(Check("pd additive over blocks", "graph", table.pd == p, table.pd, p))
    report.checks.append(Check("reg additive over blocks", "graph", table.reg == r, table.reg, r))
    if all(b.table[(b.table.pd, b.table.pd + b.table.reg)] for b in blocks):
        corner = (p, p + r)
        report.checks.append(Check(f"glued corner beta{corner} != 0", "graph", table[corner] != 0,
                                   table[corner], "nonzero"))
    if glued.kind == "exact":
        ok = rep.unique and rep.extremals[0][:2] == glued.extremal_predicted
        report.checks.append(Check("glued unique extremal", "graph", ok,
                                   [e[:2] for e in rep.extremals], [glued.extremal_predicted]))
        report.transferred = {
            "corner": glued.extremal_predicted,
            "value": table[glued.extremal_predicted],
            "pd": glued.value,
            "reg": glued.reg_predicted,
            "label": TRANSFER_LABEL,
        }
    return report


# ------------------------------------------- deletion and link identities


def _pd(G, field: int) -> int:
    return betti_table(G, field).pd


def deletion_link_checks(G: LabeledGraph, x: int, field: int = 2) -> list[Check]:
    """The five pd relations between ``G``, ``G \\ x`` and ``G_x = G \\ N[x]``."""
    deg = G.degree(x)
    pd_g = _pd(G, field)
    pd_del = _pd(G.remove([x]), field)
    pd_link = _pd(G.remove(G.neighbors(x) | {x}), field)
    scope = f"{G} at {x}"
    colon = pd_link + deg
    checks = [
        Check("(1) pd(G_x)+deg <= max(pd G, pd G\\x)", scope, colon <= max(pd_g, pd_del), colon, max(pd_g, pd_del)),
        Check("(2) pd G <= max(pd(G_x)+deg, pd(G\\x)+1)", scope, pd_g <= max(colon, pd_del + 1), pd_g, max(colon, pd_del + 1)),
        Check("(3) 1+pd(G\\x) <= max(pd(G_x)+deg+1, pd G)", scope, 1 + pd_del <= max(colon + 1, pd_g), 1 + pd_del, max(colon + 1, pd_g)),
    ]
    if 1 + pd_del <= colon:
        checks.append(Check("(4) pd G = pd(G_x)+deg", scope, pd_g == colon, pd_g, colon))
    if colon < pd_del:
        checks.append(Check("(5) pd G = pd(G\\x)+1", scope, pd_g == pd_del + 1, pd_g, pd_del + 1))
    return checks


def random_graph(rng: random.Random, max_vertices: int = 12) -> LabeledGraph:
    n = rng.randint(1, max_vertices)
    p = rng.choice([0.2, 0.35, 0.5, 0.7])
    edges = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if rng.random() < p]
    return LabeledGraph.on(n, edges)


def last_positive_row_checks(mu: MuVector | Sequence[int], n: int | None = None, field: int = 2) -> list[Check]:
    """Deletion / link identities at ``x_s`` for a block with ``s >= 2``."""
    full, n, m, s = _shape(mu, n)
    if s < 2:
        return []
    H = InitialClosedGraph.from_mu(full).bipartite
    scope = f"mu={full}"
    checks = []

    small = H.induced(range(1, s), range(1, s))
    mu_small = tuple(max(0, m[j - 1] - (n - s)) for j in range(1, s))
    try:
        expected = InitialClosedGraph.from_mu(mu_small, n=s).bipartite
        same = expected == small
    except ValueError:
        same = False
    checks.append(Check("H[x_<s, y_<s] initial-closed with shifted mu", scope, same, sorted(small.edges), mu_small))

    xs = ("x", s)
    link = H.remove(H.neighbors(xs) | {xs})
    pd_link = _pd(link, field)
    want = n - 1 - s + _pd(small, field)
    checks.append(Check("pd(H_{x_s}) = n-1-s+pd(H')", scope, pd_link == want, pd_link, want))
    checks.append(Check("pd(H_{x_s}) >= n-2, equality iff mu_1 <= n-s", scope,
                        pd_link >= n - 2 and ((pd_link == n - 2) == (m[0] <= n - s)), pd_link, n - 2))

    if m[0] < n - s:
        pd_del = _pd(H.remove([xs]), field)
        if all(m[j] == n - s - 1 for j in range(s - 1)):
            want = n - 1
        else:
            want = 1 + _pd(H.remove([xs, ("y", s)]), field)
        checks.append(Check("pd(H \\ x_s) case split", scope, pd_del == want, pd_del, want))
    return checks


# ---------------------------------------------------------------------- scan


@dataclass
class Counterexample:
    mu: MuVector
    extremals: list[tuple[int, int, int]]

    def __str__(self):
        return f"mu={self.mu} extremals={self.extremals}"


def _scan_one(mu: MuVector, field: int, budget: int):
    H = InitialClosedGraph.from_mu(mu)
    rep = extremal_bettis(betti_table(H.bipartite, field, budget=budget))
    return rep.extremals


def conjecture_scan(n_max: int, field: int = 2, *, budget: int = DEFAULT_BUDGET, jobs: int = 1,
                    n_min: int = 2) -> list[Counterexample]:
    """Every block mu with ``n <= n_max`` whose initial-closed graph has two or more extremal Betti numbers."""
    mus = [mu for n in range(n_min, n_max + 1) for mu in enumerate_mu_vectors(n)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_one, mus, [field] * len(mus), [budget] * len(mus)))
    else:
        results = [_scan_one(mu, field, budget) for mu in mus]
    return [Counterexample(mu, ext) for mu, ext in zip(mus, results) if len(ext) != 1]
