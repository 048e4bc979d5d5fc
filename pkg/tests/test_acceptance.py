"""Acceptance suite: eight criteria, exact arithmetic, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v -s`` or directly with
``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time

import pytest

from closedbetti.betti import betti_table, extremal_bettis
from closedbetti.closed import from_mu, glue_blocks, mu_vector
from closedbetti.enumeration import enumerate_mu_vectors, iter_glued_specs
from closedbetti.graphs import LabeledGraph
from closedbetti.initial import InitialClosedGraph, initial_closed_graph, trimmed_initial_graph
from closedbetti.skew_ferrers import SkewFerrersShape, algorithm_32, to_graph
from closedbetti.theorems import (
    conjecture_scan,
    deletion_link_checks,
    exact_pd_formulas,
    predict_extremal,
    random_graph,
    verify_graph,
)

RANDOM_GRAPH_SEED = 20240611
SIX_BLOCK_EDGES = [(1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)]


def _blocks(text):
    return frozenset(tuple(int(v) for v in e[1:].split("y")) for e in text.split())


def criterion_1():
    shape = SkewFerrersShape((6, 5, 4, 4, 2, 1), (4, 2, 1, 1, 0, 0))
    t0 = time.perf_counter()
    out = algorithm_32(to_graph(shape), shape)
    elapsed = time.perf_counter() - t0
    expected = {
        (6, 6): _blocks("x5y5 x5y6 x6y6"),
        (4, 5): _blocks("x2y3 x2y4 x3y3 x3y4 x3y5 x4y3 x4y4 x4y5"),
        (2, 2): _blocks("x1y1 x1y2 x2y2"),
    }
    ok = out.U == [(6, 6), (4, 5), (2, 2)] and out.S == [1] and out.blocks == expected and elapsed < 1
    return ok, f"U={out.U} S={out.S} blocks match={out.blocks == expected} in {elapsed:.3f}s"


def criterion_2():
    t0 = time.perf_counter()
    G = LabeledGraph.on(6, SIX_BLOCK_EDGES)
    mu = mu_vector(G)
    H = initial_closed_graph(G)
    table = betti_table(H.bipartite, 2)
    rep = extremal_bettis(table)
    pred = predict_extremal(mu)
    elapsed = time.perf_counter() - t0
    ok = (
        mu.values == (3, 1, 0, 0, 0, 0)
        and H.mu.values == (3, 1, 0, 0, 0)
        and rep.unique
        and rep.extremals[0][:2] == (7, 10)
        and (table.pd, table.reg) == (7, 3)
        and pred.extremal_predicted == (7, 10)
        and elapsed < 30
    )
    return ok, f"mu(G)={mu} mu(H)={H.mu} pd={table.pd} reg={table.reg} extremal={rep.extremals} in {elapsed:.2f}s"


def criterion_3():
    t0 = time.perf_counter()
    count = 0
    failures = []
    for n in range(3, 8):
        for mu in enumerate_mu_vectors(n):
            count += 1
            rep = verify_graph(from_mu(mu))
            names = {c.name for c in rep.checks}
            required = {"reg = |U|", "reg = im", "pd >= 2(n-1)-|U|-|S|"}
            required |= {f"pd exact ({src})" for src in exact_pd_formulas(mu)}
            ext = predict_extremal(mu)
            if ext.kind == "exact":
                required.add(f"unique extremal ({ext.sources[0]})")
            if not required <= names or not any(c.name.startswith("beta(") for c in rep.checks):
                failures.append(f"{mu}: missing {sorted(required - names)}")
            failures += [f"{mu}: {c.line()}" for c in rep.failures()]
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 300
    detail = f"{count} mu-vectors, {len(failures)} failures in {elapsed:.1f}s"
    return ok, detail + ("" if not failures else "; first: " + failures[0])


def criterion_4():
    checked = 0
    bad = []
    for n in range(2, 8):
        for mu in enumerate_mu_vectors(n):
            t = betti_table(InitialClosedGraph.from_mu(mu).bipartite)
            zero = mu.s == 0
            checked += 1
            if not ((t.pd == n - 1) == zero == (t.reg == 1)):
                bad.append(mu)
            if not zero and t.pd <= n - 1:
                bad.append(mu)
    return not bad, f"{checked} blocks, pd=n-1 <=> mu=0 <=> reg=1 violated by {bad}"


def criterion_5():
    t0 = time.perf_counter()
    count = 0
    bad = []
    for n_total in range(3, 9):
        for spec in iter_glued_specs(n_total, max_blocks=2, min_blocks=2):
            G = glue_blocks(spec)
            H = trimmed_initial_graph(G)
            assert H.n_vertices == 2 * n_total - 2 <= 14
            whole = betti_table(H)
            parts = [betti_table(InitialClosedGraph.from_mu(m).bipartite) for m in spec]
            p = sum(t.pd for t in parts)
            r = sum(t.reg for t in parts)
            count += 1
            if (whole.pd, whole.reg) != (p, r) or not whole[(p, p + r)]:
                bad.append(tuple(str(m) for m in spec))
    elapsed = time.perf_counter() - t0
    return not bad and elapsed < 600, f"{count} two-block graphs, {len(bad)} failures {bad[:3]} in {elapsed:.1f}s"


def criterion_6():
    count = 0
    bad = []
    for n in range(2, 7):
        for mu in enumerate_mu_vectors(n):
            H = InitialClosedGraph.from_mu(mu).bipartite
            count += 1
            if betti_table(H, 2) != betti_table(H, 3):
                bad.append(mu)
    return not bad, f"{count} initial-closed graphs, GF(2) and GF(3) tables differ on {bad}"


def criterion_7():
    t0 = time.perf_counter()
    rng = random.Random(RANDOM_GRAPH_SEED)
    graphs = vertices = 0
    failures = []
    for _ in range(200):
        G = random_graph(rng, max_vertices=12)
        graphs += 1
        for x in G.vertices:
            vertices += 1
            failures += [c.line() for c in deletion_link_checks(G, x) if not c.passed]
    elapsed = time.perf_counter() - t0
    detail = f"seed={RANDOM_GRAPH_SEED}, {graphs} graphs, {vertices} vertex tests, {len(failures)} failures in {elapsed:.1f}s"
    return not failures, detail + ("" if not failures else "; first: " + failures[0])


def criterion_8():
    t0 = time.perf_counter()
    found = conjecture_scan(7)
    scanned = sum(len(enumerate_mu_vectors(n)) for n in range(2, 8))
    elapsed = time.perf_counter() - t0
    integrity = scanned == 65 and all(len(c.extremals) > 1 for c in found)
    listing = "none" if not found else "; ".join(str(c) for c in found)
    return integrity, f"scanned {scanned} mu-vectors with n <= 7 in {elapsed:.1f}s; counterexamples: {listing}"


CRITERIA = [
    (1, "skew Ferrers worked example", criterion_1),
    (2, "initial-closed pipeline with corner (7,10)", criterion_2),
    (3, "exhaustive closed-form suite, n = 3..7", criterion_3),
    (4, "Cohen-Macaulay equivalence, n <= 7", criterion_4),
    (5, "two-block gluing, |V(H)| <= 14", criterion_5),
    (6, "GF(2) = GF(3) Betti tables, n <= 6", criterion_6),
    (7, "deletion and link pd inequalities on random graphs", criterion_7),
    (8, "unique-extremal scan, n <= 7", criterion_8),
]


def run_criterion(number, title, fn) -> bool:
    ok, detail = fn()
    print(f"{'PASS' if ok else 'FAIL'} criterion {number} ({title}): {detail}", flush=True)
    return ok


@pytest.mark.parametrize("number, title, fn", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, fn, capsys):
    with capsys.disabled():
        print()
        ok = run_criterion(number, title, fn)
    assert ok


if __name__ == "__main__":
    results = [run_criterion(*c) for c in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria passed")
    sys.exit(0 if all(results) else 1)
