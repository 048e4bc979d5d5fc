"""Command-line front end: ``closedbetti <command> [input] [options]``.

Input is one of ``--edges "1-2,2-3"`` (``-`` reads the list from stdin),
``--mu 3,1,0,0,0,0`` (a closed graph by its mu-vector) or
``--lambda ... --mu ...`` (a skew Ferrers shape).  Exit status is 0 on
success, 1 when a verification check fails and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import __version__
from .betti import DEFAULT_BUDGET, BettiTable, BudgetExceeded, betti_table, extremal_bettis
from .closed import MuVector, chain_decompose, check_closed, from_mu, glue_blocks, mu_vector
from .enumeration import enumerate_mu_vectors, iter_glued_specs
from .graphs import GraphError, LabeledGraph, cut_points, is_connected
from .homology import check_field
from .initial import initial_graph, shifted_initial_graph
from .skew_ferrers import AlgorithmError, AlgOutcome, ShapeError, SkewFerrersShape, algorithm_32, to_graph
from .theorems import PdPrediction, conjecture_scan, verify_graph

FIELD_ENV = "CLOSEDBETTI_FIELD"


class InputError(Exception):
    def __init__(self, message: str, source: str = "input", line: int = 1, column: int = 1):
        super().__init__(message)
        self.message = message
        self.source = source
        self.line = line
        self.column = column

    def __str__(self):
        return f"{self.source}:{self.line}:{self.column}: {self.message}"


# ------------------------------------------------------------------ parsing


def _parse_int(token: str, source: str, line: int, col: int, what: str = "an integer") -> int:
    try:
        return int(token)
    except ValueError:
        raise InputError(f"expected {what}, got {token!r}", source, line, col) from None


def parse_int_list(text: str, source: str) -> tuple[int, ...]:
    """Comma-separated integers, e.g. ``"4,2,1,1,0,0"``."""
    out = []
    col = 1
    for piece in text.split(","):
        lead = len(piece) - len(piece.lstrip())
        token = piece.strip()
        if not token:
            raise InputError("empty entry", source, 1, col + lead)
        value = _parse_int(token, source, 1, col + lead)
        if value < 0:
            raise InputError(f"negative entry {value}", source, 1, col + lead)
        out.append(value)
        col += len(piece) + 1
    return tuple(out)


def parse_edges(text: str, source: str = "--edges") -> list[tuple[int, int]]:
    """Edges ``a-b`` separated by commas, whitespace or newlines; ``#`` starts a comment."""
    edges = []
    for lineno, raw in enumerate(text.splitlines() or [""], start=1):
        body = raw.split("#", 1)[0]
        col = 0
        n = len(body)
        while col < n:
            if body[col] in ", \t\r":
                col += 1
                continue
            start = col
            while col < n and body[col] not in ", \t\r":
                col += 1
            token = body[start:col]
            parts = token.split("-")
            if len(parts) != 2 or not parts[0] or not parts[1]:
                raise InputError(f"expected an edge 'a-b', got {token!r}", source, lineno, start + 1)
            a = _parse_int(parts[0], source, lineno, start + 1, "a vertex label")
            b = _parse_int(parts[1], source, lineno, start + len(parts[0]) + 2, "a vertex label")
            if a == b:
                raise InputError(f"loop {token!r} is not allowed", source, lineno, start + 1)
            edges.append((a, b))
    if not edges:
        raise InputError("no edges given", source, 1, 1)
    return edges


@dataclass
class GraphInput:
    """Exactly one of ``graph`` or ``shape`` is set."""

    graph: LabeledGraph | None = None
    shape: SkewFerrersShape | None = None
    from_mu: bool = False


def read_input(args, stdin=None) -> GraphInput:
    edges = getattr(args, "edges", None)
    mu = getattr(args, "mu", None)
    lam = getattr(args, "lam", None)
    if edges is not None and (mu is not None or lam is not None):
        raise InputError("give either --edges or --mu/--lambda, not both", "arguments")
    if edges is not None:
        if edges == "-":
            text = (stdin or sys.stdin).read()
            pairs = parse_edges(text, "<stdin>")
        else:
            pairs = parse_edges(edges, "--edges")
        verts = sorted({v for e in pairs for v in e})
        return GraphInput(graph=LabeledGraph(tuple(verts), frozenset(pairs)))
    if lam is not None:
        lam_v = parse_int_list(lam, "--lambda")
        mu_v = parse_int_list(mu, "--mu") if mu is not None else (0,) * len(lam_v)
        try:
            return GraphInput(shape=SkewFerrersShape(lam_v, mu_v))
        except ShapeError as exc:
            raise InputError(str(exc), "--lambda/--mu") from None
    if mu is not None:
        mu_v = parse_int_list(mu, "--mu")
        try:
            return GraphInput(graph=from_mu(mu_v), from_mu=True)
        except ValueError as exc:
            raise InputError(str(exc), "--mu") from None
    raise InputError("no input: use --edges, --mu or --lambda", "arguments")


def resolve_field(value: int | None) -> int:
    if value is None:
        env = os.environ.get(FIELD_ENV)
        if env is None:
            return 2
        try:
            return check_field(_parse_int(env.strip(), FIELD_ENV, 1, 1))
        except ValueError as exc:
            raise InputError(str(exc), FIELD_ENV) from None
    try:
        return check_field(value)
    except ValueError as exc:
        raise InputError(str(exc), "--field") from None


def _need_graph(inp: GraphInput, command: str) -> LabeledGraph:
    if inp.graph is None:
        raise InputError(f"'{command}' needs a graph (--edges or --mu), not a skew shape", "arguments")
    return inp.graph


def _closed_connected(G: LabeledGraph) -> None:
    if not is_connected(G):
        raise InputError("graph is not connected", "graph")
    if not check_closed(G):
        raise InputError("graph is not closed in the given labeling", "graph")


# ------------------------------------------------------------------ encoding


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [_jsonable(v) for v in items]
    if isinstance(obj, MuVector):
        return list(obj.values)
    if isinstance(obj, (bool, int, str)) or obj is None:
        return obj
    return str(obj)


def dump_json(obj) -> str:
    return json.dumps(_jsonable(obj), indent=2)


def _bipartite_json(B) -> dict:
    return {"x": list(B.x_labels), "y": list(B.y_labels), "edges": [list(e) for e in B.sorted_edges()]}


def _outcome_json(out: AlgOutcome) -> dict:
    return {
        "U": [list(e) for e in out.U],
        "S": list(out.S),
        "blocks": [{"edge": list(e), "edges": [list(f) for f in sorted(out.blocks[e])]} for e in out.U],
        "trace": [
            {
                "xs": list(st.xs),
                "ys": list(st.ys),
                "edge": list(st.edge),
                "neighborhood": [list(v) for v in sorted(st.neighborhood)],
                "pruned": list(st.pruned),
            }
            for st in out.trace
        ],
    }


def _prediction_json(p: PdPrediction) -> dict:
    return {
        "kind": p.kind,
        "value": p.value,
        "sources": list(p.sources),
        "lower": p.lower,
        "upper": p.upper,
        "reg": p.reg_predicted,
        "extremal": list(p.extremal_predicted) if p.extremal_predicted else None,
        "diagnostic": p.diagnostic,
    }


def _shape_of(inp: GraphInput) -> tuple[SkewFerrersShape, tuple[int, ...] | None]:
    """The skew shape the algorithm runs on, plus mu(G) for graph input."""
    if inp.shape is not None:
        return inp.shape, None
    G = inp.graph
    _closed_connected(G)
    mu = mu_vector(G)
    if mu.n < 2:
        raise InputError("need at least one edge", "graph")
    return SkewFerrersShape.initial_closed(mu.values[:-1]), mu.values


# ------------------------------------------------------------------ commands


def cmd_check(args, inp: GraphInput, field: int):
    G = _need_graph(inp, "check")
    connected = is_connected(G)
    closed = check_closed(G)
    result = {"closed": closed, "connected": connected, "mu": None, "block": None, "cut_points": [], "blocks": []}
    if connected and G.n >= 2:
        result["cut_points"] = sorted(cut_points(G))
        result["block"] = not result["cut_points"]
    if closed and connected and G.n >= 2:
        result["mu"] = list(mu_vector(G).values)
        result["blocks"] = [{"vertices": list(b.vertices), "mu": list(b.mu.values)}
                            for b in chain_decompose(G).blocks]
    if args.format == "json":
        return dump_json(result), 0
    lines = [f"closed: {str(closed).lower()}", f"connected: {str(connected).lower()}"]
    if result["mu"] is not None:
        lines.append(f"mu: ({','.join(map(str, result['mu']))})")
        lines.append(f"cut points: {result['cut_points'] or 'none'}")
        for k, b in enumerate(result["blocks"], start=1):
            lines.append(f"block {k}: vertices {b['vertices']} mu=({','.join(map(str, b['mu']))})")
    return "\n".join(lines), 0


def cmd_initial(args, inp: GraphInput, field: int):
    G = _need_graph(inp, "initial")
    _closed_connected(G)
    Hp = initial_graph(G)
    H = shifted_initial_graph(G)
    mu = mu_vector(G).values
    result = {
        "mu": list(mu),
        "H_prime": _bipartite_json(Hp),
        "H": {**_bipartite_json(H), "mu": list(mu[:-1])},
    }
    if args.format == "json":
        return dump_json(result), 0
    fmt = lambda es: " ".join(f"x{i}y{j}" for i, j in es)
    lines = [
        f"mu(G) = ({','.join(map(str, result['mu']))})",
        f"H'  ({len(Hp.edges)} generators): {fmt(Hp.sorted_edges())}",
        f"H   mu(H) = ({','.join(map(str, result['H']['mu']))})",
        f"H   edges: {fmt(H.sorted_edges())}",
    ]
    return "\n".join(lines), 0


def _run_alg(shape: SkewFerrersShape) -> AlgOutcome:
    try:
        return algorithm_32(to_graph(shape))
    except AlgorithmError as exc:
        raise InputError(f"algorithm does not apply to this shape: {exc}", "--lambda/--mu") from None


def cmd_alg32(args, inp: GraphInput, field: int):
    shape, mu_g = _shape_of(inp)
    out = _run_alg(shape)
    result = {"lambda": list(shape.lam), "mu": list(shape.mu)}
    if mu_g is not None:
        result["graph_mu"] = list(mu_g)
    result.update(_outcome_json(out))
    if args.format == "json":
        return dump_json(result), 0
    lines = [f"shape: lambda=({','.join(map(str, shape.lam))}) mu=({','.join(map(str, shape.mu))})"]
    for k, st in enumerate(out.trace, start=1):
        lines.append(f"step {k}: pick x{st.edge[0]}y{st.edge[1]}, remove "
                     + " ".join(f"{s}{v}" for s, v in sorted(st.neighborhood))
                     + (f", prune {' '.join(f'y{j}' for j in st.pruned)}" if st.pruned else ""))
    lines.append("U = {" + ", ".join(f"x{i}y{j}" for i, j in out.U) + "}")
    lines.append("S = {" + ", ".join(f"y{j}" for j in out.S) + "}")
    for e in out.U:
        lines.append(f"E(x{e[0]}y{e[1]}) = " + " ".join(f"x{k}y{l}" for k, l in sorted(out.blocks[e])))
    return "\n".join(lines), 0


def _table(graph, field, args) -> BettiTable:
    try:
        return betti_table(graph, field, budget=args.budget, jobs=args.jobs)
    except BudgetExceeded as exc:
        raise InputError(f"{exc}; raise --budget to compute it anyway", "--budget") from None


def cmd_betti(args, inp: GraphInput, field: int):
    shape, mu_g = _shape_of(inp)
    out = _run_alg(shape)
    table = _table(to_graph(shape), field, args)
    rep = extremal_bettis(table)
    result = {
        "mu": list(mu_g if mu_g is not None else shape.mu),
        "betti": table.as_list(),
        "pd": table.pd,
        "reg": table.reg,
        "extremal": [list(e) for e in rep.extremals],
        "unique_extremal": rep.unique,
        "alg32": {"U": [list(e) for e in out.U], "S": list(out.S)},
        "depth": table.depth,
        "field": field,
    }
    if inp.shape is not None:
        result["lambda"] = list(shape.lam)
    if args.format == "json":
        return dump_json(result), 0
    lines = [table.diagram(), "",
             f"pd = {table.pd}  reg = {table.reg}  depth = {table.depth}",
             "extremal: " + ", ".join(f"beta({i},{j}) = {v}" for i, j, v in rep.extremals)
             + ("  (unique)" if rep.unique else "")]
    return "\n".join(lines), 0


def cmd_verify(args, inp: GraphInput, field: int):
    G = _need_graph(inp, "verify")
    _closed_connected(G)
    rep = verify_graph(G, field, budget=args.budget, jobs=args.jobs)
    code = 0 if rep.passed else 1
    if args.format == "table":
        return rep.summary(), code
    result = {
        "mu": list(mu_vector(G).values),
        "field": field,
        "blocks": [
            {
                "vertices": list(b.vertices),
                "mu": list(b.mu.values),
                "U": [list(e) for e in b.outcome.U],
                "S": list(b.outcome.S),
                "pd_prediction": _prediction_json(b.pd_prediction),
                "extremal_prediction": _prediction_json(b.extremal_prediction),
            }
            for b in rep.blocks
        ],
        "glued": _prediction_json(rep.glued),
        "oracle": None if rep.table is None else {
            "pd": rep.table.pd,
            "reg": rep.table.reg,
            "depth": rep.table.depth,
            "extremal": [list(e) for e in rep.extremals],
            "unique_extremal": len(rep.extremals) == 1,
        },
        "oracle_skipped": rep.oracle_skipped,
        "transferred": rep.transferred,
        "checks": [
            {"name": c.name, "scope": c.scope, "passed": c.passed, "observed": c.observed, "predicted": c.predicted}
            for c in rep.checks
        ],
        "passed": rep.passed,
    }
    return dump_json(result), code


def cmd_enumerate(args, inp, field: int):
    if args.n < 2:
        raise InputError("n must be at least 2", "--n")
    if args.glued:
        specs = list(iter_glued_specs(args.n, args.max_blocks))
        graphs = [{"blocks": [list(m.values) for m in spec],
                   "edges": [list(e) for e in glue_blocks(spec).sorted_edges()]} for spec in specs]
        result = {"n_total": args.n, "max_blocks": args.max_blocks, "count": len(graphs), "graphs": graphs}
        if args.format == "json":
            return dump_json(result), 0
        lines = [" | ".join("(" + ",".join(map(str, b)) + ")" for b in g["blocks"]) for g in graphs]
        return "\n".join(lines + [f"{len(graphs)} graphs"]), 0
    fam = enumerate_mu_vectors(args.n)
    result = {"n": args.n, "count": len(fam), "vectors": [list(m.values) for m in fam]}
    if args.format == "json":
        return dump_json(result), 0
    return "\n".join([str(m) for m in fam] + [f"{len(fam)} vectors"]), 0


def cmd_scan(args, inp, field: int):
    if args.n_max < 2:
        raise InputError("n-max must be at least 2", "--n-max")
    found = conjecture_scan(args.n_max, field, budget=args.budget, jobs=args.jobs)
    scanned = sum(len(enumerate_mu_vectors(n)) for n in range(2, args.n_max + 1))
    result = {
        "n_max": args.n_max,
        "field": field,
        "scanned": scanned,
        "counterexamples": [{"mu": list(c.mu.values), "extremal": [list(e) for e in c.extremals]} for c in found],
    }
    if args.format == "json":
        return dump_json(result), 0
    if not found:
        return f"scanned {scanned} mu-vectors with n <= {args.n_max}: no counterexamples", 0
    return "\n".join([str(c) for c in found] + [f"{len(found)} of {scanned} mu-vectors have several extremal Betti numbers"]), 0


COMMANDS = {
    "check": (cmd_check, "closedness, mu-vector and block structure"),
    "initial": (cmd_initial, "bipartite graphs H' and H of the initial ideal"),
    "alg32": (cmd_alg32, "induced matching U, pruned columns S, blocks and trace"),
    "betti": (cmd_betti, "graded Betti table with pd, reg and extremal entries"),
    "verify": (cmd_verify, "check every applicable formula against the Betti oracle"),
    "enumerate": (cmd_enumerate, "list block mu-vectors or chained closed graphs"),
    "scan": (cmd_scan, "search for blocks with more than one extremal Betti number"),
}

NEEDS_INPUT = {"check", "initial", "alg32", "betti", "verify"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="closedbetti", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "table"], default="table")
    common.add_argument("--field", type=int, default=None,
                        help=f"2, 3, another prime, or 0 for QQ (default 2, or ${FIELD_ENV})")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="largest vertex count the Betti oracle will enumerate")
    common.add_argument("--jobs", type=int, default=1, help="worker processes (0 = all cores)")
    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("--edges", help='edge list "1-2,2-3", or - to read stdin')
    graph_in.add_argument("--mu", help="comma-separated mu-vector")
    graph_in.add_argument("--lambda", dest="lam", help="comma-separated lambda of a skew shape")

    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        parents = [common, graph_in] if name in NEEDS_INPUT else [common]
        p = sub.add_parser(name, parents=parents, help=help_text, description=help_text)
        if name == "enumerate":
            p.add_argument("--n", type=int, required=True, help="vertices (total, with --glued)")
            p.add_argument("--glued", action="store_true", help="chains of blocks instead of single blocks")
            p.add_argument("--max-blocks", type=int, default=None)
        elif name == "scan":
            p.add_argument("--n-max", type=int, required=True)
    return parser


def run(argv: list[str] | None = None, stdin=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        field = resolve_field(args.field)
        inp = read_input(args, stdin) if args.command in NEEDS_INPUT else None
        text, code = handler(args, inp, field)
    except InputError as exc:
        print(f"closedbetti: input error: {exc}", file=stderr)
        return 2
    except GraphError as exc:
        print(f"closedbetti: input error: graph:1:1: {exc}", file=stderr)
        return 2
    print(text, file=stdout)
    return code


def main() -> None:
    sys.exit(run())
