"""Graded Betti tables of edge ideals via Hochster's formula.

``beta_{i,j}`` of ``k[V]/I(G)`` is the sum over ``|W| = j`` of
``dim H~_{j-i-1}(Delta(G[W]))``.  Subsets inducing an isolated vertex are
cones and contribute nothing.  By default the complex of ``G[W]`` is split
over the connected components of ``G[W]``: the independence complex of a
disjoint union is a join, and joins multiply the shifted homology
polynomials ``sum_q dim H~_q t^(q+1)``.  ``split=False`` ranks the whole
complex instead.
"""

from __future__ import annotations

import os
from collections import Counter
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

from .graphs import BipartiteGraph, LabeledGraph, _components_of_masks
from .homology import check_field, subgraph_homology

DEFAULT_BUDGET = 16


class BudgetExceeded(ValueError):
    """Hochster enumeration would exceed the vertex budget."""


@dataclass
class BettiTable:
    """Nonzero graded Betti numbers ``(i, j) -> beta_{i,j}`` of ``k[V]/I``."""

    entries: dict[tuple[int, int], int]
    ambient_vars: int
    field: int = 2

    def __post_init__(self):
        self.entries = {k: v for k, v in sorted(self.entries.items()) if v}
        if any(v < 0 for v in self.entries.values()):
            raise ValueError("negative Betti number")

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.entries == other.entries and self.ambient_vars == other.ambient_vars

    @property
    def pd(self) -> int:
        return max(i for i, _ in self.entries)

    @property
    def reg(self) -> int:
        return max(j - i for i, j in self.entries)

    @property
    def depth(self) -> int:
        """Auslander-Buchsbaum: number of variables minus pd."""
        return self.ambient_vars - self.pd

    def as_list(self) -> list[list[int]]:
        return [[i, j, v] for (i, j), v in self.entries.items()]

    def totals(self) -> list[int]:
        out = [0] * (self.pd + 1)
        for (i, _), v in self.entries.items():
            out[i] += v
        return out

    def diagram(self) -> str:
        """Macaulay2-style diagram: rows ``j - i``, columns ``i``, zeros as ``.``."""
        pd, reg = self.pd, self.reg
        cells = [["." for _ in range(pd + 1)] for _ in range(reg + 1)]
        for (i, j), v in self.entries.items():
            cells[j - i][i] = str(v)
        totals = [str(t) for t in self.totals()]
        widths = [max(len(str(i)), len(totals[i]), *(len(row[i]) for row in cells)) for i in range(pd + 1)]
        label_w = max(len("total:"), len(f"{reg}:"))

        def line(label, items):
            return " ".join([f"{label:>{label_w}}"] + [f"{x:>{w}}" for x, w in zip(items, widths)])

        rows = [line("", [str(i) for i in range(pd + 1)]), line("total:", totals)]
        rows += [line(f"{r}:", cells[r]) for r in range(reg + 1)]
        return "\n".join(rows)

    def __str__(self):
        return self.diagram()


@dataclass
class ExtremalReport:
    extremals: list[tuple[int, int, int]]
    unique: bool
    pd: int
    reg: int
    notes: list[str] = dc_field(default_factory=list)


def _poly_mul(a: list[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _chunk(masks: tuple[int, ...], field: int, lo: int, hi: int, split: bool) -> Counter:
    table: Counter = Counter()
    comp_cache: dict[int, tuple[int, ...]] = {}
    for W in range(lo, hi):
        w = W
        isolated = False
        while w:
            b = w & -w
            if not masks[b.bit_length() - 1] & W:
                isolated = True
                break
            w ^= b
        if isolated:
            continue
        size = W.bit_count()
        if split:
            poly = [1]
            for comp in _components_of_masks(masks, W):
                h = comp_cache.get(comp)
                if h is None:
                    h = comp_cache[comp] = subgraph_homology(masks, comp, field)
                poly = _poly_mul(poly, h)
        else:
            poly = list(subgraph_homology(masks, W, field)) if W else [1]
        for d, coef in enumerate(poly):
            if coef:
                table[(size - d, size)] += coef
    return table


def betti_table(
    G: LabeledGraph | BipartiteGraph,
    field: int = 2,
    *,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
    split: bool = True,
) -> BettiTable:
    """Graded Betti numbers of ``k[V(G)]/I(G)`` by Hochster's formula.

    ``jobs > 1`` farms contiguous ranges of subset masks out to worker
    processes; the merged table does not depend on the split.
    """
    field = check_field(field)
    masks = tuple(G.adjacency_masks())
    nv = len(masks)
    if nv > budget:
        raise BudgetExceeded(f"{nv} vertices exceeds the Hochster budget of {budget}")
    total = 1 << nv
    if jobs == 0:
        jobs = os.cpu_count() or 1
    if jobs <= 1 or total < 1024:
        counts = _chunk(masks, field, 0, total, split)
    else:
        step = -(-total // (jobs * 4))
        bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
        counts = Counter()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_chunk, masks, field, lo, hi, split) for lo, hi in bounds]
            for f in futures:
                counts.update(f.result())
    return BettiTable(dict(counts), nv, field)


def extremal_bettis(table: BettiTable) -> ExtremalReport:
    """Nonzero entries with nothing nonzero weakly to their lower right.

    ``beta_{i,j}`` is extremal when ``beta_{l,r} = 0`` for all ``l >= i``,
    ``r >= j + 1`` and ``r - l >= j - i``.
    """
    if not table.entries:
        raise ValueError("empty Betti table")
    keys = list(table.entries)
    ext = []
    for i, j in keys:
        if not any(l >= i and r >= j + 1 and r - l >= j - i for l, r in keys):
            ext.append((i, j, table[(i, j)]))
    pd, reg = table.pd, table.reg
    report = ExtremalReport(ext, len(ext) == 1, pd, reg)
    if report.unique != bool(table[(pd, pd + reg)]):
        report.notes.append("extremal count disagrees with the corner criterion")
    return report


def hilbert_numerator(table: BettiTable) -> tuple[int, ...]:
    """Coefficients (ascending powers of ``t``) of ``sum (-1)^i beta_{i,j} t^j``."""
    if not table.entries:
        return (1,)
    top = max(j for _, j in table.entries)
    coeffs = [0] * (top + 1)
    for (i, j), v in table.entries.items():
        coeffs[j] += (-1) ** i * v
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def convolve(a: BettiTable, b: BettiTable) -> BettiTable:
    """Betti table of a tensor product of two resolutions (disjoint variables)."""
    out: Counter = Counter()
    for (i1, j1), v1 in a.entries.items():
        for (i2, j2), v2 in b.entries.items():
            out[(i1 + i2, j1 + j2)] += v1 * v2
    return BettiTable(dict(out), a.ambient_vars + b.ambient_vars, a.field)
