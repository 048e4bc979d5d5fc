"""Reduced homology of independence complexes.

Faces are independent vertex sets stored as bitmasks.  Boundary matrices are
built one dimension at a time and ranked by elimination over GF(2), GF(p) or
the rationals.  The field is passed as an int: a prime ``p``, or ``0`` for
``QQ``.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from functools import lru_cache

from sympy import isprime

from .graphs import BipartiteGraph, LabeledGraph

RATIONALS = 0


def check_field(field: int) -> int:
    field = int(field)
    if field != RATIONALS and not isprime(field):
        raise ValueError(f"field must be a prime or 0 (rationals), got {field}")
    return field


def independent_sets(masks: Sequence[int]) -> list[list[int]]:
    """All independent sets, grouped by size (index 0 holds the empty set)."""
    faces = [0]
    for v, nb in enumerate(masks):
        bit = 1 << v
        faces += [f | bit for f in faces if not f & nb]
    by_size: list[list[int]] = [[] for _ in range(max(f.bit_count() for f in faces) + 1)]
    for f in faces:
        by_size[f.bit_count()].append(f)
    return by_size


def _rank_gf2(columns: list[int]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for c in columns:
        while c:
            top = c.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = c
                rank += 1
                break
            c ^= p
    return rank


def _rank_sparse(columns: list[dict[int, int]], field: int) -> int:
    """Rank over GF(p) (field = p) or QQ (field = 0); columns are sparse dicts."""
    pivots: dict[int, dict] = {}
    rank = 0
    for col in columns:
        c = dict(col) if field else {k: Fraction(v) for k, v in col.items()}
        while c:
            top = max(c)
            p = pivots.get(top)
            if p is None:
                pivots[top] = c
                rank += 1
                break
            if field:
                factor = c[top] * pow(p[top], -1, field) % field
                for k, v in p.items():
                    nv = (c.get(k, 0) - factor * v) % field
                    if nv:
                        c[k] = nv
                    else:
                        c.pop(k, None)
            else:
                factor = c[top] / p[top]
                for k, v in p.items():
                    nv = c.get(k, 0) - factor * v
                    if nv:
                        c[k] = nv
                    else:
                        c.pop(k, None)
    return rank


def _boundary_rank(upper: list[int], lower: list[int], field: int) -> int:
    """Rank of the boundary map from faces *upper* to faces *lower* (one size down)."""
    index = {f: k for k, f in enumerate(lower)}
    if field == 2:
        cols = []
        for f in upper:
            col = 0
            g = f
            while g:
                b = g & -g
                col |= 1 << index[f ^ b]
                g ^= b
            cols.append(col)
        return _rank_gf2(cols)
    cols = []
    for f in upper:
        col = {}
        g = f
        sign = 1
        while g:
            b = g & -g
            col[index[f ^ b]] = sign % field if field else sign
            sign = -sign
            g ^= b
        cols.append(col)
    return _rank_sparse(cols, field)


def homology_from_masks(masks: Sequence[int], field: int = 2, *, check_euler: bool = True) -> tuple[int, ...]:
    """Reduced homology dims of the independence complex of a mask graph.

    ``result[q + 1]`` is ``dim H~_q``; the tuple runs from ``q = -1`` up to
    the dimension of the complex.
    """
    by_size = independent_sets(masks)
    if any(nb == 0 for nb in masks):
        # an isolated vertex is a cone point
        return (0,) * len(by_size)
    top = len(by_size) - 1
    ranks = [0] * (top + 2)
    for d in range(1, top + 1):
        ranks[d] = _boundary_rank(by_size[d], by_size[d - 1], field)
    dims = tuple(len(by_size[d]) - ranks[d] - ranks[d + 1] for d in range(top + 1))
    if check_euler:
        lhs = sum((-1) ** d * h for d, h in enumerate(dims))
        rhs = sum((-1) ** d * len(fs) for d, fs in enumerate(by_size))
        if lhs != rhs:
            raise ArithmeticError("Euler characteristic mismatch; rank computation is broken")
    return dims


@lru_cache(maxsize=1 << 16)
def _cached_homology(masks: tuple[int, ...], field: int) -> tuple[int, ...]:
    return homology_from_masks(masks, field)


def relabel_masks(masks: Sequence[int], within: int) -> tuple[int, ...]:
    """Adjacency masks of the subgraph induced on *within*, renumbered 0..k-1."""
    pos = {}
    order = []
    w = within
    while w:
        b = w & -w
        pos[b.bit_length() - 1] = len(order)
        order.append(b.bit_length() - 1)
        w ^= b
    out = []
    for v in order:
        nb = masks[v] & within
        m = 0
        while nb:
            b = nb & -nb
            m |= 1 << pos[b.bit_length() - 1]
            nb ^= b
        out.append(m)
    return tuple(out)


def subgraph_homology(masks: Sequence[int], within: int, field: int = 2) -> tuple[int, ...]:
    """Reduced homology of the independence complex of the induced subgraph on *within*."""
    return _cached_homology(relabel_masks(masks, within), field)


def reduced_homology_dims(G: LabeledGraph | BipartiteGraph, field: int = 2) -> tuple[int, ...]:
    """``dim H~_q(Delta(G); k)`` for ``q = -1, 0, 1, ...``; entry ``q + 1`` holds ``q``.

    The graph on no vertices gives ``(1,)``: its complex is ``{emptyset}``.
    """
    field = check_field(field)
    return homology_from_masks(G.adjacency_masks(), field)


def homology_at(dims: Sequence[int], q: int) -> int:
    """Read ``dim H~_q`` out of a dims tuple, zero past the end."""
    k = q + 1
    return dims[k] if 0 <= k < len(dims) else 0
