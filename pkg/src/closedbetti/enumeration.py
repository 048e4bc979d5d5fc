"""Exhaustive families of block mu-vectors and chained closed graphs."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from .closed import MuVector, glue_blocks
from .graphs import LabeledGraph


@dataclass(frozen=True)
class MuFamily:
    """Every block mu-vector on ``n`` vertices, in lexicographic order."""

    n: int
    vectors: tuple[MuVector, ...]

    def __iter__(self) -> Iterator[MuVector]:
        return iter(self.vectors)

    def __len__(self):
        return len(self.vectors)


def _mu_bound(n: int, j: int) -> int:
    return max(0, n - 2 - j)


def enumerate_mu_vectors(n: int) -> MuFamily:
    """Decreasing vectors with ``mu_j <= n-2-j`` and the last three entries zero."""
    if n < 2:
        raise ValueError("blocks need at least two vertices")
    out = []

    def rec(prefix: list[int], cap: int):
        j = len(prefix) + 1
        if j > n:
            out.append(MuVector(tuple(prefix)))
            return
        for v in range(min(cap, _mu_bound(n, j)) + 1):
            prefix.append(v)
            rec(prefix, v)
            prefix.pop()

    rec([], n)
    out.sort(key=lambda m: m.values)
    return MuFamily(n, tuple(out))


def block_size_sequences(n_total: int, max_blocks: int, min_blocks: int = 1) -> Iterator[tuple[int, ...]]:
    """Block sizes ``(n_1, ..., n_k)``, ``n_i >= 2``, chained to ``n_total`` vertices."""
    def rec(remaining: int, k_left: int, acc: tuple[int, ...]):
        # remaining counts vertices still to place after the shared cut point
        if remaining == 0:
            if len(acc) >= min_blocks:
                yield acc
            return
        if k_left == 0:
            return
        for extra in range(1, remaining + 1):
            yield from rec(remaining - extra, k_left - 1, acc + (extra + 1,))

    for k in range(min_blocks, max_blocks + 1):
        for sizes in rec(n_total - 1, k, ()):
            if len(sizes) == k:
                yield sizes


def iter_glued_specs(n_total: int, max_blocks: int | None = None, min_blocks: int = 1) -> Iterator[tuple[MuVector, ...]]:
    """Block sequences in (block count, blockwise mu) order."""
    if n_total < 2:
        raise ValueError("need at least two vertices")
    if max_blocks is None:
        max_blocks = n_total - 1
    families: dict[int, MuFamily] = {}
    specs = []
    for sizes in block_size_sequences(n_total, max_blocks, min_blocks):
        for n in sizes:
            if n not in families:
                families[n] = enumerate_mu_vectors(n)
        stack: list[tuple[MuVector, ...]] = [()]
        for n in sizes:
            stack = [s + (m,) for s in stack for m in families[n]]
        specs.extend(stack)
    specs.sort(key=lambda s: (len(s), [m.values for m in s]))
    yield from specs


def enumerate_glued(n_total: int, max_blocks: int | None = None, min_blocks: int = 1) -> list[LabeledGraph]:
    """All connected closed graphs on ``n_total`` vertices built as chains of blocks."""
    return [glue_blocks(spec) for spec in iter_glued_specs(n_total, max_blocks, min_blocks)]
