"""Sequential Bron-Kerbosch variants, pivot selection, root extraction, and
an independent brute-force oracle.

The sequential enumerators here operate on whole-graph adjacency packed
into Python integers; they are the reference implementations the parallel
scheduler is checked against. ``oracle_enumerate`` is deliberately naive
(subset enumeration) and shares no traversal code with anything else.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from mce.bitset import iter_bits
from mce.graph import Graph

ORACLE_MAX_VERTICES = 24


class CliqueSink:
    """Receives maximal cliques: always counts, optionally collects.

    Collection is capped so that graphs with huge clique counts can still
    be counted exactly; ``total`` is always the true count.
    """

    __slots__ = ("collect_limit", "total", "collected")

    def __init__(self, collect_limit: int | None = None) -> None:
        self.collect_limit = collect_limit
        self.total = 0
        self.collected: list[tuple[int, ...]] = []

    @classmethod
    def counting(cls) -> "CliqueSink":
        return cls(collect_limit=None)

    @classmethod
    def collecting(cls, limit: int = 1 << 20) -> "CliqueSink":
        return cls(collect_limit=limit)

    def report(self, vertices: Iterable[int]) -> None:
        self.total += 1
        if self.collect_limit is not None and len(self.collected) < self.collect_limit:
            self.collected.append(tuple(sorted(int(v) for v in vertices)))

    def merge(self, other: "CliqueSink") -> None:
        self.total += other.total
        if self.collect_limit is not None:
            room = self.collect_limit - len(self.collected)
            if room > 0:
                self.collected.extend(other.collected[:room])

    def clique_set(self) -> set[tuple[int, ...]]:
        return set(self.collected)


@dataclass(frozen=True)
class RootTask:
    """Seed state for one independent subtree.

    ``root_vertices`` holds one vertex (per-vertex roots) or two (per-edge
    roots); every member of P and X is adjacent to all of them, and P and X
    are disjoint.
    """

    root_vertices: tuple[int, ...]
    P: np.ndarray
    X: np.ndarray
    origin_index: int


class PivotChoice(NamedTuple):
    kind: str  # "p", "x" (candidate shares the local P space) or "xx"
    vertex: int  # local id, or position label for "xx"
    neighbors: int  # bit mask over P columns


def select_pivot(
    p_bits: int,
    x_bits: int,
    rows: Sequence[int],
    xx_rows: Iterable[tuple[int, int]] = (),
) -> PivotChoice:
    """Pick the candidate with the most neighbors inside P.

    Candidates are the set bits of ``p_bits | x_bits`` (indices into
    ``rows``) plus any ``(label, row)`` pairs in ``xx_rows`` for excluded
    vertices whose adjacency rows live outside the local id space.
    Ties go to the smallest local id; an ``xx_rows`` entry wins only when
    strictly better, first occurrence first.
    """
    best_count = -1
    best = None
    for v in iter_bits(p_bits | x_bits):
        c = (rows[v] & p_bits).bit_count()
        if c > best_count:
            best_count = c
            best = PivotChoice("p" if (p_bits >> v) & 1 else "x", v, rows[v])
    for label, row in xx_rows:
        c = (row & p_bits).bit_count()
        if c > best_count:
            best_count = c
            best = PivotChoice("xx", label, row)
    if best is None:
        raise ValueError("empty pivot candidate set")
    return best


def adjacency_masks(g: Graph) -> list[int]:
    """Whole-graph adjacency as one packed integer row per vertex."""
    rows = []
    for v in range(g.num_vertices):
        row = 0
        for u in g.neighbors(v):
            row |= 1 << int(u)
        rows.append(row)
    return rows


def bk_basic(g: Graph, sink: CliqueSink, metrics: dict | None = None) -> int:
    """Plain Bron-Kerbosch without pivoting. Returns the clique count."""
    if g.num_vertices == 0:
        if metrics is not None:
            metrics["nodes"] = 0
        return 0
    rows = adjacency_masks(g)
    nodes = 0

    def go(r: list[int], p: int, x: int) -> None:
        nonlocal nodes
        nodes += 1
        if p == 0 and x == 0:
            sink.report(r)
            return
        for v in iter_bits(p):
            vb = 1 << v
            r.append(v)
            go(r, p & rows[v], x & rows[v])
            r.pop()
            p &= ~vb
            x |= vb

    go([], (1 << g.num_vertices) - 1, 0)
    if metrics is not None:
        metrics["nodes"] = nodes
    return sink.total


def bk_pivot(g: Graph, sink: CliqueSink, metrics: dict | None = None) -> int:
    """Bron-Kerbosch branching only on non-neighbors of a greedily chosen
    pivot (the candidate covering most of P). Returns the clique count."""
    if g.num_vertices == 0:
        if metrics is not None:
            metrics["nodes"] = 0
        return 0
    rows = adjacency_masks(g)
    nodes = 0

    def go(r: list[int], p: int, x: int) -> None:
        nonlocal nodes
        nodes += 1
        if p == 0 and x == 0:
            sink.report(r)
            return
        if p == 0:
            return
        pivot = select_pivot(p, x, rows)
        for v in iter_bits(p & ~pivot.neighbors):
            vb = 1 << v
            r.append(v)
            go(r, p & rows[v], x & rows[v])
            r.pop()
            p &= ~vb
            x |= vb

    go([], (1 << g.num_vertices) - 1, 0)
    if metrics is not None:
        metrics["nodes"] = nodes
    return sink.total


def first_level_root(g: Graph, v: int) -> RootTask:
    """Per-vertex root: P = later neighbors of v, X = earlier neighbors."""
    adj = g.neighbors(v)
    cut = int(np.searchsorted(adj, v))
    return RootTask((v,), adj[cut:].copy(), adj[:cut].copy(), origin_index=v)


def first_level_roots(g: Graph) -> Iterator[RootTask]:
    for v in range(g.num_vertices):
        yield first_level_root(g, v)


def second_level_root(g: Graph, edge_index: int) -> RootTask:
    """Per-edge root: P/X are common neighbors after/before the later endpoint."""
    u, v = (int(a) for a in g.edges()[edge_index])
    common = np.intersect1d(g.neighbors(u), g.neighbors(v), assume_unique=True)
    cut = int(np.searchsorted(common, max(u, v)))
    return RootTask((u, v), common[cut:].copy(), common[:cut].copy(),
                    origin_index=edge_index)


def second_level_roots(g: Graph) -> Iterator[RootTask]:
    for e in range(len(g.edges())):
        yield second_level_root(g, e)


def oracle_enumerate(g: Graph) -> list[tuple[int, ...]]:
    """Enumerate maximal cliques by checking every vertex subset.

    Vectorized over all 2^n subset masks, but still a brute-force
    enumeration with no shared logic with the traversal engines.
    Refuses graphs with more than 24 vertices.
    """
    n = g.num_vertices
    if n > ORACLE_MAX_VERTICES:
        raise ValueError(f"oracle limited to {ORACLE_MAX_VERTICES} vertices, got {n}")
    if n == 0:
        return []
    rows = np.array(adjacency_masks(g), dtype=np.uint32)
    closed = rows | (np.uint32(1) << np.arange(n, dtype=np.uint32))
    subsets = np.arange(1 << n, dtype=np.uint32)
    is_clique = np.ones(len(subsets), dtype=bool)
    for v in range(n):
        inside = (subsets >> np.uint32(v)) & np.uint32(1) == 1
        fits = (subsets & ~closed[v]) == 0
        is_clique &= ~inside | fits
    extendable = np.zeros(len(subsets), dtype=bool)
    for u in range(n):
        outside = (subsets >> np.uint32(u)) & np.uint32(1) == 0
        joins_all = (subsets & ~rows[u]) == 0
        extendable |= outside & joins_all
    maximal = is_clique & ~extendable & (subsets != 0)
    return sorted(
        tuple(v for v in range(n) if (int(mask) >> v) & 1)
        for mask in subsets[maximal]
    )
