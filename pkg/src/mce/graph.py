"""Graph ingestion, canonicalization, statistics, and degeneracy ordering.

Graphs are simple and undirected, stored in compressed sparse row form
with each adjacency list sorted ascending. Construction is single-threaded;
a finished graph is immutable by convention and safe to share across
worker threads.
"""

from __future__ import annotations

import heapq
import io
from dataclasses import dataclass, field
from typing import IO, Iterable

import numpy as np


class EdgeListParseError(ValueError):
    """Raised for malformed edge-list input; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass
class Graph:
    """Undirected simple graph in CSR form.

    ``row_offsets`` has length ``num_vertices + 1``; ``col_indices`` holds
    the concatenated, strictly ascending adjacency lists. ``edge_list``
    (pairs with u < v) is derived lazily; it is only needed when seeding
    one traversal root per edge.
    """

    num_vertices: int
    row_offsets: np.ndarray
    col_indices: np.ndarray
    edge_list: np.ndarray | None = field(default=None, repr=False)

    def neighbors(self, v: int) -> np.ndarray:
        return self.col_indices[self.row_offsets[v] : self.row_offsets[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.row_offsets[v + 1] - self.row_offsets[v])

    @property
    def num_edges(self) -> int:
        return len(self.col_indices) // 2

    def has_edge(self, u: int, v: int) -> bool:
        adj = self.neighbors(u)
        i = np.searchsorted(adj, v)
        return i < len(adj) and adj[i] == v

    def edges(self) -> np.ndarray:
        """All undirected edges as an (m, 2) array with u < v, cached."""
        if self.edge_list is None:
            deg = np.diff(self.row_offsets)
            src = np.repeat(np.arange(self.num_vertices, dtype=np.int64), deg)
            keep = src < self.col_indices
            self.edge_list = np.column_stack((src[keep], self.col_indices[keep]))
        return self.edge_list

    def validate(self) -> None:
        """Linear-scan check of the CSR invariants; raises on violation."""
        ro, ci = self.row_offsets, self.col_indices
        if len(ro) != self.num_vertices + 1 or ro[0] != 0 or ro[-1] != len(ci):
            raise ValueError("row_offsets inconsistent with col_indices")
        if np.any(np.diff(ro) < 0):
            raise ValueError("row_offsets not non-decreasing")
        for v in range(self.num_vertices):
            adj = ci[ro[v] : ro[v + 1]]
            if len(adj) and (np.any(np.diff(adj) <= 0) or adj[0] == v or v in adj):
                raise ValueError(f"adjacency of {v} not strictly ascending / has loop")
        # symmetry: the reversed edge multiset must equal the forward one
        deg = np.diff(ro)
        src = np.repeat(np.arange(self.num_vertices, dtype=np.int64), deg)
        fwd = {(int(a), int(b)) for a, b in zip(src, ci)}
        if {(b, a) for a, b in fwd} != fwd:
            raise ValueError("adjacency not symmetric")


@dataclass(frozen=True)
class GraphStats:
    """Headline numbers for a graph: size, max degree, degeneracy."""

    n: int
    m: int
    max_degree: int
    degeneracy: int


@dataclass(frozen=True)
class DegeneracyOrder:
    """A permutation mapping original id -> rank, plus the degeneracy it realizes."""

    position: np.ndarray
    degeneracy: int


def from_edges(edges: Iterable[tuple[int, int]] | np.ndarray, num_vertices: int) -> Graph:
    """Build a canonical graph from (already compacted) vertex-id pairs.

    Self-loops are dropped, duplicates merged, and both directions emitted.
    """
    arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges,
                     dtype=np.int64)
    if arr.size == 0:
        ro = np.zeros(num_vertices + 1, dtype=np.int64)
        return Graph(num_vertices, ro, np.empty(0, dtype=np.int64))
    arr = arr.reshape(-1, 2)
    lo = np.minimum(arr[:, 0], arr[:, 1])
    hi = np.maximum(arr[:, 0], arr[:, 1])
    keep = lo != hi
    lo, hi = lo[keep], hi[keep]
    if lo.size:
        pairs = np.unique(np.column_stack((lo, hi)), axis=0)
    else:
        pairs = np.empty((0, 2), dtype=np.int64)
    src = np.concatenate((pairs[:, 0], pairs[:, 1]))
    dst = np.concatenate((pairs[:, 1], pairs[:, 0]))
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]
    counts = np.bincount(src, minlength=num_vertices)
    ro = np.zeros(num_vertices + 1, dtype=np.int64)
    np.cumsum(counts, out=ro[1:])
    return Graph(num_vertices, ro, dst, edge_list=pairs)


def parse_edge_list(
    source: str | IO[str],
    base: int = 0,
    symmetrize: bool = True,
) -> Graph:
    """Parse whitespace-separated edge-list text into a canonical graph.

    Comment lines start with '#' or '%'. MatrixMarket files are accepted:
    the header switches indexing to 1-based and the size line is skipped.
    Vertex ids are compacted to [0, n); duplicates merge, self-loops drop,
    and the result is always symmetric (``symmetrize`` is accepted for
    interface compatibility; directed input is treated as undirected).
    """
    del symmetrize  # canonical form is always undirected
    stream = io.StringIO(source) if isinstance(source, str) else source
    raw: list[tuple[int, int]] = []
    matrix_market = False
    size_line_pending = False
    for line_no, line in enumerate(stream, start=1):
        text = line.strip()
        if not text:
            continue
        if text.startswith("%%MatrixMarket"):
            matrix_market = True
            size_line_pending = True
            base = 1
            continue
        if text[0] in "#%":
            continue
        if size_line_pending:
            size_line_pending = False
            continue
        tokens = text.split()
        if len(tokens) < 2 or (len(tokens) > 2 and not matrix_market):
            raise EdgeListParseError(line_no, f"expected two integer tokens, got {text!r}")
        try:
            u = int(tokens[0]) - base
            v = int(tokens[1]) - base
        except ValueError as exc:
            raise EdgeListParseError(line_no, f"non-integer token in {text!r}") from exc
        if u < 0 or v < 0:
            raise EdgeListParseError(line_no, f"vertex id below base in {text!r}")
        raw.append((u, v))
    if not raw:
        return from_edges([], 0)
    arr = np.asarray(raw, dtype=np.int64)
    ids = np.unique(arr)
    compact = np.searchsorted(ids, arr)
    return from_edges(compact, len(ids))


def degeneracy_order(g: Graph) -> DegeneracyOrder:
    """Iterative minimum-degree peeling; ties go to the smallest original id.

    Runs in O(m log n) with a lazy-deletion heap; the degeneracy is the
    maximum degree observed at removal time.
    """
    n = g.num_vertices
    cur = np.diff(g.row_offsets).astype(np.int64)
    heap = [(int(cur[v]), v) for v in range(n)]
    heapq.heapify(heap)
    removed = bytearray(n)
    position = np.empty(n, dtype=np.int64)
    rank = 0
    degeneracy = 0
    while heap:
        dv, v = heapq.heappop(heap)
        if removed[v] or dv != cur[v]:
            continue
        removed[v] = 1
        position[v] = rank
        rank += 1
        if dv > degeneracy:
            degeneracy = dv
        for u in g.neighbors(v):
            if not removed[u]:
                cur[u] -= 1
                heapq.heappush(heap, (int(cur[u]), int(u)))
    return DegeneracyOrder(position, degeneracy)


def reorder(g: Graph, order: DegeneracyOrder) -> Graph:
    """Relabel vertices by their rank; adjacency lists come back sorted."""
    pos = order.position
    if len(pos) != g.num_vertices:
        raise ValueError("permutation length does not match vertex count")
    if g.num_vertices == 0:
        return from_edges([], 0)
    old_edges = g.edges()
    if old_edges.size == 0:
        return from_edges([], g.num_vertices)
    return from_edges(np.column_stack((pos[old_edges[:, 0]], pos[old_edges[:, 1]])),
                      g.num_vertices)


def stats(g: Graph, order: DegeneracyOrder) -> GraphStats:
    """Vertex/edge counts, maximum degree, and the ordering's degeneracy."""
    deg = np.diff(g.row_offsets)
    max_degree = int(deg.max()) if g.num_vertices else 0
    return GraphStats(
        n=g.num_vertices,
        m=g.num_edges,
        max_degree=max_degree,
        degeneracy=order.degeneracy,
    )


def preprocess(g: Graph) -> tuple[Graph, DegeneracyOrder, GraphStats]:
    """Order, relabel, and summarize a canonical graph in one step."""
    order = degeneracy_order(g)
    g2 = reorder(g, order)
    return g2, order, stats(g2, order)
