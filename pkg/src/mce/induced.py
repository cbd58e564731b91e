"""Bit-packed induced subgraphs restricted to a subtree's candidate set.

A subgraph stores one adjacency row per vertex, each row a bit mask over
the P columns. Partial mode stores rows for P only; full mode appends one
row per X vertex so that excluded-set algebra also runs on masks. In
partial mode, adjacency between X members and branch vertices is looked
up in the original graph instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from mce.bitset import Bitset, round_up_capacity
from mce.graph import Graph


class CapacityError(ValueError):
    """P does not fit in the bitset capacity sized at run start."""


@dataclass
class InducedSubgraph:
    """Adjacency restricted to P columns.

    ``rows`` holds bit-packed masks: the first ``len(p_locals)`` entries
    are the P rows; in full mode ``len(x_locals)`` X rows follow, in the
    same order as ``x_locals``. Row r has bit c set iff the global
    vertices behind row r and column c are adjacent.
    """

    mode: str  # "partial" | "full"
    p_locals: np.ndarray  # local P index -> global id, strictly ascending
    x_locals: np.ndarray | None
    rows: list[int]
    capacity: int

    @property
    def num_p(self) -> int:
        return len(self.p_locals)

    def p_row(self, local: int) -> int:
        return self.rows[local]

    def x_row(self, x_index: int) -> int:
        if self.mode != "full":
            raise ValueError("x rows only exist in full mode")
        return self.rows[len(self.p_locals) + x_index]

    def row_bitset(self, r: int) -> Bitset:
        return Bitset.from_bits(self.capacity, self.rows[r])

    def storage_bits(self) -> int:
        """Nominal allocation: rows times the word-rounded column capacity."""
        return len(self.rows) * round_up_capacity(self.capacity)


def _pack_row(g: Graph, vertex: int, p: np.ndarray) -> int:
    """Bit mask of the P members adjacent to ``vertex``.

    Membership is a vectorized binary search of the adjacency list into
    the sorted P array.
    """
    adj = g.neighbors(vertex)
    if len(adj) == 0 or len(p) == 0:
        return 0
    pos = np.searchsorted(p, adj)
    ok = (pos < len(p)) & (p[np.minimum(pos, len(p) - 1)] == adj)
    row = 0
    for c in pos[ok]:
        row |= 1 << int(c)
    return row


def _check_capacity(p: np.ndarray, capacity: int | None) -> int:
    if capacity is None:
        capacity = round_up_capacity(len(p))
    if len(p) > capacity:
        raise CapacityError(f"|P| = {len(p)} exceeds capacity {capacity}")
    return capacity


def build_partial(g: Graph, p: Sequence[int] | np.ndarray,
                  capacity: int | None = None) -> InducedSubgraph:
    """Induce only the P-P edges; X adjacency stays in the original graph."""
    p = np.asarray(p, dtype=np.int64)
    capacity = _check_capacity(p, capacity)
    rows = [_pack_row(g, int(v), p) for v in p]
    return InducedSubgraph("partial", p, None, rows, capacity)


def build_full(g: Graph, p: Sequence[int] | np.ndarray, x: Sequence[int] | np.ndarray,
               capacity: int | None = None) -> InducedSubgraph:
    """Induce all edges between P and P ∪ X as bit-packed rows."""
    p = np.asarray(p, dtype=np.int64)
    x = np.asarray(x, dtype=np.int64)
    capacity = _check_capacity(p, capacity)
    rows = [_pack_row(g, int(v), p) for v in p]
    rows.extend(_pack_row(g, int(v), p) for v in x)
    return InducedSubgraph("full", p, x, rows, capacity)


def x_neighbors_original(g: Graph, v: int, xx_view: Sequence[int] | np.ndarray) -> list[int]:
    """Members of ``xx_view`` adjacent to ``v`` in the original graph, order kept."""
    view = np.asarray(xx_view, dtype=np.int64)
    if len(view) == 0:
        return []
    adj = g.neighbors(v)
    if len(adj) == 0:
        return []
    pos = np.searchsorted(adj, view)
    ok = (pos < len(adj)) & (adj[np.minimum(pos, len(adj) - 1)] == view)
    return [int(u) for u in view[ok]]


def membership_mask(g: Graph, v: int, candidates: np.ndarray) -> np.ndarray:
    """Boolean mask over ``candidates``: adjacent to ``v`` in the original graph."""
    adj = g.neighbors(v)
    if len(adj) == 0 or len(candidates) == 0:
        return np.zeros(len(candidates), dtype=bool)
    pos = np.searchsorted(adj, candidates)
    return (pos < len(adj)) & (adj[np.minimum(pos, len(adj) - 1)] == candidates)
