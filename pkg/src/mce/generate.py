"""Seed-deterministic graph generators and edge-list text output.

The skew generator plants one dense community inside a sparse background
so that a handful of traversal roots carry almost all the work; it exists
to exercise the load-balancing path.
"""

from __future__ import annotations

from typing import IO

import numpy as np

from mce.graph import Graph, from_edges


def gnp(n: int, p: float, seed: int = 0) -> Graph:
    """Erdos-Renyi G(n, p); each pair is an independent coin flip."""
    if n < 0 or not 0.0 <= p <= 1.0:
        raise ValueError("need n >= 0 and 0 <= p <= 1")
    rng = np.random.default_rng(seed)
    edges = []
    for u in range(n):
        hits = np.flatnonzero(rng.random(n - u - 1) < p) + u + 1
        edges.extend((u, int(v)) for v in hits)
    return from_edges(np.asarray(edges, dtype=np.int64).reshape(-1, 2), n)


def moon_moser(parts: int) -> Graph:
    """Complete multipartite graph with ``parts`` parts of size 3.

    Maximizes the number of maximal cliques for its vertex count: 3^parts.
    """
    if parts < 1:
        raise ValueError("parts must be >= 1")
    n = 3 * parts
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if u // 3 != v // 3]
    return from_edges(edges, n)


def planted_skew(n: int = 10_000, community: int = 40, p_in: float = 0.8,
                 background_degree: float = 4.0, seed: int = 0) -> Graph:
    """A sparse background graph with one dense planted community.

    The community occupies ``community`` random vertices with edge
    probability ``p_in``; every other pair appears with probability
    ``background_degree / n``.
    """
    if community > n:
        raise ValueError("community larger than the graph")
    rng = np.random.default_rng(seed)
    p_bg = min(1.0, background_degree / max(n, 1))
    edges = []
    for u in range(n):
        hits = np.flatnonzero(rng.random(n - u - 1) < p_bg) + u + 1
        edges.extend((u, int(v)) for v in hits)
    members = np.sort(rng.choice(n, size=community, replace=False))
    for i in range(community):
        for j in range(i + 1, community):
            if rng.random() < p_in:
                edges.append((int(members[i]), int(members[j])))
    return from_edges(np.asarray(edges, dtype=np.int64).reshape(-1, 2), n)


def write_edge_list(g: Graph, out: IO[str]) -> None:
    """Emit the canonical edge-list text format (one ``u v`` line per edge)."""
    for u, v in g.edges():
        out.write(f"{int(u)} {int(v)}\n")
