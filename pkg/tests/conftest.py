"""Shared fixtures and helpers for the test suite."""

from __future__ import annotations

import numpy as np
import pytest

from mce.bk import CliqueSink
from mce.graph import Graph, from_edges, preprocess
from mce.scheduler import RunConfig, run

# The running example used throughout: a 4-clique {0,1,2,3} sharing vertex 0
# with a triangle {0,4,5}. Exactly two maximal cliques.
K4_TRIANGLE_EDGES = [
    (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
    (0, 4), (0, 5), (4, 5),
]
K4_TRIANGLE_CLIQUES = {(0, 1, 2, 3), (0, 4, 5)}


@pytest.fixture
def k4_triangle() -> Graph:
    return from_edges(K4_TRIANGLE_EDGES, 6)


def enumerate_original(g: Graph, **cfg_kwargs) -> tuple[set[tuple[int, ...]], int]:
    """Run the parallel engine and return (clique set in original labels, count).

    Preprocessing relabels vertices by degeneracy rank; this maps results
    back so they compare directly against oracles on the input graph.
    """
    g2, order, st = preprocess(g)
    inverse = np.argsort(order.position)
    sink = CliqueSink.collecting()
    res = run(g2, st, RunConfig(**cfg_kwargs), sink=sink)
    cliques = {
        tuple(sorted(int(inverse[v]) for v in c)) for c in sink.collected
    }
    return cliques, res.clique_count
