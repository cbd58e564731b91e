"""Parallel exact maximal clique enumeration.

The pipeline: parse an edge list into a canonical :class:`~mce.graph.Graph`,
compute a degeneracy ordering and relabel the graph by it, then enumerate
maximal cliques either with the sequential Bron-Kerbosch variants in
:mod:`mce.bk` or with the parallel worker pool in :mod:`mce.scheduler`,
which balances load by donating subtree branches to idle workers.
"""

from mce.graph import (
    DegeneracyOrder,
    EdgeListParseError,
    Graph,
    GraphStats,
    degeneracy_order,
    parse_edge_list,
    preprocess,
    reorder,
    stats,
)
from mce.bk import (
    CliqueSink,
    RootTask,
    bk_basic,
    bk_pivot,
    first_level_roots,
    oracle_enumerate,
    second_level_roots,
    select_pivot,
)
from mce.bitset import Bitset
from mce.induced import CapacityError, InducedSubgraph, build_full, build_partial
from mce.xsets import XState
from mce.metrics import MetricsReport, WorkerMetrics, aggregate
from mce.scheduler import (
    Backoff,
    DonatedTask,
    RunConfig,
    RunResult,
    WorkerList,
    choose_induced_mode,
    run,
)

__version__ = "0.1.0"

__all__ = [
    "Backoff",
    "Bitset",
    "CapacityError",
    "CliqueSink",
    "DegeneracyOrder",
    "DonatedTask",
    "EdgeListParseError",
    "Graph",
    "GraphStats",
    "InducedSubgraph",
    "MetricsReport",
    "RootTask",
    "RunConfig",
    "RunResult",
    "WorkerList",
    "WorkerMetrics",
    "XState",
    "aggregate",
    "bk_basic",
    "bk_pivot",
    "build_full",
    "build_partial",
    "choose_induced_mode",
    "degeneracy_order",
    "first_level_roots",
    "oracle_enumerate",
    "parse_edge_list",
    "preprocess",
    "reorder",
    "run",
    "second_level_roots",
    "select_pivot",
    "stats",
]
