"""Per-worker counters and a time breakdown of where traversal effort goes.

Counters are worker-private while a run executes and aggregated only
after all workers join, so no locking is involved. Wall time per category
is sampled from a monotonic clock at category boundaries and only when
timing is enabled; counters alone are cheap enough to keep always on.
"""

from __future__ import annotations

from dataclasses import dataclass, field

TIME_CATEGORIES = ("induced_build", "pivot", "set_ops", "worker_list", "other")


@dataclass
class WorkerMetrics:
    """One worker's counters for a single run."""

    worker_id: int = 0
    enabled: bool = True
    nodes_visited: int = 0
    roots_claimed: int = 0
    donations_made: int = 0
    donations_received: int = 0
    times: dict[str, float] = field(
        default_factory=lambda: {c: 0.0 for c in TIME_CATEGORIES}
    )

    def record(self, category: str, amount: float) -> None:
        if self.enabled:
            self.times[category] += amount


@dataclass(frozen=True)
class MetricsReport:
    """Aggregate view over all workers of a finished run."""

    workers: int
    nodes_total: int
    max_load: int
    avg_load: float
    load_ratio: float
    donations_made: int
    donations_received: int
    category_shares: dict[str, float]
    per_worker: tuple[WorkerMetrics, ...]

    def to_dict(self) -> dict:
        return {
            "workers": self.workers,
            "nodes_total": self.nodes_total,
            "max_load": self.max_load,
            "avg_load": self.avg_load,
            "load_ratio": self.load_ratio,
            "donations_made": self.donations_made,
            "donations_received": self.donations_received,
            "category_shares": dict(self.category_shares),
        }


def aggregate(workers: list[WorkerMetrics]) -> MetricsReport:
    """Deterministic aggregation; the load ratio is max over average nodes."""
    if not workers:
        raise ValueError("no worker metrics to aggregate")
    loads = [w.nodes_visited for w in workers]
    total = sum(loads)
    avg = total / len(workers)
    ratio = (max(loads) / avg) if avg > 0 else 1.0
    time_totals = {c: sum(w.times[c] for w in workers) for c in TIME_CATEGORIES}
    grand = sum(time_totals.values())
    shares = {c: (t / grand if grand > 0 else 0.0) for c, t in time_totals.items()}
    return MetricsReport(
        workers=len(workers),
        nodes_total=total,
        max_load=max(loads),
        avg_load=avg,
        load_ratio=ratio,
        donations_made=sum(w.donations_made for w in workers),
        donations_received=sum(w.donations_received for w in workers),
        category_shares=shares,
        per_worker=tuple(workers),
    )
