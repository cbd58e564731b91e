"""Per-worker counters and run-level aggregation."""

from __future__ import annotations

import pytest

from mce.metrics import TIME_CATEGORIES, MetricsReport, WorkerMetrics, aggregate


def test_record_accumulates_per_category():
    m = WorkerMetrics(worker_id=0)
    m.record("pivot", 0.25)
    m.record("pivot", 0.25)
    m.record("set_ops", 0.5)
    assert m.times["pivot"] == pytest.approx(0.5)
    assert m.times["set_ops"] == pytest.approx(0.5)


def test_record_disabled_is_a_no_op():
    m = WorkerMetrics(worker_id=0, enabled=False)
    m.record("pivot", 1.0)
    assert m.times["pivot"] == 0.0


def test_aggregate_balanced_load_ratio_is_one():
    workers = [WorkerMetrics(worker_id=i, nodes_visited=100) for i in range(4)]
    rep = aggregate(workers)
    assert rep.load_ratio == pytest.approx(1.0)
    assert rep.nodes_total == 400
    assert rep.max_load == 100
    assert rep.avg_load == pytest.approx(100.0)


def test_aggregate_skewed_load_ratio():
    workers = [
        WorkerMetrics(worker_id=0, nodes_visited=300),
        WorkerMetrics(worker_id=1, nodes_visited=100),
    ]
    rep = aggregate(workers)
    assert rep.load_ratio == pytest.approx(1.5)
    assert rep.load_ratio >= 1.0


def test_aggregate_zero_work_defines_ratio_one():
    rep = aggregate([WorkerMetrics(worker_id=0)])
    assert rep.load_ratio == 1.0


def test_aggregate_sums_donations():
    a = WorkerMetrics(worker_id=0, donations_made=3)
    b = WorkerMetrics(worker_id=1, donations_received=3)
    rep = aggregate([a, b])
    assert rep.donations_made == rep.donations_received == 3


def test_category_shares_sum_to_one_when_timed():
    a = WorkerMetrics(worker_id=0)
    a.record("pivot", 1.0)
    a.record("induced_build", 3.0)
    rep = aggregate([a])
    assert sum(rep.category_shares.values()) == pytest.approx(1.0)
    assert rep.category_shares["induced_build"] == pytest.approx(0.75)
    assert set(rep.category_shares) == set(TIME_CATEGORIES)


def test_category_shares_zero_without_timing():
    rep = aggregate([WorkerMetrics(worker_id=0)])
    assert all(v == 0.0 for v in rep.category_shares.values())


def test_aggregate_requires_workers():
    with pytest.raises(ValueError):
        aggregate([])


def test_report_to_dict_round_trip():
    rep = aggregate([WorkerMetrics(worker_id=0, nodes_visited=7)])
    d = rep.to_dict()
    assert d["nodes_total"] == 7
    assert d["workers"] == 1
    assert isinstance(rep, MetricsReport)
