"""Deterministic graph generators and edge-list output."""

from __future__ import annotations

import io

import numpy as np
import pytest

from mce.generate import gnp, moon_moser, planted_skew, write_edge_list
from mce.graph import parse_edge_list


def edges_of(g):
    return [(int(u), int(v)) for u, v in g.edges()]


def test_gnp_deterministic_per_seed():
    a = gnp(50, 0.3, seed=9)
    b = gnp(50, 0.3, seed=9)
    c = gnp(50, 0.3, seed=10)
    assert edges_of(a) == edges_of(b)
    assert edges_of(a) != edges_of(c)


def test_gnp_extreme_probabilities():
    assert gnp(10, 0.0, seed=0).num_edges == 0
    assert gnp(10, 1.0, seed=0).num_edges == 45


def test_gnp_rejects_bad_parameters():
    with pytest.raises(ValueError):
        gnp(-1, 0.5)
    with pytest.raises(ValueError):
        gnp(5, 1.5)


def test_moon_moser_structure():
    g = moon_moser(5)
    assert g.num_vertices == 15
    assert g.num_edges == 90
    # no edges inside a part, all edges across parts
    for v in range(15):
        part = v // 3
        for u in map(int, g.neighbors(v)):
            assert u // 3 != part
        assert g.degree(v) == 12
    with pytest.raises(ValueError):
        moon_moser(0)


def test_planted_skew_contains_a_dense_block():
    g = planted_skew(n=1_000, community=30, p_in=1.0, background_degree=2.0,
                     seed=4)
    deg = np.diff(g.row_offsets)
    # 30 members each adjacent to the other 29, on top of sparse background
    assert int(np.sum(deg >= 29)) >= 30
    assert g.num_vertices == 1_000


def test_planted_skew_deterministic_and_validated():
    a = planted_skew(n=500, community=20, seed=2)
    b = planted_skew(n=500, community=20, seed=2)
    assert edges_of(a) == edges_of(b)
    with pytest.raises(ValueError):
        planted_skew(n=10, community=11)


def test_write_edge_list_round_trips_through_parser():
    g = moon_moser(4)  # every vertex has edges, so parsing keeps all labels
    buf = io.StringIO()
    write_edge_list(g, buf)
    buf.seek(0)
    g2 = parse_edge_list(buf)
    assert edges_of(g2) == edges_of(g)
