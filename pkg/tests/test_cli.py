"""Command-line surface: subcommands, output formats, and exit codes."""

from __future__ import annotations

import csv
import io
import json

import pytest

from mce import __version__
from mce.cli import EXIT_OK, EXIT_USAGE, main
from tests.conftest import K4_TRIANGLE_EDGES


@pytest.fixture
def example_path(tmp_path):
    path = tmp_path / "example.txt"
    path.write_text("".join(f"{u} {v}\n" for u, v in K4_TRIANGLE_EDGES))
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- count ---------------------------------------------------------------

def test_count_text_output(example_path, capsys):
    code, out, _ = run_cli(capsys, "count", example_path)
    assert code == EXIT_OK
    assert "maximal cliques: 2" in out
    assert "n=6 m=9" in out


def test_count_json_output(example_path, capsys):
    code, out, _ = run_cli(capsys, "count", example_path, "--format", "json",
                           "--workers", "2", "--roots", "l2")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["clique_count"] == 2
    assert payload["roots"] == "l2"
    assert payload["workers"] == 2
    assert payload["version"] == __version__
    assert payload["degeneracy"] == 3
    assert payload["max_degree"] == 5


def test_count_csv_output(example_path, capsys):
    code, out, _ = run_cli(capsys, "count", example_path, "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 1
    assert rows[0]["clique_count"] == "2"


def test_count_from_stdin(example_path, capsys, monkeypatch):
    text = "".join(f"{u} {v}\n" for u, v in K4_TRIANGLE_EDGES)
    monkeypatch.setattr("sys.stdin", io.StringIO(text))
    code, out, _ = run_cli(capsys, "count", "-", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out)["clique_count"] == 2


def test_count_one_based_input(tmp_path, capsys):
    path = tmp_path / "one_based.txt"
    path.write_text("1 2\n2 3\n3 1\n")
    code, out, _ = run_cli(capsys, "count", str(path), "--base", "1",
                           "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out)["clique_count"] == 1


def test_count_list_cliques(example_path, tmp_path, capsys):
    listing = tmp_path / "cliques.txt"
    code, _, _ = run_cli(capsys, "count", example_path,
                         "--list-cliques", str(listing))
    assert code == EXIT_OK
    lines = listing.read_text().splitlines()
    assert len(lines) == 2
    sizes = sorted(len(line.split()) for line in lines)
    assert sizes == [3, 4]


def test_count_list_limit_caps_output(example_path, tmp_path, capsys):
    listing = tmp_path / "cliques.txt"
    code, _, _ = run_cli(capsys, "count", example_path,
                         "--list-cliques", str(listing), "--list-limit", "1")
    assert code == EXIT_OK
    assert len(listing.read_text().splitlines()) == 1


def test_count_missing_file_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "count", "/nonexistent/input.txt")
    assert code == EXIT_USAGE
    assert "mce:" in err


def test_count_malformed_input_is_usage_error(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("0 1\nmangled line\n")
    code, _, err = run_cli(capsys, "count", str(path))
    assert code == EXIT_USAGE
    assert "parse error" in err


def test_single_worker_reports_are_reproducible(example_path, capsys):
    """Everything except wall-clock timing must be byte-identical."""
    timing_fields = {"parse_time", "order_time", "traversal_time",
                     "phase1_time", "phase2_time"}
    payloads = []
    for _ in range(2):
        _, out, _ = run_cli(capsys, "count", example_path, "--format", "json",
                            "--workers", "1")
        payload = json.loads(out)
        payloads.append({k: v for k, v in payload.items()
                         if k not in timing_fields})
    assert payloads[0] == payloads[1]


# --- oracle-check ---------------------------------------------------------

def test_oracle_check_passes_on_random_graphs(capsys):
    code, out, _ = run_cli(capsys, "oracle-check", "--n", "10", "--p", "0.5",
                           "--seeds", "2", "--workers", "2")
    assert code == EXIT_OK
    assert "ok" in out


def test_oracle_check_rejects_oversized_n(capsys):
    code, _, err = run_cli(capsys, "oracle-check", "--n", "30")
    assert code == EXIT_USAGE


# --- gen ------------------------------------------------------------------

def test_gen_gnp_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    for out in (a, b):
        code, _, _ = run_cli(capsys, "gen", "gnp", str(out), "--n", "40",
                             "--p", "0.2", "--seed", "7")
        assert code == EXIT_OK
    assert a.read_bytes() == b.read_bytes()
    assert a.stat().st_size > 0


def test_gen_moon_moser_feeds_count(tmp_path, capsys):
    path = tmp_path / "mm.txt"
    run_cli(capsys, "gen", "moon-moser", str(path), "--parts", "4")
    code, out, _ = run_cli(capsys, "count", str(path), "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out)["clique_count"] == 81


def test_gen_skew_writes_expected_vertex_range(tmp_path, capsys):
    path = tmp_path / "skew.txt"
    code, _, _ = run_cli(capsys, "gen", "skew", str(path), "--n", "200",
                         "--community", "15", "--seed", "3")
    assert code == EXIT_OK
    labels = {int(t) for line in path.read_text().splitlines()
              for t in line.split()}
    assert max(labels) < 200


def test_gen_to_stdout(capsys):
    code, out, _ = run_cli(capsys, "gen", "gnp", "-", "--n", "10", "--p", "1.0")
    assert code == EXIT_OK
    assert len(out.splitlines()) == 45


def test_gen_bad_parameters_are_usage_errors(tmp_path, capsys):
    code, _, _ = run_cli(capsys, "gen", "gnp", str(tmp_path / "x.txt"),
                         "--n", "10", "--p", "2.0")
    assert code == EXIT_USAGE


# --- bench ----------------------------------------------------------------

def test_bench_emits_grid_rows(example_path, capsys):
    code, out, err = run_cli(capsys, "bench", example_path,
                             "--workers", "1,2", "--configs", "l1-ipx,l2-ip",
                             "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 4  # 2 configs x 2 worker counts
    assert {r["clique_count"] for r in rows} == {"2"}
    assert "heuristic choice" in err


# --- parser surface -------------------------------------------------------

def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert __version__ in capsys.readouterr().out


def test_missing_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_unknown_choice_is_usage_error(example_path):
    with pytest.raises(SystemExit) as exc:
        main(["count", example_path, "--roots", "l9"])
    assert exc.value.code == 2
