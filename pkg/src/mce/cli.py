"""Command-line driver: count cliques, verify against the oracle, generate
test graphs, and benchmark configuration grids.

Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass, field
from time import perf_counter

from mce import __version__
from mce.bk import CliqueSink, bk_basic, oracle_enumerate
from mce.generate import gnp, moon_moser, planted_skew, write_edge_list
from mce.graph import EdgeListParseError, Graph, GraphStats, parse_edge_list, preprocess
from mce.scheduler import RunConfig, RunResult, choose_induced_mode, run

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2


@dataclass
class Report:
    """One run's machine-readable record; flattens losslessly to JSON or CSV."""

    input: str
    n: int
    m: int
    max_degree: int
    degeneracy: int
    roots: str
    induced: str
    workers: int
    worker_list: bool
    donation_min_p: int
    clique_count: int
    parse_time: float
    order_time: float
    traversal_time: float
    phase1_time: float
    phase2_time: float
    donations: int
    nodes_total: int
    load_ratio: float
    version: str = field(default=__version__)

    def to_dict(self) -> dict:
        return dict(self.__dict__)

    @staticmethod
    def fieldnames() -> list[str]:
        return list(Report("", 0, 0, 0, 0, "", "", 0, False, 0, 0,
                           0.0, 0.0, 0.0, 0.0, 0.0, 0, 0, 0.0).__dict__)


def _emit(reports: list[Report], fmt: str, out) -> None:
    if fmt == "json":
        payload = [r.to_dict() for r in reports]
        json.dump(payload[0] if len(payload) == 1 else payload, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        writer = csv.DictWriter(out, fieldnames=Report.fieldnames())
        writer.writeheader()
        for r in reports:
            writer.writerow(r.to_dict())
    else:
        for r in reports:
            out.write(
                f"{r.input}: n={r.n} m={r.m} max_degree={r.max_degree} "
                f"degeneracy={r.degeneracy}\n"
                f"  config: roots={r.roots} induced={r.induced} "
                f"workers={r.workers} worker_list={'on' if r.worker_list else 'off'}\n"
                f"  maximal cliques: {r.clique_count}\n"
                f"  time: parse={r.parse_time:.3f}s order={r.order_time:.3f}s "
                f"traverse={r.traversal_time:.3f}s "
                f"(donations={r.donations}, load_ratio={r.load_ratio:.2f})\n"
            )


def _load(path: str, base: int) -> tuple[Graph, float]:
    t0 = perf_counter()
    if path == "-":
        g = parse_edge_list(sys.stdin, base=base)
    else:
        with open(path, "r", encoding="utf-8") as fh:
            g = parse_edge_list(fh, base=base)
    return g, perf_counter() - t0


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        workers=args.workers,
        roots=args.roots,
        induced=args.induced,
        worker_list=args.worker_list == "on",
        donation_min_p=args.donation_min_p,
    )


def _report(path: str, st: GraphStats, cfg: RunConfig, res: RunResult,
            parse_time: float, order_time: float) -> Report:
    agg = res.report()
    return Report(
        input=path, n=st.n, m=st.m, max_degree=st.max_degree,
        degeneracy=st.degeneracy, roots=res.roots_mode, induced=res.induced_mode,
        workers=res.workers, worker_list=cfg.worker_list,
        donation_min_p=cfg.donation_min_p, clique_count=res.clique_count,
        parse_time=parse_time, order_time=order_time,
        traversal_time=res.total_time, phase1_time=res.phase1_time,
        phase2_time=res.phase2_time, donations=res.donation_count,
        nodes_total=agg.nodes_total, load_ratio=agg.load_ratio,
    )


def cmd_count(args: argparse.Namespace) -> int:
    g, parse_time = _load(args.path, args.base)
    t0 = perf_counter()
    g2, _, st = preprocess(g)
    order_time = perf_counter() - t0
    cfg = _config_from_args(args)
    sink = None
    if args.list_cliques:
        sink = CliqueSink(collect_limit=args.list_limit)
    res = run(g2, st, cfg, sink=sink)
    if args.list_cliques and sink is not None:
        with open(args.list_cliques, "w", encoding="utf-8") as fh:
            for clique in sorted(sink.collected):
                fh.write(" ".join(str(v) for v in clique) + "\n")
    _emit([_report(args.path, st, cfg, res, parse_time, order_time)],
          args.format, sys.stdout)
    return EXIT_OK


def cmd_oracle_check(args: argparse.Namespace) -> int:
    if args.n > 24:
        print("oracle-check: n must be <= 24", file=sys.stderr)
        return EXIT_USAGE
    combos = [(r, i, wl) for r in ("l1", "l2") for i in ("ip", "ipx")
              for wl in (True, False)]
    checked = 0
    for seed in range(args.seeds):
        g = gnp(args.n, args.p, seed=args.seed + seed)
        expected = set(oracle_enumerate(g))
        basic = CliqueSink.collecting()
        bk_basic(g, basic)
        if basic.clique_set() != expected or basic.total != len(expected):
            print(f"FAIL bk_basic: n={args.n} p={args.p} seed={args.seed + seed}")
            return EXIT_VERIFICATION
        g2, _, st = preprocess(g)
        oracle2 = set(oracle_enumerate(g2))
        for roots, induced, wl in combos:
            cfg = RunConfig(workers=args.workers, roots=roots, induced=induced,
                            worker_list=wl)
            sink = CliqueSink.collecting()
            res = run(g2, st, cfg, sink=sink)
            if sink.clique_set() != oracle2 or res.clique_count != len(oracle2):
                print(
                    "FAIL: reproduce with "
                    f"n={args.n} p={args.p} seed={args.seed + seed} "
                    f"roots={roots} induced={induced} worker_list={wl} "
                    f"workers={args.workers}"
                )
                return EXIT_VERIFICATION
        checked += 1
    print(f"oracle-check: {checked} seeds x {len(combos)} configurations ok")
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "gnp":
        g = gnp(args.n, args.p, seed=args.seed)
    elif args.kind == "moon-moser":
        g = moon_moser(args.parts)
    else:
        g = planted_skew(n=args.n, community=args.community, p_in=args.p_in,
                         background_degree=args.degree, seed=args.seed)
    if args.out == "-":
        write_edge_list(g, sys.stdout)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            write_edge_list(g, fh)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    g, parse_time = _load(args.path, args.base)
    t0 = perf_counter()
    g2, _, st = preprocess(g)
    order_time = perf_counter() - t0
    workers_list = [int(w) for w in args.workers.split(",")]
    configs = [c.strip() for c in args.configs.split(",")]
    reports: list[Report] = []
    best: dict[str, float] = {}
    for combo in configs:
        roots, induced = combo.split("-")
        for workers in workers_list:
            for _ in range(args.repeats):
                cfg = RunConfig(workers=workers, roots=roots, induced=induced,
                                worker_list=args.worker_list == "on",
                                donation_min_p=args.donation_min_p)
                res = run(g2, st, cfg)
                reports.append(_report(args.path, st, cfg, res,
                                       parse_time, order_time))
                key = f"{roots}-{induced}"
                best[key] = min(best.get(key, float("inf")), res.total_time)
    _emit(reports, args.format, sys.stdout)
    if best:
        heuristic = f"l1-{choose_induced_mode(st.max_degree, st.degeneracy)}"
        overall = min(best.values())
        chosen = best.get(heuristic)
        if chosen is not None and overall > 0:
            print(
                f"# heuristic choice: {heuristic} "
                f"(slowdown vs best observed: {chosen / overall:.2f}x)",
                file=sys.stderr,
            )
        else:
            print(f"# heuristic choice: {heuristic} (not benchmarked)",
                  file=sys.stderr)
    return EXIT_OK


def _add_run_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--roots", choices=["l1", "l2"], default="l1")
    p.add_argument("--induced", choices=["ip", "ipx", "auto"], default="auto")
    p.add_argument("--workers", type=int, default=0,
                   help="0 means hardware parallelism")
    p.add_argument("--worker-list", choices=["on", "off"], default="on")
    p.add_argument("--donation-min-p", type=int, default=10)
    p.add_argument("--base", type=int, choices=[0, 1], default=0)
    p.add_argument("--format", choices=["json", "csv", "text"], default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mce", description="Exact maximal clique enumeration")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count maximal cliques in an edge list")
    p.add_argument("path", help="edge-list file, or - for stdin")
    _add_run_flags(p)
    p.add_argument("--list-cliques", metavar="PATH",
                   help="also write collected cliques to PATH")
    p.add_argument("--list-limit", type=int, default=10_000)
    p.set_defaults(handler=cmd_count)

    p = sub.add_parser("oracle-check",
                       help="verify every configuration against the brute-force oracle")
    p.add_argument("--n", type=int, default=12)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seeds", type=int, default=20, help="number of seeds to try")
    p.add_argument("--seed", type=int, default=0, help="first seed")
    p.add_argument("--workers", type=int, default=4)
    p.set_defaults(handler=cmd_oracle_check)

    p = sub.add_parser("gen", help="write a deterministic test graph")
    kinds = p.add_subparsers(dest="kind", required=True)
    k = kinds.add_parser("gnp")
    k.add_argument("out")
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--p", type=float, required=True)
    k.add_argument("--seed", type=int, default=0)
    k.set_defaults(handler=cmd_gen)
    k = kinds.add_parser("moon-moser")
    k.add_argument("out")
    k.add_argument("--parts", type=int, required=True)
    k.set_defaults(handler=cmd_gen)
    k = kinds.add_parser("skew")
    k.add_argument("out")
    k.add_argument("--n", type=int, default=10_000)
    k.add_argument("--community", type=int, default=40)
    k.add_argument("--p-in", type=float, default=0.8)
    k.add_argument("--degree", type=float, default=4.0)
    k.add_argument("--seed", type=int, default=0)
    k.set_defaults(handler=cmd_gen)

    p = sub.add_parser("bench", help="run a configuration grid and emit report rows")
    p.add_argument("path")
    p.add_argument("--workers", default="1,2,4", help="comma-separated worker counts")
    p.add_argument("--configs", default="l1-ip,l1-ipx,l2-ip,l2-ipx")
    p.add_argument("--repeats", type=int, default=1)
    p.add_argument("--worker-list", choices=["on", "off"], default="on")
    p.add_argument("--donation-min-p", type=int, default=10)
    p.add_argument("--base", type=int, choices=[0, 1], default=0)
    p.add_argument("--format", choices=["json", "csv", "text"], default="csv")
    p.set_defaults(handler=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except EdgeListParseError as exc:
        print(f"mce: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"mce: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"mce: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
