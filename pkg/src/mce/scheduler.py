"""Two-phase parallel enumeration with dynamic load balancing.

Phase 1: workers claim independent subtrees (one per vertex or one per
edge of the reordered graph) off a shared counter and traverse each
depth-first. Phase 2 begins when the counter is exhausted: finished
workers park on a worker list; workers still traversing check the list
when visiting a branch and, if an idle worker is waiting, hand it the
branch (a donation) instead of descending into it themselves.

A worker is one execution lane with a private frame stack; every piece
of traversal state is worker-private except the immutable graph, the
immutable per-root induced subgraph, and the one-way donor-to-receiver
mailbox handoff.
"""

from __future__ import annotations

import os
import threading
import time
from dataclasses import dataclass, field
from time import perf_counter

import numpy as np

from mce.bitset import iter_bits, round_up_capacity
from mce.bk import CliqueSink, RootTask, first_level_root, second_level_root, select_pivot
from mce.graph import Graph, GraphStats
from mce.induced import InducedSubgraph, build_full, build_partial, membership_mask
from mce.metrics import WorkerMetrics
from mce.xsets import XState

PARTIAL_MODE_DEGREE_RATIO = 200.0  # above this, full X rows cost more than they save


def choose_induced_mode(max_degree: int, degeneracy: int) -> str:
    """Pick partial ("ip") or full ("ipx") induced subgraphs from the
    max-degree to degeneracy ratio."""
    if degeneracy > 0 and max_degree / degeneracy > PARTIAL_MODE_DEGREE_RATIO:
        return "ip"
    return "ipx"


@dataclass(frozen=True)
class Backoff:
    """Exponential sleep schedule for parked workers."""

    initial: float = 1e-6
    max: float = 1e-3


@dataclass
class RunConfig:
    """Knobs for one parallel run."""

    workers: int = 0  # 0 -> hardware parallelism
    roots: str = "l1"  # "l1" | "l2"
    induced: str = "auto"  # "ip" | "ipx" | "auto"
    worker_list: bool = True
    donation_min_p: int = 10
    backoff: Backoff = field(default_factory=Backoff)
    collect_limit: int | None = None
    timing: bool = False

    def resolved_workers(self) -> int:
        return self.workers if self.workers > 0 else (os.cpu_count() or 1)

    def validate(self) -> None:
        if self.workers < 0:
            raise ValueError("workers must be >= 1 (or 0 for hardware default)")
        if self.roots not in ("l1", "l2"):
            raise ValueError(f"unknown roots mode {self.roots!r}")
        if self.induced not in ("ip", "ipx", "auto"):
            raise ValueError(f"unknown induced mode {self.induced!r}")
        if self.donation_min_p < 0:
            raise ValueError("donation_min_p must be >= 0")
        if self.backoff.initial <= 0 or self.backoff.max < self.backoff.initial:
            raise ValueError("backoff must satisfy 0 < initial <= max")


@dataclass
class DonatedTask:
    """One branch, packaged for handoff.

    Everything mutable is a private copy for the receiver; the induced
    subgraph and the root X array are immutable and shared with the donor.
    """

    r: list[int]
    level: int
    p_bits: int
    xp_bits: int
    xx_prefix: list[int]
    subgraph: InducedSubgraph
    root_x: np.ndarray
    root_origin: int


class WorkerList:
    """Idle-worker ring buffer with per-worker mailbox and wake flag.

    Multi-producer multi-consumer; each enqueued id is dequeued at most
    once, and a mailbox write always precedes the matching wake flag.
    The ring cannot overflow because the worker count is fixed.
    """

    def __init__(self, workers: int, backoff: Backoff) -> None:
        self.capacity = workers
        self.backoff = backoff
        self._ring = [0] * max(1, workers)
        self._head = 0
        self._count = 0
        self._lock = threading.Lock()
        self._mailbox: list[DonatedTask | None] = [None] * workers
        self._wake = [False] * workers
        self._terminated = False
        self._idle = 0
        self._in_flight = 0

    def try_dequeue(self) -> int | None:
        """Remove and return a waiting receiver id, or None."""
        with self._lock:
            if self._count == 0 or self._terminated:
                return None
            wid = self._ring[self._head]
            self._head = (self._head + 1) % self.capacity
            self._count -= 1
            self._in_flight += 1
            return wid

    def deliver(self, wid: int, task: DonatedTask) -> None:
        """Fill the receiver's mailbox, then wake it."""
        self._mailbox[wid] = task
        self._wake[wid] = True

    def park(self, wid: int) -> DonatedTask | None:
        """Enqueue as idle and sleep until donated to or terminated.

        Returns the donated task, or None when the run is over. The last
        worker to park with no donation in flight ends the run.
        """
        with self._lock:
            if self._terminated:
                return None
            if self._idle + 1 == self.capacity and self._in_flight == 0:
                self._terminated = True
                for i in range(self.capacity):
                    self._wake[i] = True
                return None
            self._idle += 1
            slot = (self._head + self._count) % self.capacity
            self._ring[slot] = wid
            self._count += 1
        wait = self.backoff.initial
        while not self._wake[wid]:
            time.sleep(wait)
            wait = min(wait * 2, self.backoff.max)
        with self._lock:
            self._wake[wid] = False
            task = self._mailbox[wid]
            self._mailbox[wid] = None
            self._idle -= 1
            if task is not None:
                self._in_flight -= 1
        return task


@dataclass
class RunResult:
    """Outcome of one run; the clique count is schedule-independent."""

    clique_count: int
    donation_count: int
    roots_mode: str
    induced_mode: str
    workers: int
    total_time: float
    phase1_time: float
    phase2_time: float
    worker_metrics: list[WorkerMetrics]

    def report(self):
        from mce.metrics import aggregate

        return aggregate(self.worker_metrics)


@dataclass
class _TaskCtx:
    """Uniform view of a root task or a donated branch."""

    r: list[int]
    p_bits: int
    xp0: int
    xx: list[int]  # positions into root_x
    sub: InducedSubgraph | None
    root_x: np.ndarray
    origin: int


class _Shared:
    """Run-wide immutable inputs plus the phase-1 claim counter."""

    def __init__(self, g: Graph, st: GraphStats, cfg: RunConfig,
                 induced_mode: str, total_roots: int) -> None:
        self.graph = g
        self.stats = st
        self.cfg = cfg
        self.induced_mode = induced_mode
        self.total_roots = total_roots
        self.capacity = round_up_capacity(max(st.degeneracy, 1))
        self.collect_limit: int | None = cfg.collect_limit
        self.worker_list = WorkerList(cfg.resolved_workers(), cfg.backoff)
        self._counter = 0
        self._counter_lock = threading.Lock()
        self.phase2_start: float | None = None

    def claim_next_root(self) -> int | None:
        with self._counter_lock:
            if self._counter >= self.total_roots:
                if self.phase2_start is None:
                    self.phase2_start = perf_counter()
                return None
            i = self._counter
            self._counter += 1
            return i

    def phase2(self) -> bool:
        return self._counter >= self.total_roots

    def root_task(self, index: int) -> RootTask:
        if self.cfg.roots == "l1":
            return first_level_root(self.graph, index)
        return second_level_root(self.graph, index)


class _Worker:
    """One execution lane: private sink, metrics, and frame stack."""

    def __init__(self, shared: _Shared, wid: int) -> None:
        self.shared = shared
        self.wid = wid
        self.metrics = WorkerMetrics(worker_id=wid, enabled=shared.cfg.timing)
        self.sink = CliqueSink(collect_limit=shared.collect_limit)
        self.error: BaseException | None = None

    def main(self) -> None:
        try:
            self._main()
        except BaseException as exc:  # re-raised by run() after join
            self.error = exc

    def _main(self) -> None:
        shared = self.shared
        while True:
            idx = shared.claim_next_root()
            if idx is None:
                break
            self.metrics.roots_claimed += 1
            self._execute(self._ctx_from_root(shared.root_task(idx)))
        if not shared.cfg.worker_list:
            return
        wl = shared.worker_list
        while True:
            task = wl.park(self.wid)
            if task is None:
                return
            self.metrics.donations_received += 1
            self._execute(_TaskCtx(
                r=task.r, p_bits=task.p_bits, xp0=task.xp_bits,
                xx=task.xx_prefix, sub=task.subgraph,
                root_x=task.root_x, origin=task.root_origin,
            ))

    def _ctx_from_root(self, task: RootTask) -> _TaskCtx:
        p_bits = (1 << len(task.P)) - 1
        sub = None
        if p_bits:
            timing = self.shared.cfg.timing
            t0 = perf_counter() if timing else 0.0
            if self.shared.induced_mode == "ipx":
                sub = build_full(self.shared.graph, task.P, task.X,
                                 capacity=self.shared.capacity)
            else:
                sub = build_partial(self.shared.graph, task.P,
                                    capacity=self.shared.capacity)
            if timing:
                self.metrics.record("induced_build", perf_counter() - t0)
        return _TaskCtx(
            r=list(task.root_vertices), p_bits=p_bits, xp0=0,
            xx=list(range(len(task.X))), sub=sub,
            root_x=task.X, origin=task.origin_index,
        )

    # -- traversal ---------------------------------------------------------

    def _execute(self, ctx: _TaskCtx) -> None:
        m = self.metrics
        sink = self.sink
        if ctx.p_bits == 0:
            m.nodes_visited += 1
            if ctx.xp0 == 0 and not ctx.xx:
                sink.report(ctx.r)
            return

        shared = self.shared
        cfg = shared.cfg
        g = shared.graph
        sub = ctx.sub
        assert sub is not None
        rows = sub.rows
        num_p = sub.num_p
        full = sub.mode == "full"
        p_locals = sub.p_locals
        root_x = ctx.root_x
        timing = cfg.timing
        donation_on = cfg.worker_list
        min_p = cfg.donation_min_p
        wl = shared.worker_list

        xs = XState(ctx.p_bits.bit_count(), ctx.xx, capacity_bits=sub.capacity)
        if ctx.xp0:
            xs.seed_level0(ctx.xp0)
        r_path = list(ctx.r)
        nodes = 1  # the entry node

        frames: list[list] = []  # [remaining P bits, branch list, next index]
        self._open_node(frames, ctx.p_bits, xs, rows, num_p, full)

        while frames:
            f = frames[-1]
            if f[2] >= len(f[1]):
                frames.pop()
                if frames:
                    xs.backtrack()
                    r_path.pop()
                continue
            v = f[1][f[2]]
            f[2] += 1
            vb = 1 << v
            f[0] &= ~vb
            xs.move_branch_vertex(v)
            row_v = rows[v]
            child_p = f[0] & row_v

            if (donation_on and child_p.bit_count() >= min_p and shared.phase2()
                    and f[2] < len(f[1])
                    and any(fr[2] < len(fr[1]) for fr in frames[:-1])):
                t0 = perf_counter() if timing else 0.0
                donated = self._try_donate(ctx, child_p, v, row_v, xs,
                                           r_path, sub, root_x, wl)
                if timing:
                    m.record("worker_list", perf_counter() - t0)
                if donated:
                    continue

            gv = int(p_locals[v])
            if child_p == 0:
                nodes += 1
                if xs.xp_work[xs.depth] & row_v == 0:
                    t0 = perf_counter() if timing else 0.0
                    live = self._any_live_x(xs, v, gv, sub, root_x, rows, num_p)
                    if timing:
                        m.record("set_ops", perf_counter() - t0)
                    if not live:
                        r_path.append(gv)
                        sink.report(r_path)
                        r_path.pop()
                continue

            t0 = perf_counter() if timing else 0.0
            child_xp = xs.xp_work[xs.depth] & row_v
            keep = self._keep_mask(xs, v, gv, sub, root_x, rows, num_p)
            xs.descend(child_xp, keep)
            if timing:
                m.record("set_ops", perf_counter() - t0)
            r_path.append(gv)
            nodes += 1
            self._open_node(frames, child_p, xs, rows, num_p, full)

        m.nodes_visited += nodes

    def _open_node(self, frames: list, p_bits: int, xs: XState,
                   rows: list[int], num_p: int, full: bool) -> None:
        timing = self.shared.cfg.timing
        t0 = perf_counter() if timing else 0.0
        xp = xs.xp_work[xs.depth]
        if full:
            xx_rows = ((pos, rows[num_p + pos]) for pos in xs.xx[: xs.lpx[xs.depth]])
        else:
            xx_rows = ()
        choice = select_pivot(p_bits, xp, rows, xx_rows)
        if timing:
            self.metrics.record("pivot", perf_counter() - t0)
        frames.append([p_bits, list(iter_bits(p_bits & ~choice.neighbors)), 0])

    def _keep_mask(self, xs: XState, v: int, gv: int, sub: InducedSubgraph,
                   root_x: np.ndarray, rows: list[int], num_p: int) -> list[bool]:
        prefix = xs.xx[: xs.lpx[xs.depth]]
        if not prefix:
            return []
        if sub.mode == "full":
            return [(rows[num_p + pos] >> v) & 1 == 1 for pos in prefix]
        mask = membership_mask(self.shared.graph, gv, root_x[np.asarray(prefix)])
        return mask.tolist()

    def _any_live_x(self, xs: XState, v: int, gv: int, sub: InducedSubgraph,
                    root_x: np.ndarray, rows: list[int], num_p: int) -> bool:
        end = xs.lpx[xs.depth]
        if end == 0:
            return False
        if sub.mode == "full":
            return any((rows[num_p + pos] >> v) & 1 for pos in xs.xx[:end])
        cands = root_x[np.asarray(xs.xx[:end])]
        return bool(membership_mask(self.shared.graph, gv, cands).any())

    def _try_donate(self, ctx: _TaskCtx, child_p: int, v: int, row_v: int,
                    xs: XState, r_path: list[int], sub: InducedSubgraph,
                    root_x: np.ndarray, wl: WorkerList) -> bool:
        receiver = wl.try_dequeue()
        if receiver is None:
            return False
        gv = int(sub.p_locals[v])
        keep = self._keep_mask(xs, v, gv, sub, root_x, sub.rows, sub.num_p)
        prefix = xs.xx[: xs.lpx[xs.depth]]
        task = DonatedTask(
            r=r_path + [gv],
            level=xs.depth + 1,
            p_bits=child_p,
            xp_bits=xs.xp_work[xs.depth] & row_v,
            xx_prefix=[pos for pos, k in zip(prefix, keep) if k],
            subgraph=sub,
            root_x=root_x,
            root_origin=ctx.origin,
        )
        wl.deliver(receiver, task)
        self.metrics.donations_made += 1
        return True


def run(g: Graph, st: GraphStats, cfg: RunConfig,
        sink: CliqueSink | None = None) -> RunResult:
    """Enumerate all maximal cliques of a degeneracy-reordered graph.

    ``g`` must be canonical and reordered; ``st`` carries its degeneracy
    and max degree (used to size bitsets and resolve the auto induced
    mode). Returns the exact count regardless of worker count, donation
    schedule, or configuration.
    """
    cfg.validate()
    if sink is None:
        sink = CliqueSink(collect_limit=cfg.collect_limit)
    induced_mode = cfg.induced
    if induced_mode == "auto":
        induced_mode = choose_induced_mode(st.max_degree, st.degeneracy)
    total_roots = g.num_vertices if cfg.roots == "l1" else len(g.edges())
    shared = _Shared(g, st, cfg, induced_mode, total_roots)
    shared.collect_limit = sink.collect_limit
    nworkers = cfg.resolved_workers()
    workers = [_Worker(shared, i) for i in range(nworkers)]
    threads = [
        threading.Thread(target=w.main, name=f"mce-worker-{w.wid}", daemon=True)
        for w in workers
    ]
    t0 = perf_counter()
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    t1 = perf_counter()
    for w in workers:
        if w.error is not None:
            raise w.error
    for w in workers:
        sink.merge(w.sink)
    if cfg.roots == "l2":
        # per-edge roots never seed |R| = 1; isolated vertices are their own cliques
        deg = np.diff(g.row_offsets)
        for v in np.flatnonzero(deg == 0):
            sink.report([int(v)])
    phase1 = (shared.phase2_start - t0) if shared.phase2_start is not None else t1 - t0
    return RunResult(
        clique_count=sink.total,
        donation_count=sum(w.metrics.donations_made for w in workers),
        roots_mode=cfg.roots,
        induced_mode=induced_mode,
        workers=nworkers,
        total_time=t1 - t0,
        phase1_time=phase1,
        phase2_time=max(0.0, t1 - t0 - phase1),
        worker_metrics=[w.metrics for w in workers],
    )
