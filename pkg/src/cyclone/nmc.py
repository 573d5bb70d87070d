"""Optimistic multi-core search with swarmed repairs instead of sequential ones.

Same skeleton as the shared-blue/shared-red detector, but a dangerous
root opens a shared repair task: the finder roots a shared-red pass at
it, any worker arriving at the same root merges in as a helper, and
workers whose own pass already completed pick open tasks off the board
until every pass and every repair is done.  Repairs share the global red
flags, so concurrent repairs prune each other and re-joining a finished
task costs one expansion.
"""

from __future__ import annotations

import threading
import time
from time import perf_counter

from .automaton import BuchiAutomaton, OrderKind, order_key
from .colors import ColorStore, RED, ReporterSlot
from .endfs import endfs_pass, _popcount
from .lndfs import lndfs_pass
from .ndfs import STOPPED
from .results import Lasso, Verdict, WorkerStats, WorkStats
from .swarm import run_workers


class _RepairTask:
    """One dangerous root under repair.  Closed once the root turns red."""

    __slots__ = ("root", "stem", "owner", "joiners")

    def __init__(self, root: int, stem: tuple[int, ...], owner: int):
        self.root = root
        self.stem = stem
        self.owner = owner
        self.joiners = 0


def nmc_ndfs(
    aut: BuchiAutomaton,
    n_workers: int = 1,
    seed: int = 0,
    store: ColorStore | None = None,
) -> Verdict:
    """Optimistic detector whose repairs are shared-red passes with helpers."""
    if n_workers < 1:
        raise ValueError(f"need at least one worker, got {n_workers}")
    if store is None:
        store = ColorStore(aut.num_states, aut.accepting)
    reporter = ReporterSlot(store.term)
    stats = [WorkerStats() for _ in range(n_workers)]
    repair_seen = bytearray(aut.num_states)
    tasks: dict[int, _RepairTask] = {}
    board = threading.Lock()
    mains_done = [0]

    def participate(task: _RepairTask, w: int):
        with board:
            pid = task.joiners
            task.joiners += 1
        pseed = seed ^ (task.root * 0x1000193)
        rw = WorkerStats()
        res = lndfs_pass(
            aut,
            store,
            rw,
            root=task.root,
            key_blue=order_key(pid, pseed, OrderKind.BLUE),
            key_red=order_key(pid, pseed, OrderKind.RED),
            stem_prefix=task.stem,
            seen=repair_seen,
        )
        me = stats[w]
        me.repair_expansions += rw.blue_expansions + rw.red_expansions
        me.waits += rw.waits
        if rw.max_stack_depth > me.max_stack_depth:
            me.max_stack_depth = rw.max_stack_depth
        return res

    def body(w: int):
        def repair(root: int, stem: tuple[int, ...]):
            with board:
                task = tasks.get(root)
                owned = task is None
                if owned:
                    task = _RepairTask(root, stem, w)
                    tasks[root] = task
            if not owned:
                stats[w].helper_joins += 1
            return participate(task, w)

        res = endfs_pass(aut, store, stats[w], w, seed, repair)
        if isinstance(res, Lasso):
            reporter.claim(w, res)
            return
        if res is STOPPED:
            return
        with board:
            mains_done[0] += 1
        # own pass done: help with whatever repairs are still open
        flags = store.flags
        while not store.term.stopped:
            open_task = None
            with board:
                for task in tasks.values():
                    if not flags[task.root] & RED:
                        open_task = task
                        break
                settled = mains_done[0] == n_workers
            if open_task is not None:
                stats[w].helper_joins += 1
                res = participate(open_task, w)
                if isinstance(res, Lasso):
                    reporter.claim(w, res)
                    return
                if res is STOPPED:
                    return
            elif settled:
                return
            else:
                time.sleep(1e-4)

    t0 = perf_counter()
    run_workers(n_workers, body, store.term)
    work = WorkStats(stats, perf_counter() - t0)
    work.extras["dangerous_count"] = sum(s.dangerous_marks for s in stats)
    work.extras["repair_states"] = _popcount(repair_seen)
    if reporter.worker is None:
        return Verdict(None, work)
    return Verdict(reporter.lasso, work, winner=reporter.worker)
