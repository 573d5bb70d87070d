"""Benchmark harness: input resolution, watchdogged runs, CSV output.

Inputs are either files in the text format of parse_automaton or inline
generator specs (lasso:STEM:CYC:acc, random:N:DEG:P:SEED,
needle:WIDTH:DEPTH:SEED).  Each run is wrapped in a watchdog that
terminates cooperative detectors through their shared flag and raises
WatchdogTimeout; the budget comes from CYCLONE_WATCHDOG_SECS (default
60 seconds).
"""

from __future__ import annotations

import csv
import os
import threading
from dataclasses import dataclass
from pathlib import Path
from statistics import fmean

from .automaton import BuchiAutomaton, SuccessorOrder, gen_lasso, gen_needle, gen_random, parse_automaton
from .colors import ColorStore, TerminationFlag
from .endfs import endfs
from .lndfs import lndfs
from .ndfs import ndfs
from .nmc import nmc_ndfs
from .oracle import has_accepting_cycle, validate_lasso
from .owcty import owcty
from .results import Verdict
from .swarm import swarm_ndfs

ALGORITHMS = ("ndfs", "swarm", "lndfs", "endfs", "nmc", "owcty")

# algorithms that race several workers and honour a shared stop flag
PARALLEL = ("swarm", "lndfs", "endfs", "nmc")

CSV_HEADER = (
    "input,alg,workers,seed,repeat,verdict,wall_time_s,blue_exp,red_exp,"
    "repair_exp,dangerous_count,waits,helper_joins,owcty_rounds,map_hits"
)


class InvalidConfig(ValueError):
    """Raised for a run configuration the harness cannot execute."""


class InputNotFound(FileNotFoundError):
    """Raised when an input spec is neither a generator nor a readable file."""


class VerdictCorrupt(RuntimeError):
    """Raised when a detector returns a lasso that fails validation."""


class WatchdogTimeout(RuntimeError):
    """Raised when a run exceeds its wall-clock budget."""


@dataclass(slots=True)
class RunConfig:
    """One benchmark cell: an algorithm on an input at a worker count."""

    algorithm: str
    input: str
    workers: int = 1
    seed: int = 0
    repeats: int = 5
    heuristic: bool = False
    allred: bool = False

    def __post_init__(self) -> None:
        if self.algorithm not in ALGORITHMS:
            raise InvalidConfig(f"unknown algorithm {self.algorithm!r}")
        if self.workers < 1:
            raise InvalidConfig(f"workers must be >= 1, got {self.workers}")
        if self.repeats < 1:
            raise InvalidConfig(f"repeats must be >= 1, got {self.repeats}")
        if self.seed < 0:
            raise InvalidConfig(f"seed must be >= 0, got {self.seed}")
        # the comparator ignores workers and the heuristic outright
        if self.algorithm != "owcty":
            if self.workers > 1 and self.algorithm not in PARALLEL:
                raise InvalidConfig(f"{self.algorithm} is sequential, workers must be 1")
            if self.heuristic and self.algorithm not in ("swarm", "lndfs"):
                raise InvalidConfig(f"heuristic ordering not supported by {self.algorithm}")
        if self.allred and self.algorithm != "ndfs":
            raise InvalidConfig("allred is a flag of the sequential detector only")


@dataclass(slots=True)
class BenchRecord:
    """One completed run, one CSV row."""

    input: str
    alg: str
    workers: int
    seed: int
    repeat: int
    verdict: str
    wall_time_s: float
    blue_exp: int
    red_exp: int
    repair_exp: int
    dangerous_count: int
    waits: int
    helper_joins: int
    owcty_rounds: int
    map_hits: int

    def to_row(self) -> list:
        return [
            self.input, self.alg, self.workers, self.seed, self.repeat,
            self.verdict, f"{self.wall_time_s:.6f}", self.blue_exp,
            self.red_exp, self.repair_exp, self.dangerous_count, self.waits,
            self.helper_joins, self.owcty_rounds, self.map_hits,
        ]


def resolve_input(spec: str) -> BuchiAutomaton:
    """Turn an input spec into an automaton.

    Generator specs are parsed by prefix; anything else is read as a file.
    """
    head, _, rest = spec.partition(":")
    if head in ("lasso", "random", "needle"):
        parts = rest.split(":") if rest else []
        try:
            if head == "lasso":
                stem, cyc, flag = parts
                if flag not in ("acc", "noacc"):
                    raise ValueError(flag)
                return gen_lasso(int(stem), int(cyc), flag == "acc")
            if head == "random":
                n, deg, p, seed = parts
                return gen_random(int(n), float(deg), float(p), int(seed))
            width, depth, seed = parts
            return gen_needle(int(width), int(depth), int(seed))
        except (ValueError, TypeError) as e:
            raise InvalidConfig(f"bad generator spec {spec!r}: {e}") from e
    path = Path(spec)
    if not path.is_file():
        raise InputNotFound(f"no such input: {spec}")
    return parse_automaton(path.read_text())


def watchdog_secs() -> float:
    raw = os.environ.get("CYCLONE_WATCHDOG_SECS", "60")
    try:
        secs = float(raw)
    except ValueError as e:
        raise InvalidConfig(f"bad CYCLONE_WATCHDOG_SECS {raw!r}") from e
    return secs


def execute(
    aut: BuchiAutomaton,
    algorithm: str,
    workers: int = 1,
    seed: int = 0,
    heuristic: bool = False,
    allred: bool = False,
    timeout: float | None = None,
    store: ColorStore | None = None,
) -> Verdict:
    """Run one detector once, under the watchdog.

    timeout=None takes the environment budget; a non-positive timeout
    disables the watchdog and runs inline.  A pre-built store may be
    passed for the shared-color algorithms to inspect colors afterwards.
    """
    if timeout is None:
        timeout = watchdog_secs()

    term = None
    if algorithm not in ("lndfs", "endfs", "nmc"):
        store = None
    elif store is None:
        store = ColorStore(aut.num_states, aut.accepting)
    if algorithm == "swarm":
        term = TerminationFlag()
        job = lambda: swarm_ndfs(aut, workers, seed, heuristic, term=term)
    elif algorithm == "lndfs":
        job = lambda: lndfs(aut, workers, seed, heuristic, store=store)
    elif algorithm == "endfs":
        job = lambda: endfs(aut, workers, seed, store=store)
    elif algorithm == "nmc":
        job = lambda: nmc_ndfs(aut, workers, seed, store=store)
    elif algorithm == "ndfs":
        job = lambda: ndfs(aut, SuccessorOrder(0, seed), allred=allred)
    elif algorithm == "owcty":
        job = lambda: owcty(aut)
    else:
        raise InvalidConfig(f"unknown algorithm {algorithm!r}")

    if timeout <= 0:
        return job()

    box: dict = {}

    def runner():
        try:
            box["verdict"] = job()
        except BaseException as e:  # surfaced in the caller
            box["error"] = e

    t = threading.Thread(target=runner, daemon=True, name=f"bench-{algorithm}")
    t.start()
    t.join(timeout)
    if t.is_alive():
        # cooperative algorithms honour the stop flag; pure sequential
        # ones cannot be interrupted and their thread is abandoned
        if term is not None:
            term.set()
        if store is not None:
            store.term.set()
        t.join(1.0)
        raise WatchdogTimeout(f"{algorithm} exceeded {timeout:.1f}s budget")
    if "error" in box:
        raise box["error"]
    return box["verdict"]


def _record(cfg: RunConfig, repeat: int, seed: int, v: Verdict) -> BenchRecord:
    x = v.stats.extras
    return BenchRecord(
        input=cfg.input,
        alg=cfg.algorithm,
        workers=cfg.workers,
        seed=seed,
        repeat=repeat,
        verdict="CYCLE" if v.lasso is not None else "NO-CYCLE",
        wall_time_s=v.stats.wall_time,
        blue_exp=v.stats.blue_expansions,
        red_exp=v.stats.red_expansions,
        repair_exp=v.stats.repair_expansions,
        dangerous_count=x.get("dangerous_count", 0),
        waits=v.stats.waits,
        helper_joins=v.stats.helper_joins,
        owcty_rounds=x.get("owcty_rounds", 0),
        map_hits=x.get("map_hits", 0),
    )


def run(cfg: RunConfig, aut: BuchiAutomaton | None = None, timeout: float | None = None) -> list[BenchRecord]:
    """Execute a configuration repeats times, bumping the seed each time."""
    if aut is None:
        aut = resolve_input(cfg.input)
    out = []
    for k in range(cfg.repeats):
        seed = cfg.seed + k
        v = execute(aut, cfg.algorithm, cfg.workers, seed, cfg.heuristic, cfg.allred, timeout=timeout)
        if v.lasso is not None and not validate_lasso(aut, v.lasso):
            raise VerdictCorrupt(f"{cfg.algorithm} returned an invalid lasso on {cfg.input}")
        out.append(_record(cfg, k, seed, v))
    return out


@dataclass(slots=True)
class SweepRow:
    """Aggregate over the repeats of one (input, algorithm, workers) cell."""

    input: str
    alg: str
    workers: int
    runs: int
    mean_wall_s: float
    speedup: float


def sweep(
    configs: list[RunConfig],
    oracle_check: bool = False,
    timeout: float | None = None,
) -> tuple[list[BenchRecord], list[SweepRow]]:
    """Run a batch of configurations and aggregate per cell.

    Speedup is the single-worker sequential mean over the cell mean on
    the same input; the baseline cell itself reports exactly 1.0.  With
    oracle_check every verdict is compared against an SCC decision.
    """
    records: list[BenchRecord] = []
    oracle: dict[str, bool] = {}
    auts: dict[str, BuchiAutomaton] = {}
    for cfg in configs:
        aut = auts.get(cfg.input)
        if aut is None:
            aut = auts[cfg.input] = resolve_input(cfg.input)
        if oracle_check and cfg.input not in oracle:
            oracle[cfg.input] = has_accepting_cycle(aut)
        rows = run(cfg, aut=aut, timeout=timeout)
        if oracle_check:
            for r in rows:
                if (r.verdict == "CYCLE") != oracle[cfg.input]:
                    raise VerdictCorrupt(
                        f"{cfg.algorithm} disagrees with the SCC oracle on {cfg.input}"
                    )
        records.extend(rows)

    cells: dict[tuple, list[BenchRecord]] = {}
    for r in records:
        cells.setdefault((r.input, r.alg, r.workers), []).append(r)
    means = {key: fmean(rs.wall_time_s for rs in rows) for key, rows in cells.items()}

    aggregates = []
    for (inp, alg, workers), rows in cells.items():
        base_key = (inp, "ndfs", 1)
        if base_key not in means:
            base_key = (inp, alg, 1)
        if (inp, alg, workers) == base_key:
            speedup = 1.0
        elif base_key in means and means[(inp, alg, workers)] > 0:
            speedup = means[base_key] / means[(inp, alg, workers)]
        else:
            speedup = float("nan")
        aggregates.append(SweepRow(inp, alg, workers, len(rows), means[(inp, alg, workers)], speedup))
    return records, aggregates


def write_csv(records: list[BenchRecord], path) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(CSV_HEADER + "\n")
        w = csv.writer(fh, lineterminator="\n")
        for r in records:
            w.writerow(r.to_row())


def write_sweep_csv(rows: list[SweepRow], path) -> None:
    with open(path, "w", newline="") as fh:
        fh.write("input,alg,workers,runs,mean_wall_s,speedup\n")
        w = csv.writer(fh, lineterminator="\n")
        for r in rows:
            w.writerow([r.input, r.alg, r.workers, r.runs, f"{r.mean_wall_s:.6f}", f"{r.speedup:.4f}"])
