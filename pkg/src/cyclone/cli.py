"""Command line front end.

Subcommands: gen writes an automaton, check decides one input, bench
runs a grid of configurations to CSV, dist evaluates the racing model
on a sample of completion times.

Exit codes: 0 done, 1 usage or input problem, 2 verdict disagrees with
the oracle (or fails validation), 3 watchdog timeout.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from .automaton import DanglingStateId, DuplicateEdge, MalformedHeader, ZeroCycle
from .bench import (
    ALGORITHMS,
    PARALLEL,
    InputNotFound,
    InvalidConfig,
    RunConfig,
    VerdictCorrupt,
    WatchdogTimeout,
    execute,
    resolve_input,
    run,
    sweep,
    write_csv,
    write_sweep_csv,
)
from .colors import ColorStore
from .oracle import has_accepting_cycle
from .stats import EmpiricalDistribution, EmptyDistribution, ZeroTime


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # exit code 2 is reserved for oracle disagreement, so usage errors
    # must not go through argparse's default SystemExit(2)
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="cyclone", description="accepting-cycle detection workbench")
    sub = p.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="write an automaton from a generator spec")
    g.add_argument("spec", help="lasso:STEM:CYC:acc|noacc, random:N:DEG:P:SEED, needle:W:D:SEED, or a file")
    g.add_argument("-o", "--output", default="-", help="output file, - for stdout")

    c = sub.add_parser("check", help="decide one input with one detector")
    c.add_argument("input")
    c.add_argument("--alg", default="ndfs", choices=ALGORITHMS)
    c.add_argument("--workers", type=int, default=1)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--heuristic", action="store_true", help="prefer globally unvisited successors")
    c.add_argument("--allred", action="store_true", help="skip nested passes under fully red subtrees")
    c.add_argument("--oracle", action="store_true", help="cross-check against the SCC decision")
    c.add_argument("--dump-colors", metavar="PATH", help="write the shared color table as CSV")
    c.add_argument("--timeout", type=float, default=None, help="override the watchdog budget in seconds")

    b = sub.add_parser("bench", help="run a grid of configurations")
    b.add_argument("inputs", nargs="+")
    b.add_argument("--algs", default="ndfs", help="comma-separated algorithm list")
    b.add_argument("--workers", default="1", help="comma-separated worker counts")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--repeats", type=int, default=5)
    b.add_argument("--heuristic", action="store_true")
    b.add_argument("--oracle", action="store_true", help="cross-check every verdict")
    b.add_argument("-o", "--output", default="bench.csv", help="per-run records CSV")
    b.add_argument("--aggregate", default=None, help="also write per-cell aggregates CSV")
    b.add_argument("--timeout", type=float, default=None)

    d = sub.add_parser("dist", help="racing model over a sample of times")
    d.add_argument("file", help="bench records CSV or one number per line")
    d.add_argument("--n", dest="ns", default="1,2,4,8,16", help="comma-separated swarm sizes")
    d.add_argument("--alg", default=None, help="filter CSV rows by algorithm")
    d.add_argument("--input", default=None, help="filter CSV rows by input")
    d.add_argument("-o", "--output", default=None, help="also write the table as CSV")
    return p


def _cmd_gen(args) -> int:
    aut = resolve_input(args.spec)
    text = aut.to_text()
    if args.output == "-":
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text)
    return 0


def _cmd_check(args) -> int:
    # reuse config validation for flag/algorithm mismatches
    cfg = RunConfig(args.alg, args.input, workers=args.workers, seed=args.seed,
                    repeats=1, heuristic=args.heuristic, allred=args.allred)
    aut = resolve_input(args.input)
    store = None
    if args.dump_colors:
        if args.alg not in ("lndfs", "endfs", "nmc"):
            raise InvalidConfig(f"{args.alg} has no shared color table to dump")
        store = ColorStore(aut.num_states, aut.accepting)
    v = execute(aut, cfg.algorithm, cfg.workers, cfg.seed, cfg.heuristic,
                cfg.allred, timeout=args.timeout, store=store)
    if args.dump_colors:
        Path(args.dump_colors).write_text(store.dump_csv())
    if v.lasso is not None:
        print("CYCLE")
        print("stem:", " ".join(map(str, v.lasso.stem)))
        print("cycle:", " ".join(map(str, v.lasso.cycle)))
    else:
        print("NO-CYCLE")
    if args.oracle:
        if has_accepting_cycle(aut) != (v.lasso is not None):
            print("oracle disagrees with the verdict", file=sys.stderr)
            return 2
    return 0


def _cmd_bench(args) -> int:
    algs = [a.strip() for a in args.algs.split(",") if a.strip()]
    workers = [int(w) for w in args.workers.split(",") if w.strip()]
    if not algs or not workers:
        raise InvalidConfig("need at least one algorithm and one worker count")
    configs = []
    for inp in args.inputs:
        for alg in algs:
            counts = workers if alg in PARALLEL else [1]
            for w in dict.fromkeys(counts):
                configs.append(RunConfig(
                    alg, inp, workers=w, seed=args.seed, repeats=args.repeats,
                    heuristic=args.heuristic and alg in ("swarm", "lndfs"),
                ))
    records, rows = sweep(configs, oracle_check=args.oracle, timeout=args.timeout)
    write_csv(records, args.output)
    if args.aggregate:
        write_sweep_csv(rows, args.aggregate)
    print(f"{len(records)} runs -> {args.output}")
    return 0


def _read_samples(path: str, alg: str | None, inp: str | None) -> list[float]:
    text = Path(path).read_text()
    first = text.splitlines()[0] if text.strip() else ""
    if first.startswith("input,alg,"):
        out = []
        for row in csv.DictReader(text.splitlines()):
            if alg is not None and row["alg"] != alg:
                continue
            if inp is not None and row["input"] != inp:
                continue
            out.append(float(row["wall_time_s"]))
        return out
    return [float(line) for line in text.split() if line and not line.startswith("#")]


def _cmd_dist(args) -> int:
    samples = _read_samples(args.file, args.alg, args.input)
    dist = EmpiricalDistribution.from_samples(samples)
    rows = []
    for n in (int(x) for x in args.ns.split(",") if x.strip()):
        rows.append((n, dist.expected_min(n), dist.min_stddev(n), dist.speedup(n)))
        print(f"N={rows[-1][0]} expected={rows[-1][1]:.6f} "
              f"stddev={rows[-1][2]:.6f} speedup={rows[-1][3]:.4f}")
    if args.output:
        with open(args.output, "w") as fh:
            fh.write("n,expected_min,stddev,speedup\n")
            for n, em, sd, sp in rows:
                fh.write(f"{n},{em:.9f},{sd:.9f},{sp:.6f}\n")
    return 0


def main(argv=None) -> int:
    # frequent context switches keep the polling loops responsive
    sys.setswitchinterval(0.001)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.cmd == "gen":
            return _cmd_gen(args)
        if args.cmd == "check":
            return _cmd_check(args)
        if args.cmd == "bench":
            return _cmd_bench(args)
        return _cmd_dist(args)
    except _UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    except (InvalidConfig, InputNotFound, MalformedHeader, DanglingStateId,
            DuplicateEdge, ZeroCycle, EmptyDistribution, ZeroTime) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except VerdictCorrupt as e:
        print(f"verdict error: {e}", file=sys.stderr)
        return 2
    except WatchdogTimeout as e:
        print(f"timeout: {e}", file=sys.stderr)
        return 3


def entry() -> None:
    raise SystemExit(main(sys.argv[1:]))
