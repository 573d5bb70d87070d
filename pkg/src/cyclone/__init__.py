"""Multi-core accepting-cycle detection for Büchi automata."""

from .automaton import (
    BuchiAutomaton,
    DanglingStateId,
    DuplicateEdge,
    MalformedHeader,
    OrderKind,
    SuccessorOrder,
    ZeroCycle,
    gen_lasso,
    gen_needle,
    gen_random,
    order_key,
    parse_automaton,
    permute,
    permuted_successors,
    state_hash,
)
from .bench import (
    ALGORITHMS,
    CSV_HEADER,
    PARALLEL,
    BenchRecord,
    InputNotFound,
    InvalidConfig,
    RunConfig,
    SweepRow,
    VerdictCorrupt,
    WatchdogTimeout,
    execute,
    resolve_input,
    run,
    sweep,
    write_csv,
    write_sweep_csv,
)
from .colors import (
    AwaitResult,
    ColorStore,
    ReporterSlot,
    TerminationFlag,
    UnderflowFault,
)
from .endfs import endfs
from .lndfs import lndfs
from .ndfs import ndfs, nested_search
from .nmc import nmc_ndfs
from .oracle import (
    enumerate_accepting_cycle,
    has_accepting_cycle,
    scc_has_accepting_cycle,
    sccs_from_init,
    validate_lasso,
    witness_lasso,
)
from .owcty import MapResult, map_pass, owcty
from .results import Lasso, Verdict, WorkerStats, WorkStats
from .stats import EmpiricalDistribution, EmptyDistribution, ZeroTime
from .swarm import run_workers, swarm_ndfs

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "AwaitResult",
    "BenchRecord",
    "BuchiAutomaton",
    "CSV_HEADER",
    "ColorStore",
    "DanglingStateId",
    "DuplicateEdge",
    "EmpiricalDistribution",
    "EmptyDistribution",
    "InputNotFound",
    "InvalidConfig",
    "Lasso",
    "MalformedHeader",
    "MapResult",
    "OrderKind",
    "PARALLEL",
    "ReporterSlot",
    "RunConfig",
    "SuccessorOrder",
    "SweepRow",
    "TerminationFlag",
    "UnderflowFault",
    "Verdict",
    "VerdictCorrupt",
    "WatchdogTimeout",
    "WorkStats",
    "WorkerStats",
    "ZeroCycle",
    "ZeroTime",
    "endfs",
    "enumerate_accepting_cycle",
    "execute",
    "gen_lasso",
    "gen_needle",
    "gen_random",
    "has_accepting_cycle",
    "lndfs",
    "map_pass",
    "ndfs",
    "nested_search",
    "nmc_ndfs",
    "order_key",
    "owcty",
    "parse_automaton",
    "permute",
    "permuted_successors",
    "resolve_input",
    "run",
    "run_workers",
    "scc_has_accepting_cycle",
    "sccs_from_init",
    "state_hash",
    "swarm_ndfs",
    "sweep",
    "validate_lasso",
    "witness_lasso",
    "write_csv",
    "write_sweep_csv",
]
