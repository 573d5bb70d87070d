"""Shared per-state flags, accept counters, and run termination plumbing.

Everything here is safe for unrestricted concurrent use by worker
threads.  Global flags (red, blue, dangerous) are monotone: once set they
stay set for the whole run, so readers may skip the lock; writers go
through one mutex so set-and-report-previous is indivisible.  Under
CPython's interpreter lock a write that happened before a flag was set is
visible to any reader that observes the flag.
"""

from __future__ import annotations

import threading
import time
from enum import Enum

RED = 1
BLUE = 2
DANGEROUS = 4

# Worker-local color values (one byte per state, owned by a single worker).
WHITE, CYAN, LOCAL_BLUE, PINK = 0, 1, 2, 3


class UnderflowFault(RuntimeError):
    """An accept counter would have gone negative: a protocol bug."""


class AwaitResult(Enum):
    ZERO = 0
    TERMINATED = 1


class TerminationFlag:
    """Monotone stop signal checked at every expansion and while waiting."""

    __slots__ = ("stopped",)

    def __init__(self):
        self.stopped = False

    def set(self):
        self.stopped = True

    def is_set(self) -> bool:
        return self.stopped


class ReporterSlot:
    """First-writer-wins slot for the winning worker's counterexample.

    Claiming the slot also raises the termination flag, so losing workers
    unwind promptly.  Exactly one claim ever succeeds per run.
    """

    __slots__ = ("term", "_lock", "worker", "lasso")

    def __init__(self, term: TerminationFlag):
        self.term = term
        self._lock = threading.Lock()
        self.worker = None
        self.lasso = None

    def claim(self, worker: int, lasso) -> bool:
        with self._lock:
            if self.worker is None:
                self.worker = worker
                self.lasso = lasso
                self.term.set()
                return True
            return False


class ColorStore:
    """Global flag word per state plus lazy accept counters.

    The flags bytearray is public for lock-free reads in inner loops
    (flags[s] & RED and friends); all writes must go through set_flag.
    """

    def __init__(self, num_states: int, accepting=()):
        self.num_states = num_states
        self.flags = bytearray(num_states)
        self.accept_mask = bytearray(num_states)
        for a in accepting:
            self.accept_mask[a] = 1
        self.term = TerminationFlag()
        self._flag_lock = threading.Lock()
        self._counter_lock = threading.Lock()
        self._counters: dict[int, int] = {}

    def set_flag(self, state: int, bit: int) -> bool:
        """Set one flag bit, returning whether it was already set."""
        with self._flag_lock:
            prev = self.flags[state]
            self.flags[state] = prev | bit
            return bool(prev & bit)

    def get_flag(self, state: int, bit: int) -> bool:
        return bool(self.flags[state] & bit)

    def counter_adjust(self, state: int, delta: int) -> int:
        """Atomically add delta to the state's accept counter; returns the new value."""
        assert self.accept_mask[state], "counters exist only for accepting states"
        with self._counter_lock:
            value = self._counters.get(state, 0) + delta
            if value < 0:
                raise UnderflowFault(f"counter for state {state} dropped below zero")
            self._counters[state] = value
            return value

    def counter_value(self, state: int) -> int:
        return self._counters.get(state, 0)

    def await_zero(self, state: int, term: TerminationFlag | None = None) -> AwaitResult:
        """Block until the counter reads zero or the run is terminated.

        Polls with exponential backoff capped at 1 ms, so termination is
        observed promptly and waiting burns no lock.  term defaults to
        the store's own flag.
        """
        if term is None:
            term = self.term
        if self._counters.get(state, 0) == 0:
            return AwaitResult.ZERO
        delay = 1e-6
        while True:
            if term.stopped:
                return AwaitResult.TERMINATED
            if self._counters.get(state, 0) == 0:
                return AwaitResult.ZERO
            time.sleep(delay)
            delay = min(delay * 2, 1e-3)

    def dump_csv(self) -> str:
        """Post-mortem view: one 'state,red,blue,dangerous,count' row per state."""
        lines = ["state,red,blue,dangerous,count"]
        for s in range(self.num_states):
            f = self.flags[s]
            lines.append(
                f"{s},{1 if f & RED else 0},{1 if f & BLUE else 0},"
                f"{1 if f & DANGEROUS else 0},{self._counters.get(s, 0)}"
            )
        return "\n".join(lines) + "\n"
