"""Explicit-state Buchi automata: graph type, text format, successor orders.

A state space is a plain directed graph over integer state ids with one
initial state and a set of accepting states.  The successor lists keep the
order in which edges were declared (file order for parsed automata,
generation order for generated ones); that order is the canonical one, and
every worker-specific ordering is a seeded permutation of it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import IntEnum

_M64 = (1 << 64) - 1
_GOLD = 0x9E3779B97F4A7C15


class MalformedHeader(ValueError):
    """Header lines are missing, out of order, duplicated, or unparsable."""

    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


class DanglingStateId(ValueError):
    """A state id outside [0, num_states) appeared in init/accepting/trans."""

    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


class DuplicateEdge(ValueError):
    """The same (src, dst) pair was declared twice."""

    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


class ZeroCycle(ValueError):
    """Lasso shapes need a cycle of at least one state."""


@dataclass(eq=True, slots=True)
class BuchiAutomaton:
    """Finite automaton with accepting states and ordered successor lists."""

    num_states: int
    init: int
    accepting: frozenset[int]
    edges: list[list[int]]
    # Derived byte mask for fast accepting-membership checks in inner loops.
    accept_mask: bytearray = field(default_factory=bytearray, compare=False, repr=False)

    def __post_init__(self):
        n = self.num_states
        if n < 1:
            raise ValueError("automaton needs at least one state")
        if not (0 <= self.init < n):
            raise ValueError(f"init {self.init} out of range")
        if len(self.edges) != n:
            raise ValueError("edges must list successors for every state")
        mask = bytearray(n)
        for a in self.accepting:
            if not (0 <= a < n):
                raise ValueError(f"accepting state {a} out of range")
            mask[a] = 1
        for s, succs in enumerate(self.edges):
            if len(set(succs)) != len(succs):
                raise ValueError(f"duplicate successor in state {s}")
            for t in succs:
                if not (0 <= t < n):
                    raise ValueError(f"edge {s}->{t} out of range")
        self.accept_mask = mask

    def successors(self, s: int) -> list[int]:
        """Canonical-order successor list of s.  Treat as read-only."""
        return self.edges[s]

    @property
    def num_edges(self) -> int:
        return sum(len(x) for x in self.edges)

    def to_text(self) -> str:
        """Serialize to the canonical text form (LF line endings)."""
        lines = [f"states {self.num_states}", f"init {self.init}"]
        lines.append(" ".join(["accepting"] + [str(a) for a in sorted(self.accepting)]))
        for s, succs in enumerate(self.edges):
            for t in succs:
                lines.append(f"trans {s} {t}")
        return "\n".join(lines) + "\n"


def parse_automaton(text: str) -> BuchiAutomaton:
    """Parse the line-oriented automaton format.

    Grammar, after stripping '#' comments and blank lines:
    a 'states N' line first, then 'init I', then 'accepting [id ...]',
    then any number of 'trans SRC DST' lines.  Ids are decimal, 0-based.
    Raises MalformedHeader, DanglingStateId, or DuplicateEdge with the
    offending 1-based line number.
    """
    # (line_no, tokens) for every meaningful line, raw numbering preserved
    rows = []
    for no, raw in enumerate(text.split("\n"), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            rows.append((no, body.split()))

    if not rows:
        raise MalformedHeader(1, "empty input, expected 'states N'")

    def _int(no, tok, what):
        try:
            v = int(tok)
        except ValueError:
            raise MalformedHeader(no, f"{what} is not an integer: {tok!r}") from None
        if v < 0:
            raise MalformedHeader(no, f"{what} is negative: {tok!r}")
        return v

    no, toks = rows[0]
    if toks[0] != "states" or len(toks) != 2:
        raise MalformedHeader(no, f"expected 'states N', got {' '.join(toks)!r}")
    n = _int(no, toks[1], "state count")
    if n < 1:
        raise MalformedHeader(no, "state count must be at least 1")

    if len(rows) < 2:
        raise MalformedHeader(no, "missing 'init I' line")
    no, toks = rows[1]
    if toks[0] != "init" or len(toks) != 2:
        raise MalformedHeader(no, f"expected 'init I', got {' '.join(toks)!r}")
    init = _int(no, toks[1], "init state")
    if init >= n:
        raise DanglingStateId(no, f"init state {init} >= states {n}")

    if len(rows) < 3:
        raise MalformedHeader(no, "missing 'accepting' line")
    no, toks = rows[2]
    if toks[0] != "accepting":
        raise MalformedHeader(no, f"expected 'accepting [id ...]', got {' '.join(toks)!r}")
    accepting = set()
    for tok in toks[1:]:
        a = _int(no, tok, "accepting state")
        if a >= n:
            raise DanglingStateId(no, f"accepting state {a} >= states {n}")
        accepting.add(a)

    edges: list[list[int]] = [[] for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    for no, toks in rows[3:]:
        if toks[0] != "trans" or len(toks) != 3:
            raise MalformedHeader(no, f"expected 'trans SRC DST', got {' '.join(toks)!r}")
        s = _int(no, toks[1], "source state")
        t = _int(no, toks[2], "target state")
        if s >= n:
            raise DanglingStateId(no, f"source state {s} >= states {n}")
        if t >= n:
            raise DanglingStateId(no, f"target state {t} >= states {n}")
        if (s, t) in seen:
            raise DuplicateEdge(no, f"edge {s} -> {t} declared twice")
        seen.add((s, t))
        edges[s].append(t)

    return BuchiAutomaton(n, init, frozenset(accepting), edges)


# ---------------------------------------------------------------------------
# Worker-specific successor orders.


class OrderKind(IntEnum):
    BLUE = 0
    RED = 1


@dataclass(frozen=True, slots=True)
class SuccessorOrder:
    """Names one deterministic permutation family: (worker, seed, kind)."""

    worker_id: int
    seed: int
    kind: OrderKind = OrderKind.BLUE


def _mix(h: int) -> int:
    # splitmix64 finalizer; cheap and well distributed
    h &= _M64
    h = ((h ^ (h >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    h = ((h ^ (h >> 27)) * 0x94D049BB133111EB) & _M64
    return h ^ (h >> 31)


def order_key(worker_id: int, seed: int, kind: int) -> int:
    """Precomputed per-(worker, seed, kind) key feeding per-state hashes."""
    return _mix(_mix(seed * _GOLD + worker_id) ^ ((kind + 1) * 0xD1B54A32D192ED03))


def permute(succs: list[int], h: int) -> list[int]:
    """Fisher-Yates shuffle of succs driven by hash h.  Bijective by construction."""
    d = len(succs)
    if d <= 1:
        return succs
    if d == 2:
        return succs if h & 1 == 0 else [succs[1], succs[0]]
    out = list(succs)
    x = h | 1
    for i in range(d - 1, 0, -1):
        # xorshift64 step per swap
        x ^= (x << 13) & _M64
        x ^= x >> 7
        x ^= (x << 17) & _M64
        j = x % (i + 1)
        out[i], out[j] = out[j], out[i]
    return out


def permuted_successors(aut: BuchiAutomaton, s: int, order: SuccessorOrder | None) -> list[int]:
    """Successors of s in the order's permutation (canonical when order is None)."""
    succs = aut.edges[s]
    if order is None:
        return succs
    key = order_key(order.worker_id, order.seed, int(order.kind))
    return permute(succs, _mix(key ^ ((s + 1) * _GOLD)))


def state_hash(key: int, s: int) -> int:
    """Per-state shuffle hash under a precomputed order key."""
    return _mix(key ^ ((s + 1) * _GOLD))


# ---------------------------------------------------------------------------
# Generators.  All deterministic in their arguments.


def gen_lasso(stem_len: int, cycle_len: int, accepting_on_cycle: bool) -> BuchiAutomaton:
    """Chain of stem_len states into a simple cycle of cycle_len states.

    Exactly one accepting state: the first cycle state when
    accepting_on_cycle, otherwise the init state.  A stem_len of 0 with
    accepting_on_cycle=False still gets one stem state so the accepting
    state stays off the cycle; every other shape has stem_len + cycle_len
    states.  Raises ZeroCycle when cycle_len < 1.
    """
    if cycle_len < 1:
        raise ZeroCycle(f"cycle_len must be >= 1, got {cycle_len}")
    if stem_len < 0:
        raise ValueError(f"stem_len must be >= 0, got {stem_len}")
    if stem_len == 0 and not accepting_on_cycle:
        stem_len = 1  # keep the accepting init off the cycle
    n = stem_len + cycle_len
    edges: list[list[int]] = [[] for _ in range(n)]
    for s in range(n - 1):
        edges[s].append(s + 1)
    edges[n - 1].append(stem_len)  # close the cycle
    accepting = frozenset({stem_len if accepting_on_cycle else 0})
    return BuchiAutomaton(n, 0, accepting, edges)


def gen_random(n: int, avg_out_degree: float, accept_prob: float, seed: int) -> BuchiAutomaton:
    """Random graph: each state draws round(avg_out_degree) uniform targets.

    Duplicate targets are dropped, so out-degrees may come out below the
    rounded average.  Each state is accepting with probability accept_prob.
    Init is state 0.  Deterministic in seed.
    """
    if n < 1:
        raise ValueError(f"need at least one state, got {n}")
    if avg_out_degree < 0:
        raise ValueError(f"avg_out_degree must be >= 0, got {avg_out_degree}")
    if not (0.0 <= accept_prob <= 1.0):
        raise ValueError(f"accept_prob must be in [0, 1], got {accept_prob}")
    rng = random.Random(seed)
    k = round(avg_out_degree)
    edges = []
    accepting = set()
    for s in range(n):
        targets = dict.fromkeys(rng.randrange(n) for _ in range(k))
        edges.append(list(targets))
        if rng.random() < accept_prob:
            accepting.add(s)
    return BuchiAutomaton(n, 0, frozenset(accepting), edges)


def gen_needle(width: int, depth: int, seed: int, with_cycle: bool = True) -> BuchiAutomaton:
    """Init fans out to width disjoint chains of depth states each.

    One seed-chosen chain ends in an accepting 2-cycle (the needle); every
    other chain ends in a deadlock.  with_cycle=False drops the edge that
    closes the 2-cycle, leaving the same graph with nothing to find.
    """
    if width < 1 or depth < 1:
        raise ValueError(f"width and depth must be >= 1, got {width}x{depth}")
    needle = random.Random(seed).randrange(width)
    n = 1 + width * depth + 2
    edges: list[list[int]] = [[] for _ in range(n)]
    u = 1 + width * depth  # accepting half of the 2-cycle
    v = u + 1
    for c in range(width):
        head = 1 + c * depth
        edges[0].append(head)
        for i in range(depth - 1):
            edges[head + i].append(head + i + 1)
        if c == needle:
            edges[head + depth - 1].append(u)
    edges[u].append(v)
    if with_cycle:
        edges[v].append(u)
    return BuchiAutomaton(n, 0, frozenset({u}), edges)
