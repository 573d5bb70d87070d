"""Breadth-first path and closure helpers over automaton graphs."""

from __future__ import annotations

from collections import deque

from .automaton import BuchiAutomaton


def bfs_path(
    aut: BuchiAutomaton,
    src: int,
    targets: set[int],
    allowed: set[int] | None = None,
) -> list[int] | None:
    """Shortest path src -> some target, or None.

    A path of length zero (src already a target) is returned as [src].
    When allowed is given, every visited state must be in it (src included).
    """
    if allowed is not None and src not in allowed:
        return None
    if src in targets:
        return [src]
    parent = {src: -1}
    queue = deque([src])
    while queue:
        s = queue.popleft()
        for t in aut.edges[s]:
            if t in parent or (allowed is not None and t not in allowed):
                continue
            parent[t] = s
            if t in targets:
                path = [t]
                while path[-1] != src:
                    path.append(parent[path[-1]])
                path.reverse()
                return path
            queue.append(t)
    return None


def cycle_through(aut: BuchiAutomaton, s: int, allowed: set[int] | None = None) -> list[int] | None:
    """Non-trivial cycle s -> ... -> s, returned without the repeated endpoint.

    Needs at least one edge, so a state without a self-loop must reach
    itself through a successor.  None when no such cycle exists.
    """
    best: list[int] | None = None
    for t in aut.edges[s]:
        if allowed is not None and t not in allowed:
            continue
        if t == s:
            return [s]
        back = bfs_path(aut, t, {s}, allowed)
        if back is not None:
            cand = [s] + back[:-1]
            if best is None or len(cand) < len(best):
                best = cand
    return best


def reachable_from(aut: BuchiAutomaton, roots, allowed: set[int] | None = None) -> set[int]:
    """Forward closure of roots, optionally restricted to the allowed set."""
    seen = set()
    queue = deque()
    for r in roots:
        if r not in seen and (allowed is None or r in allowed):
            seen.add(r)
            queue.append(r)
    while queue:
        s = queue.popleft()
        for t in aut.edges[s]:
            if t not in seen and (allowed is None or t in allowed):
                seen.add(t)
                queue.append(t)
    return seen
