"""Shared hypothesis strategies for small automata."""

import hypothesis.strategies as st

from cyclone import BuchiAutomaton


@st.composite
def automata(draw, max_states: int = 8, max_degree: int = 3):
    n = draw(st.integers(1, max_states))
    init = draw(st.integers(0, n - 1))
    accepting = draw(st.frozensets(st.integers(0, n - 1)))
    edges = [
        draw(st.lists(st.integers(0, n - 1), max_size=min(max_degree, n), unique=True))
        for _ in range(n)
    ]
    return BuchiAutomaton(n, init, accepting, edges)
