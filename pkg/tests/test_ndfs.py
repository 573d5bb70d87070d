"""Sequential nested search against the SCC oracle."""

from hypothesis import given
import hypothesis.strategies as st

from cyclone import (
    BuchiAutomaton,
    SuccessorOrder,
    gen_lasso,
    gen_random,
    has_accepting_cycle,
    ndfs,
    validate_lasso,
)
from strategies import automata


def test_no_cycle_run_is_frozen():
    # 5 states, accepting init off the cycle: blue covers all 5, the one
    # red search from the init covers all 5 again
    v = ndfs(gen_lasso(2, 3, False))
    assert not v.cycle_found
    assert v.stats.blue_expansions == 5
    assert v.stats.red_expansions == 5
    assert v.winner is None


def test_cycle_run_is_frozen():
    v = ndfs(gen_lasso(2, 3, True))
    assert v.cycle_found
    assert v.lasso.stem == (0, 1, 2)
    assert v.lasso.cycle == (2, 3, 4)
    assert v.lasso.accept_index == 0
    # found on the blue stack before any red search started
    assert v.stats.blue_expansions == 5
    assert v.stats.red_expansions == 0


def test_accepting_self_loop():
    a = BuchiAutomaton(1, 0, frozenset({0}), [[0]])
    v = ndfs(a)
    assert v.lasso.stem == (0,)
    assert v.lasso.cycle == (0,)


@given(automata(max_states=8))
def test_verdict_matches_oracle(a):
    assert ndfs(a).cycle_found == has_accepting_cycle(a)


@given(automata(max_states=8), st.integers(0, 2**32))
def test_verdict_matches_oracle_under_permutation(a, seed):
    v = ndfs(a, SuccessorOrder(0, seed))
    assert v.cycle_found == has_accepting_cycle(a)
    if v.lasso is not None:
        assert validate_lasso(a, v.lasso)


@given(automata(max_states=8), st.integers(0, 2**32))
def test_allred_same_verdict_fewer_or_equal_red(a, seed):
    plain = ndfs(a, SuccessorOrder(0, seed))
    pruned = ndfs(a, SuccessorOrder(0, seed), allred=True)
    assert plain.cycle_found == pruned.cycle_found
    assert pruned.stats.red_expansions <= plain.stats.red_expansions


@given(automata(max_states=8), st.integers(0, 2**32))
def test_work_bound_two_visits_per_state(a, seed):
    for allred in (False, True):
        v = ndfs(a, SuccessorOrder(0, seed), allred=allred)
        total = v.stats.blue_expansions + v.stats.red_expansions
        assert total <= 2 * a.num_states


def test_mid_size_random_graphs_agree_with_oracle():
    for seed in range(40):
        a = gen_random(80, 2.0, 0.15, seed)
        want = has_accepting_cycle(a)
        v = ndfs(a, SuccessorOrder(0, seed))
        assert v.cycle_found == want
        if v.lasso is not None:
            assert validate_lasso(a, v.lasso)


def test_stack_depth_tracked():
    v = ndfs(gen_lasso(3, 4, False))
    assert v.stats.workers[0].max_stack_depth == 8
