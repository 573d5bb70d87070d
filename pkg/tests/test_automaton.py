"""Text format, generators, and successor permutations."""

import random

import pytest
from hypothesis import given
import hypothesis.strategies as st

from cyclone import (
    BuchiAutomaton,
    DanglingStateId,
    DuplicateEdge,
    MalformedHeader,
    OrderKind,
    ZeroCycle,
    gen_lasso,
    gen_needle,
    gen_random,
    has_accepting_cycle,
    order_key,
    parse_automaton,
    permute,
    state_hash,
)
from strategies import automata


def test_serialize_frozen():
    text = gen_lasso(2, 3, True).to_text()
    assert text == (
        "states 5\ninit 0\naccepting 2\n"
        "trans 0 1\ntrans 1 2\ntrans 2 3\ntrans 3 4\ntrans 4 2\n"
    )


def test_parse_skips_comments_and_blanks():
    a = parse_automaton("# title\n\nstates 2\ninit 1\naccepting 0 1\ntrans 1 0  # loop back\n")
    assert a.num_states == 2
    assert a.init == 1
    assert a.accepting == frozenset({0, 1})
    assert a.edges == [[], [0]]


@pytest.mark.parametrize(
    "text,exc,line",
    [
        ("", MalformedHeader, 1),
        ("init 0\nstates 2\naccepting\n", MalformedHeader, 1),
        ("states 0\ninit 0\naccepting\n", MalformedHeader, 1),
        ("states 2\ninit -1\naccepting\n", MalformedHeader, 2),
        ("states 2\ninit 5\naccepting\n", DanglingStateId, 2),
        ("states 2\ninit 0\naccepting 3\n", DanglingStateId, 3),
        # raw line numbers: the comment line still counts
        ("# lead\nstates 2\ninit 0\naccepting\ntrans 0 2\n", DanglingStateId, 5),
        ("states 2\ninit 0\naccepting\ntrans 0 1\ntrans 0 1\n", DuplicateEdge, 5),
        ("states 2\ninit 0\naccepting\ntrans 0\n", MalformedHeader, 4),
    ],
)
def test_parse_errors_carry_line_numbers(text, exc, line):
    with pytest.raises(exc) as ei:
        parse_automaton(text)
    assert ei.value.line == line
    assert str(ei.value).startswith(f"line {line}:")


def test_duplicate_successors_rejected_on_construction():
    # only the parser knows line numbers, so this is a plain ValueError
    with pytest.raises(ValueError, match="duplicate successor"):
        BuchiAutomaton(2, 0, frozenset(), [[1, 1], []])


@given(automata())
def test_text_round_trip(a):
    assert parse_automaton(a.to_text()) == a


# --- successor permutations ---------------------------------------------


@given(st.lists(st.integers(0, 1000), unique=True, max_size=12), st.integers(0, 2**64 - 1))
def test_permute_is_a_bijection(xs, h):
    assert sorted(permute(xs, h)) == sorted(xs)


@given(st.lists(st.integers(0, 1000), unique=True, max_size=12), st.integers(0, 2**64 - 1))
def test_permute_is_deterministic(xs, h):
    assert permute(xs, h) == permute(xs, h)


def test_permute_short_lists_pass_through():
    assert permute([], 7) == []
    assert permute([3], 7) == [3]


def test_permute_pairs_take_both_orders():
    seen = {tuple(permute([4, 9], h)) for h in range(64)}
    assert seen == {(4, 9), (9, 4)}


def test_workers_get_distinct_orders():
    xs = list(range(8))
    orders = {
        tuple(permute(xs, state_hash(order_key(w, 0, OrderKind.BLUE), 0)))
        for w in range(16)
    }
    assert len(orders) > 8  # mostly distinct over 8! possibilities


def test_blue_and_red_keys_differ():
    for w in range(8):
        assert order_key(w, 3, OrderKind.BLUE) != order_key(w, 3, OrderKind.RED)


# --- generators -----------------------------------------------------------


def test_gen_lasso_shape():
    a = gen_lasso(2, 3, True)
    assert a.num_states == 5
    assert a.init == 0
    assert a.accepting == frozenset({2})
    assert a.num_edges == 5


def test_gen_lasso_zero_stem_keeps_accepting_off_cycle():
    # a 0-stem lasso cannot keep a non-cycle state accepting, so one
    # stem state is forced in
    a = gen_lasso(0, 3, False)
    assert a.init == 0
    assert 0 in a.accepting
    assert has_accepting_cycle(a) is False


def test_gen_lasso_rejects_degenerate_cycle():
    with pytest.raises(ZeroCycle):
        gen_lasso(2, 0, True)


@pytest.mark.parametrize("stem", range(4))
@pytest.mark.parametrize("cyc", range(1, 5))
@pytest.mark.parametrize("acc", [True, False])
def test_gen_lasso_verdict_matches_flag(stem, cyc, acc):
    # expected verdicts confirmed by the SCC oracle
    assert has_accepting_cycle(gen_lasso(stem, cyc, acc)) is acc


def test_gen_random_is_deterministic():
    assert gen_random(40, 2.0, 0.3, 7) == gen_random(40, 2.0, 0.3, 7)
    assert gen_random(40, 2.0, 0.3, 7) != gen_random(40, 2.0, 0.3, 8)


def test_gen_random_respects_accept_prob_extremes():
    assert gen_random(30, 2.0, 0.0, 1).accepting == frozenset()
    assert gen_random(30, 2.0, 1.0, 1).accepting == frozenset(range(30))


def test_gen_random_successors_unique():
    a = gen_random(50, 3.0, 0.2, 11)
    for s in range(a.num_states):
        assert len(a.edges[s]) == len(set(a.edges[s]))


def test_gen_needle_shape_and_verdicts():
    a = gen_needle(4, 10, 3)
    assert a.num_states == 1 + 4 * 10 + 2
    u = 1 + 4 * 10
    assert a.accepting == frozenset({u})
    assert has_accepting_cycle(a) is True
    assert has_accepting_cycle(gen_needle(4, 10, 3, with_cycle=False)) is False


def test_gen_needle_target_chain_varies_with_seed():
    needles = {random.Random(s).randrange(16) for s in range(30)}
    assert len(needles) > 4
