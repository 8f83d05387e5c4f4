import pytest

from pgsolve.game import Owner, build_game
from pgsolve.generators import random_suite
from pgsolve.oracle import (
    DominionQuery,
    TooLarge,
    arena_of,
    bruteforce_strategies,
    check_facts,
    enumerate_dominions,
    has_bad_cycle,
    is_dominion,
    restrict_to_strategy,
    solve_bruteforce,
    verify_strategy,
)
from pgsolve.solvers import Strategy

E, O = Owner.EVEN, Owner.ODD


def test_bruteforce_examples(g1, g2, g3):
    assert solve_bruteforce(g1).win_even == {0, 1}
    assert solve_bruteforce(g2).win_odd == {0, 1}
    r = solve_bruteforce(g3)
    assert r.win_even == {0, 1, 2} and r.win_odd == set()


def test_enumeration_guard():
    n = 16
    g = build_game([(E, v % 3, [u for u in range(n) if u != v]) for v in range(n)])
    with pytest.raises(TooLarge):
        solve_bruteforce(g)
    with pytest.raises(TooLarge):
        enumerate_dominions(g, E, 2)


def test_has_bad_cycle(g1, g2, g3):
    assert not has_bad_cycle(dict(enumerate(g1.priorities)), {0: [1], 1: [0]}, E)
    assert has_bad_cycle(dict(enumerate(g2.priorities)), {0: [1], 1: [0]}, E)
    succ = restrict_to_strategy(arena_of(g3), E, {0: 2})
    assert has_bad_cycle(dict(enumerate(g3.priorities)), succ, E)
    succ = restrict_to_strategy(arena_of(g3), E, {0: 1})
    # 0 -> 1 -> 0 is even, but the odd cycle needs 0 -> 2 which sigma forbids
    assert not has_bad_cycle(dict(enumerate(g3.priorities)), succ, E)


def test_is_dominion_examples(g1, g3):
    assert is_dominion(g1, DominionQuery(frozenset({0, 1}), E))
    assert not is_dominion(g1, DominionQuery(frozenset({0}), E))
    assert is_dominion(g3, DominionQuery(frozenset({0, 1}), E))
    assert not is_dominion(g3, DominionQuery(frozenset({0, 2}), E))
    assert is_dominion(g1, DominionQuery(frozenset(), O))


def test_enumerate_dominions_examples(g1, g3):
    assert enumerate_dominions(g1, E, 2) == [{0, 1}]
    assert enumerate_dominions(g1, O, 2) == []
    assert enumerate_dominions(g3, E, 3) == [{0, 1}, {0, 1, 2}]


def test_verify_strategy_examples(g1, g3):
    assert verify_strategy(g1, E, {0, 1}, Strategy(E, {0: 1, 1: 0}))
    assert not verify_strategy(g3, E, {0, 1, 2}, Strategy(E, {0: 2}))
    assert verify_strategy(g3, E, {0, 1, 2}, Strategy(E, {0: 1}))
    assert verify_strategy(g3, O, set(), Strategy(O, {}))
    # region not closed under opponent moves
    assert not verify_strategy(g3, E, {0, 2}, Strategy(E, {0: 2}))


def test_two_sided_consistency_and_win_regions_are_dominions():
    for seed, g in random_suite(300):
        r = solve_bruteforce(g)  # raises on inconsistency between the two sides
        assert r.win_even | r.win_odd == set(g.nodes)
        assert is_dominion(g, DominionQuery(r.win_even, E)), seed
        assert is_dominion(g, DominionQuery(r.win_odd, O)), seed
        even, odd = bruteforce_strategies(g, r)
        assert verify_strategy(g, E, r.win_even, even)
        assert verify_strategy(g, O, r.win_odd, odd)


def test_dominion_properties():
    for _, g in random_suite(100, max_n=6):
        for player in Owner:
            doms = enumerate_dominions(g, player, g.n)
            assert all(len(s) >= 2 for s in doms)
            for s in doms:
                inner = g.full_view().restrict(set(g.nodes) - s, check=False)
                assert is_dominion(inner, DominionQuery(s, player))


def test_check_facts_examples(g1, g3):
    r = check_facts(g1, [({0, 1}, E, {0})])
    assert r.ok and r.own_removal_checked == 1 and r.opponent_removal_checked == 0
    r = check_facts(g3, [({0, 1}, E, {2})])
    assert r.ok and r.opponent_removal_checked == 1


def test_check_facts_sweep_small():
    for _, g in random_suite(20, max_n=6):
        assert check_facts(g).ok
