import random

import pytest

from pgsolve.attractor import EdgeProbe, TargetNotLive, attractor
from pgsolve.game import Owner
from pgsolve.generators import random_suite

E, O = Owner.EVEN, Owner.ODD


def naive_attractor(view, player, targets):
    """Apply the three closure rules until nothing changes."""
    game = view.game
    attr = set(targets)
    changed = True
    while changed:
        changed = False
        for v in view:
            if v in attr:
                continue
            succ = view.live_successors(v)
            if game.owners[v] is player:
                hit = any(u in attr for u in succ)
            else:
                hit = all(u in attr for u in succ)
            if hit:
                attr.add(v)
                changed = True
    return attr


def random_targets(view, rng):
    live = sorted(view)
    return {v for v in live if rng.random() < 0.3}


def shrink_view(g, rng):
    """A random attractor-closed subgame of g."""
    view = g.full_view()
    x = random_targets(view, rng)
    return view.restrict(attractor(view, rng.choice([E, O]), x))


def test_examples(g1, g3):
    assert attractor(g1.full_view(), E, set()) == set()
    assert attractor(g1.full_view(), E, {0}) == {0, 1}
    assert attractor(g3.full_view(), O, {2}) == {2}
    assert naive_attractor(g3.full_view(), O, {2}) == {2}


def test_target_must_be_live(g1):
    view = g1.full_view().restrict({0, 1})
    with pytest.raises(TargetNotLive):
        attractor(view, E, {0})


def test_matches_naive_fixpoint():
    rng = random.Random(11)
    for seed, g in random_suite(1000):
        view = shrink_view(g, rng) if seed % 2 else g.full_view()
        targets = random_targets(view, rng)
        for player in Owner:
            assert attractor(view, player, targets) == naive_attractor(view, player, targets), seed


def test_algebraic_properties():
    rng = random.Random(5)
    for _, g in random_suite(300):
        view = g.full_view()
        t = random_targets(view, rng)
        bigger = t | random_targets(view, rng)
        for player in Owner:
            a = attractor(view, player, t)
            assert t <= a
            assert a <= attractor(view, player, bigger)
            assert attractor(view, player, a) == a
            rest = view.restrict(a)
            for v in rest:
                assert rest.live_successors(v)


def test_strategy_moves_stay_inside():
    rng = random.Random(3)
    for _, g in random_suite(200):
        view = g.full_view()
        t = random_targets(view, rng)
        for player in Owner:
            moves = {}
            a = attractor(view, player, t, strategy=moves)
            assert set(moves) == {v for v in a - t if g.owners[v] is player}
            for v, m in moves.items():
                assert m in g.successors[v] and m in a


def test_linear_edge_visits():
    rng = random.Random(9)
    for _, g in random_suite(300, max_n=30, max_out=6):
        view = shrink_view(g, rng)
        probe = EdgeProbe()
        for player in Owner:
            attractor(view, player, random_targets(view, rng), probe=probe)
        assert probe.edges <= 2 * (2 * view.edge_count() + len(view))
