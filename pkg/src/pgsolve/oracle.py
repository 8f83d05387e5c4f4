"""Brute-force ground truth: strategy enumeration, dominions, strategy checks.

Nothing here calls the recursive solvers. Games are read into plain dicts
(an "arena"), which also lets the oracle handle raw graphs with self-loops.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .attractor import attractor
from .game import Game, NodeSet, Owner, SubgameView
from .solvers import Regions, Strategy

MAX_STRATEGIES = 10**7
MAX_ENUM_NODES = 12


class TooLarge(ValueError):
    pass


@dataclass(frozen=True)
class Arena:
    nodes: tuple[int, ...]
    owner: Mapping[int, Owner]
    priority: Mapping[int, int]
    succ: Mapping[int, tuple[int, ...]]


def arena_of(game: Game | SubgameView) -> Arena:
    if isinstance(game, SubgameView):
        nodes = tuple(game)
        g = game.game
        succ = {v: tuple(game.live_successors(v)) for v in nodes}
    else:
        g = game
        nodes = tuple(g.nodes)
        succ = {v: g.successors[v] for v in nodes}
    return Arena(nodes, {v: g.owners[v] for v in nodes}, {v: g.priorities[v] for v in nodes}, succ)


def raw_arena(specs: Sequence[tuple[Owner, int, Sequence[int]]]) -> Arena:
    """Arena straight from node specs; self-loops are allowed."""
    nodes = tuple(range(len(specs)))
    return Arena(
        nodes,
        {v: Owner(s[0]) for v, s in enumerate(specs)},
        {v: s[1] for v, s in enumerate(specs)},
        {v: tuple(dict.fromkeys(s[2])) for v, s in enumerate(specs)},
    )


# -- cycle parity --------------------------------------------------------------


def _bad_cycle_nodes(priority: Mapping[int, int], succ: Mapping[int, Iterable[int]], player: Owner) -> set[int]:
    """Nodes v with priority of the opponent's parity lying on a cycle of priorities <= priority(v)."""
    bad = set()
    for v, p in priority.items():
        if Owner.favored_by(p) is player:
            continue
        seen = set()
        stack = [u for u in succ[v] if priority[u] <= p]
        while stack:
            u = stack.pop()
            if u == v:
                bad.add(v)
                break
            if u in seen:
                continue
            seen.add(u)
            stack.extend(w for w in succ[u] if priority[w] <= p)
    return bad


def _reaching(succ: Mapping[int, Iterable[int]], targets: set[int]) -> set[int]:
    pred: dict[int, list[int]] = {v: [] for v in succ}
    for v, us in succ.items():
        for u in us:
            pred[u].append(v)
    out = set(targets)
    stack = list(targets)
    while stack:
        u = stack.pop()
        for v in pred[u]:
            if v not in out:
                out.add(v)
                stack.append(v)
    return out


def has_bad_cycle(
    priority: Mapping[int, int], succ: Mapping[int, Iterable[int]], player: Owner
) -> bool:
    """True iff the graph has a cycle whose top priority favors `player`'s opponent."""
    return bool(_bad_cycle_nodes(priority, succ, player))


def restrict_to_strategy(
    arena: Arena, player: Owner, moves: Mapping[int, int], region: Iterable[int] | None = None
) -> dict[int, tuple[int, ...]]:
    """Successor map with `player` nodes fixed to `moves`, optionally limited to `region`."""
    keep = set(arena.nodes if region is None else region)
    out = {}
    for v in keep:
        if arena.owner[v] is player:
            out[v] = (moves[v],)
        else:
            out[v] = arena.succ[v]
    return out


# -- strategy enumeration ----------------------------------------------------


def _strategies(arena: Arena, player: Owner) -> Iterator[dict[int, int]]:
    mine = [v for v in arena.nodes if arena.owner[v] is player]
    total = 1
    for v in mine:
        total *= len(arena.succ[v])
    if total > MAX_STRATEGIES:
        raise TooLarge(f"{total} positional strategies for {player}")
    for choice in itertools.product(*(arena.succ[v] for v in mine)):
        yield dict(zip(mine, choice))


def _won_under(arena: Arena, player: Owner, moves: Mapping[int, int]) -> set[int]:
    succ = restrict_to_strategy(arena, player, moves)
    losing = _reaching(succ, _bad_cycle_nodes(arena.priority, succ, player))
    return set(arena.nodes) - losing


def _winning_region(arena: Arena, player: Owner) -> set[int]:
    won: set[int] = set()
    for moves in _strategies(arena, player):
        won |= _won_under(arena, player, moves)
        if len(won) == len(arena.nodes):
            break
    return won


def solve_arena(arena: Arena) -> Regions:
    even = _winning_region(arena, Owner.EVEN)
    odd = _winning_region(arena, Owner.ODD)
    if even & odd or len(even) + len(odd) != len(arena.nodes):
        raise AssertionError(f"inconsistent oracle: even={sorted(even)} odd={sorted(odd)}")
    return Regions(frozenset(even), frozenset(odd))


def solve_bruteforce(game: Game | SubgameView) -> Regions:
    """Winning regions by enumerating each player's positional strategies."""
    return solve_arena(arena_of(game))


def bruteforce_strategies(game: Game, regions: Regions | None = None) -> tuple[Strategy, Strategy]:
    """A positional strategy for each player winning on its whole region."""
    arena = arena_of(game)
    regions = regions or solve_arena(arena)
    out = []
    for player in Owner:
        target = regions.of(player)
        for moves in _strategies(arena, player):
            if _won_under(arena, player, moves) >= target:
                out.append(Strategy(player, {v: m for v, m in moves.items() if v in target}))
                break
        else:
            raise AssertionError(f"no uniform strategy found for {player}")
    return out[0], out[1]


# -- dominions -----------------------------------------------------------------


@dataclass(frozen=True)
class DominionQuery:
    set: NodeSet
    player: Owner


def _is_dominion(arena: Arena, nodes: NodeSet, player: Owner) -> bool:
    if not nodes:
        return True
    for v in nodes:
        inside = [u for u in arena.succ[v] if u in nodes]
        if arena.owner[v] is player:
            if not inside:
                return False
        elif len(inside) != len(arena.succ[v]):
            return False
    ordered = tuple(sorted(nodes))
    sub = Arena(
        ordered,
        {v: arena.owner[v] for v in ordered},
        {v: arena.priority[v] for v in ordered},
        {v: tuple(u for u in arena.succ[v] if u in nodes) for v in ordered},
    )
    return _winning_region(sub, player) == set(nodes)


def is_dominion(game: Game | SubgameView, q: DominionQuery) -> bool:
    """True iff q.player wins from every node of q.set without leaving it."""
    arena = arena_of(game)
    stray = set(q.set) - set(arena.nodes)
    if stray:
        raise ValueError(f"nodes {sorted(stray)} are not in the game")
    return _is_dominion(arena, frozenset(q.set), q.player)


def enumerate_dominions(game: Game | SubgameView, player: Owner, max_size: int) -> list[NodeSet]:
    """All dominions of `player` with 2..max_size nodes, by size then lexicographically."""
    arena = arena_of(game)
    if len(arena.nodes) > MAX_ENUM_NODES:
        raise TooLarge(f"{len(arena.nodes)} nodes exceeds the subset enumeration limit")
    found = []
    for size in range(2, min(max_size, len(arena.nodes)) + 1):
        for combo in itertools.combinations(arena.nodes, size):
            s = frozenset(combo)
            if _is_dominion(arena, s, player):
                found.append(s)
    return found


def verify_strategy(game: Game | SubgameView, player: Owner, region: Iterable[int], strat: Strategy) -> bool:
    """Check that `strat` keeps every play from `region` inside it and winning for `player`."""
    arena = arena_of(game)
    region = set(region)
    if not region <= set(arena.nodes):
        return False
    for v in region:
        if arena.owner[v] is player:
            m = strat.moves.get(v)
            if m is None or m not in arena.succ[v] or m not in region:
                return False
        elif any(u not in region for u in arena.succ[v]):
            return False
    succ = restrict_to_strategy(arena, player, strat.moves, region)
    prio = {v: arena.priority[v] for v in region}
    return not has_bad_cycle(prio, succ, player)


# -- dominions under attractor removal ---------------------------------------


@dataclass
class FactReport:
    own_removal_checked: int = 0
    opponent_removal_checked: int = 0
    counterexamples: list[tuple[str, NodeSet, Owner, NodeSet]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def _fact_samples(view: SubgameView) -> Iterator[tuple[NodeSet, Owner, NodeSet]]:
    live = tuple(view)
    xs = [frozenset(c) for k in (1, 2) for c in itertools.combinations(live, k)]
    for player in Owner:
        for s in enumerate_dominions(view, player, len(live)):
            for x in xs:
                yield s, player, x


def check_facts(
    game: Game | SubgameView, samples: Iterable[tuple[Iterable[int], Owner, Iterable[int]]] | None = None
) -> FactReport:
    """Check that dominions survive attractor removal.

    For each (S, P, X): S minus Atr_P(X) must be a P-dominion of the game
    without Atr_P(X); and if S misses X, S must avoid the opponent's
    attractor of X and stay a P-dominion once that attractor is removed.
    Without `samples`, every dominion of either player is paired with every
    singleton and pair X.
    """
    view = game if isinstance(game, SubgameView) else game.full_view()
    report = FactReport()
    for s, player, x in samples if samples is not None else _fact_samples(view):
        s, x = frozenset(s), frozenset(x)
        own = attractor(view, player, x)
        report.own_removal_checked += 1
        if not is_dominion(view.restrict(own), DominionQuery(s - own, player)):
            report.counterexamples.append(("own_removal", s, player, x))
        if s & x:
            continue
        theirs = attractor(view, player.opponent, x)
        report.opponent_removal_checked += 1
        if s & theirs or not is_dominion(view.restrict(theirs), DominionQuery(s, player)):
            report.counterexamples.append(("opponent_removal", s, player, x))
    return report
