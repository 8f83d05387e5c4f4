"""Recursive parity game solvers.

`solve_classic` is Zielonka's recursive algorithm written as a loop over the
opponent's sub-results. `solve_qpt_player` is the precision-bounded variant:
each level first searches for opponent regions with halved precision, makes
one call with full precision once that comes back empty, and then goes back
to halved precision. Both are parametrized by the solving player.
"""
from __future__ import annotations

import enum
import sys
from dataclasses import dataclass, field

from .attractor import attractor
from .game import Game, NodeSet, Owner, SubgameView


class ParityMismatch(ValueError):
    def __init__(self, h: int, player: Owner):
        super().__init__(f"h={h} does not have the parity of {player}")
        self.h = h
        self.player = player


class Algorithm(str, enum.Enum):
    CLASSIC = "classic"
    QPT = "qpt"
    ORACLE = "oracle"


@dataclass(frozen=True)
class Precision:
    p_self: int
    p_opp: int

    def swapped(self) -> "Precision":
        return Precision(self.p_opp, self.p_self)


@dataclass(frozen=True)
class SolverConfig:
    """Solver selection and optional optimizations.

    `opt_attractor_guard` only affects CLASSIC; `opt_clamp_precision` and
    `opt_exactness_flag` only affect QPT. Flags are ignored elsewhere.
    """

    algorithm: Algorithm = Algorithm.QPT
    opt_attractor_guard: bool = False
    opt_clamp_precision: bool = False
    opt_exactness_flag: bool = False
    collect_strategy: bool = False
    debug: bool = False
    trace: bool = False

    def flags(self) -> dict[str, bool]:
        return {
            "guard": self.opt_attractor_guard,
            "clamp": self.opt_clamp_precision,
            "exact_flag": self.opt_exactness_flag,
        }


@dataclass(frozen=True)
class Regions:
    win_even: NodeSet
    win_odd: NodeSet

    def of(self, player: Owner) -> NodeSet:
        return self.win_even if player is Owner.EVEN else self.win_odd


@dataclass(frozen=True)
class Strategy:
    player: Owner
    moves: dict[int, int]


@dataclass
class TraceNode:
    """One solver call; `kind` is "root", "reduced" or "full"."""

    h: int
    kind: str
    p_self: int | None = None
    p_opp: int | None = None
    live: int = 0
    nontrivial: bool = False
    children: list["TraceNode"] = field(default_factory=list)
    loop_sizes: list[int] = field(default_factory=list)

    def count(self) -> int:
        return int(self.nontrivial) + sum(c.count() for c in self.children)

    def walk(self):
        yield self
        for c in self.children:
            yield from c.walk()


@dataclass
class CallStats:
    nontrivial_calls: int = 0
    max_depth: int = 0
    calls_per_level: dict[int, int] = field(default_factory=dict)
    peak_live_sets: int = 0
    root_h: int | None = None
    trace: TraceNode | None = None


@dataclass
class SolveResult:
    regions: Regions
    strategies: tuple[Strategy, Strategy] | None
    stats: CallStats


class _Run:
    """Per-solve scratch state: flags, counters and the optional call trace."""

    def __init__(self, config: SolverConfig, stats: CallStats):
        self.config = config
        self.stats = stats
        self.live_sets = 0
        self.trace_stack: list[TraceNode] = []

    def call(self, h: int, kind: str, view: SubgameView, p_self=None, p_opp=None) -> TraceNode | None:
        if not self.config.trace:
            return None
        node = TraceNode(h, kind, p_self, p_opp, len(view))
        if self.trace_stack:
            self.trace_stack[-1].children.append(node)
        else:
            self.stats.trace = node
        return node

    def enter(self, h: int, depth: int, node: TraceNode | None) -> None:
        st = self.stats
        st.nontrivial_calls += 1
        st.calls_per_level[h] = st.calls_per_level.get(h, 0) + 1
        st.max_depth = max(st.max_depth, depth)
        self.live_sets += 1
        st.peak_live_sets = max(st.peak_live_sets, self.live_sets)
        if node is not None:
            node.nontrivial = True
            self.trace_stack.append(node)

    def leave(self, node: TraceNode | None) -> None:
        self.live_sets -= 1
        if node is not None:
            self.trace_stack.pop()


def _check_parity(h: int, player: Owner) -> None:
    if Owner.favored_by(h) is not player:
        raise ParityMismatch(h, player)


def _ensure_recursion(h: int) -> None:
    need = 4 * (h + 2) + 200
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


# -- Classic -----------------------------------------------------------------


def _classic(view: SubgameView, h: int, player: Owner, run: _Run, depth: int, kind: str) -> NodeSet:
    node = run.call(h, kind, view)
    if not view:
        return frozenset()
    _check_parity(h, player)
    run.enter(h, depth, node)
    opp = player.opponent
    guard = run.config.opt_attractor_guard
    while True:
        if node is not None:
            node.loop_sizes.append(len(view))
        top = view.nodes_with_priority(h)
        sub = view.restrict(attractor(view, player, top))
        w_opp = _classic(sub, h - 1, opp, run, depth + 1, "full")
        lost = attractor(view, opp, w_opp)
        view = view.restrict(lost)
        # guard: an opponent region that is already attractor-closed means
        # the next recursive call would come back empty
        done = len(lost) == len(w_opp) if guard else not w_opp
        if done:
            break
    run.leave(node)
    return view.live_set()


def solve_classic(
    view: SubgameView,
    h: int,
    player: Owner,
    config: SolverConfig | None = None,
    stats: CallStats | None = None,
) -> NodeSet:
    """Winning region of `player` in `view`; `h` has the player's parity and bounds all priorities."""
    _check_parity(h, player)
    _ensure_recursion(h)
    run = _Run(config or SolverConfig(Algorithm.CLASSIC), stats if stats is not None else CallStats())
    return _classic(view, h, player, run, 1, "root")


# -- Precision-bounded -------------------------------------------------------

_REDUCED_1, _FULL, _REDUCED_3 = 1, 2, 3


def _qpt(
    view: SubgameView,
    h: int,
    p_self: int,
    p_opp: int,
    player: Owner,
    run: _Run,
    depth: int,
    kind: str,
) -> tuple[NodeSet, bool]:
    cfg = run.config
    if cfg.opt_clamp_precision:
        p_self = min(p_self, len(view))
        p_opp = min(p_opp, len(view))
    node = run.call(h, kind, view, p_self, p_opp)
    if not view:
        return frozenset(), True
    if p_self <= 1:
        return frozenset(), False
    _check_parity(h, player)
    run.enter(h, depth, node)

    opp = player.opponent
    exact = True
    stage = _REDUCED_1
    while True:
        if node is not None:
            node.loop_sizes.append(len(view))
        top = view.nodes_with_priority(h)
        sub = view.restrict(attractor(view, player, top))
        if stage == _FULL:
            w_opp, sub_exact = _qpt(sub, h - 1, p_opp, p_self, opp, run, depth + 1, "full")
        else:
            w_opp, sub_exact = _qpt(sub, h - 1, p_opp // 2, p_self, opp, run, depth + 1, "reduced")
        exact = exact and sub_exact
        view = view.restrict(attractor(view, opp, w_opp))
        if w_opp:
            if stage == _FULL:
                stage = _REDUCED_3
            continue
        if stage == _REDUCED_1 and not (cfg.opt_exactness_flag and sub_exact):
            stage = _FULL
            continue
        break
    run.leave(node)
    return view.live_set(), exact


def solve_qpt_player_exact(
    view: SubgameView,
    h: int,
    prec: Precision,
    player: Owner,
    config: SolverConfig | None = None,
    stats: CallStats | None = None,
) -> tuple[NodeSet, bool]:
    """Like `solve_qpt_player`, also reporting whether the result is exact.

    A result is exact when no call on a nonempty subgame was cut off by the
    precision base case; it then equals the true winning region.
    """
    _check_parity(h, player)
    n = view.game.n
    if not (0 <= prec.p_self <= n and 0 <= prec.p_opp <= n):
        raise ValueError(f"precision {prec} out of range for a game with {n} nodes")
    _ensure_recursion(h)
    run = _Run(config or SolverConfig(Algorithm.QPT), stats if stats is not None else CallStats())
    return _qpt(view, h, prec.p_self, prec.p_opp, player, run, 1, "root")


def solve_qpt_player(
    view: SubgameView,
    h: int,
    prec: Precision,
    player: Owner,
    config: SolverConfig | None = None,
    stats: CallStats | None = None,
) -> NodeSet:
    """Precision-bounded solver for `player`.

    The result contains every `player` dominion with at most `prec.p_self`
    nodes and is disjoint from every opponent dominion with at most
    `prec.p_opp` nodes. Other nodes may fall on either side.
    """
    return solve_qpt_player_exact(view, h, prec, player, config, stats)[0]


# -- Strategies --------------------------------------------------------------


def _classic_strategy(
    view: SubgameView, h: int, player: Owner
) -> tuple[NodeSet, NodeSet, dict[int, int]]:
    """(win_player, win_opp, moves) where moves covers each node owned by its region's winner."""
    if not view:
        return frozenset(), frozenset(), {}
    game = view.game
    opp = player.opponent
    lost: set[int] = set()
    moves: dict[int, int] = {}
    while True:
        top = view.nodes_with_priority(h)
        attr_moves: dict[int, int] = {}
        sub = view.restrict(attractor(view, player, top, strategy=attr_moves))
        sub_opp, _, sub_moves = _classic_strategy(sub, h - 1, opp)
        if not sub_opp:
            moves.update(sub_moves)
            moves.update(attr_moves)
            for v in top:
                if game.owners[v] is player:
                    moves[v] = view.live_successors(v)[0]
            return view.live_set(), frozenset(lost), moves
        trap_moves: dict[int, int] = {}
        trap = attractor(view, opp, sub_opp, strategy=trap_moves)
        moves.update((v, m) for v, m in sub_moves.items() if v in sub_opp)
        moves.update(trap_moves)
        lost |= trap
        view = view.restrict(trap)


def extract_strategy_classic(game: Game) -> tuple[Regions, Strategy, Strategy]:
    if game.n == 0:
        return Regions(frozenset(), frozenset()), Strategy(Owner.EVEN, {}), Strategy(Owner.ODD, {})
    h = game.h_max
    root = Owner.favored_by(h)
    _ensure_recursion(h)
    win_root, win_other, moves = _classic_strategy(game.full_view(), h, root)
    regions = Regions(win_root, win_other) if root is Owner.EVEN else Regions(win_other, win_root)
    split = {p: {v: m for v, m in moves.items() if game.owners[v] is p} for p in Owner}
    return regions, Strategy(Owner.EVEN, split[Owner.EVEN]), Strategy(Owner.ODD, split[Owner.ODD])


# -- Entry point -------------------------------------------------------------


def _root_solve(game: Game, player: Owner, h: int, config: SolverConfig, stats: CallStats) -> NodeSet:
    view = game.full_view()
    if config.algorithm is Algorithm.CLASSIC:
        return solve_classic(view, h, player, config, stats)
    return solve_qpt_player(view, h, Precision(game.n, game.n), player, config, stats)


def solve(game: Game, config: SolverConfig | None = None) -> SolveResult:
    """Solve `game` with the configured algorithm.

    The recursive solvers are rooted at the player favored by the highest
    priority, with h equal to that priority; the other region is the
    complement. With `config.debug` the opposite player is solved as well
    (h rounded up to its parity) and the two answers are compared.
    """
    config = config or SolverConfig()
    stats = CallStats()
    strategies = None
    everything = frozenset(game.nodes)

    if config.algorithm is Algorithm.ORACLE:
        from . import oracle

        regions = oracle.solve_bruteforce(game)
        if config.collect_strategy:
            strategies = oracle.bruteforce_strategies(game, regions)
        return SolveResult(regions, strategies, stats)

    if game.n == 0:
        stats.root_h = 0
        return SolveResult(Regions(frozenset(), frozenset()), None, stats)

    h = game.h_max
    root = Owner.favored_by(h)
    stats.root_h = h
    won = _root_solve(game, root, h, config, stats)
    regions = Regions(won, everything - won) if root is Owner.EVEN else Regions(everything - won, won)

    if config.debug:
        other = root.opponent
        other_won = _root_solve(game, other, h + 1, config, CallStats())
        if other_won != everything - won:
            raise AssertionError(f"{other}-rooted solve disagrees with the {root}-rooted one")

    if config.collect_strategy and config.algorithm is Algorithm.CLASSIC:
        strat_regions, even, odd = extract_strategy_classic(game)
        if strat_regions != regions:
            raise AssertionError("strategy extraction disagrees with the classic solver")
        strategies = (even, odd)
    return SolveResult(regions, strategies, stats)
