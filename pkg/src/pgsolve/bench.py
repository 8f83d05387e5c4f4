"""Instrumented runs and the quasi-polynomial call-count bound."""
from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Any

from .formats import NamedGame
from .game import Game
from .solvers import Algorithm, CallStats, Regions, SolverConfig, TraceNode, solve


def floor_log2(x: int) -> int:
    """floor(log2 x) for x >= 1; 0 for x = 0 (such precisions never recurse)."""
    return max(x.bit_length() - 1, 0)


def call_bound(n: int, h: int, l: int) -> int:
    """n**l * C(h+l, l) - 1, exactly."""
    if h < 0:
        return 0
    return n**l * math.comb(h + l, l) - 1


@dataclass(frozen=True)
class BoundCheck:
    n: int
    h: int
    l: int
    bound: int
    observed: int

    @property
    def ok(self) -> bool:
        return self.observed <= self.bound

    def as_dict(self) -> dict[str, Any]:
        return {"n": self.n, "h": self.h, "l": self.l, "bound": self.bound, "observed": self.observed, "ok": self.ok}


def check_call_bound(stats: CallStats, n: int, h: int) -> BoundCheck:
    """Compare the nontrivial call count of a run started at precision (n, n)."""
    l = 2 * floor_log2(n)
    return BoundCheck(n, h, l, call_bound(n, h, l), stats.nontrivial_calls)


def check_recurrence(trace: TraceNode, n: int) -> list[str]:
    """Check every nontrivial call of a QPT trace against the recurrence shape.

    Per call: at most n nontrivial reduced-precision children, at most one
    nontrivial full-precision child, and a subtree count within the closed
    form for its own (h, l). Returns a list of violations.
    """
    problems = []
    for node in trace.walk():
        if not node.nontrivial:
            continue
        reduced = sum(1 for c in node.children if c.nontrivial and c.kind == "reduced")
        full = sum(1 for c in node.children if c.nontrivial and c.kind == "full")
        l = floor_log2(node.p_self) + floor_log2(node.p_opp)
        total = node.count()
        if reduced > n:
            problems.append(f"h={node.h}: {reduced} reduced calls > n={n}")
        if full > 1:
            problems.append(f"h={node.h}: {full} full-precision calls")
        if total > call_bound(n, node.h, l):
            problems.append(f"h={node.h}, l={l}: {total} calls > {call_bound(n, node.h, l)}")
    return problems


@dataclass
class InstrumentedRun:
    regions: Regions
    stats: CallStats
    wall_time_us: int
    bound: BoundCheck | None


def run_instrumented(game: Game, config: SolverConfig) -> InstrumentedRun:
    start = time.perf_counter_ns()
    result = solve(game, config)
    elapsed = (time.perf_counter_ns() - start) // 1000
    bound = None
    if config.algorithm is Algorithm.QPT:
        bound = check_call_bound(result.stats, game.n, result.stats.root_h or 0)
    return InstrumentedRun(result.regions, result.stats, elapsed, bound)


def report_entry(input_name: str, ng: NamedGame, config: SolverConfig, run: InstrumentedRun) -> dict[str, Any]:
    return {
        "input": input_name,
        "algorithm": config.algorithm.value,
        "flags": config.flags(),
        "n": ng.game.n,
        "h_max": ng.game.h_max,
        "win_even": ng.external(run.regions.win_even),
        "win_odd": ng.external(run.regions.win_odd),
        "stats": {"nontrivial_calls": run.stats.nontrivial_calls, "max_depth": run.stats.max_depth},
        "wall_time_us": run.wall_time_us,
        "bound": run.bound.as_dict() if run.bound else None,
        "bound_ok": run.bound.ok if run.bound else None,
    }
