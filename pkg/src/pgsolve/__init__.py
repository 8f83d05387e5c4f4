"""Parity game solvers: Zielonka's recursive algorithm and its quasi-polynomial variant."""
from .attractor import attractor
from .game import Game, Owner, SubgameView, build_game, normalize_self_loops
from .solvers import (
    Algorithm,
    CallStats,
    Precision,
    Regions,
    SolverConfig,
    Strategy,
    extract_strategy_classic,
    solve,
    solve_classic,
    solve_qpt_player,
)

__all__ = [
    "Algorithm",
    "CallStats",
    "Game",
    "Owner",
    "Precision",
    "Regions",
    "SolverConfig",
    "Strategy",
    "SubgameView",
    "attractor",
    "build_game",
    "extract_strategy_classic",
    "normalize_self_loops",
    "solve",
    "solve_classic",
    "solve_qpt_player",
]
