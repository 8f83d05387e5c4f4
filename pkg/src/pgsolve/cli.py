"""Command-line interface: solve, verify, gen, convert, bench.

Exit codes: 0 success, 1 solver disagreement or failed verification,
2 bad input or usage.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import oracle
from .bench import report_entry, run_instrumented
from .formats import FormatError, NamedGame, emit_pgsolver, emit_report, load_regions, parse_pgsolver
from .game import GameError, Owner
from .generators import GenParams, InvalidParams, family_chain, family_clique, random_game
from .solvers import Algorithm, SolverConfig, extract_strategy_classic, solve

log = logging.getLogger("pgsolve")

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
GAME_SUFFIXES = (".gm", ".pg", ".pgsolver")


class InputError(Exception):
    pass


def _load(path: str) -> NamedGame:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from e
    try:
        ng = parse_pgsolver(text)
    except (FormatError, GameError) as e:
        raise InputError(f"{path}: {e}") from e
    for note in ng.notes:
        log.info("%s: %s", path, note)
    return ng


def _config(args, algorithm: str) -> SolverConfig:
    return SolverConfig(
        algorithm=Algorithm(algorithm),
        opt_attractor_guard=args.guard,
        opt_clamp_precision=args.clamp,
        opt_exactness_flag=args.exact_flag,
        collect_strategy=getattr(args, "strategy", False),
    )


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8", newline="\n")


def cmd_solve(args) -> int:
    ng = _load(args.file)
    config = _config(args, args.algorithm)
    run = run_instrumented(ng.game, config)
    entry = report_entry(args.file, ng, config, run)
    print("win_even:", " ".join(map(str, entry["win_even"])))
    print("win_odd:", " ".join(map(str, entry["win_odd"])))
    if args.strategy:
        result = solve(ng.game, config)
        if result.strategies is None:
            print("strategies are only available for classic and oracle", file=sys.stderr)
        else:
            for strat in result.strategies:
                moves = sorted((ng.original_ids[v], ng.original_ids[m]) for v, m in strat.moves.items()
                               if v not in ng.synthetic)
                print(f"strategy_{strat.player.name.lower()}:", " ".join(f"{v}->{m}" for v, m in moves))
            entry["strategies"] = {
                s.player.name.lower(): {str(ng.original_ids[v]): ng.original_ids[m] for v, m in s.moves.items()}
                for s in result.strategies
            }
    if run.bound is not None and not run.bound.ok:
        log.warning("call count %d exceeds bound %d", run.bound.observed, run.bound.bound)
    if args.json:
        _write(args.json, emit_report(entry))
    return EXIT_OK


def cmd_verify(args) -> int:
    ng = _load(args.file)
    try:
        claimed_even, claimed_odd = load_regions(Path(args.regions).read_text(encoding="utf-8"))
    except (OSError, ValueError, KeyError) as e:
        raise InputError(f"{args.regions}: {e}") from e
    regions, even, odd = extract_strategy_classic(ng.game)
    ok = True
    for player, strat in ((Owner.EVEN, even), (Owner.ODD, odd)):
        if not oracle.verify_strategy(ng.game, player, regions.of(player), strat):
            print(f"internal error: {player} strategy does not verify", file=sys.stderr)
            ok = False
    if ng.external(regions.win_even) != sorted(claimed_even) or ng.external(regions.win_odd) != sorted(claimed_odd):
        print("regions do not match the solved game")
        print("  expected win_even:", ng.external(regions.win_even))
        print("  expected win_odd: ", ng.external(regions.win_odd))
        ok = False
    else:
        print("regions verified")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_gen(args) -> int:
    try:
        if args.family == "random":
            game = random_game(GenParams(args.n, args.max_priority, args.min_out, args.max_out, args.bias, args.seed))
        elif args.family == "chain":
            game = family_chain(args.k)
        else:
            game = family_clique(args.n)
    except InvalidParams as e:
        raise InputError(str(e)) from e
    _write(args.output, emit_pgsolver(game))
    return EXIT_OK


def cmd_convert(args) -> int:
    _write(args.output, emit_pgsolver(_load(args.input)))
    return EXIT_OK


def _bench_inputs(paths: list[str]) -> list[str]:
    files = []
    for p in paths:
        path = Path(p)
        if path.is_dir():
            files.extend(str(f) for f in sorted(path.iterdir()) if f.suffix in GAME_SUFFIXES)
        elif path.exists():
            files.append(str(path))
        else:
            raise InputError(f"{p}: no such file or directory")
    return sorted(files)


def cmd_bench(args) -> int:
    algorithms = [a.strip() for a in args.algorithms.split(",") if a.strip()]
    try:
        algorithms = [Algorithm(a).value for a in algorithms]
    except ValueError as e:
        raise InputError(str(e)) from e
    entries = []
    status = EXIT_OK
    for name in _bench_inputs(args.inputs):
        ng = _load(name)
        seen = {}
        for alg in algorithms:
            config = _config(args, alg)
            run = run_instrumented(ng.game, config)
            entries.append(report_entry(name, ng, config, run))
            seen[alg] = run.regions
            if run.bound is not None and not run.bound.ok:
                log.error("%s: %s exceeded the call bound", name, alg)
                status = EXIT_FAIL
        if len(set(seen.values())) > 1:
            log.error("%s: algorithms disagree: %s", name, ", ".join(seen))
            status = EXIT_FAIL
        log.info("%s: done", name)
    text = emit_report(entries)
    if args.json:
        _write(args.json, text)
    else:
        sys.stdout.write(text)
    return status


def _add_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--guard", action="store_true", help="classic: stop once the opponent region is attractor-closed")
    p.add_argument("--clamp", action="store_true", help="qpt: clamp precisions to the subgame size")
    p.add_argument("--exact-flag", action="store_true", help="qpt: skip the full-precision call after an exact empty result")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pgsolve", description="Solve parity games in PGSolver format.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve a game and print both winning regions")
    p.add_argument("file")
    p.add_argument("--algorithm", choices=[a.value for a in Algorithm], default="qpt")
    _add_flags(p)
    p.add_argument("--strategy", action="store_true", help="also print positional strategies")
    p.add_argument("--json", metavar="OUT", help="write a JSON report")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check claimed regions against the game")
    p.add_argument("file")
    p.add_argument("--regions", required=True, help="JSON with win_even and win_odd")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a game")
    p.add_argument("family", choices=["random", "chain", "clique"])
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--max-priority", type=int, default=6)
    p.add_argument("--min-out", type=int, default=1)
    p.add_argument("--max-out", type=int, default=3)
    p.add_argument("--bias", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("convert", help="rewrite a game in canonical form")
    p.add_argument("input")
    p.add_argument("output")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("bench", help="run algorithms over a corpus and report call statistics")
    p.add_argument("inputs", nargs="+", help="game files or directories")
    p.add_argument("--algorithms", default="classic,qpt")
    _add_flags(p)
    p.add_argument("--json", metavar="OUT")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
