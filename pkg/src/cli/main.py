"""
Command-line front end for the patience solver.
"""

import argparse
import json
import logging
import sys
from typing import Dict, List, Optional

from src.cli.config import Settings, load_profile, resolve_rules_path
from src.cli.harness import game_name, run_batch, run_single, summarize
from src.deal.dealer import deal
from src.dominance.dominances import DOMINANCE_NAMES, applicable_dominances
from src.engine.moves import parse_move
from src.engine.state import initial_state
from src.exceptions import SolverError
from src.rules.parser import load_rules
from src.rules.validation import reduced_rules
from src.search.dfs import SearchLimits, Verdict
from src.search.solver import SolveOptions, StreamlinerMode, verify_solution
from src.stats.published import compare
from src.stats.report import BatchSummary, summary_json, summary_table
from src.stats.wilson import SampleSummary

logger = logging.getLogger(__name__)

EXIT_CODES = {
    Verdict.WINNABLE: 0,
    Verdict.UNWINNABLE: 1,
    Verdict.TIMED_OUT: 3,
    Verdict.MEMED_OUT: 4,
}
EXIT_USAGE = 2
EXIT_INTERRUPTED = 130


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="patience-solver",
        description="Decide winnability of seeded patience deals and estimate win rates.",
    )
    parser.add_argument("--rules", help="rules file, or a game name under the games directory")
    parser.add_argument("--seed", type=int, default=1, help="deal seed (first seed of a batch)")
    parser.add_argument("--count", type=int, default=1, help="number of consecutive seeds")
    parser.add_argument("--timeout-s", type=float, help="wall-clock budget per instance")
    parser.add_argument("--node-budget", type=int, help="node budget per instance")
    parser.add_argument("--cache-bytes", type=int, help="transposition table capacity")
    parser.add_argument(
        "--streamliners", choices=[mode.value for mode in StreamlinerMode], default=StreamlinerMode.AUTO.value
    )
    parser.add_argument("--no-dominances", action="store_true", help="turn every dominance off")
    parser.add_argument(
        "--dominance",
        action="append",
        default=[],
        metavar="NAME=on|off",
        help=f"switch one dominance ({', '.join(DOMINANCE_NAMES)})",
    )
    parser.add_argument("--jobs", type=int, help="worker processes for batches")
    parser.add_argument("--out", help="record file (stdout by default)")
    parser.add_argument("--show-deal", action="store_true", help="print the layout JSON before solving")
    parser.add_argument("--dump-state", action="store_true", help="print the opening position before solving")
    parser.add_argument("--solution", help="write the winning moves of a single instance here")
    parser.add_argument("--verify", help="replay a solution file instead of solving")
    parser.add_argument("--summarize", help="recompute the summary of a record file")
    parser.add_argument("--table", action="store_true", help="also print the summary as a text table")
    parser.add_argument("--compare", help="compare the summary with a published result")
    parser.add_argument("--profile", help="experiment profile (profiles/default.json when present)")
    parser.add_argument("--max-rank", type=int, help="play a reduced pack of ranks 1..N")
    return parser


def parse_overrides(items: List[str]) -> Dict[str, bool]:
    """Turn NAME=on|off items into a dominance override mapping."""
    overrides = {}
    for item in items:
        name, _, value = item.partition("=")
        if value not in ("on", "off"):
            raise ValueError(f"--dominance expects NAME=on|off, got {item!r}")
        overrides[name.strip()] = value == "on"
    return overrides


def _report(summary: BatchSummary, args: argparse.Namespace) -> None:
    if args.table:
        print(summary_table([summary]))
    if args.compare:
        sample = SampleSummary(wins=summary.wins, losses=summary.losses, unknowns=summary.unknowns)
        print(json.dumps(compare(args.compare, sample)))


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run the solver from the command line.

    Returns:
        int: exit code; the verdict of a single instance, 0 for a finished batch
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except KeyboardInterrupt:
        return EXIT_INTERRUPTED
    except (SolverError, OSError, ValueError) as e:
        logger.error(f"Error running solver: {str(e)}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def _run(args: argparse.Namespace) -> int:
    settings = Settings.from_env(load=False)

    if args.summarize:
        summary = summarize(args.summarize)
        print(summary_json(summary))
        _report(summary, args)
        return 0

    if not args.rules:
        raise ValueError("--rules is required unless --summarize is given")
    rules_path = str(resolve_rules_path(args.rules, settings.games_dir))
    game = game_name(rules_path)
    settings = settings.with_profile(load_profile(args.profile).get(game, {}))

    rules = load_rules(rules_path)
    if args.max_rank:
        rules = reduced_rules(rules, args.max_rank)

    limits = SearchLimits(
        time_s=args.timeout_s or settings.timeout_s,
        cache_bytes=args.cache_bytes or settings.cache_bytes,
        node_budget=args.node_budget or settings.node_budget,
        streamliner_fraction=settings.streamliner_fraction,
    )
    dominances = applicable_dominances(rules, parse_overrides(args.dominance), args.no_dominances)
    options = SolveOptions(streamliners=StreamlinerMode(args.streamliners), dominances=dominances, debug=settings.debug)

    if args.show_deal or args.dump_state or args.verify:
        layout = deal(rules, args.seed)
        if args.show_deal:
            print(layout.to_json())
        if args.dump_state:
            print(initial_state(rules, layout).render())
        if args.verify:
            with open(args.verify, "r") as f:
                moves = [parse_move(line) for line in f if line.strip()]
            check = verify_solution(rules, layout, moves)
            print(json.dumps({"valid": check.valid, "failed_at": check.failed_at, "reason": check.reason}))
            return 0 if check else 1

    if args.count > 1:
        summary = run_batch(
            rules_path,
            args.seed,
            args.count,
            limits,
            options,
            jobs=args.jobs or settings.jobs,
            out_path=args.out,
            progress_every=settings.progress_every,
            rules=rules,
        )
        _report(summary, args)
        return EXIT_INTERRUPTED if summary.interrupted else 0

    record = run_single(rules_path, args.seed, limits, options, args.solution, rules=rules)
    if args.out:
        with open(args.out, "w") as f:
            f.write(record.to_json() + "\n")
    else:
        print(record.to_json())
    return EXIT_CODES[record.verdict]
