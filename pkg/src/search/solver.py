"""
Two-phase solve driver and solution verification.

Phase 1 searches with streamliners under a fraction of the budget. A win
found there is kept only if it replays under the full rules. Otherwise
phase 2 searches without streamliners under the whole budget, and only
phase 2 may prove a deal unwinnable.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field

from src.deal.dealer import Layout
from src.dominance.dominances import DominanceConfig, applicable_dominances
from src.engine.movegen import legal_moves
from src.engine.moves import Move
from src.engine.state import initial_state
from src.rules.models import BuildPolicy, RuleSet
from src.search.dfs import SearchLimits, SearchOutcome, StreamlinerSet, Verdict, dfs

logger = logging.getLogger(__name__)


class StreamlinerMode(str, Enum):
    ON = "on"
    OFF = "off"
    AUTO = "auto"


class SolveOptions(BaseModel):
    """Run-time switches for solve."""

    streamliners: StreamlinerMode = Field(default=StreamlinerMode.AUTO, description="Phase-1 streamlined search")
    dominances: Optional[DominanceConfig] = Field(default=None, description="Dominances; derived from rules if unset")
    debug: bool = Field(default=False, description="Check apply/undo round trips during search")


def streamliners_for(rules: RuleSet) -> StreamlinerSet:
    """Streamliners that make sense for a game."""
    suit_foundations = rules.foundations_present and not rules.hole and not rules.foundations_complete_pile_only
    return StreamlinerSet(
        auto_foundation=suit_foundations,
        suit_symmetry=suit_foundations and rules.build_policy == BuildPolicy.RED_BLACK,
    )


@dataclass
class Verification:
    """Result of replaying a solution. Truthy when the solution wins."""

    valid: bool
    failed_at: Optional[int] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.valid


def verify_solution(rules: RuleSet, layout: Layout, moves: List[Move]) -> Verification:
    """
    Replay moves from the opening position using plain move legality.

    Args:
        rules (RuleSet): rules of the game
        layout (Layout): the deal
        moves (List[Move]): candidate solution

    Returns:
        Verification: valid, or the index of the first failing move
    """
    state = initial_state(rules, layout)
    for index, move in enumerate(moves):
        if move not in legal_moves(state):
            return Verification(False, index, f"move {index} ({move}) is not legal")
        state.apply(move)
    if not state.is_won():
        return Verification(False, len(moves), "moves end in a position that is not won")
    return Verification(True)


def solve(
    rules: RuleSet,
    layout: Layout,
    limits: Optional[SearchLimits] = None,
    options: Optional[SolveOptions] = None,
) -> SearchOutcome:
    """
    Decide whether a deal is winnable.

    Args:
        rules (RuleSet): rules of the game
        layout (Layout): the deal
        limits (SearchLimits): search budget
        options (SolveOptions): streamliner and dominance switches

    Returns:
        SearchOutcome: the verdict of the deciding phase, with nodes and time of both phases
    """
    limits = limits or SearchLimits()
    options = options or SolveOptions()
    cfg = options.dominances or applicable_dominances(rules)
    state = initial_state(rules, layout)

    streamliners = streamliners_for(rules)
    if options.streamliners == StreamlinerMode.ON:
        run_phase_one = limits.streamliner_fraction > 0
    elif options.streamliners == StreamlinerMode.AUTO:
        run_phase_one = streamliners.active and limits.streamliner_fraction > 0
    else:
        run_phase_one = False

    spent_nodes = 0
    spent_s = 0.0
    if run_phase_one:
        first = dfs(state, rules, cfg, streamliners, limits.scaled(limits.streamliner_fraction), options.debug)
        logger.debug(f"Streamlined phase: {first.verdict.value} after {first.nodes} nodes")
        if first.verdict == Verdict.WINNABLE:
            check = verify_solution(rules, layout, first.solution)
            if check:
                first.phase = "streamlined"
                return first
            logger.warning(f"Streamlined solution failed verification: {check.reason}")
        spent_nodes, spent_s = first.nodes, first.elapsed_s
        logger.info("Streamlined search did not settle the deal; running full search")

    result = dfs(state, rules, cfg, StreamlinerSet(), limits, options.debug)
    result.nodes += spent_nodes
    result.elapsed_s += spent_s
    if result.verdict in (Verdict.TIMED_OUT, Verdict.MEMED_OUT):
        logger.warning(f"Full search ended {result.verdict.value} after {result.nodes} nodes")
    return result
