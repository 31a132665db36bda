"""
Dominances for the patience solver.

Safe foundation moves are committed to without branching. The partial-pile
restriction drops tableau moves that break a built run unless the card left
behind can go straight to a foundation.
"""

import logging
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from src.engine.movegen import build_run_length, legal_moves
from src.engine.moves import Move, MoveKind, Zone
from src.engine.state import GameState
from src.exceptions import ConfigConflict
from src.rules.models import BuildPolicy, MoveBuiltGroup, RuleSet

logger = logging.getLogger(__name__)

SAME_SUIT_AUTO = "same_suit_auto"
RED_BLACK_SAFE = "red_black_safe"
PARTIAL_PILE = "partial_pile"
DOMINANCE_NAMES = (SAME_SUIT_AUTO, RED_BLACK_SAFE, PARTIAL_PILE)

_FIELDS = {
    SAME_SUIT_AUTO: "auto_foundation_same_suit",
    RED_BLACK_SAFE: "auto_foundation_red_black",
    PARTIAL_PILE: "partial_pile_restriction",
}


class DominanceConfig(BaseModel):
    """Which dominances a search uses."""

    model_config = ConfigDict(frozen=True)

    auto_foundation_same_suit: bool = Field(default=False, description="Any foundation build is safe")
    auto_foundation_red_black: bool = Field(default=False, description="Threshold safe rule for red-black builds")
    partial_pile_restriction: bool = Field(default=False, description="Filter partial-run tableau moves")
    waste_safe: bool = Field(default=True, description="Waste top cards may be committed to foundations")

    @property
    def any_safe(self) -> bool:
        return self.auto_foundation_same_suit or self.auto_foundation_red_black


def _suit_foundations(rules: RuleSet) -> Optional[str]:
    """Reason suit foundations are missing, or None."""
    if rules.hole:
        return "the game plays to a hole"
    if not rules.foundations_present:
        return "the game has no foundations"
    if rules.foundations_complete_pile_only:
        return "foundations only take complete piles"
    return None


def _preconditions(rules: RuleSet) -> Dict[str, Optional[str]]:
    """Reason each dominance cannot apply to the rules, or None."""
    foundations = _suit_foundations(rules)

    same_suit = foundations
    if same_suit is None and rules.build_policy != BuildPolicy.SAME_SUIT:
        same_suit = "the tableau does not build in suit"

    red_black = foundations
    if red_black is None:
        if rules.build_policy != BuildPolicy.RED_BLACK:
            red_black = "the tableau does not build in red-black alternation"
        elif rules.random_base:
            red_black = "foundations start from a random base"
        elif rules.two_decks:
            red_black = "the game uses two packs"

    partial = foundations
    if partial is None:
        if rules.two_decks:
            partial = "the game uses two packs"
        elif rules.build_policy != BuildPolicy.RED_BLACK:
            partial = "the tableau does not build in red-black alternation"
        elif rules.move_built_group == MoveBuiltGroup.NO:
            partial = "built groups cannot be moved"
        elif rules.cells_count:
            partial = "tableau cards can move to cells"

    return {SAME_SUIT_AUTO: same_suit, RED_BLACK_SAFE: red_black, PARTIAL_PILE: partial}


def applicable_dominances(
    rules: RuleSet,
    overrides: Optional[Dict[str, bool]] = None,
    disable_all: bool = False,
) -> DominanceConfig:
    """
    Work out which dominances a game allows.

    Args:
        rules (RuleSet): validated rules
        overrides (Dict[str, bool]): per-name on/off switches
        disable_all (bool): turn every dominance off

    Returns:
        DominanceConfig: the dominances to use

    Raises:
        ConfigConflict: a dominance was asked for but the rules break its preconditions
    """
    blocked = _preconditions(rules)
    enabled = {
        SAME_SUIT_AUTO: blocked[SAME_SUIT_AUTO] is None,
        RED_BLACK_SAFE: blocked[RED_BLACK_SAFE] is None,
        PARTIAL_PILE: rules.move_built_group == MoveBuiltGroup.PARTIAL_IF_CARD_ABOVE_BUILDABLE,
    }
    if enabled[PARTIAL_PILE] and blocked[PARTIAL_PILE] is not None:
        raise ConfigConflict(PARTIAL_PILE, blocked[PARTIAL_PILE])

    if disable_all:
        enabled = {name: False for name in enabled}
    for name, value in (overrides or {}).items():
        if name not in _FIELDS:
            raise ConfigConflict(name, f"unknown dominance, expected one of {', '.join(DOMINANCE_NAMES)}")
        if value and blocked[name] is not None:
            raise ConfigConflict(name, blocked[name])
        enabled[name] = value

    cfg = DominanceConfig(
        waste_safe=rules.stock_deal_count == 1,
        **{_FIELDS[name]: value for name, value in enabled.items()},
    )
    logger.debug(f"Dominances: {cfg}")
    return cfg


def _red_black_safe(state: GameState, rank: int, suit: int) -> bool:
    counts = [state.foundation_count(slot) for slot in range(4)]
    partner = 3 - suit
    opposite = [other for other in range(4) if other not in (suit, partner)]
    return all(counts[other] >= rank - 1 for other in opposite) and counts[partner] >= rank - 2


def safe_foundation_move(
    state: GameState,
    cfg: DominanceConfig,
    moves: Optional[List[Move]] = None,
) -> Optional[Move]:
    """
    First legal foundation build that cannot hurt winnability.

    Args:
        state (GameState): current position
        cfg (DominanceConfig): active dominances
        moves (List[Move]): legal moves of the position, computed if absent

    Returns:
        Optional[Move]: a safe move, or None
    """
    if not cfg.any_safe:
        return None
    if moves is None:
        moves = legal_moves(state)
    for move in moves:
        if move.dst != Zone.FOUNDATION or move.src == Zone.FOUNDATION or move.count != 1:
            continue
        if move.src == Zone.WASTE and not cfg.waste_safe:
            continue
        if cfg.auto_foundation_same_suit:
            return move
        card = _source_card(state, move)
        if _red_black_safe(state, card.rank, card.suit):
            return move
    return None


def _source_card(state: GameState, move: Move):
    if move.src == Zone.TABLEAU:
        return state.tableau[move.src_index][-1]
    if move.src == Zone.CELL:
        return state.cells[move.src_index]
    if move.src == Zone.RESERVE:
        return state.reserve[move.src_index]
    return state.waste[-1]


def filter_partial_pile_moves(state: GameState, moves: List[Move], cfg: DominanceConfig) -> List[Move]:
    """
    Drop tableau moves of part of a built run.

    A strict suffix of the run at the top of a pile may only move when the
    card it leaves exposed can be built to a foundation right away.
    """
    if not cfg.partial_pile_restriction:
        return moves
    kept = []
    for move in moves:
        if move.kind == MoveKind.TABLEAU_TO_TABLEAU:
            run = build_run_length(state, move.src_index)
            if move.count < run:
                exposed = state.tableau[move.src_index][-move.count - 1]
                if state.foundation_slot_for(exposed) is None:
                    continue
        kept.append(move)
    return kept
