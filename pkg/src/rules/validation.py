"""
Validation and layout derivation for rule sets.
"""

import logging
from typing import List, Optional

from src.exceptions import InvalidValue
from src.rules.models import (
    BaseCard,
    Diagnostic,
    FaceUp,
    FoundationsInitial,
    GroupPolicy,
    LayoutSpec,
    MoveBuiltGroup,
    RuleSet,
    SpacesPolicy,
    StockDealType,
    StockRedeal,
)

logger = logging.getLogger(__name__)


def _capped_triangle(piles: int, cap: int) -> List[int]:
    return [min(i + 1, cap) for i in range(piles)]


def _triangle_cap(piles: int, cards: int) -> Optional[int]:
    """Largest cap giving piles of 1, 2, ... (capped) that hold exactly `cards`."""
    for cap in range(piles, 0, -1):
        if sum(_capped_triangle(piles, cap)) == cards:
            return cap
    return None


def _truncated_triangle(piles: int, cards: int) -> List[int]:
    counts = []
    for i in range(piles):
        counts.append(min(i + 1, cards))
        cards -= counts[-1]
    return counts


def layout_spec(rules: RuleSet) -> LayoutSpec:
    """
    Derive the opening tableau shape of a game.

    Square layouts share the tableau cards out evenly, earlier piles taking
    the extra cards. Diagonal deals give pile i i+1 cards, capped so the
    total matches (Raglan and Somerset stop growing part way along). When
    no cap fits, piles take 1, 2, 3, ... cards until the tableau share runs
    out, so the last dealt pile may be short and later ones empty.

    Args:
        rules (RuleSet): validated rules

    Returns:
        LayoutSpec: pile lengths and face-down counts
    """
    piles = rules.tableau_count
    cards = rules.tableau_total
    if cards < 0:
        raise InvalidValue("tableau piles", cards, "other zones need more cards than the pack holds")
    if piles == 0:
        if cards != 0:
            raise InvalidValue("tableau piles.count", 0, f"{cards} cards have nowhere to go")
        return LayoutSpec()

    if rules.diagonal_deal:
        cap = _triangle_cap(piles, cards)
        if cap is not None:
            counts = _capped_triangle(piles, cap)
        elif cards <= piles * (piles + 1) // 2:
            counts = _truncated_triangle(piles, cards)
        else:
            raise InvalidValue("tableau piles.diagonal deal", True, f"{cards} cards do not fit a triangle on {piles} piles")
    else:
        base, extra = divmod(cards, piles)
        counts = [base + 1 if i < extra else base for i in range(piles)]

    if rules.face_up == FaceUp.TOP:
        face_down = [max(count - 1, 0) for count in counts]
    else:
        face_down = [0] * piles
    return LayoutSpec(tableau_card_counts=counts, face_down_counts=face_down)


def validate(rules: RuleSet) -> List[Diagnostic]:
    """
    Check every rule-set invariant.

    Args:
        rules (RuleSet): parsed rules

    Returns:
        List[Diagnostic]: one entry per violation, empty when valid
    """
    diagnostics: List[Diagnostic] = []

    def report(code: str, field: str, message: str) -> None:
        diagnostics.append(Diagnostic(code=code, field=field, message=message))

    if rules.cells_prefilled > rules.cells_count:
        report("CountMismatch", "cells", f"{rules.cells_prefilled} pre-filled but only {rules.cells_count} cells")

    random_initial = rules.foundations_initial == FoundationsInitial.ONE_RANDOM_BASE
    if (rules.base_card == BaseCard.RANDOM) != random_initial:
        report("ConfigConflict", "foundations.base card",
               "a random base card requires initial cards one-random-base and vice versa")

    if not rules.foundations_present and rules.foundations_initial != FoundationsInitial.NONE:
        report("ConfigConflict", "foundations.initial cards", "initial cards need foundations")

    if not rules.foundations_present and not rules.hole:
        report("NoWinCondition", "foundations.present", "game has neither foundations nor a hole")

    if rules.hole and rules.foundations_present:
        report("ConfigConflict", "hole", "hole games do not also have suit foundations")

    if rules.foundations_complete_pile_only:
        if rules.foundations_removable:
            report("ConfigConflict", "foundations.removable", "complete piles cannot be worried back")
        if rules.foundations_initial != FoundationsInitial.NONE:
            report("ConfigConflict", "foundations.initial cards", "complete-pile foundations start empty")

    if rules.stock_deal_type == StockDealType.TABLEAU_PILES:
        if rules.stock_deal_count != 1:
            report("InvalidValue", "stock.deal count", "deals to the tableau place one card per pile")
        if rules.stock_size > 0 and rules.tableau_count == 0:
            report("CountMismatch", "stock.deal type", "no tableau piles to deal to")
        if rules.stock_redeal == StockRedeal.UNLIMITED:
            report("ConfigConflict", "stock.redeal", "cards dealt to the tableau cannot be redealt")

    if rules.move_built_group == MoveBuiltGroup.NO and rules.move_built_group_policy != GroupPolicy.SAME_AS_BUILD:
        report("ConfigConflict", "tableau piles.move built group policy", "group policy set but groups cannot move")

    if rules.spaces_policy == SpacesPolicy.AUTO_FROM_RESERVE and rules.reserve_size == 0:
        report("ConfigConflict", "tableau piles.spaces policy", "refill from reserve without a reserve")
    if rules.spaces_policy == SpacesPolicy.AUTO_FROM_WASTE and rules.stock_size == 0:
        report("ConfigConflict", "tableau piles.spaces policy", "refill from waste without a stock")

    if rules.tableau_total < 0:
        report("CountMismatch", "total", f"zones need {rules.total_cards - rules.tableau_total} of {rules.total_cards} cards")
    else:
        try:
            layout_spec(rules)
        except InvalidValue as e:
            report("CountMismatch", e.field, str(e))

    if diagnostics:
        logger.debug(f"Rules produced {len(diagnostics)} diagnostics")
    return diagnostics


def reduced_rules(rules: RuleSet, max_rank: int) -> RuleSet:
    """
    Scale a game down to a pack of ranks 1..max_rank, keeping its policies.

    Stock and reserve shrink in proportion. Square tableaus shrink their pile
    count in proportion. Diagonal deals keep the largest triangle that fits,
    and any leftover cards go to the stock or reserve. With neither, and no
    capped triangle holding the cards exactly, the deal uses the fewest piles
    whose full triangle holds them and the last pile is short.

    Args:
        rules (RuleSet): full-size rules
        max_rank (int): highest rank of the reduced pack

    Returns:
        RuleSet: a valid reduced variant
    """
    if not 1 <= max_rank <= 13:
        raise InvalidValue("max rank", max_rank)
    factor = max_rank / rules.max_rank
    update = {
        "max_rank": max_rank,
        "stock_size": round(rules.stock_size * factor),
        "reserve_size": round(rules.reserve_size * factor),
        "cells_prefilled": min(round(rules.cells_prefilled * factor), rules.cells_count),
    }
    if rules.spaces_policy == SpacesPolicy.AUTO_FROM_RESERVE:
        update["reserve_size"] = max(update["reserve_size"], 1)
    if rules.spaces_policy == SpacesPolicy.AUTO_FROM_WASTE:
        update["stock_size"] = max(update["stock_size"], 1)
    candidate = rules.model_copy(update=update)

    # Keep a few cards for the tableau when other zones would swallow the pack.
    while candidate.tableau_total < min(rules.tableau_count, 2) and (candidate.stock_size or candidate.reserve_size):
        if candidate.stock_size >= candidate.reserve_size:
            candidate = candidate.model_copy(update={"stock_size": candidate.stock_size - 1})
        else:
            candidate = candidate.model_copy(update={"reserve_size": candidate.reserve_size - 1})

    if rules.tableau_count == 0:
        return _checked(candidate, max_rank)

    if not rules.diagonal_deal:
        piles = max(1, min(rules.tableau_count, round(rules.tableau_count * factor)))
        return _checked(candidate.model_copy(update={"tableau_count": piles}), max_rank)

    cards = candidate.tableau_total
    absorb = "stock_size" if rules.stock_size > 0 else ("reserve_size" if rules.reserve_size > 0 else None)
    shapes = [(piles, piles) for piles in range(rules.tableau_count, 0, -1)]
    shapes += [(piles, cap) for piles in range(rules.tableau_count, 0, -1) for cap in range(piles - 1, 0, -1)]
    for piles, cap in shapes:
        residual = cards - sum(_capped_triangle(piles, cap))
        if residual < 0 or (residual > 0 and absorb is None):
            continue
        update = {"tableau_count": piles}
        if residual:
            update[absorb] = getattr(candidate, absorb) + residual
        shaped = candidate.model_copy(update=update)
        if not validate(shaped):
            return shaped

    piles = next((p for p in range(1, rules.tableau_count + 1) if p * (p + 1) // 2 >= cards), None)
    if piles is not None:
        shaped = candidate.model_copy(update={"tableau_count": piles})
        if not validate(shaped):
            return shaped
    raise InvalidValue("max rank", max_rank, "no reduced layout fits these rules")


def _checked(rules: RuleSet, max_rank: int) -> RuleSet:
    diagnostics = validate(rules)
    if diagnostics:
        raise InvalidValue("max rank", max_rank, "; ".join(str(d) for d in diagnostics))
    return rules
