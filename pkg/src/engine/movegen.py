"""
Legal move generation.

Order is fixed: foundation (or hole) builds, then tableau, cell, reserve,
waste and worry-back moves by zone index, then stock moves.

legal_moves is the complete rule-defined set. search_moves drops moves
that only lead to a permuted copy of another child: all but the first
free cell, and all but the first space while the piles are
interchangeable.
"""

from typing import List, Optional, Sequence

from src.deal.cards import Card
from src.engine.moves import Move, Zone, make_move
from src.engine.state import GameState
from src.rules.models import BuildPolicy, GroupPolicy, MoveBuiltGroup, RuleSet, SpacesPolicy, StockDealType


def in_sequence(state: GameState, card: Card, under: Card, policy: GroupPolicy) -> bool:
    """Whether card sits correctly on `under` within a movable run."""
    if policy == GroupPolicy.SAME_SUIT:
        return card.suit == under.suit and state.next_rank(card.rank) == under.rank
    return state.can_build(card, under)


def run_length(state: GameState, pile_index: int, policy: Optional[GroupPolicy] = None) -> int:
    """Length of the face-up run at the top of a pile under a group policy."""
    if policy is None:
        policy = state.rules.move_built_group_policy
    pile = state.tableau[pile_index]
    if not pile:
        return 0
    length = 1
    lowest = state.face_down[pile_index]
    while len(pile) - length > lowest and in_sequence(state, pile[-length], pile[-length - 1], policy):
        length += 1
    return length


def build_run_length(state: GameState, pile_index: int) -> int:
    """Face-up run at the top of a pile under the tableau build policy."""
    return run_length(state, pile_index, GroupPolicy.SAME_AS_BUILD)


def space_accepts(state: GameState, card: Card) -> bool:
    """Whether card (or a group headed by it) may fill an empty pile."""
    policy = state.rules.spaces_policy
    if policy == SpacesPolicy.NONE:
        return False
    if policy == SpacesPolicy.KINGS:
        return card.rank == state.rules.max_rank
    return True


def group_sizes(state: GameState, pile_index: int) -> List[int]:
    """Group sizes that may leave a pile for another tableau pile."""
    pile = state.tableau[pile_index]
    if not pile:
        return []
    mode = state.rules.move_built_group
    if mode == MoveBuiltGroup.NO:
        return [1]
    run = run_length(state, pile_index)
    if mode == MoveBuiltGroup.WHOLE_PILE:
        return [run]
    return list(range(1, run + 1))


def empty_piles(state: GameState) -> List[int]:
    return [index for index, pile in enumerate(state.tableau) if not pile]


def _forced_refills(state: GameState, spaces: Sequence[int]) -> List[Move]:
    if not spaces:
        return []
    policy = state.rules.spaces_policy
    if policy == SpacesPolicy.AUTO_FROM_RESERVE and state.reserve:
        return [make_move(Zone.RESERVE, len(state.reserve) - 1, Zone.TABLEAU, space) for space in spaces]
    if policy == SpacesPolicy.AUTO_FROM_WASTE:
        if state.waste:
            return [make_move(Zone.WASTE, None, Zone.TABLEAU, space) for space in spaces]
        if state.stock:
            return [make_move(Zone.STOCK, None, Zone.TABLEAU, space) for space in spaces]
    return []


def available_reserve(state: GameState) -> List[int]:
    """Internal indexes of playable reserve cards."""
    if not state.reserve:
        return []
    if state.rules.reserve_stacked:
        return [len(state.reserve) - 1]
    return list(range(len(state.reserve)))


def _hole_accepts(state: GameState, card: Card) -> bool:
    if not state.hole:
        return True
    gap = abs(card.rank - state.hole[-1].rank)
    return gap == 1 or (gap == state.rules.max_rank - 1 and gap > 0)


def _complete_pile(state: GameState, pile_index: int) -> Optional[int]:
    """Foundation slot for a complete top-down suit run at the top of a pile."""
    rules = state.rules
    if run_length(state, pile_index, GroupPolicy.SAME_SUIT) < rules.max_rank:
        return None
    top = state.tableau[pile_index][-1]
    if top.rank != 1:
        return None
    for slot in range(top.suit, len(state.foundations), 4):
        if not state.foundations[slot]:
            return slot
    return None


def foundation_moves(state: GameState) -> List[Move]:
    """Builds to foundations or the hole, in zone-index order."""
    moves: List[Move] = []
    rules = state.rules

    if rules.hole:
        def target(card: Card) -> Optional[int]:
            return 0 if _hole_accepts(state, card) else None
        dst = Zone.HOLE
    elif rules.foundations_complete_pile_only:
        for index in range(len(state.tableau)):
            slot = _complete_pile(state, index)
            if slot is not None:
                moves.append(make_move(Zone.TABLEAU, index, Zone.FOUNDATION, slot, rules.max_rank))
        return moves
    elif state.foundations:
        target = state.foundation_slot_for
        dst = Zone.FOUNDATION
    else:
        return moves

    def add(src: Zone, src_index: Optional[int], card: Card) -> None:
        slot = target(card)
        if slot is not None:
            moves.append(make_move(src, src_index, dst, None if dst == Zone.HOLE else slot))

    for index, pile in enumerate(state.tableau):
        if pile:
            add(Zone.TABLEAU, index, pile[-1])
    for index, card in enumerate(state.cells):
        if card is not None:
            add(Zone.CELL, index, card)
    for index in available_reserve(state):
        add(Zone.RESERVE, index, state.reserve[index])
    if state.waste:
        add(Zone.WASTE, None, state.waste[-1])
    return moves


def _placements(state: GameState, card: Card, spaces: Sequence[int], exclude: int = -1) -> List[int]:
    """Piles a card (heading a group) may be placed on: builds and offered spaces."""
    targets: List[int] = []
    if state.rules.build_policy != BuildPolicy.NO_BUILD:
        for index, pile in enumerate(state.tableau):
            if index != exclude and pile and state.can_build(card, pile[-1]):
                targets.append(index)
    if spaces and space_accepts(state, card):
        targets.extend(space for space in spaces if space != exclude)
        targets.sort()
    return targets


def _generate(state: GameState, prune: bool) -> List[Move]:
    spaces = empty_piles(state)
    spaces_pruned = prune and len(spaces) > 0 and state.piles_interchangeable()
    if spaces_pruned:
        spaces = spaces[:1]

    forced = _forced_refills(state, spaces)
    if forced:
        return forced

    moves = foundation_moves(state)

    for src, pile in enumerate(state.tableau):
        for size in group_sizes(state, src):
            whole = size == len(pile) and state.face_down[src] == 0
            targets = () if whole and spaces_pruned else spaces
            for dst in _placements(state, pile[-size], targets, exclude=src):
                moves.append(make_move(Zone.TABLEAU, src, Zone.TABLEAU, dst, size))

    if state.cells:
        free_cells = [index for index, card in enumerate(state.cells) if card is None]
        if prune:
            free_cells = free_cells[:1]
        for src, pile in enumerate(state.tableau):
            if pile:
                for cell in free_cells:
                    moves.append(make_move(Zone.TABLEAU, src, Zone.CELL, cell))
        for index, card in enumerate(state.cells):
            if card is not None:
                for dst in _placements(state, card, spaces):
                    moves.append(make_move(Zone.CELL, index, Zone.TABLEAU, dst))

    for index in available_reserve(state):
        for dst in _placements(state, state.reserve[index], spaces):
            moves.append(make_move(Zone.RESERVE, index, Zone.TABLEAU, dst))

    if state.waste:
        for dst in _placements(state, state.waste[-1], spaces):
            moves.append(make_move(Zone.WASTE, None, Zone.TABLEAU, dst))

    if state.rules.foundations_removable:
        for slot, pile in enumerate(state.foundations):
            if pile:
                for dst in _placements(state, pile[-1], spaces):
                    moves.append(make_move(Zone.FOUNDATION, slot, Zone.TABLEAU, dst))

    moves.extend(stock_moves(state))
    return moves


def legal_moves(state: GameState, rules: Optional[RuleSet] = None) -> List[Move]:
    """
    Every legal move of a position, in a fixed order.

    Args:
        state (GameState): current position
        rules (RuleSet): optional; the state's own rules are used

    Returns:
        List[Move]: legal moves, foundation builds first
    """
    return _generate(state, prune=False)


def search_moves(state: GameState) -> List[Move]:
    """
    Legal moves minus those that only reach a permutation of another child.

    Only the first free cell is offered. While the piles are
    interchangeable only the first space is offered, and no pile moves
    whole into a space.
    """
    return _generate(state, prune=True)


def stock_moves(state: GameState) -> List[Move]:
    rules = state.rules
    if rules.stock_deal_type == StockDealType.TABLEAU_PILES:
        if state.stock and state.tableau:
            return [make_move(Zone.STOCK, None, Zone.TABLEAU, None, min(len(state.stock), len(state.tableau)))]
        return []
    if state.stock:
        return [make_move(Zone.STOCK, None, Zone.WASTE, None, min(len(state.stock), rules.stock_deal_count))]
    if state.waste and state.redeal_allowed:
        return [make_move(Zone.WASTE, None, Zone.STOCK, None, len(state.waste))]
    return []
