"""
Canonical state keys for the transposition table.

Free cells are interchangeable, so they are sorted. Tableau piles are
sorted too, except while a stock remains to be dealt onto them in index
order. Suits are dropped when nothing in the game can tell them apart.
"""

from functools import lru_cache
from typing import Dict, List, Optional

from src.deal.cards import Card, Suit
from src.engine.state import GameState
from src.rules.models import BuildPolicy, GroupPolicy, MoveBuiltGroup, RuleSet

PILE_END = 0xFF
ZONE_END = 0xFE
EMPTY = 0x00


def suits_erasable(rules: RuleSet) -> bool:
    """Whether card suits never affect play under these rules."""
    if rules.build_policy not in (BuildPolicy.ANY_SUIT, BuildPolicy.NO_BUILD):
        return False
    if rules.foundations_present and not rules.hole:
        return False
    same_suit_groups = (
        rules.move_built_group != MoveBuiltGroup.NO
        and rules.move_built_group_policy == GroupPolicy.SAME_SUIT
    )
    return not same_suit_groups


@lru_cache(maxsize=None)
def _code_table(erase: bool, by_colour: bool) -> Dict[Card, int]:
    """Byte code of every card; deck copies share a code."""
    table = {}
    for deck in (0, 1):
        for suit in Suit:
            for rank in range(1, 14):
                if erase:
                    code = rank * 4 + 1
                elif by_colour:
                    code = rank * 4 + (2 if suit.is_red else 1)
                else:
                    code = rank * 4 + int(suit) + 1
                table[Card(rank, suit, deck)] = code
    return table


def _zone(codes: Dict[Card, int], cards: List[Card]) -> bytes:
    return bytes([len(cards)]) + bytes(map(codes.__getitem__, cards))


def canonicalize(state: GameState, rules: Optional[RuleSet] = None, suit_symmetry: bool = False) -> bytes:
    """
    Byte key shared by every position equivalent to `state`.

    Args:
        state (GameState): position to key
        rules (RuleSet): defaults to the state's rules
        suit_symmetry (bool): map tableau suits to colours (not sound; streamliner use only)

    Returns:
        bytes: the canonical key
    """
    rules = rules or state.rules
    erase = suits_erasable(rules)
    pile_codes = _code_table(erase, suit_symmetry)
    exact = _code_table(erase, False)

    def encode_pile(cards: List[Card], face_down: int) -> bytes:
        return bytes([face_down]) + bytes(map(pile_codes.__getitem__, cards))

    tag = (erase, suit_symmetry)
    piles = [state.pile_key(index, tag, encode_pile) for index in range(len(state.tableau))]
    if state.piles_interchangeable():
        piles.sort(key=lambda key: (len(key), key))
    out = bytearray()
    for pile in piles:
        out += pile
        out.append(PILE_END)
    out.append(ZONE_END)

    out += bytes(sorted(EMPTY if card is None else exact[card] for card in state.cells))
    out.append(ZONE_END)

    # foundations keep their true suits
    for pile in state.foundations:
        out.append(len(pile))
        out.append(exact[pile[-1]] if pile else EMPTY)
    out.append(ZONE_END)

    if state.hole:
        out += bytes([len(state.hole), exact[state.hole[-1]]])
    out.append(ZONE_END)

    for zone in (state.reserve, state.stock, state.waste):
        out += _zone(exact, zone)
        out.append(ZONE_END)
    out.append(state.base_rank)
    return bytes(out)
