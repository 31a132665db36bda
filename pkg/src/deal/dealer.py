"""
Dealing module for the patience solver.
Turns (rules, seed) into a concrete Layout in a fixed, documented order.
"""

import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from src.deal.cards import Card, Suit, canonical_pack, parse_card
from src.deal.generator import generator, shuffle
from src.exceptions import InvalidRules
from src.rules.models import FoundationsInitial, RuleSet
from src.rules.validation import layout_spec, validate

logger = logging.getLogger(__name__)

ACE_OF_SPADES = Card(1, Suit.SPADES, 0)


@dataclass
class Layout:
    """
    A concrete deal.

    Piles list cards bottom first with a face-down flag each. Stock and
    reserve list cards top first: stock[0] is dealt first and reserve[0]
    is the stacked reserve's playable card.
    """

    tableau: List[List[Tuple[Card, bool]]] = field(default_factory=list)
    stock: List[Card] = field(default_factory=list)
    reserve: List[Card] = field(default_factory=list)
    cells: List[Optional[Card]] = field(default_factory=list)
    foundation_seeds: List[Card] = field(default_factory=list)
    base_rank: int = 1

    def all_cards(self) -> List[Card]:
        cards = [card for pile in self.tableau for card, _ in pile]
        cards += self.stock + self.reserve + self.foundation_seeds
        cards += [card for card in self.cells if card is not None]
        return cards

    def to_dict(self) -> Dict[str, Any]:
        return {
            "tableau": [[str(card) for card, _ in pile] for pile in self.tableau],
            "face_down": [sum(1 for _, down in pile if down) for pile in self.tableau],
            "stock": [str(card) for card in self.stock],
            "reserve": [str(card) for card in self.reserve],
            "cells": [str(card) if card is not None else None for card in self.cells],
            "foundation_seeds": [str(card) for card in self.foundation_seeds],
            "base_rank": self.base_rank,
        }

    def to_json(self, indent: Optional[int] = None) -> str:
        """Deterministic JSON with rank-letter card strings."""
        return json.dumps(self.to_dict(), sort_keys=True, indent=indent)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Layout":
        """Rebuild a layout; repeated cards get increasing deck indexes."""
        seen: Counter = Counter()

        def card(text: str) -> Card:
            parsed = parse_card(text)
            deck = seen[str(parsed)]
            seen[str(parsed)] += 1
            return parsed._replace(deck=deck)

        face_down = data.get("face_down") or [0] * len(data.get("tableau", []))
        tableau = [
            [(card(text), index < down) for index, text in enumerate(pile)]
            for pile, down in zip(data.get("tableau", []), face_down)
        ]
        return cls(
            tableau=tableau,
            stock=[card(text) for text in data.get("stock", [])],
            reserve=[card(text) for text in data.get("reserve", [])],
            cells=[card(text) if text else None for text in data.get("cells", [])],
            foundation_seeds=[card(text) for text in data.get("foundation_seeds", [])],
            base_rank=data.get("base_rank", 1),
        )


def deal(rules: RuleSet, seed: int) -> Layout:
    """
    Deal a game from a seed.

    The pack is shuffled once and then assigned in this order:
    foundation or hole seeds, pre-filled cells, reserve, tableau piles
    (pile by pile, bottom card first) and finally the stock.

    Args:
        rules (RuleSet): rules of the game
        seed (int): unsigned 32-bit seed

    Returns:
        Layout: the dealt layout
    """
    diagnostics = validate(rules)
    if diagnostics:
        raise InvalidRules(diagnostics)
    shape = layout_spec(rules)

    cards = shuffle(canonical_pack(rules.max_rank, rules.two_decks), generator(seed))
    layout = Layout(cells=[None] * rules.cells_count)

    if rules.hole:
        cards.remove(ACE_OF_SPADES)
        layout.foundation_seeds.append(ACE_OF_SPADES)
    if rules.foundations_present and rules.foundations_initial == FoundationsInitial.ACES:
        aces = [card for card in canonical_pack(rules.max_rank, rules.two_decks) if card.rank == 1]
        for ace in aces:
            cards.remove(ace)
        layout.foundation_seeds.extend(aces)

    position = 0

    def take(count: int) -> List[Card]:
        nonlocal position
        taken = cards[position:position + count]
        position += count
        return taken

    if rules.foundations_present and rules.foundations_initial == FoundationsInitial.ONE_RANDOM_BASE:
        base = take(1)[0]
        layout.foundation_seeds.append(base)
        layout.base_rank = base.rank

    for index, card in enumerate(take(rules.cells_prefilled)):
        layout.cells[index] = card
    layout.reserve = take(rules.reserve_size)
    for length, down in zip(shape.tableau_card_counts, shape.face_down_counts):
        layout.tableau.append([(card, index < down) for index, card in enumerate(take(length))])
    layout.stock = cards[position:]

    logger.debug(f"Dealt seed {seed}: {len(layout.tableau)} piles, {len(layout.stock)} stock cards")
    return layout
