"""
Playing cards: suits, ranks, text form and canonical packs.
"""

from enum import IntEnum
from typing import List, NamedTuple

RANK_LETTERS = "A23456789TJQK"
SUIT_LETTERS = "CDHS"


class Suit(IntEnum):
    CLUBS = 0
    DIAMONDS = 1
    HEARTS = 2
    SPADES = 3

    @property
    def is_red(self) -> bool:
        return self in (Suit.DIAMONDS, Suit.HEARTS)

    @property
    def letter(self) -> str:
        return SUIT_LETTERS[self]


class Card(NamedTuple):
    """A card; deck is 0 or 1 in two-pack games."""

    rank: int
    suit: Suit
    deck: int = 0

    @property
    def is_red(self) -> bool:
        return self.suit in (Suit.DIAMONDS, Suit.HEARTS)

    def __str__(self) -> str:
        return f"{RANK_LETTERS[self.rank - 1]}{SUIT_LETTERS[self.suit]}"

    def __repr__(self) -> str:
        return str(self) if self.deck == 0 else f"{self}/{self.deck}"


def parse_card(text: str, deck: int = 0) -> Card:
    """Parse a rank-letter string such as "AS", "TD" or "KH"."""
    text = text.strip().upper()
    if len(text) != 2 or text[0] not in RANK_LETTERS or text[1] not in SUIT_LETTERS:
        raise ValueError(f"Not a card: {text!r}")
    return Card(RANK_LETTERS.index(text[0]) + 1, Suit(SUIT_LETTERS.index(text[1])), deck)


def canonical_pack(max_rank: int = 13, two_decks: bool = False) -> List[Card]:
    """The unshuffled pack: by deck, then suit (C, D, H, S), then rank."""
    decks = 2 if two_decks else 1
    return [
        Card(rank, suit, deck)
        for deck in range(decks)
        for suit in Suit
        for rank in range(1, max_rank + 1)
    ]
