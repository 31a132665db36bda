"""
Deal package for the patience solver.
Cards, the portable MT19937 generator and seeded dealing.
"""

from src.deal.cards import Card, Suit, canonical_pack, parse_card
from src.deal.dealer import Layout, deal
from src.deal.generator import Generator, generator, shuffle

__all__ = [
    'Card',
    'Suit',
    'canonical_pack',
    'parse_card',
    'Layout',
    'deal',
    'Generator',
    'generator',
    'shuffle',
]
