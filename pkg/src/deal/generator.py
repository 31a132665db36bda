"""
Portable pseudo-random generation for deals.
MT19937 with the standard scalar initialization, plus an unbiased shuffle.
"""

import logging
from typing import List, Sequence, TypeVar

import numpy as np

logger = logging.getLogger(__name__)

T = TypeVar("T")

_WORD = 1 << 32
_BLOCK = 624


class Generator:
    """
    MT19937 stream of 32-bit words.

    numpy's legacy RandomState seeds integers with the reference
    init_genrand routine; its state is handed to an MT19937 bit generator
    so raw words can be read without any float conversion in between.
    """

    def __init__(self, seed: int):
        """
        Initialize the generator.

        Args:
            seed (int): unsigned 32-bit seed
        """
        if not 0 <= seed < _WORD:
            raise ValueError(f"Seed must be an unsigned 32-bit integer, got {seed}")
        self.seed = seed
        legacy_state = np.random.RandomState(seed).get_state()
        self._bits = np.random.MT19937()
        self._bits.state = {
            "bit_generator": "MT19937",
            "state": {"key": legacy_state[1], "pos": legacy_state[2]},
        }
        self._buffer: List[int] = []
        self._index = 0

    def next_u32(self) -> int:
        """Next 32-bit output word."""
        if self._index == len(self._buffer):
            self._buffer = self._bits.random_raw(_BLOCK).tolist()
            self._index = 0
        word = self._buffer[self._index]
        self._index += 1
        return word

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection on 32-bit words."""
        if not 0 < bound <= _WORD:
            raise ValueError(f"Bound out of range: {bound}")
        limit = (_WORD // bound) * bound
        while True:
            word = self.next_u32()
            if word < limit:
                return word % bound


def generator(seed: int) -> Generator:
    """Create the generator for a seed."""
    return Generator(seed)


def shuffle(pack: Sequence[T], gen: Generator) -> List[T]:
    """
    Fisher-Yates shuffle from the top index down.

    Args:
        pack (Sequence): cards in canonical order
        gen (Generator): generator consumed by the shuffle

    Returns:
        List: a new, shuffled list
    """
    cards = list(pack)
    for i in range(len(cards) - 1, 0, -1):
        j = gen.below(i + 1)
        cards[i], cards[j] = cards[j], cards[i]
    return cards
