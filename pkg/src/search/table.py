"""
Transposition table bounded by bytes, with least-recently-used eviction.
Keys on the current search path are pinned and never evicted.
"""

import logging
from collections import OrderedDict
from typing import Dict

logger = logging.getLogger(__name__)

ENTRY_OVERHEAD = 64


def entry_size(key: bytes) -> int:
    return len(key) + ENTRY_OVERHEAD


class TranspositionTable:
    """
    Set of visited canonical keys.

    Unpinned keys live in an OrderedDict in least-recently-used order; pinned
    keys (ancestors of the node being expanded) are held apart until unpinned.
    """

    def __init__(self, capacity_bytes: int):
        """
        Initialize the table.

        Args:
            capacity_bytes: upper bound on the accounted size of stored keys
        """
        self.capacity = capacity_bytes
        self.entries: "OrderedDict[bytes, int]" = OrderedDict()
        self.pinned: Dict[bytes, int] = {}
        self.bytes_used = 0
        self.peak_bytes = 0
        self.evictions = 0

    def __contains__(self, key: bytes) -> bool:
        if key in self.entries:
            self.entries.move_to_end(key)
            return True
        return key in self.pinned

    def __len__(self) -> int:
        return len(self.entries) + len(self.pinned)

    def insert(self, key: bytes, pin: bool = False) -> bool:
        """
        Store a key, evicting old unpinned keys to make room.

        Args:
            key: canonical key
            pin: hold the key until unpin() is called

        Returns:
            bool: False when the table cannot make room (every entry pinned)
        """
        if key in self.entries or key in self.pinned:
            if pin:
                self.pin(key)
            return True
        size = entry_size(key)
        if size > self.capacity:
            return False
        while self.bytes_used + size > self.capacity:
            if not self.entries:
                return False
            _, evicted = self.entries.popitem(last=False)
            self.bytes_used -= evicted
            self.evictions += 1
        if pin:
            self.pinned[key] = size
        else:
            self.entries[key] = size
        self.bytes_used += size
        self.peak_bytes = max(self.peak_bytes, self.bytes_used)
        return True

    def pin(self, key: bytes) -> None:
        if key in self.entries:
            self.pinned[key] = self.entries.pop(key)

    def unpin(self, key: bytes) -> None:
        """Return a pinned key to the LRU order as most recently used."""
        if key in self.pinned:
            self.entries[key] = self.pinned.pop(key)

    def clear(self) -> None:
        self.entries.clear()
        self.pinned.clear()
        self.bytes_used = 0
