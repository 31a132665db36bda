"""
Moves and undo tokens.
"""

import re
from enum import Enum
from typing import NamedTuple, Optional


class Zone(str, Enum):
    TABLEAU = "t"
    FOUNDATION = "f"
    CELL = "c"
    RESERVE = "r"
    WASTE = "w"
    STOCK = "s"
    HOLE = "h"


INDEXED_ZONES = (Zone.TABLEAU, Zone.FOUNDATION, Zone.CELL, Zone.RESERVE)


class MoveKind(str, Enum):
    TABLEAU_TO_TABLEAU = "tableau-to-tableau"
    TO_FOUNDATION = "to-foundation"
    WORRY_BACK = "worry-back"
    TO_CELL = "to-cell"
    FROM_CELL = "from-cell"
    FROM_RESERVE = "from-reserve"
    FROM_WASTE = "from-waste"
    STOCK_DEAL = "stock-deal"
    REDEAL = "redeal"
    HOLE_PLAY = "hole-play"


def _kind(src: Zone, dst: Zone) -> MoveKind:
    if dst == Zone.HOLE:
        return MoveKind.HOLE_PLAY
    if dst == Zone.FOUNDATION:
        return MoveKind.TO_FOUNDATION
    if src == Zone.STOCK:
        return MoveKind.STOCK_DEAL
    if src == Zone.WASTE and dst == Zone.STOCK:
        return MoveKind.REDEAL
    if src == Zone.FOUNDATION:
        return MoveKind.WORRY_BACK
    if dst == Zone.CELL:
        return MoveKind.TO_CELL
    if src == Zone.CELL:
        return MoveKind.FROM_CELL
    if src == Zone.RESERVE:
        return MoveKind.FROM_RESERVE
    if src == Zone.WASTE:
        return MoveKind.FROM_WASTE
    return MoveKind.TABLEAU_TO_TABLEAU


class Move(NamedTuple):
    """
    One atomic action. Indexes are None for zones without one, and for a
    deal to every tableau pile.
    """

    kind: MoveKind
    src: Zone
    src_index: Optional[int]
    dst: Zone
    dst_index: Optional[int]
    count: int = 1

    def __str__(self) -> str:
        text = f"{_end(self.src, self.src_index)}->{_end(self.dst, self.dst_index)}"
        return text + (f"x{self.count}" if self.count > 1 else "")

    def __repr__(self) -> str:
        return f"Move({self})"


def _end(zone: Zone, index: Optional[int]) -> str:
    return zone.value + ("" if index is None else str(index))


def make_move(src: Zone, src_index: Optional[int], dst: Zone, dst_index: Optional[int], count: int = 1) -> Move:
    return Move(_kind(src, dst), src, src_index, dst, dst_index, count)


_NOTATION = re.compile(r"^([tfcrwsh])(\d+)?->([tfcrwsh])(\d+)?(?:x(\d+))?$")


def parse_move(text: str) -> Move:
    """Parse the SRC->DST[xN] notation."""
    match = _NOTATION.match(text.strip())
    if not match:
        raise ValueError(f"Not a move: {text!r}")
    src, src_index, dst, dst_index, count = match.groups()
    return make_move(
        Zone(src),
        int(src_index) if src_index is not None else None,
        Zone(dst),
        int(dst_index) if dst_index is not None else None,
        int(count) if count else 1,
    )


class UndoToken(NamedTuple):
    """Delta recorded by apply: the move plus whether a face-down card was turned."""

    move: Move
    flipped: bool
    serial: int
