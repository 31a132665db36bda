"""
Depth-first search over game states.

The search keeps an explicit stack of frames, so depth is bounded by
memory rather than by the interpreter's recursion limit.
"""

import logging
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field

from src.dominance.dominances import DominanceConfig, filter_partial_pile_moves, safe_foundation_move
from src.engine.canonical import canonicalize
from src.engine.movegen import search_moves
from src.engine.moves import Move, UndoToken, Zone
from src.engine.state import GameState
from src.rules.models import RuleSet
from src.search.table import TranspositionTable

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    WINNABLE = "Winnable"
    UNWINNABLE = "Unwinnable"
    TIMED_OUT = "TimedOut"
    MEMED_OUT = "MemedOut"


class SearchLimits(BaseModel):
    """Resource limits for one search."""

    model_config = ConfigDict(frozen=True)

    time_s: Optional[float] = Field(default=60.0, gt=0, description="Wall-clock budget in seconds")
    cache_bytes: int = Field(default=1 << 30, gt=0, description="Transposition table capacity in bytes")
    node_budget: Optional[int] = Field(default=None, gt=0, description="Maximum nodes to expand")
    streamliner_fraction: float = Field(default=0.1, ge=0, le=1, description="Share of the budget for phase 1")

    def scaled(self, fraction: float) -> "SearchLimits":
        """Limits for a streamlined phase: time and node budgets cut to a fraction."""
        return self.model_copy(update={
            "time_s": self.time_s * fraction if self.time_s else None,
            "node_budget": max(1, int(self.node_budget * fraction)) if self.node_budget else None,
        })


class StreamlinerSet(BaseModel):
    """Unsound search restrictions used only in the first phase."""

    model_config = ConfigDict(frozen=True)

    auto_foundation: bool = Field(default=False, description="Always play a foundation move when one exists")
    suit_symmetry: bool = Field(default=False, description="Treat same-colour suits alike in tableau keys")

    @property
    def active(self) -> bool:
        return self.auto_foundation or self.suit_symmetry


@dataclass
class SearchOutcome:
    verdict: Verdict
    solution: Optional[List[Move]] = None
    nodes: int = 0
    max_depth: int = 0
    peak_bytes: int = 0
    elapsed_s: float = 0.0
    phase: str = "full"


@dataclass
class _Frame:
    moves: List[Move]
    token: Optional[UndoToken]
    key: bytes
    before: Optional[tuple] = None
    index: int = 0


def children(
    state: GameState,
    cfg: DominanceConfig,
    streamliners: Optional[StreamlinerSet] = None,
) -> List[Move]:
    """
    Moves the search tries from a position, in order.

    A safe move, when one exists, is the only child. With the
    auto-foundation streamliner the first foundation build is.
    """
    moves = search_moves(state)
    if len(moves) <= 1:
        return moves
    safe = safe_foundation_move(state, cfg, moves)
    if safe is not None:
        return [safe]
    if streamliners is not None and streamliners.auto_foundation:
        for move in moves:
            if move.dst == Zone.FOUNDATION and move.src != Zone.FOUNDATION:
                return [move]
    return filter_partial_pile_moves(state, moves, cfg)


def dfs(
    state: GameState,
    rules: RuleSet,
    cfg: DominanceConfig,
    streamliners: Optional[StreamlinerSet] = None,
    limits: Optional[SearchLimits] = None,
    debug: bool = False,
) -> SearchOutcome:
    """
    Exhaustive depth-first search from a position.

    The position is restored before returning.

    Args:
        state (GameState): starting position
        rules (RuleSet): rules of the game
        cfg (DominanceConfig): active dominances
        streamliners (StreamlinerSet): phase-1 restrictions, if any
        limits (SearchLimits): time, node and memory limits
        debug (bool): check every undo restores the position exactly

    Returns:
        SearchOutcome: verdict, solution and search statistics
    """
    streamliners = streamliners or StreamlinerSet()
    limits = limits or SearchLimits()
    symmetric = streamliners.suit_symmetry
    started = time.monotonic()
    deadline = started + limits.time_s if limits.time_s else None
    table = TranspositionTable(limits.cache_bytes)

    def outcome(verdict: Verdict, solution: Optional[List[Move]] = None) -> SearchOutcome:
        return SearchOutcome(
            verdict=verdict,
            solution=solution,
            nodes=nodes,
            max_depth=max_depth,
            peak_bytes=table.peak_bytes,
            elapsed_s=time.monotonic() - started,
        )

    nodes = 1
    max_depth = 0
    if state.is_won():
        return outcome(Verdict.WINNABLE, [])

    root_key = canonicalize(state, rules, symmetric)
    if not table.insert(root_key, pin=True):
        return outcome(Verdict.MEMED_OUT)
    stack = [_Frame(children(state, cfg, streamliners), None, root_key)]

    def unwind() -> None:
        while stack:
            frame = stack.pop()
            if frame.token is not None:
                state.undo(frame.token)

    def undo_checked(token: UndoToken, before: Optional[tuple]) -> None:
        state.undo(token)
        if debug:
            assert state.snapshot() == before, f"undo of {token.move} did not restore the position"

    while stack:
        frame = stack[-1]
        if frame.index >= len(frame.moves):
            stack.pop()
            table.unpin(frame.key)
            if frame.token is not None:
                undo_checked(frame.token, frame.before)
            continue

        if limits.node_budget is not None and nodes >= limits.node_budget:
            unwind()
            return outcome(Verdict.TIMED_OUT)
        if deadline is not None and time.monotonic() > deadline:
            unwind()
            return outcome(Verdict.TIMED_OUT)

        move = frame.moves[frame.index]
        frame.index += 1
        before = state.snapshot() if debug else None
        token = state.apply(move)
        key = canonicalize(state, rules, symmetric)
        if key in table:
            undo_checked(token, before)
            continue

        nodes += 1
        if state.is_won():
            solution = [f.token.move for f in stack if f.token is not None] + [move]
            state.undo(token)
            unwind()
            return outcome(Verdict.WINNABLE, solution)
        if not table.insert(key, pin=True):
            state.undo(token)
            unwind()
            logger.warning(f"Transposition table full of ancestors after {nodes} nodes")
            return outcome(Verdict.MEMED_OUT)
        stack.append(_Frame(children(state, cfg, streamliners), token, key, before))
        max_depth = max(max_depth, len(stack) - 1)

    return outcome(Verdict.UNWINNABLE)
