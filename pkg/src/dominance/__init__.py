"""
Dominance package for the patience solver.
Safe-move commitment and the partial-pile move restriction.
"""

from src.dominance.dominances import (
    DOMINANCE_NAMES,
    DominanceConfig,
    applicable_dominances,
    filter_partial_pile_moves,
    safe_foundation_move,
)

__all__ = [
    'DOMINANCE_NAMES',
    'DominanceConfig',
    'applicable_dominances',
    'filter_partial_pile_moves',
    'safe_foundation_move',
]
