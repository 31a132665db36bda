"""
Engine package for the patience solver.
Game state, move generation, apply/undo and canonical keys.
"""

from src.engine.canonical import canonicalize, suits_erasable
from src.engine.movegen import build_run_length, foundation_moves, legal_moves, run_length, search_moves
from src.engine.moves import Move, MoveKind, UndoToken, Zone, make_move, parse_move
from src.engine.state import GameState, apply, initial_state, is_won, undo

__all__ = [
    'canonicalize',
    'suits_erasable',
    'build_run_length',
    'foundation_moves',
    'legal_moves',
    'run_length',
    'search_moves',
    'Move',
    'MoveKind',
    'UndoToken',
    'Zone',
    'make_move',
    'parse_move',
    'GameState',
    'apply',
    'initial_state',
    'is_won',
    'undo',
]
