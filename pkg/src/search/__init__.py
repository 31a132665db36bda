"""
Search package for the patience solver.
Transposition table, depth-first search and the two-phase solve driver.
"""

from src.search.dfs import SearchLimits, SearchOutcome, StreamlinerSet, Verdict, children, dfs
from src.search.solver import (
    SolveOptions,
    StreamlinerMode,
    Verification,
    solve,
    streamliners_for,
    verify_solution,
)
from src.search.table import TranspositionTable

__all__ = [
    'SearchLimits',
    'SearchOutcome',
    'StreamlinerSet',
    'Verdict',
    'children',
    'dfs',
    'SolveOptions',
    'StreamlinerMode',
    'Verification',
    'solve',
    'streamliners_for',
    'verify_solution',
    'TranspositionTable',
]
