"""
Stats package for the patience solver.
Wilson intervals, conservative display and batch summaries.
"""

from src.stats.published import PUBLISHED, PublishedResult, compare, published, reproduce
from src.stats.report import BatchSummary, build_summary, summary_json, summary_table
from src.stats.wilson import (
    Z_95,
    Interval,
    SampleSummary,
    conservative_interval,
    display,
    format_interval,
    percent_text,
    wilson,
)

__all__ = [
    'PUBLISHED',
    'PublishedResult',
    'compare',
    'published',
    'reproduce',
    'BatchSummary',
    'build_summary',
    'summary_json',
    'summary_table',
    'Z_95',
    'Interval',
    'SampleSummary',
    'conservative_interval',
    'display',
    'format_interval',
    'percent_text',
    'wilson',
]
