"""
Batch summaries as JSON and as an aligned text table.
"""

import json
import logging
from typing import Any, Dict, List, Optional

import pandas as pd
from pydantic import BaseModel, Field

from src.stats.wilson import SampleSummary, conservative_interval, display, percent_text, range_text

logger = logging.getLogger(__name__)

DEFAULT_DIGITS = 3


class BatchSummary(BaseModel):
    """Counts and interval of one batch."""

    game: str = Field(description="Rule-file name of the game")
    n: int = Field(ge=0)
    wins: int = Field(ge=0)
    losses: int = Field(ge=0)
    unknowns: int = Field(ge=0)
    timed_out: int = Field(default=0, ge=0)
    memed_out: int = Field(default=0, ge=0)
    errors: int = Field(default=0, ge=0, description="Instances whose worker failed, counted as unknown")
    lo_pct: Optional[str] = Field(default=None, description="Lower bound, percent, rounded down")
    hi_pct: Optional[str] = Field(default=None, description="Upper bound, percent, rounded up")
    interval: Optional[str] = Field(default=None, description='"c% ± w%" form')
    interval_range: Optional[str] = Field(default=None, description='"lo–hi%" form')
    mean_nodes: float = Field(default=0.0)
    mean_seconds: float = Field(default=0.0)
    interrupted: bool = Field(default=False)


def build_summary(
    game: str,
    sample: SampleSummary,
    timed_out: int = 0,
    memed_out: int = 0,
    errors: int = 0,
    mean_nodes: float = 0.0,
    mean_seconds: float = 0.0,
    digits: int = DEFAULT_DIGITS,
    interrupted: bool = False,
) -> BatchSummary:
    """Attach the conservative interval, in both display forms, to batch counts."""
    fields: Dict[str, Any] = {}
    if sample.n:
        interval = conservative_interval(sample)
        lo, hi = display(interval, digits, range_form=True)
        center, half = display(interval, digits)
        fields = {
            "lo_pct": percent_text(lo),
            "hi_pct": percent_text(hi),
            "interval": f"{center}% ± {half}%",
            "interval_range": f"{range_text(lo, hi)}%",
        }
    return BatchSummary(
        game=game,
        n=sample.n,
        wins=sample.wins,
        losses=sample.losses,
        unknowns=sample.unknowns,
        timed_out=timed_out,
        memed_out=memed_out,
        errors=errors,
        mean_nodes=mean_nodes,
        mean_seconds=mean_seconds,
        interrupted=interrupted,
        **fields,
    )


def summary_json(summary: BatchSummary) -> str:
    return json.dumps(summary.model_dump(), sort_keys=True)


def summary_table(summaries: List[BatchSummary]) -> str:
    """
    Aligned text table with one row per game.

    Columns: Game, n, ✓, ×, ?, Interval.
    """
    frame = pd.DataFrame(
        [
            {
                "Game": summary.game,
                "n": summary.n,
                "✓": summary.wins,
                "×": summary.losses,
                "?": summary.unknowns,
                "Interval": summary.interval or "-",
            }
            for summary in summaries
        ],
        columns=["Game", "n", "✓", "×", "?", "Interval"],
    )
    return frame.to_string(index=False)

