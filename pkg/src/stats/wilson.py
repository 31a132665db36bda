"""
Wilson score intervals for winnability estimates.

Arithmetic runs in 50-digit decimal precision so that the rounding
direction, not floating-point error, decides the displayed digits.
"""

from decimal import ROUND_CEILING, ROUND_FLOOR, ROUND_HALF_DOWN, Decimal, localcontext
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.exceptions import EmptySample

Z_95 = Decimal("1.959963985")
PRECISION = 50
EN_DASH = "–"


class SampleSummary(BaseModel):
    """Counts of a batch: wins, losses and undetermined instances."""

    model_config = ConfigDict(frozen=True)

    wins: int = Field(default=0, ge=0, description="Instances proved winnable")
    losses: int = Field(default=0, ge=0, description="Instances proved unwinnable")
    unknowns: int = Field(default=0, ge=0, description="Timeouts and memory-outs")

    @property
    def n(self) -> int:
        return self.wins + self.losses + self.unknowns


class Interval(BaseModel):
    """A closed interval of proportions within [0, 1]."""

    model_config = ConfigDict(frozen=True)

    lo: Decimal
    hi: Decimal

    @model_validator(mode="after")
    def _ordered(self) -> "Interval":
        if not (0 <= self.lo <= self.hi <= 1):
            raise ValueError(f"Interval bounds out of order: [{self.lo}, {self.hi}]")
        return self

    def contains(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi


def wilson(wins: int, n: int, z: Decimal = Z_95) -> Interval:
    """
    Wilson score interval for a binomial proportion.

    Args:
        wins: successes
        n: trials
        z: normal quantile, 95% by default

    Returns:
        Interval: bounds clamped to [0, 1]; lo is 0 for no wins and hi is 1 for all wins
    """
    if n <= 0:
        raise EmptySample("Cannot compute an interval for an empty sample")
    if not 0 <= wins <= n:
        raise ValueError(f"wins must lie in [0, {n}], got {wins}")

    with localcontext() as ctx:
        ctx.prec = PRECISION
        z = Decimal(z)
        trials = Decimal(n)
        p = Decimal(wins) / trials
        z2 = z * z
        denominator = 1 + z2 / trials
        center = (p + z2 / (2 * trials)) / denominator
        half = z * (p * (1 - p) / trials + z2 / (4 * trials * trials)).sqrt() / denominator
        lo = Decimal(0) if wins == 0 else max(Decimal(0), center - half)
        hi = Decimal(1) if wins == n else min(Decimal(1), center + half)
    return Interval(lo=lo, hi=hi)


def conservative_interval(summary: SampleSummary, z: Decimal = Z_95) -> Interval:
    """
    Interval covering every way the unknown instances could resolve.

    The lower bound counts unknowns as losses and the upper bound counts
    them as wins.
    """
    if summary.n == 0:
        raise EmptySample("Cannot compute an interval for an empty sample")
    low = wilson(summary.wins, summary.n, z)
    high = wilson(summary.wins + summary.unknowns, summary.n, z)
    return Interval(lo=low.lo, hi=high.hi)


def display(interval: Interval, digits: int, range_form: bool = False) -> Tuple[Decimal, Decimal]:
    """
    Round an interval outward to `digits` decimal places of percent.

    Args:
        interval: proportions
        digits: decimal places of the percentage
        range_form: return the rounded bounds instead of centre and half-width

    Returns:
        Tuple[Decimal, Decimal]: (centre, half-width) or (lo, hi), in percent
    """
    if digits < 0:
        raise ValueError("digits must be non-negative")
    step = Decimal(1).scaleb(-digits)
    with localcontext() as ctx:
        ctx.prec = PRECISION
        lo = (interval.lo * 100).quantize(step, rounding=ROUND_FLOOR)
        hi = (interval.hi * 100).quantize(step, rounding=ROUND_CEILING)
        if range_form:
            return lo, hi
        center = ((lo + hi) / 2).quantize(step, rounding=ROUND_HALF_DOWN)
        half = max(center - lo, hi - center)
    return center, half


def percent_text(value: Decimal) -> str:
    """A displayed percentage; a bound of exactly 100 is printed without decimals."""
    return "100" if value == 100 else str(value)


def range_text(lo: Decimal, hi: Decimal) -> str:
    return f"{percent_text(lo)}{EN_DASH}{percent_text(hi)}"


def format_interval(interval: Interval, digits: int, range_form: bool = False) -> str:
    """
    Text form of an interval, such as "81.956% ± 0.096%" or "15.97–16.02%".
    """
    first, second = display(interval, digits, range_form)
    if range_form:
        return f"{range_text(first, second)}%"
    return f"{first}% ± {second}%"
