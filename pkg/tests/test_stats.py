"""
Unit tests for Wilson intervals, display rounding and published results.
"""

import json
from decimal import Decimal

import pytest

from src.exceptions import EmptySample
from src.stats.published import PUBLISHED, compare, published, reproduce
from src.stats.report import build_summary, summary_json, summary_table
from src.stats.wilson import (
    Interval,
    SampleSummary,
    conservative_interval,
    display,
    format_interval,
    percent_text,
    wilson,
)

# Rows whose printed interval follows from their own counts digit for digit.
EXACT_ROWS = [
    "canfield",
    "fore_cell",
    "freecell",
    "klondike",
    "thirty_six",
    "black_hole",
    "accordion_18",
    "accordion",
    "freecell_1c_8p",
    "freecell_2c_8p",
    "freecell_3c_8p",
    "freecell_4c_6p",
    "freecell_4c_5p",
    "freecell_4c_4p",
    "beleaguered_castle",
    "british_canister",
    "east_haven",
    "eight_off",
    "fore_cell_same_suit",
    "fortunes_favor",
    "king_albert",
    "mrs_mop",
    "northwest_territory",
    "seahaven_towers",
    "streets_and_alleys",
    "stronghold",
    "thirty",
    "worm_hole",
]
RANGE_ROWS = ["simple_simon", "trigon", "gaps_one_deal", "black_hole_1e6"]


class TestWilson:
    """Test the score interval."""

    def test_bounds_inside_unit_interval(self):
        """Test a middling proportion."""
        interval = wilson(50, 100)
        assert Decimal("0.40") < interval.lo < Decimal("0.5") < interval.hi < Decimal("0.60")

    def test_no_wins(self):
        """Test that the lower bound is exactly zero with no wins."""
        interval = wilson(0, 1000)
        assert interval.lo == 0
        assert interval.hi > 0

    def test_all_wins(self):
        """Test that the upper bound is exactly one with no losses."""
        interval = wilson(1000, 1000)
        assert interval.hi == 1
        assert interval.lo < 1

    def test_empty_sample(self):
        """Test that an empty sample has no interval."""
        with pytest.raises(EmptySample):
            wilson(0, 0)
        with pytest.raises(EmptySample):
            conservative_interval(SampleSummary())

    def test_wins_out_of_range(self):
        """Test that wins above n are rejected."""
        with pytest.raises(ValueError):
            wilson(11, 10)

    def test_unknowns_widen_the_interval(self):
        """Test that unknowns count as losses below and wins above."""
        decided = conservative_interval(SampleSummary(wins=800, losses=200))
        undecided = conservative_interval(SampleSummary(wins=800, losses=150, unknowns=50))
        assert undecided.contains(decided)
        assert undecided.lo == wilson(800, 1000).lo
        assert undecided.hi == wilson(850, 1000).hi

    def test_interval_order_checked(self):
        """Test that inverted bounds are rejected."""
        with pytest.raises(ValueError):
            Interval(lo=Decimal("0.6"), hi=Decimal("0.4"))


class TestDisplay:
    """Test outward rounding for display."""

    def test_one_digit(self):
        """Test [0.819, 0.821] at one digit."""
        interval = Interval(lo=Decimal("0.819"), hi=Decimal("0.821"))
        assert format_interval(interval, 1) == "82.0% ± 0.1%"

    def test_degenerate(self):
        """Test a zero-width interval."""
        interval = Interval(lo=Decimal("0.5"), hi=Decimal("0.5"))
        assert format_interval(interval, 3) == "50.000% ± 0.000%"

    def test_rounds_outward(self):
        """Test that the rounded bounds cover the exact bounds."""
        interval = wilson(1234, 5678)
        lo, hi = display(interval, 2, range_form=True)
        assert lo <= interval.lo * 100
        assert hi >= interval.hi * 100
        center, half = display(interval, 2)
        assert center - half <= lo and center + half >= hi

    def test_range_form(self):
        """Test the lo–hi text form."""
        interval = Interval(lo=Decimal("0.1597"), hi=Decimal("0.16015"))
        assert format_interval(interval, 2, range_form=True) == "15.97–16.02%"

    def test_negative_digits(self):
        """Test that a negative precision is rejected."""
        with pytest.raises(ValueError):
            display(Interval(lo=Decimal(0), hi=Decimal(1)), -1)

    def test_hundred_printed_without_decimals(self):
        """Test that an upper bound of 100 prints as "100" and other bounds keep their digits."""
        interval = Interval(lo=Decimal("0.97514"), hi=Decimal(1))
        assert format_interval(interval, 3, range_form=True) == "97.514–100%"
        assert percent_text(Decimal("99.990")) == "99.990"
        summary = build_summary("spider", PUBLISHED["spider"].summary, digits=3)
        assert summary.hi_pct == "100"
        assert summary.interval_range == "97.514–100%"


class TestPublished:
    """Test reproduction of published result rows from their counts."""

    @pytest.mark.parametrize("name", EXACT_ROWS)
    def test_exact_rows(self, name):
        """Test that the printed interval is reproduced character for character."""
        assert reproduce(PUBLISHED[name]) == PUBLISHED[name].interval

    @pytest.mark.parametrize("name", RANGE_ROWS)
    def test_range_rows(self, name):
        """Test rows printed as a range."""
        entry = PUBLISHED[name]
        assert entry.range_form
        assert reproduce(entry) == entry.interval.replace("-", "–")

    def test_spider_upper_bound(self):
        """Test Spider, printed with an upper bound of 100."""
        entry = PUBLISHED["spider"]
        lo, hi = display(conservative_interval(entry.summary), entry.digits, range_form=True)
        assert (lo, hi) == entry.bounds()
        assert hi == 100
        assert reproduce(entry) == "97.514–100"

    def test_lookup(self):
        """Test registry lookup by file stem."""
        assert published("klondike").title == "Klondike"
        assert published("no_such_game") is None

    def test_compare_overlap(self):
        """Test comparing a batch with the published Klondike row."""
        result = compare("klondike", SampleSummary(wins=8_190, losses=1_806, unknowns=4))
        assert result["game"] == "klondike"
        assert result["published"] == "81.956 ± 0.096"
        assert result["overlap"] is True

    def test_compare_disjoint(self):
        """Test that a clearly different win rate does not overlap."""
        result = compare("klondike", SampleSummary(wins=5_000, losses=5_000))
        assert result["overlap"] is False

    def test_compare_unknown_game(self):
        """Test comparing with a game that has no published row."""
        with pytest.raises(KeyError):
            compare("no_such_game", SampleSummary(wins=1))


class TestReport:
    """Test batch summaries."""

    def test_klondike_counts(self):
        """Test the summary of the published Klondike counts."""
        summary = build_summary("klondike", SampleSummary(wins=819_363, losses=180_241, unknowns=396))
        assert summary.n == 1_000_000
        assert summary.interval == "81.956% ± 0.096%"
        assert summary.lo_pct == "81.860"

    def test_empty_summary(self):
        """Test that an empty batch carries no interval."""
        summary = build_summary("klondike", SampleSummary())
        assert summary.n == 0
        assert summary.interval is None

    def test_json_and_table(self):
        """Test the JSON and text table forms."""
        summary = build_summary("freecell", SampleSummary(wins=9_999_890, losses=110))
        assert json.loads(summary_json(summary))["interval"] == summary.interval
        table = summary_table([summary])
        assert "freecell" in table
        assert summary.interval in table
        assert table.splitlines()[0].split() == ["Game", "n", "✓", "×", "?", "Interval"]
