"""
Full-size acceptance runs, skipped unless SOLVER_ACCEPTANCE=1.

These take minutes to hours; the unit suites run the same checks on
smaller samples.
"""

import os
from decimal import Decimal

import pytest

from src.cli.harness import run_batch
from src.deal.dealer import deal
from src.dominance.dominances import PARTIAL_PILE, applicable_dominances
from src.engine.state import initial_state
from src.rules.validation import reduced_rules
from src.search.dfs import SearchLimits, Verdict, dfs
from src.search.solver import SolveOptions, solve, verify_solution
from tests import GAMES_DIR
from tests.oracle import oracle_winnable, supported
from tests.positions import game_rules

ACCEPTANCE = os.getenv("SOLVER_ACCEPTANCE", "").lower() in ("1", "true", "yes")
JOBS = os.cpu_count() or 1

pytestmark = pytest.mark.skipif(not ACCEPTANCE, reason="set SOLVER_ACCEPTANCE=1 for acceptance runs")


def overlaps(summary, lo: str, hi: str) -> bool:
    return Decimal(summary.lo_pct) <= Decimal(hi) and Decimal(summary.hi_pct) >= Decimal(lo)


class TestWinRates:
    """Desk-scale batches against published win rates."""

    def test_black_hole(self, tmp_path):
        """Test 1000 Black Hole seeds."""
        summary = run_batch(
            str(GAMES_DIR / "black_hole.json"),
            1,
            1000,
            SearchLimits(time_s=60),
            SolveOptions(),
            jobs=JOBS,
            out_path=str(tmp_path / "black_hole.jsonl"),
        )
        assert summary.unknowns <= 10
        assert overlaps(summary, "86.8", "87.1")

    def test_klondike(self, tmp_path):
        """Test 200 Klondike seeds at 60 s and 2 GiB each."""
        summary = run_batch(
            str(GAMES_DIR / "klondike.json"),
            1,
            200,
            SearchLimits(time_s=60, cache_bytes=2 << 30),
            SolveOptions(),
            jobs=JOBS,
            out_path=str(tmp_path / "klondike.jsonl"),
        )
        assert summary.unknowns <= 20
        assert overlaps(summary, "81.86", "82.06")


class TestEquivalence:
    """Large reduced-pack agreement checks."""

    @pytest.mark.parametrize("game", ["klondike", "canfield"])
    @pytest.mark.parametrize("max_rank", [5, 6, 7])
    def test_partial_pile_rule(self, game, max_rank):
        """Test that the partial-pile restriction never changes a verdict."""
        rules = reduced_rules(game_rules(game), max_rank)
        with_rule = applicable_dominances(rules)
        without_rule = applicable_dominances(rules, {PARTIAL_PILE: False})
        limits = SearchLimits(time_s=120)
        for seed in range(1, 335):
            state = initial_state(rules, deal(rules, seed))
            restricted = dfs(state, rules, with_rule, limits=limits)
            free = dfs(state, rules, without_rule, limits=limits)
            if Verdict.TIMED_OUT in (restricted.verdict, free.verdict):
                continue
            assert restricted.verdict == free.verdict, f"{game} max rank {max_rank} seed {seed}"

    @pytest.mark.parametrize("game", sorted(path.stem for path in GAMES_DIR.glob("*.json")))
    def test_oracle(self, game):
        """Test 200 reduced deals per game against the reference solver."""
        rules = reduced_rules(game_rules(game), 4)
        if not supported(rules):
            pytest.skip("outside the reference solver's rules")
        for seed in range(1, 201):
            layout = deal(rules, seed)
            outcome = solve(rules, layout, SearchLimits(time_s=120))
            assert (outcome.verdict == Verdict.WINNABLE) == oracle_winnable(rules, layout), f"{game} seed {seed}"
            if outcome.verdict == Verdict.WINNABLE:
                assert verify_solution(rules, layout, outcome.solution)

    @pytest.mark.parametrize("game", ["freecell", "klondike", "canfield"])
    def test_cache_size_does_not_change_verdicts(self, game):
        """Test verdicts under a 1 MiB table against a 1 GiB table."""
        rules = reduced_rules(game_rules(game), 5)
        for seed in range(1, 51):
            layout = deal(rules, seed)
            small = solve(rules, layout, SearchLimits(time_s=300, cache_bytes=1 << 20))
            large = solve(rules, layout, SearchLimits(time_s=300, cache_bytes=1 << 30))
            if Verdict.TIMED_OUT in (small.verdict, large.verdict) or small.verdict == Verdict.MEMED_OUT:
                continue
            assert small.verdict == large.verdict, f"{game} seed {seed}"
