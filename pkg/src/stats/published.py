"""
Published winnability results, keyed by rule-file name.

Each entry holds the counts a result was computed from and the interval
text as printed, so a fresh batch can be compared with it.
"""

import logging
import re
from decimal import Decimal
from typing import Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from src.stats.wilson import SampleSummary, conservative_interval, display, range_text

logger = logging.getLogger(__name__)

_PLUS_MINUS = re.compile(r"^\s*([\d.]+)\s*%?\s*±\s*([\d.]+)\s*%?\s*$")
_RANGE = re.compile(r"^\s*([\d.]+)\s*[-–]\s*([\d.]+)\s*%?\s*$")


class PublishedResult(BaseModel):
    """One row of a published results table."""

    model_config = ConfigDict(frozen=True)

    title: str = Field(description="Game name as printed")
    wins: int = Field(ge=0)
    losses: int = Field(ge=0)
    unknowns: int = Field(default=0, ge=0)
    interval: str = Field(description='Printed interval, "c ± w" or "lo–hi"')
    in_corpus: bool = Field(default=True, description="Whether games/ holds a rule file for it")

    @property
    def summary(self) -> SampleSummary:
        return SampleSummary(wins=self.wins, losses=self.losses, unknowns=self.unknowns)

    @property
    def range_form(self) -> bool:
        return _PLUS_MINUS.match(self.interval) is None

    @property
    def digits(self) -> int:
        first = self.bounds_text()[0 if self.range_form else 1]
        return len(first.split(".")[1]) if "." in first else 0

    def bounds_text(self) -> Tuple[str, str]:
        match = _PLUS_MINUS.match(self.interval) or _RANGE.match(self.interval)
        if not match:
            raise ValueError(f"Unreadable interval: {self.interval!r}")
        return match.group(1), match.group(2)

    def bounds(self) -> Tuple[Decimal, Decimal]:
        """Printed interval as (lo, hi) percentages."""
        first, second = (Decimal(text) for text in self.bounds_text())
        if self.range_form:
            return first, second
        return first - second, first + second


PUBLISHED: Dict[str, PublishedResult] = {
    "accordion": PublishedResult(
        title="Accordion", wins=999_996, losses=0, unknowns=4, interval="99.99948 ± 0.00052", in_corpus=False
    ),
    "accordion_18": PublishedResult(
        title="Accordion (18 cards)", wins=4_702_154, losses=5_297_846, interval="47.021 ± 0.032", in_corpus=False
    ),
    "bakers_game": PublishedResult(title="Baker's Game", wins=7_505_266, losses=2_494_734, interval="75.053 ± 0.028"),
    "black_hole": PublishedResult(title="Black Hole", wins=8_694_457, losses=1_305_543, interval="86.944 ± 0.022"),
    "black_hole_1e6": PublishedResult(
        title="Black Hole (10^6 deals)", wins=869_413, losses=130_587, interval="86.875–87.008", in_corpus=False
    ),
    "canfield": PublishedResult(
        title="Canfield", wins=706_711, losses=293_227, unknowns=62, interval="70.674 ± 0.093"
    ),
    "fore_cell": PublishedResult(
        title="Fore Cell", wins=8_561_569, losses=1_438_082, unknowns=349, interval="85.617 ± 0.024"
    ),
    "freecell": PublishedResult(title="Freecell", wins=9_999_890, losses=110, interval="99.99888 ± 0.00021"),
    "gaps_basic": PublishedResult(
        title="Gaps (basic variant)", wins=249_083, losses=750_917, interval="24.918 ± 0.086", in_corpus=False
    ),
    "gaps_one_deal": PublishedResult(
        title="Gaps (one deal)", wins=2_069, losses=272, unknowns=159, interval="81.22–90.29", in_corpus=False
    ),
    "klondike": PublishedResult(
        title="Klondike", wins=819_363, losses=180_241, unknowns=396, interval="81.956 ± 0.096"
    ),
    "simple_simon": PublishedResult(
        title="Simple Simon", wins=974_476, losses=25_467, unknowns=57, interval="97.41–97.49"
    ),
    "spider": PublishedResult(title="Spider", wins=9_782, losses=0, unknowns=218, interval="97.514–100"),
    "thirty_six": PublishedResult(
        title="Thirty Six", wins=946_196, losses=52_704, unknowns=1_100, interval="94.674 ± 0.100"
    ),
    "trigon": PublishedResult(title="Trigon", wins=1_599_605, losses=8_400_395, interval="15.97–16.02"),
    "freecell_0c_8p": PublishedResult(
        title="0C/8P Freecell", wins=21_354, losses=9_978_617, unknowns=29, interval="0.214 ± 0.004"
    ),
    "freecell_1c_8p": PublishedResult(
        title="1C/8P Freecell", wins=193_335, losses=806_370, unknowns=295, interval="19.348 ± 0.093"
    ),
    "freecell_2c_8p": PublishedResult(
        title="2C/8P Freecell", wins=795_341, losses=204_449, unknowns=210, interval="79.544 ± 0.091"
    ),
    "freecell_3c_8p": PublishedResult(
        title="3C/8P Freecell", wins=993_580, losses=6_410, unknowns=10, interval="99.358 ± 0.017"
    ),
    "freecell_4c_7p": PublishedResult(
        title="4C/7P Freecell", wins=988_556, losses=11_417, unknowns=27, interval="98.857 ± 0.023"
    ),
    "freecell_4c_6p": PublishedResult(
        title="4C/6P Freecell", wins=1_227_828, losses=770_982, unknowns=1_190, interval="61.421 ± 0.098"
    ),
    "freecell_4c_5p": PublishedResult(
        title="4C/5P Freecell", wins=38_577, losses=961_392, unknowns=31, interval="3.859 ± 0.040"
    ),
    "freecell_4c_4p": PublishedResult(
        title="4C/4P Freecell", wins=864, losses=9_999_136, interval="0.00866 ± 0.00058"
    ),
    "alpha_star": PublishedResult(title="Alpha Star", wins=4_779_474, losses=5_220_526, interval="47.795 ± 0.032"),
    "american_canister": PublishedResult(
        title="American Canister", wins=560_567, losses=9_439_428, unknowns=5, interval="5.606 ± 0.015"
    ),
    "beleaguered_castle": PublishedResult(
        title="Beleaguered Castle", wins=1_362_720, losses=635_919, unknowns=1_361, interval="68.170 ± 0.099"
    ),
    "british_canister": PublishedResult(
        title="British Canister", wins=1_290, losses=999_998_710, interval="0.000129 ± 0.000008"
    ),
    "canfield_whole_pile": PublishedResult(
        title="Canfield (whole pile moves)", wins=670_152, losses=329_760, unknowns=88, interval="67.020 ± 0.099"
    ),
    "delta_star": PublishedResult(title="Delta Star", wins=3_441_247, losses=6_558_753, interval="34.414 ± 0.031"),
    "east_haven": PublishedResult(
        title="East Haven", wins=1_655_944, losses=342_169, unknowns=1_887, interval="82.844 ± 0.100"
    ),
    "eight_off": PublishedResult(title="Eight Off", wins=9_988_054, losses=11_946, interval="99.880 ± 0.003"),
    "fan": PublishedResult(title="Fan", wins=487_759, losses=512_241, interval="48.776 ± 0.099"),
    "fore_cell_same_suit": PublishedResult(
        title="Fore Cell (same suit)", wins=1_056_397, losses=8_943_603, interval="10.564 ± 0.020", in_corpus=False
    ),
    "fortunes_favor": PublishedResult(
        title="Fortune's Favor", wins=999_999_881, losses=119, interval="99.9999879 ± 0.0000022"
    ),
    "king_albert": PublishedResult(
        title="King Albert", wins=1_370_321, losses=628_618, unknowns=1_061, interval="68.542 ± 0.092"
    ),
    "mrs_mop": PublishedResult(
        title="Mrs Mop", wins=1_958_661, losses=38_969, unknowns=2_370, interval="97.992 ± 0.079"
    ),
    "northwest_territory": PublishedResult(
        title="Northwest Territory", wins=683_669, losses=316_287, unknowns=44, interval="68.369 ± 0.094"
    ),
    "raglan": PublishedResult(title="Raglan", wins=812_184, losses=187_650, unknowns=166, interval="81.226 ± 0.085"),
    "seahaven_towers": PublishedResult(
        title="Seahaven Towers", wins=976_774, losses=23_226, interval="97.677 ± 0.030"
    ),
    "siegecraft": PublishedResult(
        title="Siegecraft", wins=991_378, losses=8_595, unknowns=27, interval="99.136 ± 0.020"
    ),
    "somerset": PublishedResult(
        title="Somerset", wins=1_073_962, losses=924_968, unknowns=1_070, interval="53.725 ± 0.097"
    ),
    "spanish_patience": PublishedResult(
        title="Spanish Patience", wins=9_986_239, losses=13_746, unknowns=15, interval="99.863 ± 0.003"
    ),
    "spiderette": PublishedResult(
        title="Spiderette", wins=996_153, losses=3_751, unknowns=96, interval="99.620 ± 0.018"
    ),
    "streets_and_alleys": PublishedResult(
        title="Streets and Alleys", wins=1_021_425, losses=973_933, unknowns=4_642, interval="51.187 ± 0.186"
    ),
    "stronghold": PublishedResult(
        title="Stronghold", wins=973_689, losses=26_106, unknowns=205, interval="97.379 ± 0.042"
    ),
    "thirty": PublishedResult(
        title="Thirty", wins=6_745_425, losses=3_254_508, unknowns=67, interval="67.454 ± 0.030"
    ),
    "will_o_the_wisp": PublishedResult(
        title="Will O' The Wisp", wins=9_992_300, losses=7_487, unknowns=213, interval="99.9240 ± 0.0027"
    ),
    "worm_hole": PublishedResult(
        title="Worm Hole", wins=998_881, losses=1_104, unknowns=15, interval="99.8886 ± 0.0074"
    ),
}


def published(name: str) -> Optional[PublishedResult]:
    return PUBLISHED.get(name)


def reproduce(entry: PublishedResult) -> str:
    """Our interval text for a published row's counts, in its printed form and precision."""
    first, second = display(conservative_interval(entry.summary), entry.digits, entry.range_form)
    if entry.range_form:
        return range_text(first, second)
    return f"{first} ± {second}"


def compare(name: str, summary: SampleSummary) -> Dict[str, object]:
    """
    Compare a batch with a published row.

    Args:
        name: registry key (rule-file name)
        summary: counts of the fresh batch

    Returns:
        Dict: both intervals as text and whether they overlap
    """
    entry = PUBLISHED.get(name)
    if entry is None:
        raise KeyError(f"No published result for {name!r}")
    ours = conservative_interval(summary)
    lo, hi = display(ours, entry.digits, range_form=True)
    theirs_lo, theirs_hi = entry.bounds()
    overlap = lo <= theirs_hi and theirs_lo <= hi
    logger.info(f"{entry.title}: ours {range_text(lo, hi)}%, published {entry.interval}%, overlap={overlap}")
    return {
        "game": name,
        "published": entry.interval,
        "ours": range_text(lo, hi),
        "overlap": overlap,
    }

