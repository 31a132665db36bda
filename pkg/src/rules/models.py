"""
Rule-set models for the patience solver.
Defines the policy enums, the normalized RuleSet and the derived LayoutSpec.
"""

from enum import Enum
from typing import List

from pydantic import BaseModel, ConfigDict, Field


class BuildPolicy(str, Enum):
    """How one tableau card may be placed on another."""
    ANY_SUIT = "any-suit"
    RED_BLACK = "red-black"
    SAME_SUIT = "same-suit"
    NO_BUILD = "no-build"


class SpacesPolicy(str, Enum):
    """What may be moved into an empty tableau pile."""
    ANY = "any"
    KINGS = "kings"
    NONE = "none"
    AUTO_FROM_RESERVE = "auto-from-reserve"
    AUTO_FROM_WASTE = "auto-from-waste"


class MoveBuiltGroup(str, Enum):
    NO = "no"
    YES = "yes"
    WHOLE_PILE = "whole-pile"
    PARTIAL_IF_CARD_ABOVE_BUILDABLE = "partial-if-card-above-buildable"


class GroupPolicy(str, Enum):
    SAME_AS_BUILD = "same-as-build"
    SAME_SUIT = "same-suit"


class FaceUp(str, Enum):
    ALL = "all"
    TOP = "top"


class FoundationsInitial(str, Enum):
    """Which cards sit on the foundations before play starts."""
    NONE = "none"
    ACES = "aces"
    ONE_RANDOM_BASE = "one-random-base"


class BaseCard(str, Enum):
    ACE = "A"
    RANDOM = "random"


class StockDealType(str, Enum):
    WASTE = "waste"
    TABLEAU_PILES = "tableau piles"


class StockRedeal(str, Enum):
    NONE = "none"
    UNLIMITED = "unlimited"


class RuleSet(BaseModel):
    """Complete, normalized description of one game."""

    model_config = ConfigDict(frozen=True)

    tableau_count: int = Field(default=8, ge=0, description="Number of tableau piles")
    build_policy: BuildPolicy = Field(default=BuildPolicy.ANY_SUIT, description="Tableau build rule")
    spaces_policy: SpacesPolicy = Field(default=SpacesPolicy.ANY, description="What may fill an empty pile")
    diagonal_deal: bool = Field(default=False, description="Deal the tableau in triangular form")
    move_built_group: MoveBuiltGroup = Field(default=MoveBuiltGroup.NO, description="Whether built runs move as a unit")
    move_built_group_policy: GroupPolicy = Field(
        default=GroupPolicy.SAME_AS_BUILD, description="Which runs count as movable groups"
    )
    face_up: FaceUp = Field(default=FaceUp.ALL, description="Which dealt tableau cards start face up")
    foundations_present: bool = Field(default=True, description="Whether the game has suit foundations")
    foundations_initial: FoundationsInitial = Field(
        default=FoundationsInitial.NONE, description="Cards placed on foundations by the deal"
    )
    base_card: BaseCard = Field(default=BaseCard.ACE, description="Rank foundations are built from")
    foundations_removable: bool = Field(default=False, description="Whether worrying back is allowed")
    foundations_complete_pile_only: bool = Field(
        default=False, description="Foundations only accept complete same-suit piles"
    )
    hole: bool = Field(default=False, description="Single shared hole foundation (Black Hole family)")
    cells_count: int = Field(default=0, ge=0, description="Number of free cells")
    cells_prefilled: int = Field(default=0, ge=0, description="Free cells filled by the deal")
    stock_size: int = Field(default=0, ge=0, description="Cards in the stock")
    stock_deal_type: StockDealType = Field(default=StockDealType.WASTE, description="Where stock cards are dealt")
    stock_deal_count: int = Field(default=1, ge=1, description="Cards per deal to the waste")
    stock_redeal: StockRedeal = Field(default=StockRedeal.NONE, description="Whether the waste may be turned over")
    reserve_size: int = Field(default=0, ge=0, description="Cards in the reserve")
    reserve_stacked: bool = Field(default=False, description="Only the reserve top card is playable")
    max_rank: int = Field(default=13, ge=1, le=13, description="Highest rank in each suit")
    two_decks: bool = Field(default=False, description="Play with two packs")

    @property
    def decks(self) -> int:
        return 2 if self.two_decks else 1

    @property
    def total_cards(self) -> int:
        return 4 * self.max_rank * self.decks

    @property
    def foundation_slots(self) -> int:
        return 4 * self.decks if self.foundations_present else 0

    @property
    def random_base(self) -> bool:
        return self.base_card == BaseCard.RANDOM

    @property
    def foundation_seed_count(self) -> int:
        """Cards the deal places on foundations or in the hole."""
        seeds = 1 if self.hole else 0
        if self.foundations_present:
            if self.foundations_initial == FoundationsInitial.ACES:
                seeds += 4 * self.decks
            elif self.foundations_initial == FoundationsInitial.ONE_RANDOM_BASE:
                seeds += 1
        return seeds

    @property
    def tableau_total(self) -> int:
        """Cards left for the tableau once every other zone is filled."""
        return (
            self.total_cards
            - self.stock_size
            - self.reserve_size
            - self.cells_prefilled
            - self.foundation_seed_count
        )


class LayoutSpec(BaseModel):
    """Pile lengths and face-down counts of a game's opening tableau."""

    model_config = ConfigDict(frozen=True)

    tableau_card_counts: List[int] = Field(default_factory=list, description="Cards dealt to each pile")
    face_down_counts: List[int] = Field(default_factory=list, description="Face-down cards at the bottom of each pile")


class Diagnostic(BaseModel):
    """One violated rule-set invariant."""

    code: str = Field(description="CountMismatch, InvalidValue, ConfigConflict or NoWinCondition")
    field: str = Field(description="Field path the diagnostic refers to")
    message: str = Field(default="", description="Human-readable explanation")

    def __str__(self) -> str:
        return f"{self.code}({self.field}): {self.message}"
