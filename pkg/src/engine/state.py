"""
Game state for the patience solver.
Holds every zone of a position and applies and reverses moves in place.
"""

import logging
from collections import Counter
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

from src.deal.cards import Card, canonical_pack
from src.deal.dealer import Layout
from src.engine.moves import Move, UndoToken, Zone
from src.exceptions import IllegalMove, InconsistentLayout, UndoOrderViolation
from src.rules.models import BuildPolicy, RuleSet, StockDealType, StockRedeal

logger = logging.getLogger(__name__)


class GameState:
    """
    Mutable position. Piles, stock, waste and reserve keep their top card
    last. face_down[i] counts the face-down cards at the bottom of pile i.
    Foundation slot i holds suit i % 4.
    """

    def __init__(self, rules: RuleSet):
        self.rules = rules
        self.tableau: List[List[Card]] = [[] for _ in range(rules.tableau_count)]
        self.face_down: List[int] = [0] * rules.tableau_count
        self.foundations: List[List[Card]] = [[] for _ in range(rules.foundation_slots)]
        self.hole: List[Card] = []
        self.cells: List[Optional[Card]] = [None] * rules.cells_count
        self.stock: List[Card] = []
        self.waste: List[Card] = []
        self.reserve: List[Card] = []
        self.base_rank = 1
        self.redeal_allowed = rules.stock_redeal == StockRedeal.UNLIMITED
        self.history: List[UndoToken] = []
        self._serial = 0
        self._pile_keys: Dict[Hashable, List[Optional[bytes]]] = {}

    # Rule arithmetic

    def next_rank(self, rank: int) -> int:
        """Rank that follows `rank` upward, wrapping only for random-base games."""
        if rank < self.rules.max_rank:
            return rank + 1
        return 1 if self.rules.random_base else 0

    def can_build(self, card: Card, onto: Card) -> bool:
        """Whether card may be placed on onto in the tableau."""
        policy = self.rules.build_policy
        if policy == BuildPolicy.NO_BUILD or self.next_rank(card.rank) != onto.rank:
            return False
        if policy == BuildPolicy.RED_BLACK:
            return card.is_red != onto.is_red
        if policy == BuildPolicy.SAME_SUIT:
            return card.suit == onto.suit
        return True

    def foundation_slot_for(self, card: Card) -> Optional[int]:
        """First foundation slot that accepts card as a single-card build."""
        if not self.foundations or self.rules.foundations_complete_pile_only:
            return None
        for slot in range(card.suit, len(self.foundations), 4):
            pile = self.foundations[slot]
            if len(pile) >= self.rules.max_rank:
                continue
            wanted = self.next_rank(pile[-1].rank) if pile else self.base_rank
            if card.rank == wanted:
                return slot
        return None

    def foundation_count(self, slot: int) -> int:
        return len(self.foundations[slot])

    def piles_interchangeable(self) -> bool:
        """False while a stock remains to be dealt onto the piles in index order."""
        return not (self.stock and self.rules.stock_deal_type == StockDealType.TABLEAU_PILES)

    # Cached pile encodings

    def pile_key(self, index: int, tag: Hashable, encode: Callable[[List[Card], int], bytes]) -> bytes:
        """
        Encoding of one tableau pile, cached until a move touches the pile.

        Args:
            index (int): pile index
            tag (Hashable): identifies the encoding; one cache per tag
            encode (Callable): builds the bytes from the cards and face-down count
        """
        cache = self._pile_keys.get(tag)
        if cache is None:
            cache = self._pile_keys[tag] = [None] * len(self.tableau)
        key = cache[index]
        if key is None:
            key = cache[index] = encode(self.tableau[index], self.face_down[index])
        return key

    def invalidate_keys(self) -> None:
        """Drop every cached pile encoding, after editing zones directly."""
        self._pile_keys.clear()

    def _touched(self, move: Move) -> Sequence[int]:
        if move.dst == Zone.TABLEAU and move.dst_index is None:
            return range(move.count)
        piles = []
        if move.src == Zone.TABLEAU:
            piles.append(move.src_index)
        if move.dst == Zone.TABLEAU:
            piles.append(move.dst_index)
        return piles

    def _invalidate(self, move: Move) -> None:
        if not self._pile_keys:
            return
        touched = self._touched(move)
        for cache in self._pile_keys.values():
            for index in touched:
                cache[index] = None

    # Moves

    def _take(self, zone: Zone, index: Optional[int], count: int) -> Tuple[List[Card], bool]:
        if zone == Zone.TABLEAU:
            pile = self.tableau[index]
            if len(pile) - self.face_down[index] < count:
                raise IllegalMove(None, f"pile {index} has fewer than {count} face-up cards")
            cards = pile[-count:]
            del pile[-count:]
            if pile and self.face_down[index] >= len(pile):
                self.face_down[index] = len(pile) - 1
                return cards, True
            return cards, False
        if zone == Zone.CELL:
            card = self.cells[index]
            if card is None:
                raise IllegalMove(None, f"cell {index} is empty")
            self.cells[index] = None
            return [card], False
        source = {
            Zone.RESERVE: self.reserve,
            Zone.WASTE: self.waste,
            Zone.FOUNDATION: self.foundations[index] if zone == Zone.FOUNDATION else None,
            Zone.HOLE: self.hole,
        }[zone]
        if len(source) < count:
            raise IllegalMove(None, f"{zone.name.lower()} has fewer than {count} cards")
        if zone == Zone.RESERVE:
            return [source.pop(index)], False
        cards = source[-count:]
        del source[-count:]
        return cards, False

    def _put(self, zone: Zone, index: Optional[int], cards: List[Card]) -> None:
        if zone == Zone.TABLEAU:
            self.tableau[index].extend(cards)
        elif zone == Zone.CELL:
            self.cells[index] = cards[0]
        elif zone == Zone.FOUNDATION:
            self.foundations[index].extend(cards)
        elif zone == Zone.HOLE:
            self.hole.extend(cards)
        elif zone == Zone.RESERVE:
            self.reserve.insert(index, cards[0])
        elif zone == Zone.WASTE:
            self.waste.extend(cards)

    def apply(self, move: Move, check: bool = False) -> UndoToken:
        """
        Apply a move in place.

        Args:
            move (Move): a legal move
            check (bool): verify membership in legal_moves first

        Returns:
            UndoToken: record needed to reverse the move
        """
        if check:
            from src.engine.movegen import legal_moves
            if move not in legal_moves(self):
                raise IllegalMove(move)
        flipped = False
        if move.src == Zone.STOCK:
            if len(self.stock) < move.count:
                raise IllegalMove(move, "stock too small")
            if move.dst == Zone.WASTE:
                for _ in range(move.count):
                    self.waste.append(self.stock.pop())
            elif move.dst_index is None:
                for pile in range(move.count):
                    self.tableau[pile].append(self.stock.pop())
            else:
                self.tableau[move.dst_index].append(self.stock.pop())
        elif move.dst == Zone.STOCK:
            if self.stock or not self.waste:
                raise IllegalMove(move, "redeal needs an empty stock and a non-empty waste")
            self.waste.reverse()
            self.stock, self.waste = self.waste, self.stock
        else:
            try:
                cards, flipped = self._take(move.src, move.src_index, move.count)
            except IllegalMove as e:
                raise IllegalMove(move, str(e).split(": ", 1)[-1])
            self._put(move.dst, move.dst_index, cards)
        self._invalidate(move)
        self._serial += 1
        token = UndoToken(move, flipped, self._serial)
        self.history.append(token)
        return token

    def undo(self, token: UndoToken) -> None:
        """Reverse the most recent move."""
        if not self.history or self.history[-1].serial != token.serial:
            raise UndoOrderViolation(f"Undo of {token.move} is not the latest move")
        self.history.pop()
        move = token.move
        self._invalidate(move)
        if move.src == Zone.STOCK:
            if move.dst == Zone.WASTE:
                for _ in range(move.count):
                    self.stock.append(self.waste.pop())
            elif move.dst_index is None:
                for pile in reversed(range(move.count)):
                    self.stock.append(self.tableau[pile].pop())
            else:
                self.stock.append(self.tableau[move.dst_index].pop())
            return
        if move.dst == Zone.STOCK:
            self.stock.reverse()
            self.stock, self.waste = self.waste, self.stock
            return

        if move.dst == Zone.TABLEAU:
            pile = self.tableau[move.dst_index]
            cards = pile[-move.count:]
            del pile[-move.count:]
        elif move.dst == Zone.CELL:
            cards = [self.cells[move.dst_index]]
            self.cells[move.dst_index] = None
        elif move.dst == Zone.FOUNDATION:
            pile = self.foundations[move.dst_index]
            cards = pile[-move.count:]
            del pile[-move.count:]
        elif move.dst == Zone.HOLE:
            cards = [self.hole.pop()]
        else:
            cards = [self.waste.pop()]

        if move.src == Zone.TABLEAU:
            if token.flipped:
                self.face_down[move.src_index] += 1
            self.tableau[move.src_index].extend(cards)
        else:
            self._put(move.src, move.src_index, cards)

    # Inspection

    def is_won(self) -> bool:
        if self.rules.hole:
            return len(self.hole) == self.rules.total_cards
        return sum(len(pile) for pile in self.foundations) == self.rules.total_cards

    def snapshot(self) -> tuple:
        """Structural value of the position, history excluded."""
        return (
            tuple(tuple(pile) for pile in self.tableau),
            tuple(self.face_down),
            tuple(tuple(pile) for pile in self.foundations),
            tuple(self.hole),
            tuple(self.cells),
            tuple(self.stock),
            tuple(self.waste),
            tuple(self.reserve),
            self.base_rank,
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GameState) and self.snapshot() == other.snapshot()

    def __hash__(self) -> int:
        return hash(self.snapshot())

    def render(self) -> str:
        """Fixed text dump, one zone per line; face-down cards in parentheses."""
        def cards(items) -> str:
            return " ".join(str(card) if card is not None else "--" for card in items) or "-"

        lines = []
        if self.rules.hole:
            lines.append(f"Hole:        {cards(self.hole[-1:])} ({len(self.hole)})")
        if self.foundations:
            tops = [str(pile[-1]) if pile else "--" for pile in self.foundations]
            lines.append(f"Foundations: {' '.join(tops)}")
        if self.cells:
            lines.append(f"Cells:       {cards(self.cells)}")
        if self.rules.reserve_size:
            lines.append(f"Reserve:     {cards(reversed(self.reserve))}")
        if self.rules.stock_size:
            lines.append(f"Stock:       {cards(reversed(self.stock))}")
            lines.append(f"Waste:       {cards(self.waste)}")
        for index, pile in enumerate(self.tableau):
            shown = [
                f"({card})" if position < self.face_down[index] else str(card)
                for position, card in enumerate(pile)
            ]
            lines.append(f"T{index:<2}         {' '.join(shown) or '-'}")
        return "\n".join(lines)


def initial_state(rules: RuleSet, layout: Layout) -> GameState:
    """
    Build the opening position of a layout.

    Args:
        rules (RuleSet): rules of the game
        layout (Layout): a deal for those rules

    Returns:
        GameState: the position before any move
    """
    if len(layout.tableau) != rules.tableau_count:
        raise InconsistentLayout(f"{len(layout.tableau)} piles dealt, rules have {rules.tableau_count}")
    if len(layout.cells) != rules.cells_count:
        raise InconsistentLayout(f"{len(layout.cells)} cells dealt, rules have {rules.cells_count}")
    dealt = Counter((card.rank, card.suit) for card in layout.all_cards())
    expected = Counter((card.rank, card.suit) for card in canonical_pack(rules.max_rank, rules.two_decks))
    if dealt != expected:
        raise InconsistentLayout("layout does not hold each card of the pack exactly once")

    state = GameState(rules)
    state.base_rank = layout.base_rank
    for index, pile in enumerate(layout.tableau):
        flags = [down for _, down in pile]
        down = sum(flags)
        if any(flags[down:]) or (pile and flags[-1]):
            raise InconsistentLayout(f"pile {index} has a face-down card above a face-up one")
        state.tableau[index] = [card for card, _ in pile]
        state.face_down[index] = down
    state.cells = list(layout.cells)
    state.reserve = list(reversed(layout.reserve))
    state.stock = list(reversed(layout.stock))

    for card in layout.foundation_seeds:
        if rules.hole:
            state.hole.append(card)
            continue
        slot = state.foundation_slot_for(card)
        if slot is None:
            raise InconsistentLayout(f"foundation seed {card} has no slot")
        state.foundations[slot].append(card)
    return state


def apply(state: GameState, move: Move) -> UndoToken:
    return state.apply(move)


def undo(state: GameState, token: UndoToken) -> None:
    state.undo(token)


def is_won(state: GameState, rules: Optional[RuleSet] = None) -> bool:
    return state.is_won()
