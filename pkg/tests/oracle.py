"""
Reference rules model and breadth-first solver for small deals.

Written straight from the rule descriptions with plain tuples and no
dominances, canonical keys or undo, so the engine and the main search
can be checked against it. Moves are named in the engine's notation,
which lets move generation be compared position by position.
"""

from collections import deque
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple

from src.deal.dealer import Layout
from src.engine.state import GameState
from src.rules.models import (
    BuildPolicy,
    GroupPolicy,
    MoveBuiltGroup,
    RuleSet,
    SpacesPolicy,
    StockDealType,
    StockRedeal,
)

Card = Tuple[int, int]
Pile = Tuple[int, Tuple[Card, ...]]

RED = (1, 2)


class Position(NamedTuple):
    """
    Piles are (face-down count, cards bottom first). Foundations and the
    hole are (count, top rank). Stock, waste and reserve keep their
    playable end last.
    """

    tableau: Tuple[Pile, ...]
    foundations: Tuple[Tuple[int, int], ...]
    hole: Tuple[int, int]
    cells: Tuple[Optional[Card], ...]
    reserve: Tuple[Card, ...]
    stock: Tuple[Card, ...]
    waste: Tuple[Card, ...]
    base_rank: int


def supported(rules: RuleSet) -> bool:
    return not (rules.foundations_removable and rules.foundations_complete_pile_only)


def _card(card) -> Card:
    return card.rank, int(card.suit)


def from_state(state: GameState) -> Position:
    """The reference form of an engine position."""
    return Position(
        tableau=tuple((down, tuple(map(_card, pile))) for pile, down in zip(state.tableau, state.face_down)),
        foundations=tuple((len(pile), pile[-1].rank if pile else 0) for pile in state.foundations),
        hole=(len(state.hole), state.hole[-1].rank if state.hole else 0),
        cells=tuple(None if card is None else _card(card) for card in state.cells),
        reserve=tuple(map(_card, state.reserve)),
        stock=tuple(map(_card, state.stock)),
        waste=tuple(map(_card, state.waste)),
        base_rank=state.base_rank,
    )


def from_layout(rules: RuleSet, layout: Layout) -> Position:
    """The opening position of a layout."""
    slots = [(0, 0)] * (4 * rules.decks if rules.foundations_present else 0)
    hole = (0, 0)
    for seed in layout.foundation_seeds:
        if rules.hole:
            hole = (hole[0] + 1, seed.rank)
            continue
        for slot in range(int(seed.suit), len(slots), 4):
            if slots[slot][0] == 0:
                slots[slot] = (1, seed.rank)
                break
            if slots[slot][1] + 1 == seed.rank:
                slots[slot] = (slots[slot][0] + 1, seed.rank)
                break
    return Position(
        tableau=tuple((sum(down for _, down in pile), tuple(_card(card) for card, _ in pile)) for pile in layout.tableau),
        foundations=tuple(slots),
        hole=hole,
        cells=tuple(None if card is None else _card(card) for card in layout.cells),
        reserve=tuple(_card(card) for card in reversed(layout.reserve)),
        stock=tuple(_card(card) for card in reversed(layout.stock)),
        waste=(),
        base_rank=layout.base_rank,
    )


class Rules:
    """Rule arithmetic on tuple cards."""

    def __init__(self, rules: RuleSet):
        self.rules = rules
        self.top = rules.max_rank

    def after(self, rank: int) -> Optional[int]:
        if rank < self.top:
            return rank + 1
        return 1 if self.rules.random_base else None

    def before(self, rank: int) -> int:
        return rank - 1 if rank > 1 else self.top

    def builds(self, card: Card, onto: Card) -> bool:
        policy = self.rules.build_policy
        if policy == BuildPolicy.NO_BUILD or self.after(card[0]) != onto[0]:
            return False
        if policy == BuildPolicy.RED_BLACK:
            return (card[1] in RED) != (onto[1] in RED)
        if policy == BuildPolicy.SAME_SUIT:
            return card[1] == onto[1]
        return True

    def follows(self, card: Card, under: Card, same_suit: bool) -> bool:
        if same_suit:
            return card[1] == under[1] and self.after(card[0]) == under[0]
        return self.builds(card, under)

    def run(self, pile: Pile, same_suit: bool) -> int:
        down, cards = pile
        if not cards:
            return 0
        length = 1
        while len(cards) - length > down and self.follows(cards[-length], cards[-length - 1], same_suit):
            length += 1
        return length

    def sizes(self, pile: Pile) -> List[int]:
        if not pile[1]:
            return []
        if self.rules.move_built_group == MoveBuiltGroup.NO:
            return [1]
        run = self.run(pile, self.rules.move_built_group_policy == GroupPolicy.SAME_SUIT)
        if self.rules.move_built_group == MoveBuiltGroup.WHOLE_PILE:
            return [run]
        return list(range(1, run + 1))

    def space_takes(self, card: Card) -> bool:
        if self.rules.spaces_policy == SpacesPolicy.NONE:
            return False
        if self.rules.spaces_policy == SpacesPolicy.KINGS:
            return card[0] == self.top
        return True

    def slot_for(self, position: Position, card: Card) -> Optional[int]:
        if self.rules.foundations_complete_pile_only:
            return None
        for slot in range(card[1], len(position.foundations), 4):
            count, top = position.foundations[slot]
            if count >= self.top:
                continue
            wanted = self.after(top) if count else position.base_rank
            if card[0] == wanted:
                return slot
        return None

    def hole_takes(self, position: Position, card: Card) -> bool:
        count, top = position.hole
        if count == 0:
            return True
        return abs(card[0] - top) in (1, self.top - 1) and card[0] != top


def _name(src: str, dst: str, count: int = 1) -> str:
    return f"{src}->{dst}" + (f"x{count}" if count > 1 else "")


def _take_from_pile(pile: Pile, count: int) -> Pile:
    down, cards = pile
    cards = cards[:-count]
    if cards and down >= len(cards):
        down = len(cards) - 1
    return down, cards


def _put_on_pile(pile: Pile, cards: Tuple[Card, ...]) -> Pile:
    return pile[0], pile[1] + cards


def _replace(items: tuple, index: int, value) -> tuple:
    return items[:index] + (value,) + items[index + 1:]


def oracle_moves(rules: RuleSet, position: Position) -> Dict[str, Position]:
    """
    Every legal move of a position and the position it leads to.

    Args:
        rules (RuleSet): rules of the game
        position (Position): current position

    Returns:
        Dict[str, Position]: successor by move name
    """
    r = Rules(rules)
    tableau = position.tableau
    moves: Dict[str, Position] = {}
    spaces = [j for j, pile in enumerate(tableau) if not pile[1]]

    def put(pos: Position, j: int, cards: Tuple[Card, ...]) -> Position:
        return pos._replace(tableau=_replace(pos.tableau, j, _put_on_pile(pos.tableau[j], cards)))

    # sources other than piles: (name, card, position without the card)
    singles: List[Tuple[str, Card, Position]] = []
    for k, card in enumerate(position.cells):
        if card is not None:
            singles.append((f"c{k}", card, position._replace(cells=_replace(position.cells, k, None))))
    reserve = position.reserve
    playable = [len(reserve) - 1] if rules.reserve_stacked and reserve else list(range(len(reserve)))
    for k in playable:
        singles.append((f"r{k}", reserve[k], position._replace(reserve=reserve[:k] + reserve[k + 1:])))
    if position.waste:
        singles.append(("w", position.waste[-1], position._replace(waste=position.waste[:-1])))

    if spaces:
        refill = None
        if rules.spaces_policy == SpacesPolicy.AUTO_FROM_RESERVE and reserve:
            k = len(reserve) - 1
            refill = (f"r{k}", reserve[k], position._replace(reserve=reserve[:-1]))
        elif rules.spaces_policy == SpacesPolicy.AUTO_FROM_WASTE and position.waste:
            refill = ("w", position.waste[-1], position._replace(waste=position.waste[:-1]))
        elif rules.spaces_policy == SpacesPolicy.AUTO_FROM_WASTE and position.stock:
            refill = ("s", position.stock[-1], position._replace(stock=position.stock[:-1]))
        if refill is not None:
            src, card, rest = refill
            return {_name(src, f"t{j}"): put(rest, j, (card,)) for j in spaces}

    # foundations and the hole
    if rules.hole:
        for i, pile in enumerate(tableau):
            if pile[1] and r.hole_takes(position, pile[1][-1]):
                rest = position._replace(tableau=_replace(tableau, i, _take_from_pile(pile, 1)))
                moves[_name(f"t{i}", "h")] = rest._replace(hole=(position.hole[0] + 1, pile[1][-1][0]))
        for src, card, rest in singles:
            if r.hole_takes(position, card):
                moves[_name(src, "h")] = rest._replace(hole=(position.hole[0] + 1, card[0]))
    elif rules.foundations_complete_pile_only:
        for i, pile in enumerate(tableau):
            if r.run(pile, True) < r.top or pile[1][-1][0] != 1:
                continue
            suit = pile[1][-1][1]
            empty = [s for s in range(suit, len(position.foundations), 4) if position.foundations[s][0] == 0]
            if empty:
                rest = position._replace(tableau=_replace(tableau, i, _take_from_pile(pile, r.top)))
                moves[_name(f"t{i}", f"f{empty[0]}", r.top)] = rest._replace(
                    foundations=_replace(position.foundations, empty[0], (r.top, 1))
                )
    elif position.foundations:
        def home(name: str, card: Card, rest: Position) -> None:
            slot = r.slot_for(position, card)
            if slot is not None:
                count, _ = position.foundations[slot]
                moves[_name(name, f"f{slot}")] = rest._replace(
                    foundations=_replace(rest.foundations, slot, (count + 1, card[0]))
                )

        for i, pile in enumerate(tableau):
            if pile[1]:
                home(f"t{i}", pile[1][-1], position._replace(tableau=_replace(tableau, i, _take_from_pile(pile, 1))))
        for src, card, rest in singles:
            home(src, card, rest)

    def targets(card: Card, skip: int) -> Iterator[int]:
        for j, pile in enumerate(tableau):
            if j == skip:
                continue
            if pile[1] and r.builds(card, pile[1][-1]):
                yield j
            elif not pile[1] and r.space_takes(card):
                yield j

    for i, pile in enumerate(tableau):
        for size in r.sizes(pile):
            group = pile[1][-size:]
            rest = position._replace(tableau=_replace(tableau, i, _take_from_pile(pile, size)))
            for j in targets(group[0], i):
                moves[_name(f"t{i}", f"t{j}", size)] = put(rest, j, group)

    for i, pile in enumerate(tableau):
        if not pile[1]:
            continue
        for k, cell in enumerate(position.cells):
            if cell is None:
                rest = position._replace(tableau=_replace(tableau, i, _take_from_pile(pile, 1)))
                moves[_name(f"t{i}", f"c{k}")] = rest._replace(cells=_replace(position.cells, k, pile[1][-1]))

    for src, card, rest in singles:
        for j in targets(card, -1):
            moves[_name(src, f"t{j}")] = put(rest, j, (card,))

    if rules.foundations_removable:
        for slot, (count, top) in enumerate(position.foundations):
            if count == 0:
                continue
            lowered = (count - 1, r.before(top) if count > 1 else 0)
            rest = position._replace(foundations=_replace(position.foundations, slot, lowered))
            for j in targets((top, slot % 4), -1):
                moves[_name(f"f{slot}", f"t{j}")] = put(rest, j, ((top, slot % 4),))

    stock, waste = position.stock, position.waste
    if rules.stock_deal_type == StockDealType.TABLEAU_PILES:
        if stock and tableau:
            count = min(len(stock), len(tableau))
            dealt = list(tableau)
            remaining = stock
            for j in range(count):
                dealt[j] = _put_on_pile(dealt[j], (remaining[-1],))
                remaining = remaining[:-1]
            moves[_name("s", "t", count)] = position._replace(tableau=tuple(dealt), stock=remaining)
    elif stock:
        count = min(len(stock), rules.stock_deal_count)
        turned = tuple(reversed(stock[-count:]))
        moves[_name("s", "w", count)] = position._replace(stock=stock[:-count], waste=waste + turned)
    elif waste and rules.stock_redeal == StockRedeal.UNLIMITED:
        moves[_name("w", "s", len(waste))] = position._replace(stock=tuple(reversed(waste)), waste=())
    return moves


def won(rules: RuleSet, position: Position) -> bool:
    if rules.hole:
        return position.hole[0] == rules.total_cards
    return sum(count for count, _ in position.foundations) == rules.total_cards


def _key(rules: RuleSet, position: Position) -> Position:
    cells = tuple(sorted(position.cells, key=lambda card: (card is not None, card or (0, 0))))
    tableau = position.tableau
    if rules.stock_deal_type != StockDealType.TABLEAU_PILES:
        tableau = tuple(sorted(tableau))
    return position._replace(tableau=tableau, cells=cells)


def oracle_winnable(rules: RuleSet, layout: Layout, limit: int = 2_000_000) -> bool:
    """Whether the deal can be won, by exhaustive breadth-first search."""
    if not supported(rules):
        raise ValueError("oracle does not cover these rules")
    start = _key(rules, from_layout(rules, layout))
    seen = {start}
    queue = deque([start])
    while queue:
        position = queue.popleft()
        if won(rules, position):
            return True
        for following in oracle_moves(rules, position).values():
            following = _key(rules, following)
            if following not in seen:
                if len(seen) >= limit:
                    raise RuntimeError("oracle state limit reached")
                seen.add(following)
                queue.append(following)
    return False
