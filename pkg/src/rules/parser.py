"""
Rule-file parser for the patience solver.
Reads the JSON rule language, fills in Streets and Alleys defaults and
writes RuleSets back out in the same nested format.
"""

import json
import logging
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Tuple, Union

from src.exceptions import InvalidValue, MalformedJson, UnknownField, Unsupported
from src.rules.models import (
    BaseCard,
    BuildPolicy,
    FaceUp,
    FoundationsInitial,
    GroupPolicy,
    MoveBuiltGroup,
    RuleSet,
    SpacesPolicy,
    StockDealType,
    StockRedeal,
)

logger = logging.getLogger(__name__)

Converter = Callable[[str, Any], Any]


def _integer(minimum: int, maximum: Optional[int] = None) -> Converter:
    def convert(path: str, value: Any) -> int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise InvalidValue(path, value, "expected an integer")
        if value < minimum or (maximum is not None and value > maximum):
            raise InvalidValue(path, value, "out of range")
        return value
    return convert


def _boolean(path: str, value: Any) -> bool:
    if not isinstance(value, bool):
        raise InvalidValue(path, value, "expected true or false")
    return value


def _choice(enum_type) -> Converter:
    def convert(path: str, value: Any):
        try:
            return enum_type(value)
        except ValueError:
            allowed = ", ".join(member.value for member in enum_type)
            raise InvalidValue(path, value, f"expected one of {allowed}")
    return convert


def _redeal(path: str, value: Any) -> StockRedeal:
    return StockRedeal.UNLIMITED if _boolean(path, value) else StockRedeal.NONE


def _any_list(path: str, value: Any) -> list:
    if not isinstance(value, list):
        raise InvalidValue(path, value, "expected a list")
    return value


def _string(path: str, value: Any) -> str:
    if not isinstance(value, str):
        raise InvalidValue(path, value, "expected a string")
    return value


# section -> json key -> (RuleSet field, converter)
SECTIONS: Dict[str, Dict[str, Tuple[str, Converter]]] = {
    "tableau piles": {
        "count": ("tableau_count", _integer(0)),
        "build policy": ("build_policy", _choice(BuildPolicy)),
        "spaces policy": ("spaces_policy", _choice(SpacesPolicy)),
        "diagonal deal": ("diagonal_deal", _boolean),
        "move built group": ("move_built_group", _choice(MoveBuiltGroup)),
        "move built group policy": ("move_built_group_policy", _choice(GroupPolicy)),
        "face up cards": ("face_up", _choice(FaceUp)),
    },
    "foundations": {
        "present": ("foundations_present", _boolean),
        "initial cards": ("foundations_initial", _choice(FoundationsInitial)),
        "base card": ("base_card", _choice(BaseCard)),
        "removable": ("foundations_removable", _boolean),
        "only complete pile moves": ("foundations_complete_pile_only", _boolean),
    },
    "cells": {
        "count": ("cells_count", _integer(0)),
        "pre-filled": ("cells_prefilled", _integer(0)),
    },
    "stock": {
        "size": ("stock_size", _integer(0)),
        "deal type": ("stock_deal_type", _choice(StockDealType)),
        "deal count": ("stock_deal_count", _integer(1)),
        "redeal": ("stock_redeal", _redeal),
    },
    "reserve": {
        "size": ("reserve_size", _integer(0)),
        "stacked": ("reserve_stacked", _boolean),
    },
}

SCALARS: Dict[str, Tuple[str, Converter]] = {
    "hole": ("hole", _boolean),
    "max rank": ("max_rank", _integer(1, 13)),
    "two decks": ("two_decks", _boolean),
}

# Parsed for completeness; any non-empty use is rejected.
UNSUPPORTED_SECTIONS: Dict[str, Dict[str, Converter]] = {
    "accordion": {
        "size": _integer(0),
        "moves": _any_list,
        "build policies": _any_list,
    },
    "sequences": {
        "count": _integer(0),
        "direction": _string,
        "build policy": _string,
        "fixed suit": _boolean,
    },
}
UNSUPPORTED_TRIGGERS = {"accordion": "size", "sequences": "count"}


def _section(document: Dict[str, Any], name: str) -> Dict[str, Any]:
    section = document[name]
    if not isinstance(section, dict):
        raise InvalidValue(name, section, "expected an object")
    return section


def parse_rules(text: Union[str, bytes]) -> RuleSet:
    """
    Parse a JSON rule document into a RuleSet.

    Args:
        text (str): UTF-8 JSON object in the rule language

    Returns:
        RuleSet: rules with every unspecified field at its default
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedJson(f"Rule text is not valid JSON: {str(e)}")
    if not isinstance(document, dict):
        raise MalformedJson("Rule text must be a JSON object")

    values: Dict[str, Any] = {}
    for key in document:
        if key in SECTIONS:
            section = _section(document, key)
            for sub_key, value in section.items():
                if sub_key not in SECTIONS[key]:
                    raise UnknownField(f"{key}.{sub_key}")
                field, convert = SECTIONS[key][sub_key]
                values[field] = convert(f"{key}.{sub_key}", value)
        elif key in SCALARS:
            field, convert = SCALARS[key]
            values[field] = convert(key, document[key])
        elif key in UNSUPPORTED_SECTIONS:
            section = _section(document, key)
            for sub_key, value in section.items():
                if sub_key not in UNSUPPORTED_SECTIONS[key]:
                    raise UnknownField(f"{key}.{sub_key}")
                UNSUPPORTED_SECTIONS[key][sub_key](f"{key}.{sub_key}", value)
            if section.get(UNSUPPORTED_TRIGGERS[key], 0) > 0:
                raise Unsupported(key)
        else:
            raise UnknownField(key)

    if values.get("stock_deal_type") == StockDealType.TABLEAU_PILES:
        values["stock_deal_count"] = 1

    return RuleSet(**values)


def load_rules(path: Union[str, Path]) -> RuleSet:
    """Read and parse a rule file."""
    path = Path(path)
    try:
        rules = parse_rules(path.read_text(encoding="utf-8"))
        logger.debug(f"Loaded rules from {path}")
        return rules
    except OSError as e:
        logger.error(f"Error reading rule file {path}: {str(e)}")
        raise


def rules_document(rules: RuleSet) -> Dict[str, Any]:
    """Nested JSON-ready document for a RuleSet, every field explicit."""
    return {
        "tableau piles": {
            "count": rules.tableau_count,
            "build policy": rules.build_policy.value,
            "spaces policy": rules.spaces_policy.value,
            "diagonal deal": rules.diagonal_deal,
            "move built group": rules.move_built_group.value,
            "move built group policy": rules.move_built_group_policy.value,
            "face up cards": rules.face_up.value,
        },
        "foundations": {
            "present": rules.foundations_present,
            "initial cards": rules.foundations_initial.value,
            "base card": rules.base_card.value,
            "removable": rules.foundations_removable,
            "only complete pile moves": rules.foundations_complete_pile_only,
        },
        "hole": rules.hole,
        "cells": {"count": rules.cells_count, "pre-filled": rules.cells_prefilled},
        "stock": {
            "size": rules.stock_size,
            "deal type": rules.stock_deal_type.value,
            "deal count": rules.stock_deal_count,
            "redeal": rules.stock_redeal == StockRedeal.UNLIMITED,
        },
        "reserve": {"size": rules.reserve_size, "stacked": rules.reserve_stacked},
        "accordion": {"size": 0, "moves": [], "build policies": []},
        "sequences": {"count": 0, "direction": "L", "build policy": "same-suit", "fixed suit": False},
        "max rank": rules.max_rank,
        "two decks": rules.two_decks,
    }


def serialize_rules(rules: RuleSet) -> str:
    """Write a RuleSet back out in the rule language."""
    return json.dumps(rules_document(rules), indent=2)
