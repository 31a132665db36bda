"""
Rules package for the patience solver.
Parses, validates and normalizes the JSON rule language.
"""

from src.rules.models import (
    BaseCard,
    BuildPolicy,
    Diagnostic,
    FaceUp,
    FoundationsInitial,
    GroupPolicy,
    LayoutSpec,
    MoveBuiltGroup,
    RuleSet,
    SpacesPolicy,
    StockDealType,
    StockRedeal,
)
from src.rules.parser import load_rules, parse_rules, rules_document, serialize_rules
from src.rules.validation import layout_spec, reduced_rules, validate

__all__ = [
    'BaseCard',
    'BuildPolicy',
    'Diagnostic',
    'FaceUp',
    'FoundationsInitial',
    'GroupPolicy',
    'LayoutSpec',
    'MoveBuiltGroup',
    'RuleSet',
    'SpacesPolicy',
    'StockDealType',
    'StockRedeal',
    'load_rules',
    'parse_rules',
    'rules_document',
    'serialize_rules',
    'layout_spec',
    'reduced_rules',
    'validate',
]
