"""
Exception hierarchy for the patience solver.
All errors raised by the solver packages derive from SolverError.
"""

from typing import Any, List, Optional


class SolverError(Exception):
    """Base class for every solver error."""


class RulesError(SolverError):
    """Base class for rule-file errors."""


class MalformedJson(RulesError):
    """Rule text is not a well-formed JSON object."""


class UnknownField(RulesError):
    """A key in the rule document is not part of the rule language."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Unknown field: {name}")


class Unsupported(RulesError):
    """The rule document asks for a game family the solver does not play."""

    def __init__(self, feature: str):
        self.feature = feature
        super().__init__(f"Unsupported feature: {feature}")


class InvalidValue(RulesError):
    """A field holds a value outside its allowed range."""

    def __init__(self, field: str, value: Any, reason: Optional[str] = None):
        self.field = field
        self.value = value
        message = f"Invalid value for {field}: {value!r}"
        if reason:
            message += f" ({reason})"
        super().__init__(message)


class InvalidRules(RulesError):
    """Rules failed validation; carries the diagnostics."""

    def __init__(self, diagnostics: List[Any]):
        self.diagnostics = diagnostics
        summary = "; ".join(f"{d.code}({d.field})" for d in diagnostics)
        super().__init__(f"Rules failed validation: {summary}")


class InconsistentLayout(SolverError):
    """A layout does not fit the rules it is meant to be played under."""


class IllegalMove(SolverError):
    """A move is not legal in the current state."""

    def __init__(self, move: Any, reason: str = "not a legal move"):
        self.move = move
        super().__init__(f"Illegal move {move}: {reason}")


class UndoOrderViolation(SolverError):
    """Undo tokens were applied out of LIFO order."""


class ConfigConflict(SolverError):
    """A dominance was requested for rules that break its preconditions."""

    def __init__(self, name: str, reason: str):
        self.name = name
        super().__init__(f"Dominance {name} cannot be enabled: {reason}")


class EmptySample(SolverError):
    """An interval was requested for a sample with no instances."""


class RecordFormatError(SolverError):
    """A line of a record stream could not be parsed."""

    def __init__(self, line_number: int, reason: str):
        self.line_number = line_number
        super().__init__(f"Malformed record on line {line_number}: {reason}")
