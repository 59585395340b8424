"""Exception types shared across the package."""

from __future__ import annotations


class JunctionLogicError(Exception):
    """Base class for all errors raised by this package."""


# --- road network ---

class DuplicateSegmentError(JunctionLogicError):
    pass


class DanglingEdgeError(JunctionLogicError):
    pass


class NonPositiveLengthError(JunctionLogicError):
    pass


class UnknownSegmentError(JunctionLogicError):
    pass


class EmptyPathError(JunctionLogicError):
    pass


class IllegalStepError(JunctionLogicError):
    """A path step (waypoint i, waypoint i+1) is not an edge of the network."""

    def __init__(self, index: int, pair=None):
        self.index = index
        self.pair = pair
        detail = f" {pair[0]!r} -> {pair[1]!r}" if pair else ""
        super().__init__(f"illegal path step at index {index}{detail}")


class PathExhaustedError(JunctionLogicError):
    """A car (or a view horizon) ran past the end of its declared path."""

    def __init__(self, car=None, message=""):
        self.car = car
        super().__init__(message or f"path exhausted for {car!r}")


# --- snapshot transitions ---

class NonPositiveDurationError(JunctionLogicError):
    pass


class UnknownCarError(JunctionLogicError):
    pass


class NoCrossingAheadError(JunctionLogicError):
    pass


class NothingToPromoteError(JunctionLogicError):
    pass


class NotNeighbouringError(JunctionLogicError):
    pass


class PositionOutOfRangeError(JunctionLogicError):
    pass


# --- views ---

class SplitOutOfRangeError(JunctionLogicError):
    pass


class IndexOutOfRangeError(JunctionLogicError):
    pass


# --- logic ---

class FormulaSyntaxError(JunctionLogicError):
    """Parse failure with a source position and what was expected there."""

    def __init__(self, line: int, col: int, expected: str, found: str = ""):
        self.line = line
        self.col = col
        self.expected = expected
        self.found = found
        where = f"line {line}, col {col}"
        detail = f", found {found!r}" if found else ""
        super().__init__(f"{where}: expected {expected}{detail}")


class UnboundVariableError(JunctionLogicError):
    pass


class SortMismatchError(JunctionLogicError):
    pass


class UnknownObjectKindError(JunctionLogicError):
    pass


# --- controllers ---

class InvariantViolationError(JunctionLogicError):
    def __init__(self, location: str, formula_text: str):
        self.location = location
        self.formula_text = formula_text
        super().__init__(f"invariant of location {location!r} violated: {formula_text}")


# --- monitor ---

class UnboundPropositionError(JunctionLogicError):
    pass


# --- scenario ---

class ScenarioParseError(JunctionLogicError):
    pass


class ScenarioValidationError(JunctionLogicError):
    """Carries every validation problem found, not just the first."""

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))
