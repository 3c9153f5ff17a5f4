"""Exception hierarchy shared across the compiler and the embedded engine."""

from __future__ import annotations


class DeltaViewError(Exception):
    """Base class for every error raised by this package."""


class PositionedError(DeltaViewError):
    """Error anchored to a line/column of some SQL source text."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at {line}:{column}")
        self.message = message
        self.line = line
        self.column = column


class LexError(PositionedError):
    pass


class ParseError(PositionedError):
    def __init__(self, message: str, line: int, column: int, expected: tuple[str, ...] = ()):
        if expected:
            message = f"{message} (expected {', '.join(expected)})"
        super().__init__(message, line, column)
        self.expected = expected


class UnsupportedConstructError(PositionedError):
    """A construct outside the supported SQL subset, named explicitly."""

    def __init__(self, construct: str, line: int, column: int):
        super().__init__(f"unsupported construct: {construct}", line, column)
        self.construct = construct


class PlanError(DeltaViewError):
    """Name resolution or type checking failed while building a logical plan."""


class UnsupportedQueryClassError(DeltaViewError):
    """The view's plan shape is outside the supported query classes."""


class SchemaMismatchError(DeltaViewError):
    pass


class NegativeStateError(DeltaViewError):
    """A deletion had no matching stored tuple; the state would go negative."""


class IntegerOverflowError(DeltaViewError):
    """A 64-bit integer operation left the representable range."""


class EvaluationError(DeltaViewError):
    """Runtime expression evaluation failed (e.g. division by zero)."""


class UniqueViolationError(DeltaViewError):
    """A plain insert would duplicate a key covered by a unique index."""


class CatalogError(DeltaViewError):
    """Unknown or colliding catalog object, or an invalid catalog operation."""


class ChangelogError(DeltaViewError):
    def __init__(self, message: str, line_number: int):
        super().__init__(f"changelog line {line_number}: {message}")
        self.line_number = line_number


class EngineError(DeltaViewError):
    """Statement execution failed inside the embedded engine."""
