"""Exception types shared across the package."""


class MatchGameError(Exception):
    """Base class for every error this package raises deliberately."""


class ValidationError(MatchGameError, ValueError):
    """A value violates a structural precondition (shape, range, parity)."""


class UnsupportedGameError(MatchGameError):
    """The requested instance lies outside what this operation supports."""


class FormatError(MatchGameError):
    """A text input failed to parse.  Carries a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class BudgetExceededError(MatchGameError):
    """An exhaustive enumeration would exceed the configured budget."""

    def __init__(self, space_size: int, budget: int):
        super().__init__(
            f"search space of {space_size} tables exceeds budget {budget}"
        )
        self.space_size = space_size
        self.budget = budget
