"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class UnsupportedParameterError(ValueError):
    """Parameter value is valid mathematically but not supported here."""


class ResourceLimitError(RuntimeError):
    """Requested computation exceeds a configured memory/size bound."""


class DegenerateInputError(ValueError):
    """Input is structurally degenerate (e.g. singular design matrix)."""


class ConsistencyError(RuntimeError):
    """Two independent internal routes to the same quantity disagree."""
