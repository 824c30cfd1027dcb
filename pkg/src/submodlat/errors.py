"""Exception types shared across the package."""


class SubmodlatError(Exception):
    """Base class for all package errors."""


class SpecParseError(SubmodlatError):
    """A group-spec file or cycle string failed to parse.

    Carries the 1-based line number when one is known.
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ResourceLimitError(SubmodlatError):
    """An element or subgroup cap was exceeded."""


class RouteDisagreementError(SubmodlatError):
    """Two independent evaluation routes for the same predicate disagreed.

    This always indicates an implementation bug, never a property of the
    input group.
    """


class ConsistencyError(SubmodlatError):
    """A structural postcondition that must hold by theory failed."""
