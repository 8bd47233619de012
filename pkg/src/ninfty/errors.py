"""Error types shared across the package.

Three categories, matching the CLI exit codes: parse (2), domain (3),
resource (4).
"""


class NinftyError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class ParseError(NinftyError):
    """Malformed textual input (group spec, cycle notation, expression)."""

    exit_code = 2

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class DomainError(NinftyError):
    """Structurally valid input that violates a precondition."""

    exit_code = 3


class ResourceError(NinftyError):
    """Computation refused because a configured cap would be exceeded."""

    exit_code = 4
