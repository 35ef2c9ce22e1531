"""Exception types shared across the library."""


class AlgebraError(Exception):
    """Base class for all hyperalg errors."""


class DomainError(AlgebraError):
    """A value does not belong to the semiring's value domain."""


class SemiringMismatch(AlgebraError):
    """Two arrays tagged with different semirings were combined."""


class ShapeError(AlgebraError):
    """Key vectors violate a uniqueness or length requirement."""


class FormatError(AlgebraError):
    """Malformed external data (TSV line, file set, ...)."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class SemiringNameError(NameError):
    """Unknown semiring name; subclasses NameError so callers can catch either."""
