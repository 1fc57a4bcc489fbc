"""Exception hierarchy shared across the toolkit."""


class QuandlekitError(Exception):
    """Base class for all toolkit errors."""


class DegreeMismatch(QuandlekitError):
    """Operands act on point sets of different sizes."""


class CapExceeded(QuandlekitError):
    """A group closure or class orbit grew past the configured element cap."""


class NotTransitive(QuandlekitError):
    """The operation requires a transitive action."""


class NotARack(QuandlekitError):
    """The operation table fails the rack axioms."""


class NotConnected(QuandlekitError):
    """The operation is defined for connected racks only."""


class BoundExceeded(QuandlekitError):
    """Input size is past the configured search bound."""


class TheoremViolation(QuandlekitError):
    """A computation contradicted an established theorem.

    This signals an implementation bug, never a mathematical discovery, and
    maps to a dedicated CLI exit code so it cannot silently poison results.
    """


class ParseError(QuandlekitError):
    """Malformed input text (file formats or constructor specs)."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
