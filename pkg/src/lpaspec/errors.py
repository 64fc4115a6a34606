"""Exception hierarchy shared by the library and the command line."""


class LpaError(Exception):
    """Base class for every error raised by lpaspec."""


class GraphFormatError(LpaError, ValueError):
    """Malformed graph document. Carries the offending line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DomainError(LpaError, ValueError):
    """Well-formed input that violates an operation's precondition."""


class UnknownVertexError(DomainError):
    pass


class NotHereditaryError(DomainError):
    pass


class ThresholdError(DomainError):
    """Exhaustive search refused because the graph is too large."""


class UndecidedError(DomainError):
    """Irreducibility over Q beyond the supported degree."""


class NotEnumerableError(DomainError):
    pass


class InvariantViolation(LpaError, AssertionError):
    """A structural theorem failed on a concrete graph. Always a bug."""


class PolyFormatError(LpaError, ValueError):
    """Unparseable polynomial text."""
