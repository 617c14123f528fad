"""Exception types shared across the kernel."""


class KernelError(Exception):
    """Base class for every error raised by this package."""


class UsageError(KernelError):
    """The caller violated an operation's contract (bad input, wrong domain)."""


class ParseError(UsageError):
    """Problem-file text could not be parsed; carries a source position."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}" if column is None else f"line {line}, col {column}"
            message = f"{where}: {message}"
        super().__init__(message)


class ZeroPolynomialError(KernelError):
    """A leading term (or similar) was requested from the zero polynomial."""


class SpecializationError(KernelError):
    """The evaluation point lies on the specialization locus; pick another point."""


class InvariantViolation(KernelError):
    """An internal guarantee failed.  This signals a bug, never user error."""
