"""Exception hierarchy. The CLI maps each class to an exit code."""


class BetaPackError(Exception):
    """Base class for all errors raised by this package."""


class InputError(BetaPackError, ValueError):
    """Malformed graph text, bad generator spec, or an out-of-range ratio."""


class GraphFormatError(InputError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class CapExceededError(BetaPackError):
    """An exhaustive search was requested on a graph above the configured cap."""


class InvariantViolation(BetaPackError, AssertionError):
    """A solver produced a result that fails its own post-conditions."""
