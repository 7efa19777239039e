"""Exception hierarchy shared by the library and the CLI."""


class QTypeError(Exception):
    """Base class for all errors raised by qtype."""


class ConsistencyError(QTypeError):
    """An exactness check failed (inexact division, broken identity).

    This always signals a bug in the library, never bad user input.
    """


class RoundingError(QTypeError):
    """A floating point oracle produced a value too far from an integer."""


class GroupOrderExceeded(QTypeError):
    """Group closure grew past the configured maximum order."""


class CapExceededError(QTypeError):
    """The ambient dimension d**n exceeds the configured oracle cap."""


class DegenerateSpectrumError(QTypeError):
    """The oracle could not separate blocks after all reseeds."""
