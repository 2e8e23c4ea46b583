"""Exception types raised by the library.

Every class derives from :class:`MannheimError` so callers (the CLI in
particular) can separate domain failures from programming errors.
"""


class MannheimError(Exception):
    """Base class for domain errors."""


class NotSplittingPrime(MannheimError, ValueError):
    """The modulus is not a prime congruent to 1 mod 6 (or is below 7)."""


class LimitExceeded(MannheimError):
    """A size cap was exceeded.

    ``report`` optionally carries the partial result computed before the
    cap was hit.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class LabelOutOfRange(MannheimError, ValueError):
    pass


class DivisionByZero(MannheimError, ZeroDivisionError):
    pass


class DlogOfZero(MannheimError, ValueError):
    pass


class InvalidT(MannheimError, ValueError):
    pass


class LengthMismatch(MannheimError, ValueError):
    pass
