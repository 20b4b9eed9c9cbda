"""Exception types shared across the package."""


class RkitError(Exception):
    """Base class for all rkit domain errors."""


class InvalidLimit(RkitError):
    """Sieve limit below 2."""


class OutOfRange(RkitError):
    """A query exceeds the range a structure was built for.

    Ranges are never extended silently; callers must rebuild with a larger
    limit so that "checked for all x <= X" claims stay honest.
    """

    def __init__(self, message: str, required_limit: int | None = None):
        super().__init__(message)
        self.required_limit = required_limit


class InvalidSequence(RkitError):
    """Element list is not strictly increasing (or violates a field bound)."""


class EmptyLevel(RkitError):
    """Iterated derivation ran out of certified terms before the target level."""


class NoRepresentation(RkitError):
    """No sum of distinct Ramanujan primes hits the target."""


class Infeasible(RkitError):
    """No perfect pairing of {1..2k} with Ramanujan-prime sums exists."""


class OracleTooLarge(RkitError):
    """Exhaustive pairing search refused beyond its size cap."""


class CacheIoError(RkitError):
    """Filesystem failure while reading or writing a sequence cache."""


class CorruptCache(RkitError):
    """Sequence cache failed validation; offset points at the bad byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class BFileParseError(RkitError):
    """Malformed b-file line."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number
