"""Exception hierarchy shared across the package."""

from __future__ import annotations

__all__ = [
    "OmegasumError",
    "IndexBeforeStart",
    "BoundMismatch",
    "NotAPermutation",
    "UnsupportedRatio",
    "UnsupportedOverride",
    "DegreeLimit",
    "NegativeBase",
    "NonPositiveRatio",
    "InfiniteValue",
    "ParseError",
    "UnsupportedForm",
    "BadBounds",
    "NonPositiveBase",
]


class OmegasumError(Exception):
    """Base class for every error raised by omegasum."""


class IndexBeforeStart(OmegasumError):
    """An index fell before the first summed position of a series."""


class BoundMismatch(OmegasumError):
    """Two series with different summation bounds were combined."""


class NotAPermutation(OmegasumError):
    """A rearrangement map was not a bijection of its index set."""


class UnsupportedRatio(OmegasumError):
    """An operation restricted to ratio-1 (polynomial) series met another ratio."""


class UnsupportedOverride(OmegasumError):
    """Per-index overrides are not representable in the requested form."""


class DegreeLimit(OmegasumError):
    """A polynomial degree exceeded the configured maximum."""


class NegativeBase(OmegasumError):
    """A geometric base outside the supported negative range was evaluated."""


class NonPositiveRatio(OmegasumError):
    """The closed-form geometric value needs a ratio greater than zero."""


class InfiniteValue(OmegasumError):
    """A finite standard part was required but the value is infinite."""


class ParseError(OmegasumError):
    """Malformed input text.  Carries the character offset of the problem."""

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.message = message
        self.position = position

    def __str__(self) -> str:
        return f"{self.message} (at offset {self.position})"


class UnsupportedForm(ParseError):
    """Syntactically valid input outside the supported expression family."""


class BadBounds(ParseError):
    """Summation bounds other than a fixed integer start and 'omega'."""


class NonPositiveBase(ParseError):
    """Exponential values require a positive rational base."""
