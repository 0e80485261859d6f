"""Exception types shared across the package."""


class FoilStatesError(Exception):
    """Base class for all errors raised by :mod:`foilstates`."""


class DomainError(FoilStatesError, ValueError):
    """An argument lies outside the domain of the operation."""


class WordLengthError(DomainError):
    """A split word does not match the number of crossings of a diagram."""


class CapacityError(FoilStatesError):
    """An enumeration would exceed its configured size cap."""

    def __init__(self, message, cap, flag=None):
        super().__init__(message)
        self.cap = cap
        self.flag = flag
