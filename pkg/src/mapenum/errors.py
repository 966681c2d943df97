"""Exception hierarchy shared by the enumerators and the command line."""


class MapEnumError(Exception):
    """Base class for all errors raised by mapenum."""


class ProfileError(MapEnumError, ValueError):
    """A degree profile is malformed."""


class OddDartCountError(ProfileError):
    """The total degree is odd, so no perfect matching of the darts exists."""


class CountOverflowError(MapEnumError, OverflowError):
    """A count would leave the signed 64-bit range."""


class WorkloadError(MapEnumError):
    """A run is larger than the configured guard allows."""

    def __init__(self, message: str, estimate: int):
        super().__init__(message)
        self.estimate = estimate


class InvariantError(MapEnumError, AssertionError):
    """An internal structural identity failed; indicates a bug, not bad input."""
