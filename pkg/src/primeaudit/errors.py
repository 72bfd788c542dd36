"""Exception types shared across the toolkit."""


class CapacityError(Exception):
    """A configured size/cap limit would be exceeded."""


class SieveRangeError(ValueError):
    """An argument falls outside the range covered by the sieve."""


class GcdMismatchError(Exception):
    """A gcd precondition of a Bezout identity failed on realized data.

    This is a reportable finding, not a usage error: it would mean one of
    the audited divisibility facts is false for the offending input.
    """

    def __init__(self, message: str, a: int, detail: dict):
        super().__init__(message)
        self.a = a
        self.detail = detail


class NoDecompositionError(Exception):
    """No decomposition of the requested form exists (reportable finding)."""

    def __init__(self, message: str, n: int):
        super().__init__(message)
        self.n = n
