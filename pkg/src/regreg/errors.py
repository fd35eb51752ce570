"""Exception hierarchy shared by the library and the CLI."""


class RegregError(Exception):
    """Base class for every error raised by this package."""


class MissingDomain(RegregError):
    """A tuple of the grid (or of a requested set) is outside ``domain(f)``."""

    def __init__(self, x):
        super().__init__(f"tuple {x} is not in the function's domain")
        self.x = x


class NotRegular(RegregError):
    pass


class NotTLogBounded(RegregError):
    pass


class NegativeOutOfRange(RegregError):
    pass


class InfeasibleSmallRange(RegregError):
    pass


class TrivialZero(RegregError):
    """A zero term was kept in an instance; the empty-sum problem is solved by ``{0}``."""


class InvariantViolation(RegregError):
    pass


class TooLarge(RegregError):
    """Input exceeds a solver's tractability guard."""
