"""Exception hierarchy."""


class MhaError(Exception):
    """Base class for all library errors."""


class UnsupportedParameterError(MhaError, ValueError):
    """Requested field/instance parameters cannot be realized exactly."""


class PresentationError(MhaError):
    """A basis rule is undefined for the given labels."""


class RegularityError(MhaError):
    """A covered computation did not produce a finite combination."""


class UnderCoveredError(RegularityError):
    """A coproduct expansion has more than one leg without a cover."""

    def __init__(self, legs, n):
        self.legs = tuple(legs)
        self.n = n
        super().__init__(
            f"under-covered {n}-leg expansion: legs {list(self.legs)} carry no cover "
            "(at most one free leg is allowed for an infinite coproduct)"
        )


class ConfigError(MhaError, ValueError):
    """Invalid CLI / run configuration."""
