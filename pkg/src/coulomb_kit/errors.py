"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation
    (e.g. a forward-direction angle, an abscissa beyond [-1, 1], or a
    non-positive energy)."""


class GammaPoleError(DomainError):
    """The gamma function was requested at a non-positive integer, where
    it has a pole."""


class ConfigError(ValueError):
    """A configuration object violates its structural invariants."""
