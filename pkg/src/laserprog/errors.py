"""Exception types shared across the toolkit."""


class DimensionError(ValueError):
    """Array shapes do not match what an operation requires."""


class StateError(RuntimeError):
    """Operation called in the wrong order (e.g. predict before train)."""


class NumericError(ArithmeticError):
    """Non-finite values where finite ones are required."""


class DataError(ValueError):
    """Input data violates a contract (bad labels, non-monotone times, ...)."""


class ConfigError(ValueError):
    """Invalid or incomplete run configuration."""
