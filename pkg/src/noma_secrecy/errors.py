class ConfigError(ValueError):
    """Invalid or unparseable system configuration."""


class NumericalError(ArithmeticError):
    """Quadrature failed to reach the requested tolerance."""

    def __init__(self, message, achieved_error=None):
        super().__init__(message)
        self.achieved_error = achieved_error


class ConsistencyError(AssertionError):
    """An algebraic invariant that must hold by construction was violated."""
