"""Exception hierarchy shared by all zitterlab modules."""


class ZitterError(Exception):
    """Base class for every error raised by the library."""


class ConstraintViolation(ZitterError, ValueError):
    """A physical constraint (mass shell, orthogonality, ...) does not hold."""


class SuperunitaryV2(ConstraintViolation):
    """v^2 exceeds 1, which no consistent free state can produce."""


class InvalidParams(ConstraintViolation):
    """Closed-form solution parameters fail validation."""


class SuperluminalBoost(ConstraintViolation):
    """A boost velocity with |w| >= 1 was requested."""


class InsufficientDerivatives(ZitterError, ValueError):
    """The kinematic state does not carry enough derivatives."""


class UnsupportedOrder(ZitterError, ValueError):
    """No closed form is available for this Lagrangian order."""


class DegenerateLeadingCoefficient(ZitterError, ValueError):
    """The highest coefficient k_n vanishes, so the order is not n."""


class NumericalFailure(ZitterError, ArithmeticError):
    """Base class for solver and integrator failures."""


class NonFiniteState(NumericalFailure):
    def __init__(self, message, tau=None):
        super().__init__(message)
        self.tau = tau


class RootFindingFailure(NumericalFailure):
    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class SingularSystem(NumericalFailure):
    pass


class ConfigError(ZitterError, ValueError):
    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field
