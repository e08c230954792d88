"""zitterlab: classical spinning particles with higher-derivative Lagrangians."""

from . import cronon, dirac, integrator, kinematics, lagrangian, minkowski, stability, zerospin
from .errors import (
    ConfigError,
    ConstraintViolation,
    DegenerateLeadingCoefficient,
    InsufficientDerivatives,
    InvalidParams,
    NonFiniteState,
    NumericalFailure,
    RootFindingFailure,
    SingularSystem,
    SuperluminalBoost,
    SuperunitaryV2,
    UnsupportedOrder,
    ZitterError,
)
from .lagrangian import KinematicState, LagrangianSpec, dirac_spec, spinless_spec
from .minkowski import four

__version__ = "0.1.0"
