"""Model-independent kinematics of a free spinning particle.

Splits a 4-velocity into its newtonian part p/m and the zitterbewegung part
V = v - p/m, classifies v^2 and evaluates the two v^2 identities.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import minkowski as mk
from .errors import ConstraintViolation, SuperunitaryV2

V2_TOLERANCE = 1e-9
SHELL_TOLERANCE = 1e-8


class Motion(enum.Enum):
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"
    SPACELIKE = "spacelike"


@dataclass(frozen=True)
class MotionClass:
    kind: Motion
    v2: float
    cmf_speed: float


@dataclass(frozen=True)
class ZbwDecomposition:
    w_part: np.ndarray
    v_part: np.ndarray
    drift_u: np.ndarray
    times_ratio: float

    def orthogonality(self):
        return mk.minkowski_dot(self.w_part, self.v_part)


def shell_residuals(v, p, m):
    """(p^2 - m^2, p.v - m)."""
    return mk.square(p) - m * m, mk.minkowski_dot(p, v) - m


def check_shell(v, p, m, tol=SHELL_TOLERANCE):
    h1, h2 = shell_residuals(v, p, m)
    scale = max(1.0, m * m)
    if abs(h1) > tol * scale:
        raise ConstraintViolation(f"mass shell p^2 = m^2 violated by {h1:.3e}")
    if abs(h2) > tol * scale:
        raise ConstraintViolation(f"constraint p.v = m violated by {h2:.3e}")


def decompose_velocity(v, p, m, tol=SHELL_TOLERANCE):
    """v = p/m + V, with the charge drift u = v/v0 - p/p0 (3-vector)."""
    if not m > 0:
        raise ValueError(f"mass must be positive, got {m}")
    v = mk.as_four(v)
    p = mk.as_four(p)
    check_shell(v, p, m, tol)
    w_part = p / m
    v_part = v - w_part
    drift = v[1:] / v[0] - p[1:] / p[0]
    return ZbwDecomposition(w_part, v_part, drift, float(v[0]))


def classify_v2(v, tol=V2_TOLERANCE):
    v2 = mk.square(v)
    if v2 > 1.0 + tol:
        raise SuperunitaryV2(f"v^2 = {v2:.12g} exceeds 1")
    speed = float(np.sqrt(max(0.0, 1.0 - v2)))
    if abs(v2) <= tol:
        kind = Motion.LIGHTLIKE
    elif v2 > 0.0:
        kind = Motion.TIMELIKE
    else:
        kind = Motion.SPACELIKE
    return MotionClass(kind, v2, speed)


def v2_identities_residual(v, p, m, sdot):
    """Residuals of v^2 = 1 + S'.S'/2m^2 and v^2 = 1 + S'^{mu nu} p_mu v_nu / m^2."""
    v2 = mk.square(v)
    r1 = v2 - (1.0 + mk.full_contract(sdot, sdot) / (2.0 * m * m))
    r2 = v2 - (1.0 + float(mk.lower(p) @ np.asarray(sdot) @ mk.lower(v)) / (m * m))
    return r1, r2


def cmf_velocity(v, p):
    """Velocity seen from the centre-of-mass frame (where the 3-momentum vanishes)."""
    w = np.asarray(p, dtype=float)[1:] / p[0]
    return mk.boost_apply(-w, v)
