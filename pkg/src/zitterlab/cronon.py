"""Caldirola cronon electron: infinite-order coefficients and the two-point stepper.

With k_i = (-1)^i m T^(2i)/(2i+1)! and the electromagnetic coupling, the
equation of motion becomes the finite-difference relation

    m [v(t+T) - v(t-T) + v(t) (v(t).(v(t+T) - v(t-T)))] / 2T = e F(t) v(t)

which is advanced here as a leapfrog in steps of T.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import lagrangian as lg
from . import minkowski as mk
from .errors import SingularSystem

MAX_COEFFICIENT_INDEX = 20
CONDITION_LIMIT = 1e12


def cronon_coefficient(m, T, i):
    if i < 0:
        raise ValueError("coefficient index must be non-negative")
    return (-1) ** i * m * T ** (2 * i) / math.factorial(2 * i + 1)


def cronon_time(charge, m):
    """T = (4/3) e^2 / m  (c = 1)."""
    return 4.0 / 3.0 * charge * charge / m


def cronon_spec(m, T, n=MAX_COEFFICIENT_INDEX):
    """Truncation of the infinite-order Lagrangian to k_1 .. k_n (n <= 20)."""
    n = min(n, MAX_COEFFICIENT_INDEX)
    return lg.LagrangianSpec(m, tuple(cronon_coefficient(m, T, i) for i in range(1, n + 1)))


def field_tensor(electric=(0.0, 0.0, 0.0), magnetic=(0.0, 0.0, 0.0)):
    """F^{mu nu} with F^{i0} = E^i and F^{ij} = -eps_{ijk} B^k.

    With this sign m dv/dtau = e F^{mu nu} v_nu gives dp/dt = e (E + v x B).
    """
    return mk.tensor_from_parts(spin=-np.asarray(magnetic, dtype=float), boost=-np.asarray(electric, dtype=float))


@dataclass(frozen=True)
class CrononParams:
    m: float
    charge: float
    field: np.ndarray = field(default_factory=lambda: np.zeros((4, 4)))
    T: float | None = None

    def __post_init__(self):
        if not self.m > 0:
            raise ValueError(f"mass must be positive, got {self.m}")
        f = np.asarray(self.field, dtype=float)
        if f.shape != (4, 4) or not np.array_equal(f, -f.T):
            raise ValueError("field must be an antisymmetric 4x4 tensor")
        object.__setattr__(self, "field", f)
        if self.T is None:
            object.__setattr__(self, "T", cronon_time(self.charge, self.m))
        if not self.T > 0:
            raise ValueError(f"cronon T must be positive, got {self.T}")


def step_matrix(v):
    """M = I + v (x) (g v); M v = 2 v when v^2 = 1."""
    v = mk.as_four(v)
    return np.eye(4) + np.outer(v, mk.lower(v))


def fd_step(params, v_prev, v_curr):
    """Solve the two-point relation for v(tau + T) given v(tau - T), v(tau)."""
    v_prev = mk.as_four(v_prev)
    v_curr = mk.as_four(v_curr)
    mat = step_matrix(v_curr)
    if np.linalg.cond(mat) > CONDITION_LIMIT:
        raise SingularSystem("finite-difference step matrix is numerically singular")
    rhs = (2.0 * params.T * params.charge / params.m) * mk.contract(params.field, v_curr)
    delta = np.linalg.solve(mat, rhs)
    return v_prev + delta


def euler_seed(params, v0):
    """v(-T) from one explicit Euler step of m dv/dtau = e F v, taken backwards."""
    v0 = mk.as_four(v0)
    return v0 - params.T * params.charge / params.m * mk.contract(params.field, v0)


def taylor_seed(params, v0):
    """v(-T) from the second-order Taylor expansion of m dv/dtau = e F v about v0."""
    v0 = mk.as_four(v0)
    q = params.charge / params.m
    acc = q * mk.contract(params.field, v0)
    jerk = q * mk.contract(params.field, acc)
    return v0 - params.T * acc + 0.5 * params.T**2 * jerk


def simulate_cronon(params, v_init_pair, steps):
    """Velocities at tau = -T, 0, T, ..., steps*T (row k is tau = (k-1) T)."""
    v_prev, v_curr = (mk.as_four(v) for v in v_init_pair)
    out = np.empty((steps + 2, 4))
    out[0], out[1] = v_prev, v_curr
    for k in range(steps):
        v_next = fd_step(params, out[k], out[k + 1])
        out[k + 2] = v_next
    return out


def cronon_taus(params, steps):
    return params.T * (np.arange(steps + 2) - 1.0)
