"""Free n-th order Lagrangians L = sum_i k_i (v^(i))^2 / 2 and their charges.

A :class:`KinematicState` carries the derivative chain x, v, a, a', ...
(``derivs[j]`` is the j-th proper-time derivative of x).  Everything here is
an algebraic evaluation on that chain; nothing is integrated.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import minkowski as mk
from .errors import InsufficientDerivatives, UnsupportedOrder


@dataclass(frozen=True)
class LagrangianSpec:
    """Mass ``m`` (= k_0) and higher coefficients ``coeffs = (k_1, ..., k_n)``."""

    m: float
    coeffs: tuple = ()

    def __post_init__(self):
        if not self.m > 0:
            raise ValueError(f"mass must be positive, got {self.m}")
        object.__setattr__(self, "coeffs", tuple(float(k) for k in self.coeffs))

    @property
    def order_n(self):
        return len(self.coeffs)

    @property
    def k(self):
        """Full coefficient list (k_0 = m, k_1, ..., k_n)."""
        return (float(self.m),) + self.coeffs

    def is_oscillatory_signed(self):
        return all(ki == 0 or np.sign(ki) == (-1) ** i for i, ki in enumerate(self.k))


def dirac_spec(m=1.0):
    """First-order Lagrangian with k_1 = -1/(4m)."""
    return LagrangianSpec(m, (-1.0 / (4.0 * m),))


def spinless_spec(m=1.0):
    return LagrangianSpec(m, ())


@dataclass
class KinematicState:
    tau: float
    derivs: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.derivs = np.asarray(self.derivs, dtype=float)
        if self.derivs.ndim != 2 or self.derivs.shape[1] != 4:
            raise ValueError(f"derivs must have shape (N, 4), got {self.derivs.shape}")

    def __len__(self):
        return self.derivs.shape[0]

    def d(self, j):
        """j-th derivative of x (0 = position, 1 = velocity, ...)."""
        if j >= len(self):
            raise InsufficientDerivatives(
                f"state carries derivatives up to order {len(self) - 1}, order {j} requested"
            )
        return self.derivs[j]

    @property
    def x(self):
        return self.d(0)

    @property
    def v(self):
        return self.d(1)

    @property
    def a(self):
        return self.d(2)

    def shifted(self):
        """State whose chain starts at v: used to differentiate chain expressions."""
        return KinematicState(self.tau, self.derivs[1:])


def _require(state, order):
    if len(state) <= order:
        raise InsufficientDerivatives(
            f"need derivatives of x up to order {order}, state has {len(state) - 1}"
        )


def canonical_momentum(spec, state):
    """p = sum_i (-1)^i k_i v^(2i)."""
    n = spec.order_n
    _require(state, 2 * n + 1)
    p = np.zeros(4)
    for i, ki in enumerate(spec.k):
        p += (-1) ** i * ki * state.d(2 * i + 1)
    return p


def zbw_velocity(spec, state):
    return state.v - canonical_momentum(spec, state) / spec.m


def newton_residual(spec, state):
    """Left side of the free generalised Newton equation, sum_i (-1)^i k_i a^(2i)."""
    n = spec.order_n
    _require(state, 2 * n + 2)
    r = np.zeros(4)
    for i, ki in enumerate(spec.k):
        r += (-1) ** i * ki * state.d(2 * i + 2)
    return r


# Spin tensor for n <= 3 as a list of (coefficient index, sign, j1, j2) meaning
# sign * k_i * (x^(j1) wedge x^(j2)).  Space slots reproduce
#   n=1: k1 v x a
#   n=2: + k2 (a x a' - v x a'')
#   n=3: + k3 (a' x a'' - a x a''' + v x a'''')
_SPIN_TERMS = {
    1: [(1, 1, 1, 2)],
    2: [(2, 1, 2, 3), (2, -1, 1, 4)],
    3: [(3, 1, 3, 4), (3, -1, 2, 5), (3, 1, 1, 6)],
}


def _spin_terms(spec):
    n = spec.order_n
    if n > 3:
        raise UnsupportedOrder(f"spin has a closed form only for n <= 3, got n = {n}")
    return [t for order in range(1, n + 1) for t in _SPIN_TERMS[order]]


def spin_tensor(spec, state):
    """Non-orbital part of the conserved total angular momentum J^{mu nu}."""
    s = np.zeros((4, 4))
    for i, sign, j1, j2 in _spin_terms(spec):
        s += mk.wedge_over(state.d(j1), state.d(j2), sign * spec.k[i])
    return s


def spin_tensor_rate(spec, state):
    """Proper-time derivative of :func:`spin_tensor`, by the product rule on the chain."""
    s = np.zeros((4, 4))
    for i, sign, j1, j2 in _spin_terms(spec):
        c = sign * spec.k[i]
        s += mk.wedge_over(state.d(j1 + 1), state.d(j2), c)
        s += mk.wedge_over(state.d(j1), state.d(j2 + 1), c)
    return s


def spin_vector(spec, state):
    """s = (S^23, S^31, S^12); zero for the spinless n = 0 Lagrangian."""
    return mk.spin_part(spin_tensor(spec, state))


def orbital_angular_momentum(state, p):
    return mk.wedge_over(state.x, p)


def total_angular_momentum(spec, state):
    p = canonical_momentum(spec, state)
    return orbital_angular_momentum(state, p) + spin_tensor(spec, state)


def hamiltonian(spec, state):
    n = spec.order_n
    if n > 2:
        raise UnsupportedOrder(f"Hamiltonian has a closed form only for n <= 2, got n = {n}")
    dot = mk.minkowski_dot
    v = state.v
    h = 0.5 * spec.m * dot(v, v)
    if n >= 1:
        k1 = spec.coeffs[0]
        a, a1 = state.d(2), state.d(3)
        h += 0.5 * k1 * dot(a, a) - k1 * dot(a1, v)
    if n >= 2:
        k2 = spec.coeffs[1]
        a, a1, a2, a3 = state.d(2), state.d(3), state.d(4), state.d(5)
        h += 0.5 * k2 * dot(a1, a1) + k2 * dot(a3, v) - k2 * dot(a2, a)
    return h


def _first_order(spec, what):
    if spec.order_n != 1:
        raise UnsupportedOrder(f"{what} is defined only for n = 1, got n = {spec.order_n}")
    return spec.coeffs[0]


def second_momentum(spec, state):
    """pi = dL/d(a) = k_1 a."""
    k1 = _first_order(spec, "second-order momentum")
    return k1 * state.a


def hamilton_residuals(spec, state, p=None, pi=None):
    """Residuals of the two Hamilton couples for H(x, p; v, pi) = p.v + pi^2/2k1 - m v^2/2.

    Returns (dH/dp - x', dH/dx + p', dH/dpi - v', dH/dv + pi').  ``p`` and
    ``pi`` default to the canonical values from the chain; passing them
    explicitly tests off-shell phase-space points.
    """
    k1 = _first_order(spec, "Hamilton equations")
    if p is None:
        p = canonical_momentum(spec, state)
    if pi is None:
        pi = second_momentum(spec, state)
    _require(state, 4)
    v = state.v
    x_dot, v_dot = state.d(1), state.d(2)
    p_dot = spec.m * state.d(2) - k1 * state.d(4)
    pi_dot = k1 * state.d(3)
    return (
        v - x_dot,
        np.zeros(4) + p_dot,
        np.asarray(pi, dtype=float) / k1 - v_dot,
        np.asarray(p, dtype=float) - spec.m * v + pi_dot,
    )
