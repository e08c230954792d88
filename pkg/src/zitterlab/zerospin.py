"""Spinning systems with zero intrinsic angular momentum.

For the first-order Lagrangian a purely linear CMF oscillation

    v(tau) = p/m + F cos(omega tau + phase),   omega = sqrt(-m/k1)

has v*, a*, a*', ... collinear, so the CMF spin vanishes.  After a boost
the spin k1 (v x a) becomes nonzero, stays normal to the momentum and
vibrates linearly; helicity and the Pauli-Lubanski vector stay zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from . import lagrangian as lg
from . import minkowski as mk
from .errors import InvalidParams

PARAM_TOLERANCE = 1e-10


@dataclass(frozen=True)
class LinearOscParams:
    m: float
    k1: float
    p: np.ndarray
    amp_f: np.ndarray
    phase: float = 0.0
    tol: float = field(default=PARAM_TOLERANCE, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "p", mk.as_four(self.p))
        object.__setattr__(self, "amp_f", mk.as_four(self.amp_f))

    @property
    def omega(self):
        return float(np.sqrt(-self.m / self.k1))

    @property
    def period(self):
        return 2.0 * np.pi / self.omega

    @property
    def spec(self):
        return lg.LagrangianSpec(self.m, (self.k1,))

    def boosted(self, w):
        lam = mk.boost_matrix(w)
        return replace(self, p=lam @ self.p, amp_f=lam @ self.amp_f)

    def to_cmf(self):
        return self.boosted(-self.p[1:] / self.p[0])


def validate(params, tol=None):
    tol = params.tol if tol is None else tol
    if not params.m > 0:
        raise InvalidParams(f"mass must be positive, got {params.m}")
    if not params.k1 < 0:
        raise InvalidParams(f"a bounded linear oscillation needs k1 < 0, got {params.k1}")
    scale = max(1.0, params.m**2)
    shell = mk.square(params.p) - params.m**2
    pf = mk.minkowski_dot(params.p, params.amp_f)
    if abs(shell) > tol * scale or abs(pf) > tol * scale:
        raise InvalidParams(f"p^2 - m^2 = {shell:.3e}, p.F = {pf:.3e}")


def linear_state_at(params, tau, n_derivs=6):
    validate(params)
    om, m = params.omega, params.m
    phi = om * tau + params.phase
    out = np.empty((n_derivs, 4))
    out[0] = params.p * tau / m + params.amp_f * np.sin(phi) / om
    for j in range(1, n_derivs):
        out[j] = params.amp_f * om ** (j - 1) * np.cos(phi + (j - 1) * np.pi / 2.0)
    if n_derivs > 1:
        out[1] = out[1] + params.p / m
    return lg.KinematicState(float(tau), out)


def cmf_spin(params, tau):
    """k1 (v* x a*) in the CMF.

    There v* = F* cos and a* = -omega F* sin share the direction F*, so the
    product is written as a scalar times F* x F*, which is exactly zero.
    """
    validate(params)
    f = params.to_cmf().amp_f[1:]
    phi = params.omega * tau + params.phase
    return params.k1 * (np.cos(phi) * -params.omega * np.sin(phi)) * mk.cross(f, f)


def boosted_spin(params, w, tau):
    """k1 (v x a) of the state seen after applying the boost ``w`` to ``params``."""
    moved = params.boosted(w)
    st = linear_state_at(moved, tau, n_derivs=3)
    return params.k1 * mk.cross(st.v[1:], st.a[1:])


def boosted_spin_tensor(params, w, tau):
    moved = params.boosted(w)
    return lg.spin_tensor(moved.spec, linear_state_at(moved, tau, n_derivs=3))


def _sample_taus(params, n_samples):
    return np.arange(n_samples) * params.period / n_samples


@dataclass(frozen=True)
class HelicityCheck:
    max_helicity: float | None
    max_pauli_lubanski: float


def helicity_zero_check(params, w, n_samples=64):
    """Largest |s.p|/(|s||p|) and largest |W^mu| over a sampled period.

    ``max_helicity`` is None when helicity is undefined at every sample
    (|p| = 0 in the CMF, or s = 0 when the boost is along F).
    """
    moved = params.boosted(w)
    p = moved.p
    pnorm = np.linalg.norm(p[1:])
    worst_h = None
    worst_w = 0.0
    for tau in _sample_taus(params, n_samples):
        st = linear_state_at(moved, tau, n_derivs=3)
        s_tensor = lg.spin_tensor(moved.spec, st)
        worst_w = max(worst_w, float(np.max(np.abs(mk.pauli_lubanski_vector(s_tensor, p)))))
        s = mk.spin_part(s_tensor)
        snorm = np.linalg.norm(s)
        if pnorm > 1e-14 and snorm > 1e-14 * max(1.0, pnorm):
            h = abs(float(s @ p[1:])) / (snorm * pnorm)
            worst_h = h if worst_h is None else max(worst_h, h)
    return HelicityCheck(worst_h, worst_w)


def _f_perp_cross_p(params, w):
    moved = params.boosted(w)
    p = moved.p[1:]
    f = params.to_cmf().amp_f[1:]
    pnorm = np.linalg.norm(p)
    if pnorm > 0:
        n = p / pnorm
        f = f - (f @ n) * n
    return mk.cross(f, p)


@dataclass(frozen=True)
class MeanSpinSquared:
    implemented: float
    variant_formula: float

    @property
    def discrepancy(self):
        return self.variant_formula - self.implemented

    @property
    def flagged(self):
        return not np.isclose(self.implemented, self.variant_formula, rtol=1e-12, atol=1e-15)


def mean_spin_squared(params, w):
    """Period average of |s|^2 in the boosted frame.

    From s = k1 (v x a) = (p x F*_perp) sin(omega tau)/omega the average is
    |F*_perp x p|^2 / (2 omega^2).  The variant closed form divides by
    2 omega instead; both are returned so the mismatch stays visible.
    """
    validate(params)
    c2 = float(np.sum(_f_perp_cross_p(params, w) ** 2))
    om = params.omega
    return MeanSpinSquared(implemented=c2 / (2.0 * om * om), variant_formula=c2 / (2.0 * om))


def spin_amplitude(params, w):
    """Amplitude vector of the boosted spin: s(tau) = amplitude * sin(omega tau + phase)."""
    return -_f_perp_cross_p(params, w) / params.omega


def variant_spin_amplitude(params, w):
    """Amplitude of the variant vibrating-spin formula, (F*_perp x p)/sqrt(omega)."""
    return _f_perp_cross_p(params, w) / np.sqrt(params.omega)


def mean_boosted_spin(params, w, n_samples=256):
    """Average of s over one period by uniform sampling (exact for trigonometric polynomials)."""
    samples = [boosted_spin(params, w, t) for t in _sample_taus(params, n_samples)]
    return np.mean(samples, axis=0)


def longitudinal_oscillation(params, w, tau):
    """Component along p-hat of the boosted oscillating displacement x(tau) - x(0) - p tau/m."""
    moved = params.boosted(w)
    x = linear_state_at(moved, tau, n_derivs=1).x
    x0 = linear_state_at(moved, 0.0, n_derivs=1).x
    disp = x - x0 - moved.p * tau / moved.m
    p = moved.p[1:]
    pnorm = np.linalg.norm(p)
    if pnorm == 0.0:
        return 0.0
    return float(disp[1:] @ p / pnorm)
