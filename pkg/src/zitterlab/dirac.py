"""Closed-form classical Dirac particle, L = m v^2/2 - a^2/8m.

The general free solution oscillates at the Compton frequency 2m:

    v(tau) = p/m + E cos(2m tau) + H sin(2m tau)
    x(tau) = x0 + p tau/m + E sin(2m tau)/2m - H cos(2m tau)/2m

with constant 4-vectors p, E, H subject to p^2 = m^2 and p.E = p.H = 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from . import lagrangian as lg
from . import minkowski as mk
from .errors import InvalidParams

PARAM_TOLERANCE = 1e-10
N_DERIVS = 7


@dataclass(frozen=True)
class DiracParams:
    m: float
    p: np.ndarray
    amp_e: np.ndarray
    amp_h: np.ndarray
    x0: np.ndarray = field(default_factory=lambda: np.zeros(4))
    tol: float = field(default=PARAM_TOLERANCE, compare=False)

    def __post_init__(self):
        for name in ("p", "amp_e", "amp_h", "x0"):
            object.__setattr__(self, name, mk.as_four(getattr(self, name)))

    @property
    def omega(self):
        return 2.0 * self.m

    @property
    def period(self):
        return np.pi / self.m

    @property
    def cm_velocity(self):
        """3-velocity p/p0 of the centre of mass."""
        return self.p[1:] / self.p[0]

    @property
    def spec(self):
        return lg.dirac_spec(self.m)

    def boosted(self, w):
        lam = mk.boost_matrix(w)
        return replace(self, p=lam @ self.p, amp_e=lam @ self.amp_e, amp_h=lam @ self.amp_h, x0=lam @ self.x0)

    def to_cmf(self):
        return self.boosted(-self.cm_velocity)


def canonical_params(m=1.0):
    """CMF solution with E = x-hat, H = y-hat: lightlike, spin 1/2 along -z."""
    return DiracParams(m, mk.four(m), mk.four(0, 1, 0, 0), mk.four(0, 0, 1, 0))


def validate(params):
    """Residuals of every constraint on the parameters (all zero when valid)."""
    p, e, h, m = params.p, params.amp_e, params.amp_h, params.m
    w = p[1:] / p[0]
    return {
        "p2_minus_m2": mk.square(p) - m * m,
        "p_dot_e": mk.minkowski_dot(p, e),
        "p_dot_h": mk.minkowski_dot(p, h),
        "e0_minus_w_dot_e": float(e[0] - w @ e[1:]),
        "h0_minus_w_dot_h": float(h[0] - w @ h[1:]),
    }


def is_valid(params, tol=None):
    tol = params.tol if tol is None else tol
    scale = max(1.0, params.m * params.m)
    return params.m > 0 and all(abs(r) <= tol * scale for r in validate(params).values())


def _require_valid(params, tol=None):
    tol = params.tol if tol is None else tol
    if not is_valid(params, tol):
        bad = {k: r for k, r in validate(params).items() if abs(r) > tol * max(1.0, params.m**2)}
        raise InvalidParams(f"Dirac parameters violate constraints: {bad}")


def _harmonic_derivative(k, omega, tau):
    """(d^k/dtau^k cos(omega tau), d^k/dtau^k sin(omega tau))."""
    phase = omega * tau + k * np.pi / 2.0
    return omega**k * np.cos(phase), omega**k * np.sin(phase)


def state_at(params, tau, n_derivs=N_DERIVS, tol=None):
    """Exact state x, v, a, ... (``n_derivs`` entries) at proper time ``tau``."""
    _require_valid(params, tol)
    m, om = params.m, params.omega
    p, e, h = params.p, params.amp_e, params.amp_h
    out = np.empty((n_derivs, 4))
    out[0] = params.x0 + p * tau / m + (e * np.sin(om * tau) - h * np.cos(om * tau)) / om
    if n_derivs > 1:
        out[1] = p / m + e * np.cos(om * tau) + h * np.sin(om * tau)
    for j in range(2, n_derivs):
        c, s = _harmonic_derivative(j - 1, om, tau)
        out[j] = e * c + h * s
    return lg.KinematicState(float(tau), out)


def trajectory_states(params, taus, n_derivs=N_DERIVS):
    return [state_at(params, t, n_derivs) for t in np.asarray(taus, dtype=float)]


def spin_half_residual(params):
    """E*^2 H*^2 - (E*.H*)^2 - 1 with E*, H* the CMF amplitudes."""
    _require_valid(params)
    cmf = params.to_cmf()
    e, h = cmf.amp_e[1:], cmf.amp_h[1:]
    return float((e @ e) * (h @ h) - (e @ h) ** 2 - 1.0)


def cmf_spin(params):
    """Constant CMF spin s* = (H* x E*)/2."""
    cmf = params.to_cmf()
    return 0.5 * mk.cross(cmf.amp_h[1:], cmf.amp_e[1:])


@dataclass(frozen=True)
class ConstantV2Info:
    v2: float
    cmf_speed: float
    radius: float
    a2: float


def constant_v2_info(params, tol=None):
    """Orbit data for the constant-v^2 family (E.H = 0, E^2 = H^2), else None."""
    _require_valid(params)
    tol = params.tol if tol is None else tol
    e, h, m = params.amp_e, params.amp_h, params.m
    e2 = mk.square(e)
    if abs(mk.minkowski_dot(e, h)) > tol or abs(e2 - mk.square(h)) > tol:
        return None
    speed = float(np.sqrt(max(0.0, -e2)))
    v2 = 1.0 + e2
    a2 = 4.0 * m * m * e2
    if abs(a2 - 4.0 * m * m * (v2 - 1.0)) > tol * max(1.0, abs(a2)):
        raise AssertionError("a^2 = 4 m^2 (v^2 - 1) failed")
    return ConstantV2Info(v2=v2, cmf_speed=speed, radius=speed / (2.0 * m), a2=a2)


def times_ratio(params, tau):
    """dt/dtau = p0/m + (w.E) cos(2m tau) + (w.H) sin(2m tau), w = p/p0."""
    _require_valid(params)
    w = params.cm_velocity
    om = params.omega
    return float(
        params.p[0] / params.m
        + (w @ params.amp_e[1:]) * np.cos(om * tau)
        + (w @ params.amp_h[1:]) * np.sin(om * tau)
    )


def times_ratio_mean(params):
    """Mean of the times-ratio over one period: the Lorentz factor p0/m."""
    _require_valid(params)
    return float(params.p[0] / params.m)


def times_ratio_between(params, frame1, frame2, tau):
    """dt/dt' between the frames reached by boosting ``params`` by frame1 and frame2."""
    return times_ratio(params.boosted(frame1), tau) / times_ratio(params.boosted(frame2), tau)


def pauli_lubanski(params):
    """Closed-form Pauli-Lubanski vector W and invariant helicity.

    W0 = p.(H x E)/2,  W = [p0 (H x E) + H0 (E x p) + E0 (p x H)]/2.
    The helicity is the projection of the spin on p-hat over |s*|,
    i.e. W0 / (|p| |s*|) with |s*| = sqrt(-W^2)/m; None when |p| = 0 or
    the particle is spinless.
    """
    _require_valid(params)
    p0, p = params.p[0], params.p[1:]
    e0, e = params.amp_e[0], params.amp_e[1:]
    h0, h = params.amp_h[0], params.amp_h[1:]
    hxe = mk.cross(h, e)
    w_vec = np.empty(4)
    w_vec[0] = 0.5 * p @ hxe
    w_vec[1:] = 0.5 * (p0 * hxe + h0 * mk.cross(e, p) + e0 * mk.cross(p, h))
    spin_mag = np.sqrt(max(0.0, -mk.square(w_vec))) / params.m
    pnorm = np.linalg.norm(p)
    tiny = 1e-14 * max(1.0, abs(p0))
    helicity = None
    if pnorm > tiny and spin_mag > 1e-14:
        helicity = float(w_vec[0] / (pnorm * spin_mag))
    return w_vec, helicity


def instantaneous_helicity(params, tau):
    """s.p/(|s||p|) with s the frame-dependent spin vector k1 (v x a) at tau."""
    st = state_at(params, tau)
    s = lg.spin_vector(params.spec, st)
    p = params.p[1:]
    ns, np_ = np.linalg.norm(s), np.linalg.norm(p)
    if ns == 0.0 or np_ == 0.0:
        return None
    return float(s @ p / (ns * np_))


@dataclass(frozen=True)
class PolarizationInfo:
    is_standard_frame: bool
    helicity: float | None
    longitudinal_amp: float
    transverse_amp: float


def _ellipse_max(e, h):
    """max over phase of |e cos + h sin| for 3-vectors e, h."""
    gram = np.array([[e @ e, e @ h], [e @ h, h @ h]])
    return float(np.sqrt(max(0.0, np.linalg.eigvalsh(gram)[-1])))


def polarization_info(params, tol=None):
    _require_valid(params)
    tol = params.tol if tol is None else tol
    w = params.cm_velocity
    e, h = params.amp_e[1:], params.amp_h[1:]
    standard = abs(w @ e) <= tol and abs(w @ h) <= tol
    pnorm = np.linalg.norm(params.p[1:])
    if pnorm <= tol:
        longitudinal, transverse = 0.0, _ellipse_max(e, h)
    else:
        n = params.p[1:] / pnorm
        el, hl = e @ n, h @ n
        longitudinal = float(np.hypot(el, hl))
        transverse = _ellipse_max(e - el * n, h - hl * n)
    _, helicity = pauli_lubanski(params)
    return PolarizationInfo(bool(standard), helicity, longitudinal, transverse)


def mean_boost_vector(params):
    """Period average of k = (S^01, S^02, S^03): (H0 E - E0 H)/2."""
    _require_valid(params)
    return 0.5 * (params.amp_h[0] * params.amp_e[1:] - params.amp_e[0] * params.amp_h[1:])


def dipole_cmf(params, charge, tau):
    """CMF electric dipole -(e/4m^2) a*(tau), equal to (e/m) k*(tau)."""
    cmf = params.to_cmf()
    a = state_at(cmf, tau, n_derivs=3).a
    return -charge / (4.0 * params.m**2) * a[1:]


def spin_tensor_at(params, tau):
    """S = (a v - v a)/4m on the exact solution."""
    st = state_at(params, tau)
    return mk.wedge_over(st.a, st.v, 1.0 / (4.0 * params.m))


def sdot_times_p(params, tau):
    """S'^{mu nu} p_nu from the exact derivative of the spin tensor."""
    st = state_at(params, tau)
    sdot = mk.wedge_over(st.d(3), st.v, 1.0 / (4.0 * params.m))
    return mk.contract(sdot, params.p)


def sdot_identity_residuals(params, tau):
    """Max-abs residuals of S'p = a'/4 and a = -S''p/m^2."""
    st = state_at(params, tau)
    m = params.m
    sdot = mk.wedge_over(st.d(3), st.v, 1.0 / (4.0 * m))
    sddot = mk.wedge_over(st.d(4), st.v, 1.0 / (4.0 * m)) + mk.wedge_over(st.d(3), st.a, 1.0 / (4.0 * m))
    r_dos = mk.contract(sdot, params.p) - st.d(3) / 4.0
    r_qq = st.a + mk.contract(sddot, params.p) / (m * m)
    return float(np.max(np.abs(r_dos))), float(np.max(np.abs(r_qq)))
