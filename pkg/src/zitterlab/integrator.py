"""Fixed-step RK4 integration of the free generalised Newton equation.

The order-n equation has highest derivative x^(2n+2); the state vector is
the chain x, v, ..., x^(2n+1) (4 components each) and the top derivative is
solved algebraically from the equation of motion.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import lagrangian as lg
from .errors import DegenerateLeadingCoefficient, NonFiniteState

DIVERGENCE_LIMIT = 1e12


def reduce_order(spec):
    """Dimension of the first-order system, 4 * (2n + 2)."""
    n = spec.order_n
    if n > 0 and spec.coeffs[-1] == 0.0:
        raise DegenerateLeadingCoefficient(f"k_{n} = 0: the Lagrangian is not of order {n}")
    return 4 * (2 * n + 2)


def top_derivative(spec, chain):
    """x^(2n+2) from the equation of motion, given the chain x .. x^(2n+1)."""
    n = spec.order_n
    if n == 0:
        return np.zeros(4)
    k = spec.k
    acc = np.zeros(4)
    for i in range(n):
        acc += (-1) ** i * k[i] * chain[2 * i + 2]
    return (-1) ** (n + 1) / k[n] * acc


@dataclass
class Trajectory:
    """Uniformly sampled solution; ``derivs[s, j]`` is x^(j) at ``taus[s]``.

    Each sample carries x .. x^(2n+2), the last entry filled from the
    equation of motion.
    """

    spec: lg.LagrangianSpec
    taus: np.ndarray
    derivs: np.ndarray = field(repr=False)

    def __len__(self):
        return len(self.taus)

    def __getitem__(self, idx):
        return lg.KinematicState(float(self.taus[idx]), self.derivs[idx])

    @property
    def samples(self):
        return [self[i] for i in range(len(self))]

    @property
    def dtau(self):
        return float(self.taus[1] - self.taus[0]) if len(self) > 1 else 0.0

    def copy(self):
        return Trajectory(self.spec, self.taus.copy(), self.derivs.copy())


def _check_init(spec, init):
    need = 2 * spec.order_n + 2
    if len(init) < need:
        raise lg.InsufficientDerivatives(
            f"order-{spec.order_n} integration needs x .. x^({need - 1}), got {len(init)} entries"
        )
    return np.array(init.derivs[:need], dtype=float)


def integrate(spec, init, tau_end, dtau):
    """Classical RK4 from ``init.tau`` to ``tau_end`` with step ``dtau``.

    The number of steps is rounded to the nearest integer so samples stay
    uniform; raises NonFiniteState once any component exceeds 1e12.
    """
    if not dtau > 0:
        raise ValueError(f"dtau must be positive, got {dtau}")
    if not tau_end > init.tau:
        raise ValueError("tau_end must be after the initial proper time")
    reduce_order(spec)
    chain = _check_init(spec, init)
    n_chain = chain.shape[0]
    n_steps = max(1, int(round((tau_end - init.tau) / dtau)))

    def rhs(y):
        c = y.reshape(n_chain, 4)
        return np.concatenate([c[1:].ravel(), top_derivative(spec, c)])

    ys = np.empty((n_steps + 1, n_chain * 4))
    y = chain.ravel()
    ys[0] = y
    half = 0.5 * dtau
    for step in range(1, n_steps + 1):
        k1 = rhs(y)
        k2 = rhs(y + half * k1)
        k3 = rhs(y + half * k2)
        k4 = rhs(y + dtau * k3)
        y = y + (dtau / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if not np.all(np.isfinite(y)) or np.max(np.abs(y)) > DIVERGENCE_LIMIT:
            raise NonFiniteState(
                f"state diverged at tau = {init.tau + step * dtau:.6g}", tau=init.tau + step * dtau
            )
        ys[step] = y

    taus = init.tau + dtau * np.arange(n_steps + 1)
    chains = ys.reshape(n_steps + 1, n_chain, 4)
    tops = np.array([top_derivative(spec, c) for c in chains])
    derivs = np.concatenate([chains, tops[:, None, :]], axis=1)
    return Trajectory(spec, taus, derivs)


def time_reversed(state):
    """x(tau) -> x(-tau): odd derivatives change sign."""
    signs = (-1.0) ** np.arange(len(state))
    return lg.KinematicState(-state.tau, state.derivs * signs[:, None])


@dataclass
class ConservationReport:
    p_drift: float
    j_drift: float | None
    h_drift: float | None
    h1: np.ndarray = field(repr=False)
    h2: np.ndarray = field(repr=False)
    orthogonality: np.ndarray = field(repr=False)
    v2: np.ndarray = field(repr=False)
    skipped: tuple = ()

    def max_constraint_residual(self):
        return float(max(np.max(np.abs(self.h1)), np.max(np.abs(self.h2)), np.max(np.abs(self.orthogonality))))

    def as_dict(self):
        return {
            "p_drift": self.p_drift,
            "j_drift": self.j_drift,
            "h_drift": self.h_drift,
            "max_h1": float(np.max(np.abs(self.h1))),
            "max_h2": float(np.max(np.abs(self.h2))),
            "max_orthogonality": float(np.max(np.abs(self.orthogonality))),
            "max_v2": float(np.max(self.v2)),
            "skipped": list(self.skipped),
        }


def _rel_drift(values):
    values = np.asarray(values, dtype=float)
    ref = values[0]
    flat = (values - ref).reshape(len(values), -1)
    return float(np.max(np.abs(flat)) / max(1.0, float(np.max(np.abs(ref)))))


def charge_history(trajectory):
    """Per-sample p, J and H (None where no closed form exists)."""
    spec = trajectory.spec
    states = trajectory.samples
    p = np.array([lg.canonical_momentum(spec, s) for s in states])
    j = h = None
    if spec.order_n <= 3:
        j = np.array([lg.total_angular_momentum(spec, s) for s in states])
    if spec.order_n <= 2:
        h = np.array([lg.hamiltonian(spec, s) for s in states])
    return p, j, h


def conservation_report(trajectory):
    if len(trajectory) == 0:
        raise ValueError("empty trajectory")
    spec = trajectory.spec
    m = spec.m
    p, j, h = charge_history(trajectory)
    skipped = []
    if j is None:
        skipped.append("J")
    if h is None:
        skipped.append("H")
    v = trajectory.derivs[:, 1]
    pv = p[:, 0] * v[:, 0] - np.sum(p[:, 1:] * v[:, 1:], axis=1)
    pp = p[:, 0] ** 2 - np.sum(p[:, 1:] ** 2, axis=1)
    vv = v[:, 0] ** 2 - np.sum(v[:, 1:] ** 2, axis=1)
    return ConservationReport(
        p_drift=_rel_drift(p),
        j_drift=None if j is None else _rel_drift(j),
        h_drift=None if h is None else _rel_drift(h),
        h1=pp - m * m,
        h2=pv - m,
        # w.V with w = p/m, V = v - p/m
        orthogonality=pv / m - pp / (m * m),
        v2=vv,
        skipped=tuple(skipped),
    )


def zero_crossing_frequency(taus, signal):
    """Angular frequency from linearly interpolated zero crossings of a sinusoid."""
    taus = np.asarray(taus, dtype=float)
    signal = np.asarray(signal, dtype=float)
    idx = np.nonzero(np.signbit(signal[:-1]) != np.signbit(signal[1:]))[0]
    if len(idx) < 2:
        raise ValueError("need at least two zero crossings")
    t0, t1 = taus[idx], taus[idx + 1]
    s0, s1 = signal[idx], signal[idx + 1]
    crossings = t0 - s0 * (t1 - t0) / (s1 - s0)
    half_period = (crossings[-1] - crossings[0]) / (len(crossings) - 1)
    return float(np.pi / half_period)


def growth_rate(taus, values):
    """Slope of log|values| by least squares (exponential rate)."""
    logs = np.log(np.asarray(values, dtype=float))
    slope, _ = np.polyfit(np.asarray(taus, dtype=float), logs, 1)
    return float(slope)


def kinematic_audit(trajectory):
    """Largest violations of p.v = m, p^2 = m^2, w.V = 0 and v^2 <= 1 on a trajectory."""
    rep = conservation_report(trajectory)
    v2_excess = float(np.max(rep.v2) - 1.0)
    return {
        "max_h1": float(np.max(np.abs(rep.h1))),
        "max_h2": float(np.max(np.abs(rep.h2))),
        "max_orthogonality": float(np.max(np.abs(rep.orthogonality))),
        "v2_excess": v2_excess,
    }

