"""Minkowski 4-vector and antisymmetric tensor algebra.

Conventions: components are ordered (t, x, y, z), all vectors are stored
with upper (contravariant) indices and the metric is diag(+1, -1, -1, -1).
A 4-vector is a float array of shape (4,); an antisymmetric rank-2 tensor
is a (4, 4) array ``T[mu, nu]`` with upper indices.  c = 1 throughout.
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import SuperluminalBoost

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])


def _levi_civita_upper():
    eps = np.zeros((4, 4, 4, 4))
    for perm in itertools.permutations(range(4)):
        inversions = sum(1 for i in range(4) for j in range(i + 1, 4) if perm[i] > perm[j])
        eps[perm] = -1.0 if inversions % 2 == 0 else 1.0
    return eps


# eps^{0123} = -1, i.e. eps_{0123} = +1.  With this choice
# W^mu = 1/2 eps^{mu nu rho sigma} S_{nu rho} p_sigma = (s.p ; p0 s - p x k).
LEVI_CIVITA = _levi_civita_upper()


def four(t, x=0.0, y=0.0, z=0.0):
    """Build a 4-vector from its components."""
    return np.array([t, x, y, z], dtype=float)


def as_four(a):
    arr = np.asarray(a, dtype=float)
    if arr.shape != (4,):
        raise ValueError(f"expected a 4-vector, got shape {arr.shape}")
    return arr


def lower(a):
    """Flip the sign of the space components (index lowering)."""
    return METRIC @ np.asarray(a, dtype=float)


def minkowski_dot(a, b):
    """a^0 b^0 - a.b"""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return float(a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3])


def square(a):
    return minkowski_dot(a, a)


def spatial(a):
    return np.asarray(a, dtype=float)[1:]


def cross(u, v):
    return np.cross(np.asarray(u, dtype=float), np.asarray(v, dtype=float))


def check_boost(w):
    w = np.asarray(w, dtype=float)
    if w.shape != (3,):
        raise ValueError(f"boost velocity must be a 3-vector, got shape {w.shape}")
    speed2 = float(w @ w)
    if not np.isfinite(speed2) or speed2 >= 1.0:
        raise SuperluminalBoost(f"boost speed |w| = {np.sqrt(speed2):.6g} is not below 1")
    return w


def lorentz_factor(w):
    w = check_boost(w)
    return 1.0 / np.sqrt(1.0 - float(w @ w))


def boost_matrix(w):
    """Matrix of the pure boost that gives a particle at rest the velocity ``w``.

    ``boost_matrix(w) @ four(1)`` is ``gamma * (1; w)``.  Rejects |w| >= 1.
    """
    w = check_boost(w)
    speed2 = float(w @ w)
    gamma = 1.0 / np.sqrt(1.0 - speed2)
    lam = np.eye(4)
    lam[0, 0] = gamma
    lam[0, 1:] = gamma * w
    lam[1:, 0] = gamma * w
    if speed2 > 0.0:
        lam[1:, 1:] += (gamma - 1.0) * np.outer(w, w) / speed2
    return lam


def boost_apply(w, a):
    return boost_matrix(w) @ np.asarray(a, dtype=float)


def boost_tensor(w, t):
    lam = boost_matrix(w)
    return lam @ np.asarray(t, dtype=float) @ lam.T


def wedge_over(a, b, scale=1.0):
    """Antisymmetric tensor scale * (a^mu b^nu - a^nu b^mu)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return scale * (np.outer(a, b) - np.outer(b, a))


def contract(t, b):
    """T^{mu nu} b_nu."""
    return np.asarray(t, dtype=float) @ lower(b)


def full_contract(t, u):
    """T^{mu nu} U_{mu nu}."""
    return float(np.sum(np.asarray(t, dtype=float) * (METRIC @ np.asarray(u, dtype=float) @ METRIC)))


def spin_part(t):
    """Space-space slots (T^23, T^31, T^12) as a 3-vector."""
    t = np.asarray(t, dtype=float)
    return np.array([t[2, 3], t[3, 1], t[1, 2]])


def boost_part(t):
    """Time-space slots (T^01, T^02, T^03) as a 3-vector."""
    t = np.asarray(t, dtype=float)
    return np.array([t[0, 1], t[0, 2], t[0, 3]])


def tensor_from_parts(spin, boost):
    """Inverse of (spin_part, boost_part)."""
    sx, sy, sz = np.asarray(spin, dtype=float)
    kx, ky, kz = np.asarray(boost, dtype=float)
    return np.array([
        [0.0, kx, ky, kz],
        [-kx, 0.0, sz, -sy],
        [-ky, -sz, 0.0, sx],
        [-kz, sy, -sx, 0.0],
    ])


def pauli_lubanski_vector(spin_tensor, p):
    """W^mu = 1/2 eps^{mu nu rho sigma} S_{nu rho} p_sigma."""
    s_low = METRIC @ np.asarray(spin_tensor, dtype=float) @ METRIC
    return 0.5 * np.einsum("mnrs,nr,s->m", LEVI_CIVITA, s_low, lower(p))
