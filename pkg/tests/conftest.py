import numpy as np
import pytest

from zitterlab import dirac, integrator, lagrangian as lg, minkowski as mk

PI = np.pi


@pytest.fixture
def canonical():
    return dirac.canonical_params(1.0)


@pytest.fixture
def boosted_x(canonical):
    return canonical.boosted([0.6, 0.0, 0.0])


@pytest.fixture
def boosted_z(canonical):
    return canonical.boosted([0.0, 0.0, 0.6])


def exact_velocity(params, taus):
    return np.array([dirac.state_at(params, t, n_derivs=2).v for t in taus])


@pytest.fixture(scope="session")
def dirac_runs():
    """RK4 runs of the canonical Dirac state over ten periods at two step sizes."""
    params = dirac.canonical_params(1.0)
    init = dirac.state_at(params, 0.0)
    runs = {}
    for dtau in (PI / 2000, PI / 4000):
        traj = integrator.integrate(lg.dirac_spec(1.0), init, 10 * PI, dtau)
        err = np.max(np.abs(traj.derivs[:, 1] - exact_velocity(params, traj.taus)))
        runs[dtau] = (traj, err)
    return params, runs


def random_four(rng, scale=1.0):
    return mk.four(*(scale * rng.standard_normal(4)))
