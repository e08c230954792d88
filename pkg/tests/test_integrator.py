import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import exact_velocity
from zitterlab import dirac, integrator as it, lagrangian as lg, minkowski as mk
from zitterlab.errors import DegenerateLeadingCoefficient, InsufficientDerivatives, NonFiniteState

PI = np.pi


@pytest.mark.parametrize("coeffs, dim", [((), 8), ((-0.25,), 16), ((-1.25, 0.25), 24)])
def test_reduce_order(coeffs, dim):
    assert it.reduce_order(lg.LagrangianSpec(1.0, coeffs)) == dim


def test_degenerate_leading_coefficient():
    with pytest.raises(DegenerateLeadingCoefficient):
        it.reduce_order(lg.LagrangianSpec(1.0, (-1.0, 0.0)))


def test_init_must_carry_the_chain():
    with pytest.raises(InsufficientDerivatives):
        it.integrate(lg.dirac_spec(), lg.KinematicState(0.0, np.zeros((3, 4))), 1.0, 0.1)


def test_dirac_run_matches_closed_form(dirac_runs):
    _, runs = dirac_runs
    err = runs[PI / 2000][1]
    assert err <= 1e-6


def test_fourth_order_convergence(dirac_runs):
    _, runs = dirac_runs
    ratio = runs[PI / 2000][1] / runs[PI / 4000][1]
    assert 14 <= ratio <= 18


def test_dirac_run_conserves_charges(dirac_runs):
    _, runs = dirac_runs
    rep = it.conservation_report(runs[PI / 2000][0])
    assert rep.p_drift <= 1e-8
    assert rep.h_drift <= 1e-8
    assert rep.j_drift <= 1e-7
    assert rep.skipped == ()


def test_dirac_run_passes_kinematic_audit(dirac_runs):
    _, runs = dirac_runs
    audit = it.kinematic_audit(runs[PI / 2000][0])
    assert audit["max_h1"] <= 1e-7 and audit["max_h2"] <= 1e-7
    assert audit["max_orthogonality"] <= 1e-10
    assert audit["v2_excess"] <= 1e-7


def test_compton_frequency_from_zero_crossings(dirac_runs):
    params, runs = dirac_runs
    traj = runs[PI / 2000][0]
    signal = traj.derivs[:, 1, 1] - params.p[1] / params.m
    assert it.zero_crossing_frequency(traj.taus, signal) == pytest.approx(2.0, rel=5e-4)


def test_spinless_run_is_exact():
    v = mk.four(1.25, 0.75)
    init = lg.KinematicState(0.0, [mk.four(0.5, 1, 2, 3), v])
    traj = it.integrate(lg.spinless_spec(1.0), init, 5.0, 0.1)
    np.testing.assert_allclose(traj.derivs[:, 0], init.x + np.outer(traj.taus, v), atol=1e-13)
    np.testing.assert_array_equal(traj.derivs[:, 1], np.tile(v, (len(traj), 1)))
    rep = it.conservation_report(traj)
    assert rep.p_drift <= 1e-14 and rep.h_drift <= 1e-14 and rep.j_drift <= 1e-14


def test_anti_descartes_growth_rate():
    spec = lg.LagrangianSpec(1.0, (0.25,))
    init = lg.KinematicState(0.0, [mk.four(0), mk.four(1), mk.four(0, 1e-3), mk.four(0, 2e-3)])
    try:
        traj = it.integrate(spec, init, 6.0, 1e-3)
    except NonFiniteState:
        return
    norms = np.linalg.norm(traj.derivs[:, 2], axis=1)
    sel = traj.taus >= 2.0
    assert it.growth_rate(traj.taus[sel], norms[sel]) == pytest.approx(2.0, rel=0.05)


def test_divergence_raises():
    spec = lg.LagrangianSpec(1.0, (0.25,))
    init = lg.KinematicState(0.0, [mk.four(0), mk.four(1), mk.four(0, 1.0), mk.four(0, 2.0)])
    with pytest.raises(NonFiniteState) as info:
        it.integrate(spec, init, 30.0, 1e-2)
    assert 10 < info.value.tau < 30


def test_corrupted_trajectory_detected(dirac_runs):
    _, runs = dirac_runs
    traj = runs[PI / 2000][0].copy()
    traj.derivs[len(traj) // 2, 1] *= 1.001
    assert it.conservation_report(traj).p_drift >= 5e-4


def test_time_reversal_returns_to_start():
    params = dirac.canonical_params(1.0).boosted([0.3, 0.1, 0.0])
    spec = params.spec
    init = dirac.state_at(params, 0.0)
    forward = it.integrate(spec, init, 2 * PI, PI / 1000)
    end = forward[-1]
    back = it.integrate(spec, it.time_reversed(end), -init.tau, PI / 1000)
    returned = it.time_reversed(back[-1])
    np.testing.assert_allclose(returned.derivs[:4], init.derivs[:4], atol=1e-8)


def test_third_order_run_conserves_momentum_and_spin():
    from oracles import chain_at, multimode_worldline

    spec = lg.LagrangianSpec(1.0, (-49 / 36, 14 / 36, -1 / 36))
    wl = multimode_worldline((1.0, 0.1, 0.0, 0.0), [(1, (0, 0, 0.1, 0), (0, 0, 0, 0.1)), (3, (0, 0.05, 0, 0), (0, 0, 0.05, 0))])
    init = lg.KinematicState(0.0, chain_at(wl, 8, 0.0))
    traj = it.integrate(spec, init, 2 * PI, PI / 2000)
    rep = it.conservation_report(traj)
    assert rep.p_drift <= 1e-8 and rep.j_drift <= 1e-7
    assert rep.skipped == ("H",)


@settings(max_examples=15, deadline=None)
@given(
    st.lists(st.floats(-0.5, 0.5), min_size=3, max_size=3),
    st.floats(0.5, 2.0),
)
def test_integrated_samples_pass_constraints(w, m):
    if np.linalg.norm(w) >= 0.8:
        w = list(np.asarray(w) * 0.5)
    params = dirac.canonical_params(m).boosted(w)
    traj = it.integrate(params.spec, dirac.state_at(params, 0.0), 2 * params.period, params.period / 400)
    audit = it.kinematic_audit(traj)
    scale = mk.lorentz_factor(w) ** 2
    assert audit["max_h1"] <= 1e-7 * scale * m * m
    assert audit["max_h2"] <= 1e-7 * scale * m
    assert audit["max_orthogonality"] <= 1e-7 * scale
    assert audit["v2_excess"] <= 1e-7 * scale
    exact = exact_velocity(params, traj.taus)
    assert np.max(np.abs(traj.derivs[:, 1] - exact)) <= 1e-5 * scale
