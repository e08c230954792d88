import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import chain_at, multimode_worldline, ostrogradsky_angular, ostrogradsky_energy, ostrogradsky_momenta
from zitterlab import dirac, lagrangian as lg, minkowski as mk
from zitterlab.errors import InsufficientDerivatives, UnsupportedOrder

DIRAC = lg.dirac_spec(1.0)
TWO_FREQ = lg.LagrangianSpec(1.0, (-5 / 4, 1 / 4))  # frequencies 1 and 2
THREE_FREQ = lg.LagrangianSpec(1.0, (-49 / 36, 14 / 36, -1 / 36))  # frequencies 1, 2, 3


def canonical_state(tau):
    return dirac.state_at(dirac.canonical_params(1.0), tau)


def two_freq_worldline():
    modes = [
        (1, (0.1, 0.3, -0.2, 0.5), (0.0, 0.2, 0.4, -0.1)),
        (2, (0.2, -0.1, 0.6, 0.3), (-0.3, 0.5, 0.1, 0.2)),
    ]
    return multimode_worldline((1.3, 0.4, -0.2, 0.7), modes, x0=(0.5, -1, 2, 0.25))


def three_freq_worldline():
    modes = [
        (1, (0.1, 0.3, -0.2, 0.5), (0.0, 0.2, 0.4, -0.1)),
        (2, (0.2, -0.1, 0.6, 0.3), (-0.3, 0.5, 0.1, 0.2)),
        (3, (0.0, 0.4, 0.1, -0.2), (0.1, -0.2, 0.3, 0.0)),
    ]
    return multimode_worldline((1.1, 0.2, 0.3, -0.1), modes)


def test_spec_basics():
    assert DIRAC.order_n == 1 and DIRAC.k == (1.0, -0.25)
    assert lg.spinless_spec(2.0).k == (2.0,)
    with pytest.raises(ValueError):
        lg.LagrangianSpec(0.0)


def test_momentum_on_canonical_state():
    np.testing.assert_allclose(lg.canonical_momentum(DIRAC, canonical_state(0.0)), [1, 0, 0, 0], atol=1e-14)
    np.testing.assert_allclose(lg.canonical_momentum(DIRAC, canonical_state(np.pi / 4)), [1, 0, 0, 0], atol=1e-14)


def test_momentum_spinless():
    v = mk.four(1.25, 0.75)
    st_ = lg.KinematicState(0.0, [mk.four(0), v])
    np.testing.assert_array_equal(lg.canonical_momentum(lg.spinless_spec(2.0), st_), 2.0 * v)
    np.testing.assert_array_equal(lg.zbw_velocity(lg.spinless_spec(2.0), st_), np.zeros(4))


def test_zbw_velocity_examples():
    np.testing.assert_allclose(lg.zbw_velocity(DIRAC, canonical_state(0.0)), [0, 1, 0, 0], atol=1e-14)
    np.testing.assert_allclose(lg.zbw_velocity(DIRAC, canonical_state(np.pi / 2)), [0, -1, 0, 0], atol=1e-14)


def test_newton_residual_examples():
    for tau in (0.0, 0.3, 2.0):
        assert np.max(np.abs(lg.newton_residual(DIRAC, canonical_state(tau)))) <= 1e-10
    a = mk.four(0, 1, 2, 0)
    st_ = lg.KinematicState(0.0, [mk.four(0), mk.four(1), a])
    np.testing.assert_array_equal(lg.newton_residual(lg.spinless_spec(3.0), st_), 3.0 * a)
    good = canonical_state(0.4)
    bad = lg.KinematicState(good.tau, good.derivs.copy())
    bad.derivs[2] *= 1.01
    np.testing.assert_allclose(lg.newton_residual(DIRAC, bad), 0.01 * good.a, atol=1e-14)


def test_missing_derivatives():
    st_ = lg.KinematicState(0.0, [mk.four(0), mk.four(1)])
    with pytest.raises(InsufficientDerivatives):
        lg.canonical_momentum(DIRAC, st_)


def test_spin_on_canonical_state():
    st_ = canonical_state(0.0)
    np.testing.assert_allclose(lg.spin_vector(DIRAC, st_), [0, 0, -0.5], atol=1e-15)
    t = lg.spin_tensor(DIRAC, st_)
    np.testing.assert_allclose(mk.spin_part(t), [0, 0, -0.5], atol=1e-15)
    np.testing.assert_allclose(mk.boost_part(t), [0, -0.5, 0], atol=1e-15)


def test_spin_collinear_and_spinless():
    st_ = lg.KinematicState(0.0, [mk.four(0), mk.four(1, 0.5), mk.four(0, 2.0), mk.four(0, -1.0)])
    np.testing.assert_array_equal(lg.spin_vector(DIRAC, st_), np.zeros(3))
    np.testing.assert_array_equal(lg.spin_tensor(lg.spinless_spec(), st_), np.zeros((4, 4)))


def test_spin_above_third_order_unsupported():
    spec = lg.LagrangianSpec(1.0, (-1, 1, -1, 1))
    with pytest.raises(UnsupportedOrder):
        lg.spin_vector(spec, lg.KinematicState(0.0, np.zeros((10, 4))))


@pytest.mark.parametrize(
    "spec, worldline_fn, order",
    [(TWO_FREQ, two_freq_worldline, 6), (THREE_FREQ, three_freq_worldline, 8)],
)
def test_spin_tensor_matches_ostrogradsky(spec, worldline_fn, order):
    wl = worldline_fn()
    for tau in (0.0, 0.7, 2.9):
        chain = chain_at(wl, order, tau)
        _, spin_oracle = ostrogradsky_angular(spec.k, chain)
        st_ = lg.KinematicState(tau, chain)
        np.testing.assert_allclose(lg.spin_tensor(spec, st_), spin_oracle, atol=1e-12)


@pytest.mark.parametrize(
    "spec, worldline_fn, order",
    [(DIRAC, None, 4), (TWO_FREQ, two_freq_worldline, 6), (THREE_FREQ, three_freq_worldline, 8)],
)
def test_total_angular_momentum_conserved_on_exact_solutions(spec, worldline_fn, order):
    if worldline_fn is None:
        params = dirac.canonical_params(1.0).boosted([0.2, -0.3, 0.4])
        states = [dirac.state_at(params, t) for t in (0.0, 0.6, 1.9, 4.4)]
    else:
        wl = worldline_fn()
        states = [lg.KinematicState(t, chain_at(wl, order, t)) for t in (0.0, 0.6, 1.9, 4.4)]
    js = [lg.total_angular_momentum(spec, s) for s in states]
    ps = [lg.canonical_momentum(spec, s) for s in states]
    for j, p in zip(js[1:], ps[1:]):
        np.testing.assert_allclose(j, js[0], atol=1e-11)
        np.testing.assert_allclose(p, ps[0], atol=1e-11)


def test_momentum_matches_ostrogradsky():
    wl = three_freq_worldline()
    chain = chain_at(wl, 8, 1.3)
    np.testing.assert_allclose(
        lg.canonical_momentum(THREE_FREQ, lg.KinematicState(1.3, chain)),
        ostrogradsky_momenta(THREE_FREQ.k, chain)[0],
        atol=1e-12,
    )


def test_hamiltonian_examples():
    for tau in (0.0, 0.8, 3.0):
        assert lg.hamiltonian(DIRAC, canonical_state(tau)) == pytest.approx(1.5, abs=1e-13)
    st_ = lg.KinematicState(0.0, [mk.four(0), mk.four(1)])
    assert lg.hamiltonian(lg.spinless_spec(2.0), st_) == 1.0


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 2), st.integers(0, 2**32 - 1))
def test_hamiltonian_matches_ostrogradsky_on_any_chain(n, seed):
    rng = np.random.default_rng(seed)
    spec = lg.LagrangianSpec(rng.uniform(0.5, 2), tuple(rng.uniform(-1, 1, n)))
    chain = rng.standard_normal((2 * n + 2, 4))
    st_ = lg.KinematicState(0.0, chain)
    oracle = ostrogradsky_energy(spec.k, chain)
    assert lg.hamiltonian(spec, st_) == pytest.approx(oracle, rel=1e-12, abs=1e-12)


def test_second_order_hamiltonian_conserved():
    wl = two_freq_worldline()
    hs = [lg.hamiltonian(TWO_FREQ, lg.KinematicState(t, chain_at(wl, 6, t))) for t in (0.0, 1.0, 2.5)]
    np.testing.assert_allclose(hs, hs[0], atol=1e-12)


def test_hamiltonian_order_limit():
    with pytest.raises(UnsupportedOrder):
        lg.hamiltonian(THREE_FREQ, lg.KinematicState(0.0, np.zeros((8, 4))))


def test_second_momentum_examples():
    np.testing.assert_allclose(lg.second_momentum(DIRAC, canonical_state(0.0)), [0, 0, -0.5, 0], atol=1e-15)
    np.testing.assert_allclose(lg.second_momentum(DIRAC, canonical_state(np.pi / 4)), [0, 0.5, 0, 0], atol=1e-15)
    st_ = lg.KinematicState(0.0, [mk.four(0), mk.four(1), mk.four(0)])
    np.testing.assert_array_equal(lg.second_momentum(DIRAC, st_), np.zeros(4))


def test_hamilton_residuals_examples():
    for tau in (0.0, 1.1):
        for r in lg.hamilton_residuals(DIRAC, canonical_state(tau)):
            assert np.max(np.abs(r)) <= 1e-10
    free = lg.KinematicState(0.0, [mk.four(0), mk.four(1.25, 0.75), np.zeros(4), np.zeros(4), np.zeros(4)])
    for r in lg.hamilton_residuals(DIRAC, free):
        np.testing.assert_array_equal(r, np.zeros(4))
    st_ = canonical_state(0.0)
    pi = lg.second_momentum(DIRAC, st_) + mk.four(0, 0.1)
    third = lg.hamilton_residuals(DIRAC, st_, pi=pi)[2]
    np.testing.assert_allclose(third, [0, -0.4, 0, 0], atol=1e-14)


@settings(max_examples=50, deadline=None)
@given(st.floats(0, 10), st.floats(-0.5, 0.5), st.booleans())
def test_newton_and_hamilton_vanish_together(tau, eps, perturb):
    st_ = canonical_state(tau)
    if perturb and abs(eps) > 1e-3:
        st_.derivs[4] = st_.derivs[4] * (1 + eps)
    newton = np.max(np.abs(lg.newton_residual(DIRAC, st_)))
    hamilton = max(np.max(np.abs(r)) for r in lg.hamilton_residuals(DIRAC, st_))
    assert (newton <= 1e-10) == (hamilton <= 1e-10)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1), st.floats(-3, 3))
def test_first_order_spin_is_antisymmetric_and_bilinear(seed, c):
    rng = np.random.default_rng(seed)
    x, v, a, a1 = rng.standard_normal((4, 4))
    s_va = lg.spin_vector(DIRAC, lg.KinematicState(0.0, [x, v, a, a1]))
    s_av = lg.spin_vector(DIRAC, lg.KinematicState(0.0, [x, a, v, a1]))
    s_scaled = lg.spin_vector(DIRAC, lg.KinematicState(0.0, [x, c * v, a, a1]))
    np.testing.assert_allclose(s_va, -s_av, atol=1e-14)
    np.testing.assert_allclose(s_scaled, c * s_va, atol=1e-12)
