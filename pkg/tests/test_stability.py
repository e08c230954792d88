import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from zitterlab import cronon, lagrangian as lg, stability as stab
from zitterlab.errors import UnsupportedOrder


@pytest.mark.parametrize(
    "spec, expected",
    [
        (lg.dirac_spec(1.0), [1.0, 0.25]),
        (lg.LagrangianSpec(1.0, (-5 / 4, 1 / 4)), [1.0, 1.25, 0.25]),
        (lg.LagrangianSpec(2.0, (-1.0,)), [2.0, 1.0]),
    ],
)
def test_characteristic_coefficients(spec, expected):
    assert stab.characteristic_coefficients(spec) == pytest.approx(expected, abs=0)


def test_spinless_has_no_characteristic_equation():
    with pytest.raises(UnsupportedOrder):
        stab.spectrum(lg.spinless_spec())


def test_dirac_spectrum():
    sp = stab.spectrum(lg.dirac_spec(1.0))
    assert sp.oscillatory
    assert sp.frequencies == pytest.approx((2.0,), abs=1e-12)
    assert sp.roots_z2[0] == pytest.approx(-4.0, abs=1e-12)


def test_two_frequency_spectrum():
    sp = stab.spectrum(lg.LagrangianSpec(1.0, (-5 / 4, 1 / 4)))
    assert sp.oscillatory
    assert sp.frequencies == pytest.approx((1.0, 2.0), abs=1e-9)
    assert [u.real for u in sp.roots_z2] == pytest.approx([-4.0, -1.0], abs=1e-9)


def test_wrong_sign_is_not_oscillatory():
    spec = lg.LagrangianSpec(1.0, (0.25,))
    sp = stab.spectrum(spec)
    assert not sp.oscillatory
    assert sp.frequencies == ()
    assert sp.growth_rates == pytest.approx((2.0,), abs=1e-12)
    assert not stab.descartes_check(spec)


def test_descartes_examples():
    assert stab.descartes_check(lg.dirac_spec())
    assert not stab.descartes_check(lg.LagrangianSpec(1.0, (1.0,)))
    assert stab.descartes_check(cronon.cronon_spec(1.0, 0.5, 20))


def test_complex_roots_not_oscillatory():
    # 1 + u + u^2: Descartes signs hold but the roots are complex
    spec = lg.LagrangianSpec(1.0, (-1.0, 1.0))
    assert stab.descartes_check(spec)
    assert not stab.spectrum(spec).oscillatory


def _polynomial_from_roots(roots):
    """Lagrangian whose characteristic polynomial in u is prod (u - r), scaled so m = prod(-r)."""
    poly = np.polynomial.polynomial.polyfromroots(roots)
    poly = poly / poly[0]
    k = [c * (-1) ** i for i, c in enumerate(poly)]
    return lg.LagrangianSpec(k[0], tuple(k[1:]))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.floats(0.2, 5.0), min_size=1, max_size=4))
def test_known_frequencies_recovered(freqs):
    freqs = sorted(freqs)
    assume(all(b - a > 0.05 for a, b in zip(freqs, freqs[1:])))
    spec = _polynomial_from_roots([-(w * w) for w in freqs])
    sp = stab.spectrum(spec)
    assert sp.oscillatory
    assert stab.descartes_check(spec)
    np.testing.assert_allclose(sp.frequencies, freqs, rtol=1e-7)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.floats(-5, 5, allow_nan=False).filter(lambda x: abs(x) > 1e-3), min_size=1, max_size=4))
def test_descartes_is_necessary(coeffs):
    spec = lg.LagrangianSpec(1.0, tuple(coeffs))
    if stab.spectrum(spec).oscillatory:
        assert stab.descartes_check(spec)


@settings(max_examples=100, deadline=None)
@given(st.floats(0.1, 10), st.floats(-10, -0.01))
def test_first_order_frequency(m, k1):
    sp = stab.spectrum(lg.LagrangianSpec(m, (k1,)))
    assert sp.frequencies[0] == pytest.approx(np.sqrt(m / abs(k1)), rel=1e-10)
