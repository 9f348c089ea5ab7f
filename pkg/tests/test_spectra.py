import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from nyqwave.errors import AdmissibilityError
from nyqwave.pcos import pcos_spectrum
from nyqwave.spectra import (DEFAULT_ALPHAS, TWO_PI, RollOff, SpectralGrid, meyer_sum,
                             nyquist_sum, raised_cosine, refinement_filter, scaling_breakpoints,
                             shaping_pulse, shaping_pulse_pcos_decomposition, sqrt_raised_cosine,
                             two_scale_residual, vsb_check, wavelet_spectrum)

from conftest import ORTHO_ALPHAS

alphas = st.floats(0.001, 0.999)


def test_rolloff_parse_and_limits():
    assert RollOff.parse("4/15").alpha == pytest.approx(4 / 15, abs=0)
    assert RollOff.parse(" 0.25 ").alpha == 0.25
    assert RollOff(0).shannon and RollOff(1 / 3).orthogonal_mra
    assert not RollOff(0.34).orthogonal_mra
    for bad in (-0.1, 1.0, float("nan")):
        with pytest.raises(AdmissibilityError):
            RollOff(bad)
    with pytest.raises(AdmissibilityError):
        RollOff.parse("one third")


def test_default_list_has_six_entries():
    assert DEFAULT_ALPHAS == (0.0, 1 / 15, 2 / 15, 1 / 4, 4 / 15, 1 / 3)


def test_raised_cosine_values():
    r = RollOff(0.25)
    assert raised_cosine(0.0, r) == pytest.approx(1 / TWO_PI)
    assert raised_cosine(np.pi, r) == pytest.approx(0.5 / TWO_PI)
    assert raised_cosine(1.25 * np.pi, r) == 0.0
    assert raised_cosine(-0.74 * np.pi, r) == pytest.approx(1 / TWO_PI)


@given(alphas, st.floats(-10, 10))
def test_raised_cosine_even_and_sqrt(a, w):
    assert raised_cosine(w, a) == raised_cosine(-w, a)
    assert sqrt_raised_cosine(w, a) ** 2 == pytest.approx(raised_cosine(w, a), abs=1e-16)


@given(alphas)
def test_nyquist_partition_any_rolloff(a):
    w = np.linspace(-np.pi, np.pi, 1001)
    dev = nyquist_sum(lambda x: raised_cosine(x, a), w) - 1 / TWO_PI
    assert np.max(np.abs(dev)) < 1e-13


def test_meyer_condition_fails_without_square_root():
    # Phi = 2 pi P (not its square root) violates the Meyer condition
    w = np.linspace(-np.pi, np.pi, 1001)
    dev = meyer_sum(lambda x: np.sqrt(TWO_PI) * raised_cosine(x, 0.25), w) - 1 / TWO_PI
    assert np.max(np.abs(dev)) > 1e-3


def test_breakpoints():
    assert scaling_breakpoints(0) == [-np.pi, np.pi]
    bp = scaling_breakpoints(0.25)
    np.testing.assert_allclose(bp, [-1.25 * np.pi, -0.75 * np.pi, 0.75 * np.pi, 1.25 * np.pi])


@pytest.mark.parametrize("a", ORTHO_ALPHAS)
def test_shaping_pulse_profile(a):
    r = RollOff(a)
    w = np.linspace(0, 3 * np.pi, 30001)
    s = shaping_pulse(w, r)
    assert np.all(s >= 0) and np.all(s <= 1 / np.sqrt(TWO_PI) + 1e-16)
    assert np.all(s[w < np.pi * (1 - a)] == 0)
    assert np.all(s[w >= TWO_PI * (1 + a)] == 0)
    # continuous: no jumps larger than the slope allows
    assert np.max(np.abs(np.diff(s))) < 1e-3
    # its square is a band-pass partition: S^2(w) = P(w/2) - P(w), w > 0
    np.testing.assert_allclose(s ** 2, raised_cosine(w / 2, r) - raised_cosine(w, r), atol=1e-15)


def test_shaping_pulse_even_and_one_sided():
    x = np.linspace(0.05, 7, 140)
    w = np.concatenate([-x[::-1], x])
    even = shaping_pulse(w, 0.25)
    one = shaping_pulse(w, 0.25, one_sided=True)
    np.testing.assert_array_equal(even, even[::-1])
    assert np.all(one[w < 0] == 0)
    np.testing.assert_array_equal(one[w > 0], even[w > 0])


def test_shaping_pulse_rejects_large_rolloff():
    with pytest.raises(AdmissibilityError, match="exceeds 1/3"):
        shaping_pulse(1.0, 0.5)


def test_wavelet_spectrum_phase():
    w = np.array([4.0, 5.0])
    np.testing.assert_allclose(wavelet_spectrum(w, 0.25),
                               np.exp(-0.5j * w) * shaping_pulse(w, 0.25))


@pytest.mark.parametrize("a", [0.05, 0.1, 0.2, 0.3, 0.33])
def test_pcos_decomposition(a):
    w = np.linspace(0, 3 * np.pi, 10001)[1:]
    total = sum(pcos_spectrum(w, p) for p in shaping_pulse_pcos_decomposition(a))
    assert np.max(np.abs(total - np.sqrt(TWO_PI) * shaping_pulse(w, a))) < 1e-12


@pytest.mark.parametrize("a", [0.0, 1 / 3, 0.4])
def test_pcos_decomposition_domain(a):
    with pytest.raises(AdmissibilityError):
        shaping_pulse_pcos_decomposition(a)


@pytest.mark.parametrize("a", DEFAULT_ALPHAS)
def test_refinement_filter(a):
    v = np.linspace(-np.pi, np.pi, 4001)
    h = refinement_filter(v, a)
    assert refinement_filter(0.0, a) == pytest.approx(np.sqrt(2))
    np.testing.assert_allclose(refinement_filter(v + TWO_PI, a), h, atol=1e-15)
    if a > 0:
        # quadrature-mirror condition of an orthonormal low-pass filter
        np.testing.assert_allclose(h ** 2 + refinement_filter(v + np.pi, a) ** 2, 2.0,
                                   atol=1e-13)


def test_two_scale_relation_and_its_failure():
    w = np.linspace(-4 * np.pi, 4 * np.pi, 16385)
    for a in DEFAULT_ALPHAS:
        assert two_scale_residual(a, w) <= 1e-12
    assert two_scale_residual(0.4, w) > 1e-3
    assert two_scale_residual(0.34, w) > 0


def test_vsb_check():
    grid = SpectralGrid.symmetric(TWO_PI, 4097)
    good = vsb_check(lambda w: raised_cosine(w, 0.3), grid)
    assert good.passed and good.residual < 1e-15
    bad = vsb_check(lambda w: sqrt_raised_cosine(w, 0.3), grid)
    assert not bad.passed
    assert abs(abs(bad.worst_w) - np.pi) < 0.31 * np.pi


def test_spectral_grid_validation():
    with pytest.raises(ValueError):
        SpectralGrid(np.array([0.0, 1.0, 3.0]))
    with pytest.raises(ValueError):
        SpectralGrid(np.array([1.0]))
    g = SpectralGrid.symmetric(1.0, 5).sample(np.cos)
    assert g.w_step == 0.5
    np.testing.assert_allclose(g.values.real, np.cos(g.w_values))
