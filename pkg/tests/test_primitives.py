import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nyqwave.errors import PoleError
from nyqwave.primitives import MPair, sa, sinc, special_H, special_Hbar, special_M, special_Mbar

finite_t = st.floats(-50, 50, allow_nan=False)


def test_sa_and_sinc_at_zero():
    assert sa(0.0) == 1.0
    assert sinc(0.0) == 1.0
    assert np.isscalar(sa(0.0))


def test_sinc_exact_integer_zeros():
    k = np.arange(1, 200)
    assert np.all(sinc(k) == 0.0)
    assert np.all(sinc(-k) == 0.0)


def test_sinc_matches_numpy():
    x = np.linspace(-20, 20, 4001)
    np.testing.assert_allclose(sinc(x), np.sinc(x), atol=1e-15)


def test_sa_near_zero_continuous():
    x = np.array([-2e-7, -9e-8, 0.0, 9e-8, 2e-7])
    np.testing.assert_allclose(sa(x), 1.0 - x ** 2 / 6, atol=1e-15)


@given(finite_t)
def test_sa_is_even(x):
    assert sa(x) == sa(-x)


def test_H_is_scaled_sinc_and_zero_band():
    t = np.linspace(-5, 5, 101)
    np.testing.assert_allclose(special_H(2.5, t), 2.5 * np.sinc(2.5 * t), atol=1e-15)
    assert np.all(special_H(0.0, t) == 0.0)
    with pytest.raises(ValueError):
        special_H(-1.0, t)


def test_H_spectrum_is_gate():
    # H_v is the inverse transform of a gate of half-width pi v, times 1/pi... check integral
    v = 1.3
    t = np.linspace(-4000, 4000, 800001)
    # integral of H_v over t equals 1
    assert abs(np.trapezoid(special_H(v, t), t) - 1.0) < 1e-3


def test_Hbar_pole_raises():
    with pytest.raises(PoleError):
        special_Hbar(1.0, 0.0)
    with pytest.raises(PoleError):
        special_Hbar(1.0, np.array([-1.0, 0.0, 1.0]))
    with pytest.raises(ValueError):
        special_Hbar(0.0, 1.0)


def test_Hbar_values():
    t = np.array([0.25, -0.5, 3.0])
    np.testing.assert_allclose(special_Hbar(2.0, t), np.cos(2 * np.pi * t) / (np.pi * t))


def test_mpair_rejects_equal():
    with pytest.raises(ValueError):
        MPair(1.0, 1.0)
    assert MPair(1.5, 0.5).d == 1.0


def _M_direct(p, t):
    d = p.d
    return 2 * abs(d) / np.pi * (np.cos(np.pi * p.v1 * t) + 2 * d * t * np.sin(np.pi * p.v2 * t)) \
        / (1 - (2 * d * t) ** 2)


def _Mbar_direct(p, t):
    d = p.d
    return 2 * abs(d) / np.pi * (np.sin(np.pi * p.v1 * t) - 2 * d * t * np.cos(np.pi * p.v2 * t)) \
        / (1 - (2 * d * t) ** 2)


@pytest.mark.parametrize("pair", [MPair(4 / 3, 2 / 3), MPair(2 / 3, 4 / 3), MPair(8 / 3, 4 / 3),
                                  MPair(1.1, 0.9)])
def test_M_matches_direct_away_from_roots(pair):
    t = np.linspace(-7.3, 7.3, 1001)
    t = t[np.abs(1 - (2 * pair.d * t) ** 2) > 1e-3]
    np.testing.assert_allclose(special_M(pair, t), _M_direct(pair, t), rtol=1e-12, atol=1e-14)
    np.testing.assert_allclose(special_Mbar(pair, t), _Mbar_direct(pair, t),
                               rtol=1e-12, atol=1e-14)


@pytest.mark.parametrize("pair", [MPair(4 / 3, 2 / 3), MPair(8 / 3, 4 / 3), MPair(0.9, 1.1)])
@pytest.mark.parametrize("fn", [special_M, special_Mbar])
def test_M_continuous_across_removable_point(pair, fn):
    root = 1 / (2 * abs(pair.d))
    offsets = np.array([-1e-4, -1e-6, -1e-9, 0.0, 1e-9, 1e-6, 1e-4])
    vals = fn(pair, root + offsets)
    assert np.all(np.isfinite(vals))
    # smooth: second differences tiny relative to the scale of the function
    far = fn(pair, root + np.array([-1e-3, 1e-3]))
    assert np.max(np.abs(vals - vals[3])) < 1e-2 * np.max(np.abs(far)) + 1e-3
    assert abs(fn(pair, -root) - (1 if fn is special_M else -1) * fn(pair, root)) < 1e-12


@given(finite_t)
@settings(max_examples=200)
def test_M_even_Mbar_odd(t):
    p = MPair(4 / 3, 2 / 3)
    assert abs(special_M(p, t) - special_M(p, -t)) < 1e-12
    assert abs(special_Mbar(p, t) + special_Mbar(p, -t)) < 1e-12


def test_scalar_in_scalar_out():
    p = MPair(2.0, 1.0)
    for fn in (sa(0.3), sinc(0.3), special_H(1.0, 0.3), special_M(p, 0.3), special_Mbar(p, 0.3)):
        assert np.ndim(fn) == 0
