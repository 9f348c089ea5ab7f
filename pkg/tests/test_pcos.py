import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nyqwave import oracle
from nyqwave.errors import DistributionalLimitError
from nyqwave.pcos import (PcosParams, gate, icos, pcos_reparametrised, pcos_shifted, pcos_spectrum,
                         pcos_time, rcos)

params = st.builds(
    PcosParams,
    t0=st.floats(-3, 3), theta0=st.floats(-math.pi, math.pi),
    w0=st.floats(0, 6), B=st.floats(0.2, 5))


def test_validation():
    with pytest.raises(ValueError):
        PcosParams(0, 0, 1, 0)
    with pytest.raises(ValueError):
        PcosParams(0, 0, -1, 1)
    with pytest.raises(ValueError):
        PcosParams(math.nan, 0, 1, 1)
    assert PcosParams(0, 0, 1, math.inf).infinite


def test_infinite_bandwidth_is_distribution():
    p = PcosParams(1.0, 0.0, 0.0, math.inf)
    w = np.linspace(-3, 3, 7)
    np.testing.assert_allclose(pcos_spectrum(w, p), np.cos(w))
    with pytest.raises(DistributionalLimitError):
        pcos_time(0.0, p)


def test_gate_half_open():
    assert gate(1.0, 1.0, 2.0) == 1.0
    assert gate(2.0, 1.0, 2.0) == 0.0


def test_unit_gate_pairs_with_sa():
    p = PcosParams(0.0, 0.0, 0.0, 2.0)
    t = np.linspace(-10, 10, 201)
    np.testing.assert_allclose(pcos_time(t, p), 2.0 / np.pi * np.sinc(2.0 * t / np.pi),
                               atol=1e-15)


@given(params)
@settings(max_examples=60, deadline=None)
def test_rational_forms_match_exponential_form(p):
    t = np.linspace(-20, 20, 801) + 0.013
    z = pcos_time(t, p)
    aux = p.aux()
    np.testing.assert_allclose(rcos(t, aux), z.real, atol=1e-12)
    np.testing.assert_allclose(icos(t, aux), z.imag, atol=1e-12)


def test_rational_forms_at_t_equals_t0():
    p = PcosParams(0.75, 0.4, 2.0, 1.5)
    t = np.array([-0.75, 0.75, 0.75 + 1e-9])
    z = pcos_time(t, p)
    np.testing.assert_allclose(rcos(t, p.aux()), z.real, atol=1e-9)
    np.testing.assert_allclose(icos(t, p.aux()), z.imag, atol=1e-9)


def test_matches_inverse_dft_oracle(rng):
    t = np.linspace(-32, 32, 257)
    for _ in range(10):
        p = PcosParams(rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(0, 6),
                       rng.uniform(0.2, 5))
        ref = oracle.inverse_dft(lambda w: pcos_spectrum(w, p), p.edges, t)
        assert np.max(np.abs(ref - pcos_time(t, p))) < 1e-6


def test_forward_dft_reproduces_spectrum(rng):
    # window +-256, N = 2^14. Each gate edge is a jump J, whose truncated-tail
    # error at distance d is at most J / (pi L d); the spectrum peak is 1.
    n, half = 2 ** 14, 256.0
    dt = 2 * half / n
    t = -half + dt * np.arange(n)
    for _ in range(40):
        p = PcosParams(rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(0, 6),
                       rng.uniform(0.2, 5))
        w, F = oracle.forward_dft(pcos_time(t, p), dt, t[0])
        lo, hi = p.edges
        j_lo = abs(pcos_spectrum(lo, p))
        j_hi = abs(math.cos(hi * p.t0 + p.theta0))
        d_lo, d_hi = np.abs(w - lo), np.abs(w - hi)
        keep = (d_lo > w[1] - w[0]) & (d_hi > w[1] - w[0])
        bound = 1e-3 + (j_lo / d_lo + j_hi / d_hi) / (np.pi * half)
        err = np.abs(F - pcos_spectrum(w, p))
        assert np.all(err[keep] <= bound[keep])


@given(params, st.floats(-5, 5))
@settings(max_examples=60, deadline=None)
def test_shift_property(p, T):
    t = np.linspace(-10, 10, 101)
    z = pcos_shifted(t, T, p)
    np.testing.assert_array_equal(z, pcos_time(t - T, p))
    # spectrum of f(t - T) is exp(-j w T) F(w)
    ref = oracle.inverse_dft(lambda w: np.exp(-1j * w * T) * pcos_spectrum(w, p), p.edges, t,
                             n=2 ** 12)
    assert np.max(np.abs(z - ref)) < 1e-4


def test_shift_is_not_a_t0_rewrite():
    p = PcosParams(0.3, 0.2, 1.0, 1.0)
    t = np.linspace(-5, 5, 11)
    np.testing.assert_array_equal(pcos_reparametrised(t, 0.0, p), pcos_time(t, p))
    gap = np.abs(pcos_shifted(t, 1.0, p) - pcos_reparametrised(t, 1.0, p)).max()
    assert gap > 0.1
