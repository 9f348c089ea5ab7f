"""Independent numerical transforms used to certify the closed forms.

Nothing here calls the time-domain closed forms; spectra go in, samples
come out (or the reverse for :func:`forward_dft`).
"""
from __future__ import annotations

from typing import Callable, Sequence

import numpy as np
from numpy.polynomial.legendre import leggauss

DEFAULT_DFT_POINTS = 2 ** 14
_T_CHUNK = 256


def inverse_dft(spectrum: Callable, band: tuple[float, float], t,
                n: int = DEFAULT_DFT_POINTS):
    """``(1/2pi) int_band F(w) exp(j w t) dw`` by an ``n``-point trapezoid sum.

    This is a direct (non-uniform output) inverse DFT over the band. The two
    end samples are taken one ulp inside the band, so a gate that is
    half-open still contributes its inner limit at both edges, which makes
    the sum equal to the periodised transform by Poisson summation.
    """
    lo, hi = map(float, band)
    w = np.linspace(lo, hi, n)
    w_eval = w.copy()
    w_eval[0] = np.nextafter(lo, hi)
    w_eval[-1] = np.nextafter(hi, lo)
    weights = np.full(n, (hi - lo) / (n - 1))
    weights[[0, -1]] *= 0.5
    fw = np.asarray(spectrum(w_eval), dtype=complex) * weights

    # exp(j w_k t) with k = k1 * n2 + k2 factors into a coarse and a fine
    # phasor, so only about 2 sqrt(n) exponentials are needed per t
    t = np.asarray(t, dtype=float)
    flat = t.ravel()
    step = (hi - lo) / (n - 1)
    n2 = int(np.ceil(np.sqrt(n)))
    n1 = -(-n // n2)
    coeffs = np.zeros(n1 * n2, dtype=complex)
    coeffs[:n] = fw
    coeffs = coeffs.reshape(n1, n2)
    out = np.empty(flat.shape, dtype=complex)
    for start in range(0, flat.size, _T_CHUNK):
        chunk = flat[start:start + _T_CHUNK]
        fine = np.exp(1j * step * np.outer(np.arange(n2), chunk))
        coarse = np.exp(1j * step * n2 * np.outer(np.arange(n1), chunk))
        inner = coeffs @ fine
        out[start:start + _T_CHUNK] = np.exp(1j * lo * chunk) * np.sum(coarse * inner, axis=0)
    return (out.reshape(t.shape) / (2.0 * np.pi))[()]


def piecewise_gauss(fn: Callable, breakpoints: Sequence[float], nodes: int = 128):
    """Integrate ``fn`` over ``[b0, b_last]`` with Gauss-Legendre on each piece."""
    x, wq = leggauss(nodes)
    total = 0.0 + 0.0j
    for a, b in zip(breakpoints[:-1], breakpoints[1:]):
        half, mid = 0.5 * (b - a), 0.5 * (a + b)
        total += np.sum(wq * half * np.asarray(fn(half * x + mid)))
    return total


def inverse_quadrature(spectrum: Callable, breakpoints: Sequence[float], t,
                       nodes: int = 256):
    """``(1/2pi) int F(w) exp(j w t) dw`` by piecewise Gauss-Legendre."""
    x, wq = leggauss(nodes)
    t = np.asarray(t, dtype=float)
    flat = t.ravel()
    out = np.zeros(flat.shape, dtype=complex)
    for a, b in zip(breakpoints[:-1], breakpoints[1:]):
        half, mid = 0.5 * (b - a), 0.5 * (a + b)
        w = half * x + mid
        fw = np.asarray(spectrum(w), dtype=complex) * wq * half
        for start in range(0, flat.size, _T_CHUNK):
            chunk = flat[start:start + _T_CHUNK]
            out[start:start + _T_CHUNK] += fw @ np.exp(1j * np.outer(w, chunk))
    return (out.reshape(t.shape) / (2.0 * np.pi))[()]


def spectral_inner_product(F: Callable, G: Callable, breakpoints: Sequence[float],
                           shift: float = 0.0, nodes: int = 128):
    """``<f, g(. - shift)>`` computed as ``int F(w) conj(G(w)) exp(j w shift) dw``.

    With spectra normalised as in :mod:`nyqwave.spectra` this is the inner
    product of the unit-norm time functions.
    """
    def integrand(w):
        return F(w) * np.conj(G(w)) * np.exp(1j * w * shift)

    return piecewise_gauss(integrand, breakpoints, nodes)


def forward_dft(samples, dt: float, t_start: float):
    """Riemann-sum forward transform of uniformly sampled data via FFT.

    Returns ``(w, F)`` with ``w`` in increasing order and
    ``F(w) = dt * sum_k f(t_k) exp(-j w t_k)``.
    """
    samples = np.asarray(samples)
    n = samples.size
    w = 2.0 * np.pi * np.fft.fftshift(np.fft.fftfreq(n, d=dt))
    spec = np.fft.fftshift(np.fft.fft(samples)) * dt * np.exp(-1j * w * t_start)
    return w, spec
