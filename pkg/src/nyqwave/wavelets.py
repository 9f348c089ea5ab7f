"""Closed-form scaling functions and wavelets in the time domain.

The closed forms follow the ``(1/2pi) int F exp(jwt) dw`` inverse convention
of :mod:`nyqwave.pcos`, so e.g. ``deo_scaling`` has squared norm ``1/(2pi)``;
``sqrt(2pi) * deo_scaling`` is the unit-norm scaling function whose spectrum
is :func:`nyqwave.spectra.sqrt_raised_cosine`.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .primitives import MPair, _removable_quotient, sinc, special_H, special_M, special_Mbar
from .spectra import INV_SQRT_2PI, RollOff, as_rolloff, require_orthogonal

EFFECTIVE_SUPPORT = (-12.0, 12.0)
DEFAULT_TABLE_POINTS = 1024


@dataclass(frozen=True)
class SampledSignal:
    """Uniformly sampled real or complex series starting at ``t_start``."""

    t_start: float
    dt: float
    samples: np.ndarray

    def __post_init__(self):
        if not (self.dt > 0 and np.isfinite(self.dt)):
            raise ValueError("sample interval dt must be positive")
        if not np.isfinite(self.t_start):
            raise ValueError("t_start must be finite")
        s = np.asarray(self.samples)
        if s.ndim != 1 or s.size < 1:
            raise ValueError("a signal needs at least one sample")
        if not np.all(np.isfinite(s)):
            raise ValueError("signal samples must be finite")
        s = s.astype(complex if np.iscomplexobj(s) else float)
        s.setflags(write=False)
        object.__setattr__(self, "samples", s)

    @property
    def n(self) -> int:
        return self.samples.size

    @property
    def times(self) -> np.ndarray:
        return self.t_start + self.dt * np.arange(self.n)

    @property
    def is_complex(self) -> bool:
        return np.iscomplexobj(self.samples)


def gsha_scaling(t, r):
    """Raised-cosine pulse ``cos(alpha pi t) / (1 - (2 alpha t)^2) * sinc(t)``.

    Zero at every nonzero integer; its translates are not orthogonal.
    """
    r = as_rolloff(r)
    t = np.asarray(t, dtype=float)
    if r.shannon:
        return sinc(t)
    w = r.alpha * np.pi

    def num(t):
        return np.cos(w * t)

    def dnum(k, t):
        return w ** k * np.cos(w * t + k * np.pi / 2)

    return (_removable_quotient(num, dnum, 2 * r.alpha, t) * sinc(t))[()]


def deo_scaling(t, r):
    """Scaling function whose spectrum is the square-root raised cosine."""
    r = as_rolloff(r)
    a = r.alpha
    out = special_H(1 - a, t)
    if not r.shannon:
        out = out + special_M(MPair(1 + a, 1 - a), t)
    return (INV_SQRT_2PI * out)[()]


def _hbar_difference(va, vb, t):
    # Hbar_va(t) - Hbar_vb(t) without its two cancelling 1/(pi t) poles
    t = np.asarray(t, dtype=float)
    return -(va - vb) * np.sin(0.5 * np.pi * (va + vb) * t) * sinc(0.5 * (va - vb) * t)


def shaping_real(t, r):
    """Real part of the inverse transform of the one-sided shaping pulse."""
    r = as_rolloff(r)
    require_orthogonal(r, "the shaping pulse")
    a = r.alpha
    t = np.asarray(t, dtype=float)
    out = special_H(2 * (1 - a), t) - special_H(1 + a, t)
    if not r.shannon:
        out = out + special_M(MPair(1 - a, 1 + a), t)
        out = out + special_M(MPair(2 * (1 + a), 2 * (1 - a)), t)
    return (0.5 * INV_SQRT_2PI * out)[()]


def shaping_imag(t, r):
    """Imaginary part of the inverse transform of the one-sided shaping pulse.

    Odd in ``t``. The two ``Hbar`` terms are combined before evaluation, so
    ``t = 0`` is an ordinary point.
    """
    r = as_rolloff(r)
    require_orthogonal(r, "the shaping pulse")
    a = r.alpha
    t = np.asarray(t, dtype=float)
    out = _hbar_difference(1 + a, 2 * (1 - a), t)
    if not r.shannon:
        out = out + special_Mbar(MPair(1 - a, 1 + a), t)
        out = out + special_Mbar(MPair(2 * (1 + a), 2 * (1 - a)), t)
    return (0.5 * INV_SQRT_2PI * out)[()]


def deo_wavelet(t, r):
    """Complex analysing wavelet ``s(t - 1/2)``.

    Its spectrum is ``exp(-jw/2) S(w)`` restricted to ``w > 0``
    (``wavelet_spectrum(w, r, analytic=True)``).
    """
    t = np.asarray(t, dtype=float) - 0.5
    return (shaping_real(t, r) + 1j * shaping_imag(t, r))[()]


def real_wavelet(t, r):
    """Real wavelet ``2 Re deo_wavelet``, whose spectrum is ``exp(-jw/2) S(|w|)``.

    This is the wavelet of the orthogonal MRA (up to the ``sqrt(2pi)``
    normalisation noted in the module docstring).
    """
    return (2.0 * shaping_real(np.asarray(t, dtype=float) - 0.5, r))[()]


@dataclass(frozen=True)
class WaveletTable:
    """Complex wavelet samples on a uniform grid."""

    alpha: RollOff
    grid: SampledSignal
    effective_support: tuple[float, float] = field(default=EFFECTIVE_SUPPORT)

    @property
    def name(self) -> str:
        return f"cdeo{self.alpha.alpha:.5f}"

    def leakage(self) -> float:
        """Largest ``|psi|`` outside the effective support, relative to the peak."""
        t = self.grid.times
        mag = np.abs(self.grid.samples)
        lo, hi = self.effective_support
        outside = (t < lo) | (t > hi)
        if not np.any(outside):
            return 0.0
        return float(mag[outside].max() / mag.max())


def tabulate(r, t_start: float = EFFECTIVE_SUPPORT[0],
             dt: float = (EFFECTIVE_SUPPORT[1] - EFFECTIVE_SUPPORT[0]) / (DEFAULT_TABLE_POINTS - 1),
             n: int = DEFAULT_TABLE_POINTS) -> WaveletTable:
    """Sample :func:`deo_wavelet` at ``t_start + k dt``, ``k < n``."""
    r = as_rolloff(r)
    if int(n) != n or n < 2:
        raise ValueError("a wavelet table needs n >= 2 samples")
    if not (dt > 0 and np.isfinite(dt)):
        raise ValueError("table step dt must be positive")
    t = t_start + dt * np.arange(int(n))
    return WaveletTable(r, SampledSignal(float(t_start), float(dt), deo_wavelet(t, r)))
