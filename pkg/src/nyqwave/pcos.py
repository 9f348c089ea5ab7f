"""Cosine pulse spectra and their closed-form inverse transforms.

Fourier convention throughout the package::

    F(w) = int f(t) exp(-j w t) dt,    f(t) = (1/2pi) int F(w) exp(j w t) dw

so that a unit gate of half-width ``B`` pairs with ``(B/pi) sa(B t)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import DistributionalLimitError
from .primitives import sa

#: Below this |t^2 - t0^2| the rational forms fall back to the exponential form.
FALLBACK_BAND = 1e-7


@dataclass(frozen=True)
class PcosAux:
    """Sum/difference frequencies and phases of a cosine pulse."""

    dw_plus: float
    dw_minus: float
    dth_plus: float
    dth_minus: float
    t0: float


@dataclass(frozen=True)
class PcosParams:
    """``cos(w t0 + theta0)`` windowed by a gate of half-width ``B`` at ``w0``.

    ``B = math.inf`` is accepted as the infinite-cosine sentinel, but such a
    pulse has no pointwise inverse transform.
    """

    t0: float
    theta0: float
    w0: float
    B: float

    def __post_init__(self):
        for name in ("t0", "theta0", "w0"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if not (self.B > 0):
            raise ValueError("half-bandwidth B must be positive")
        if self.w0 < 0:
            raise ValueError("gate centre w0 must be non-negative")

    @property
    def infinite(self) -> bool:
        return math.isinf(self.B)

    @property
    def edges(self) -> tuple[float, float]:
        return (self.w0 - self.B, self.w0 + self.B)

    def aux(self) -> PcosAux:
        B, t0, w0, th = self.B, self.t0, self.w0, self.theta0
        return PcosAux(
            dw_plus=w0 + B,
            dw_minus=w0 - B,
            dth_plus=B * t0 + w0 * t0 + th,
            dth_minus=B * t0 - w0 * t0 - th,
            t0=t0,
        )


def gate(x, lo, hi):
    """Half-open indicator of ``[lo, hi)``."""
    x = np.asarray(x, dtype=float)
    return ((x >= lo) & (x < hi)).astype(float)[()]


def pcos_spectrum(w, p: PcosParams):
    w = np.asarray(w, dtype=float)
    if p.infinite:
        return np.cos(w * p.t0 + p.theta0)[()]
    lo, hi = p.edges
    return (np.cos(w * p.t0 + p.theta0) * gate(w, lo, hi))[()]


def _require_finite(p: PcosParams):
    if p.infinite:
        raise DistributionalLimitError(
            "infinite-bandwidth cosine pulse transforms to a Dirac pair")


def pcos_time(t, p: PcosParams):
    """Inverse transform of :func:`pcos_spectrum`, complex valued."""
    _require_finite(p)
    t = np.asarray(t, dtype=float)
    B, t0, w0, th = p.B, p.t0, p.w0, p.theta0
    lead = np.exp(1j * (w0 * t + w0 * t0 + th)) * sa(B * (t + t0))
    lag = np.exp(1j * (w0 * t - w0 * t0 - th)) * sa(B * (t - t0))
    return (B / (2.0 * np.pi) * (lead + lag))[()]


def pcos_shifted(t, T, p: PcosParams):
    """``pcos_time(t - T, p)``, the pulse delayed by ``T``.

    Its spectrum is ``exp(-j w T)`` times the cosine pulse, which is not itself
    a cosine pulse, so the delay cannot be absorbed into ``t0`` alone:
    replacing ``t0`` by ``t0 - T`` delays the ``Sa(B(t + t0))`` term but
    advances the ``Sa(B(t - t0))`` one (see :func:`pcos_reparametrised`).
    """
    return pcos_time(np.asarray(t, dtype=float) - T, p)


def pcos_reparametrised(t, T, p: PcosParams):
    """``pcos_time(t, p)`` with ``t0 -> t0 - T``.

    Agrees with :func:`pcos_shifted` only for ``T = 0``; kept so the
    difference can be measured.
    """
    return pcos_time(t, replace(p, t0=p.t0 - T))


def _direct_from_aux(t, aux: PcosAux):
    # rebuild (t0, theta0, w0, B) from the auxiliary parameters
    w0 = 0.5 * (aux.dw_plus + aux.dw_minus)
    B = 0.5 * (aux.dw_plus - aux.dw_minus)
    theta0 = 0.5 * (aux.dth_plus - aux.dth_minus) - w0 * aux.t0
    t0 = aux.t0
    lead = np.exp(1j * (w0 * t + w0 * t0 + theta0)) * sa(B * (t + t0))
    lag = np.exp(1j * (w0 * t - w0 * t0 - theta0)) * sa(B * (t - t0))
    return B / (2.0 * np.pi) * (lead + lag)


def _rational(t, aux: PcosAux, numerator, part):
    t = np.asarray(t, dtype=float)
    denom = t * t - aux.t0 * aux.t0
    with np.errstate(invalid="ignore", divide="ignore"):
        out = numerator(t) / (2.0 * np.pi * denom)
    near = np.abs(denom) < FALLBACK_BAND
    if np.any(near):
        out = np.where(near, part(_direct_from_aux(t, aux)), out)
    return out[()]


def rcos(t, aux: PcosAux):
    """Real part of ``pcos`` in rational form over ``t^2 - t0^2``."""
    sgn = ((+1, aux.dw_plus, aux.dth_plus), (-1, aux.dw_minus, aux.dth_minus))

    def num(t):
        acc = np.zeros_like(t)
        for i, dw, dth in sgn:
            acc = acc - aux.t0 * np.sin(dth) * np.cos(dw * t)
            acc = acc + t * i * np.cos(dth) * np.sin(dw * t)
        return acc

    return _rational(t, aux, num, np.real)


def icos(t, aux: PcosAux):
    """Imaginary part of ``pcos`` in rational form over ``t^2 - t0^2``."""
    sgn = ((+1, aux.dw_plus, aux.dth_plus), (-1, aux.dw_minus, aux.dth_minus))

    def num(t):
        acc = np.zeros_like(t)
        for i, dw, dth in sgn:
            acc = acc - aux.t0 * np.sin(dth) * np.sin(dw * t)
            acc = acc - t * i * np.cos(dth) * np.cos(dw * t)
        return acc

    return _rational(t, aux, num, np.imag)
