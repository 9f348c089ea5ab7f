"""Elementary special functions with removable singularities.

All functions accept scalars or array-likes and broadcast like numpy ufuncs;
scalar input gives a scalar (numpy float64) back.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np

from .errors import PoleError

#: Below this |denominator| a removable singularity is evaluated by series.
SINGULAR_BAND = 1e-7

_TAYLOR_ORDER = 4


def _sinpi(x):
    # exact zeros at the integers, unlike np.sin(np.pi * x)
    n = np.round(x)
    r = x - n
    sign = np.where(np.fmod(n, 2.0) == 0.0, 1.0, -1.0)
    return sign * np.sin(np.pi * r)


def sa(x):
    """``sin(x) / x`` with ``sa(0) = 1``."""
    x = np.asarray(x, dtype=float)
    small = np.abs(x) < SINGULAR_BAND
    with np.errstate(invalid="ignore", divide="ignore"):
        direct = np.sin(x) / x
    x2 = x * x
    series = 1.0 - x2 / 6.0 + x2 * x2 / 120.0
    return np.where(small, series, direct)[()]


def sinc(x):
    """Normalised sinc, ``sin(pi x) / (pi x)``; exactly zero at nonzero integers."""
    x = np.asarray(x, dtype=float)
    small = np.abs(np.pi * x) < SINGULAR_BAND
    with np.errstate(invalid="ignore", divide="ignore"):
        direct = _sinpi(x) / (np.pi * x)
    px2 = (np.pi * x) ** 2
    series = 1.0 - px2 / 6.0 + px2 * px2 / 120.0
    return np.where(small, series, direct)[()]


def special_H(v, t):
    """Band-limited kernel ``H_v(t) = v * sinc(v t)``.

    Any finite ``v >= 0`` is accepted; ``H_0`` is identically zero.
    """
    v = np.asarray(v, dtype=float)
    if np.any(v < 0):
        raise ValueError("band parameter v must be non-negative")
    return (v * sinc(v * np.asarray(t, dtype=float)))[()]


def special_Hbar(v, t):
    """Quadrature kernel ``cos(v pi t) / (pi t)``.

    Has a genuine ``1/(pi t)`` pole at ``t = 0`` (residue independent of
    ``v``), so ``t = 0`` raises :class:`PoleError`.
    """
    v = np.asarray(v, dtype=float)
    t = np.asarray(t, dtype=float)
    if np.any(v <= 0):
        raise ValueError("band parameter v must be positive")
    if np.any(t == 0.0):
        raise PoleError("Hbar has a pole at t = 0")
    return (np.cos(v * np.pi * t) / (np.pi * t))[()]


@dataclass(frozen=True)
class MPair:
    """Frequency pair ``(v1, v2)`` of the rational kernels ``M`` and ``Mbar``.

    ``v1`` is the frequency in the leading term (cosine for ``M``, sine for
    ``Mbar``); ``v2`` sits in the correction term; ``d = v1 - v2`` sets the
    scale of the denominator ``1 - (2 d t)^2``.
    """

    v1: float
    v2: float

    def __post_init__(self):
        if not (np.isfinite(self.v1) and np.isfinite(self.v2)):
            raise ValueError("MPair frequencies must be finite")
        if self.v1 == self.v2:
            raise ValueError("MPair requires v1 != v2")

    @property
    def d(self) -> float:
        return self.v1 - self.v2


def _removable_quotient(numerator, derivative, kappa, t):
    """Evaluate ``numerator(t) / (1 - (kappa t)^2)``.

    The numerator must vanish at ``t = +-1/kappa``. Inside the singular band
    the quotient is a 4th-order Taylor expansion about the nearest root,
    built from ``derivative(k, t_root)``.
    """
    t = np.asarray(t, dtype=float)
    denom = 1.0 - (kappa * t) ** 2
    with np.errstate(invalid="ignore", divide="ignore"):
        out = numerator(t) / denom
    near = np.abs(denom) < SINGULAR_BAND
    if np.any(near):
        tn = t[near] if t.ndim else t
        root = np.copysign(1.0 / abs(kappa), tn)
        u = tn - root
        # N(root + u) / D(root + u) with D = -kappa^2 u (2 root + u)
        poly = np.zeros_like(u)
        for k in range(_TAYLOR_ORDER + 1, 0, -1):
            poly = poly * u + derivative(k, root) / factorial(k)
        value = poly / (-(kappa ** 2) * (2.0 * root + u))
        if t.ndim:
            out = out.copy()
            out[near] = value
        else:
            out = value
    return out


def special_M(pair: MPair, t):
    """``(1/pi) 2|d| / (1 - (2 d t)^2) * {cos(pi v1 t) + 2 d t sin(pi v2 t)}``.

    ``d = v1 - v2``. Finite at ``t = +-1/(2d)``, where the bracket vanishes.
    """
    c, s, kappa = pair.v1, pair.v2, 2.0 * pair.d

    def num(t):
        return np.cos(np.pi * c * t) + kappa * t * np.sin(np.pi * s * t)

    def dnum(k, t):
        wc, ws = np.pi * c, np.pi * s
        trig = wc ** k * np.cos(wc * t + k * np.pi / 2)
        prod = t * ws ** k * np.sin(ws * t + k * np.pi / 2)
        prod = prod + k * ws ** (k - 1) * np.sin(ws * t + (k - 1) * np.pi / 2)
        return trig + kappa * prod

    scale = 2.0 * abs(pair.d) / np.pi
    return (scale * _removable_quotient(num, dnum, kappa, t))[()]


def special_Mbar(pair: MPair, t):
    """``(1/pi) 2|d| / (1 - (2 d t)^2) * {sin(pi v1 t) - 2 d t cos(pi v2 t)}``.

    Odd in ``t``; same removable points as :func:`special_M`.
    """
    sf, cf, kappa = pair.v1, pair.v2, 2.0 * pair.d

    def num(t):
        return np.sin(np.pi * sf * t) - kappa * t * np.cos(np.pi * cf * t)

    def dnum(k, t):
        ws, wc = np.pi * sf, np.pi * cf
        trig = ws ** k * np.sin(ws * t + k * np.pi / 2)
        prod = t * wc ** k * np.cos(wc * t + k * np.pi / 2)
        prod = prod + k * wc ** (k - 1) * np.cos(wc * t + (k - 1) * np.pi / 2)
        return trig - kappa * prod

    scale = 2.0 * abs(pair.d) / np.pi
    return (scale * _removable_quotient(num, dnum, kappa, t))[()]
