"""Frequency-domain objects of the raised-cosine multiresolution analysis.

Spectra here are normalised so that ``sqrt_raised_cosine`` satisfies
``sum_n |Phi(w + 2 pi n)|^2 = 1/(2 pi)``; inner products of the
corresponding time functions are ``int F conj(G) dw`` (see
:func:`nyqwave.oracle.spectral_inner_product`).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .errors import AdmissibilityError
from .pcos import PcosParams

TWO_PI = 2.0 * np.pi
INV_SQRT_2PI = 1.0 / np.sqrt(TWO_PI)

#: Roll-off values tabulated by default; 1/3 is the orthogonality ceiling.
DEFAULT_ALPHAS = (0.0, 1 / 15, 2 / 15, 1 / 4, 4 / 15, 1 / 3)

VSB_TOLERANCE = 1e-12


@dataclass(frozen=True)
class RollOff:
    """Validated roll-off factor ``0 <= alpha < 1``.

    ``alpha == 0`` is the Shannon limit: flat spectra with no roll-off band.
    """

    alpha: float

    def __post_init__(self):
        a = self.alpha
        if not np.isfinite(a) or a < 0.0 or a >= 1.0:
            raise AdmissibilityError(f"roll-off must satisfy 0 <= alpha < 1, got {a!r}")
        object.__setattr__(self, "alpha", float(a))

    @property
    def orthogonal_mra(self) -> bool:
        """True when the two-scale filter exists (``alpha <= 1/3``)."""
        return self.alpha <= 1.0 / 3.0

    @property
    def shannon(self) -> bool:
        return self.alpha == 0.0

    @classmethod
    def parse(cls, text: str) -> "RollOff":
        """Accept decimals or fractions such as ``"4/15"``."""
        try:
            value = float(Fraction(text.strip()))
        except (ValueError, ZeroDivisionError):
            raise AdmissibilityError(f"cannot parse roll-off {text!r}") from None
        return cls(value)


def as_rolloff(r) -> RollOff:
    return r if isinstance(r, RollOff) else RollOff(float(r))


def require_orthogonal(r: RollOff, what: str = "this operation"):
    if not r.orthogonal_mra:
        raise AdmissibilityError(
            f"{what} requires alpha <= 1/3, got alpha = {r.alpha:g} (exceeds 1/3)")


@dataclass(frozen=True)
class SpectralGrid:
    """Uniform angular-frequency grid, optionally carrying sample values."""

    w_values: np.ndarray
    values: np.ndarray | None = None

    def __post_init__(self):
        w = np.asarray(self.w_values, dtype=float)
        if w.ndim != 1 or w.size < 2:
            raise ValueError("grid needs at least two frequencies")
        steps = np.diff(w)
        if np.any(steps <= 0) or np.ptp(steps) > 1e-9 * abs(steps[0]):
            raise ValueError("grid must be uniform and increasing")
        object.__setattr__(self, "w_values", w)
        if self.values is not None:
            v = np.asarray(self.values, dtype=complex)
            if v.shape != w.shape:
                raise ValueError("values must match the frequency grid")
            object.__setattr__(self, "values", v)

    @property
    def w_step(self) -> float:
        return float(self.w_values[1] - self.w_values[0])

    @classmethod
    def symmetric(cls, half_width: float, n: int) -> "SpectralGrid":
        """``n`` points spanning ``[-half_width, half_width]``."""
        return cls(np.linspace(-half_width, half_width, n))

    def sample(self, spectrum: Callable) -> "SpectralGrid":
        return SpectralGrid(self.w_values, spectrum(self.w_values))


def raised_cosine(w, r):
    """Nyquist raised-cosine spectrum, flat value ``1/(2 pi)``."""
    r = as_rolloff(r)
    a = np.abs(np.asarray(w, dtype=float))
    if r.shannon:
        return np.where(a < np.pi, 1.0 / TWO_PI, 0.0)[()]
    lo, hi = (1 - r.alpha) * np.pi, (1 + r.alpha) * np.pi
    roll = (1.0 + np.cos((a - lo) / (2 * r.alpha))) / (4 * np.pi)
    return np.where(a < lo, 1.0 / TWO_PI, np.where(a < hi, roll, 0.0))[()]


def sqrt_raised_cosine(w, r):
    """Scaling-function spectrum ``Phi = sqrt(P)``."""
    r = as_rolloff(r)
    a = np.abs(np.asarray(w, dtype=float))
    if r.shannon:
        return np.where(a < np.pi, INV_SQRT_2PI, 0.0)[()]
    lo, hi = (1 - r.alpha) * np.pi, (1 + r.alpha) * np.pi
    roll = INV_SQRT_2PI * np.cos((a - lo) / (4 * r.alpha))
    return np.where(a < lo, INV_SQRT_2PI, np.where(a < hi, roll, 0.0))[()]


def nyquist_sum(P: Callable, w, n_terms: int = 2):
    """``sum_{|l| <= n_terms} P(w + 2 pi l)``, summed in increasing ``l``."""
    w = np.asarray(w, dtype=float)
    acc = np.zeros(w.shape)
    for l in range(-n_terms, n_terms + 1):
        acc = acc + P(w + TWO_PI * l)
    return acc[()]


def meyer_sum(Phi: Callable, w, n_terms: int = 2):
    """``sum_{|n| <= n_terms} |Phi(w + 2 pi n)|^2``."""
    w = np.asarray(w, dtype=float)
    acc = np.zeros(w.shape)
    for n in range(-n_terms, n_terms + 1):
        acc = acc + np.abs(Phi(w + TWO_PI * n)) ** 2
    return acc[()]


def scaling_breakpoints(r) -> list[float]:
    r = as_rolloff(r)
    if r.shannon:
        return [-np.pi, np.pi]
    lo, hi = (1 - r.alpha) * np.pi, (1 + r.alpha) * np.pi
    return [-hi, -lo, lo, hi]


def shaping_breakpoints(r, one_sided: bool = False) -> list[float]:
    r = as_rolloff(r)
    a = r.alpha
    if r.shannon:
        pos = [np.pi, TWO_PI]
    else:
        pos = [np.pi * (1 - a), np.pi * (1 + a), TWO_PI * (1 - a), TWO_PI * (1 + a)]
    if one_sided:
        return pos
    return [-x for x in reversed(pos)] + pos


def shaping_pulse(w, r, one_sided: bool = False):
    """Magnitude profile ``S(w)`` of the wavelet spectrum.

    Defined piecewise on ``w > 0``. By default it is extended evenly to
    negative frequencies (the real, orthonormal wavelet); ``one_sided=True``
    keeps only ``w > 0`` (the complex analysing wavelet).
    """
    r = as_rolloff(r)
    require_orthogonal(r, "the shaping pulse")
    w = np.asarray(w, dtype=float)
    x = w if one_sided else np.abs(w)
    a = r.alpha
    if r.shannon:
        return np.where((x >= np.pi) & (x < TWO_PI), INV_SQRT_2PI, 0.0)[()]
    e1, e2, e3, e4 = np.pi * (1 - a), np.pi * (1 + a), TWO_PI * (1 - a), TWO_PI * (1 + a)
    left = INV_SQRT_2PI * np.cos((x - e2) / (4 * a))
    right = INV_SQRT_2PI * np.cos((x - e3) / (8 * a))
    out = np.select(
        [x < e1, x < e2, x < e3, x < e4],
        [0.0, left, INV_SQRT_2PI, right],
        default=0.0,
    )
    return out[()]


def wavelet_spectrum(w, r, analytic: bool = False):
    """``Psi(w) = exp(-j w / 2) S(w)``; ``analytic`` selects the one-sided pulse."""
    w = np.asarray(w, dtype=float)
    return (np.exp(-0.5j * w) * shaping_pulse(w, r, one_sided=analytic))[()]


def shaping_pulse_pcos_decomposition(r) -> tuple[PcosParams, PcosParams, PcosParams]:
    """Three cosine pulses whose spectra sum to ``sqrt(2 pi) S(w)`` on ``w > 0``.

    Left roll-off, flat middle gate, right roll-off. The middle gate has zero
    width at ``alpha = 1/3``, hence the strict inequality.
    """
    r = as_rolloff(r)
    a = r.alpha
    if not (0.0 < a < 1.0 / 3.0):
        raise AdmissibilityError(
            f"pulse decomposition requires 0 < alpha < 1/3, got {a:g}")
    left = PcosParams(1 / (4 * a), -np.pi * (1 + a) / (4 * a), np.pi, np.pi * a)
    middle = PcosParams(0.0, 0.0, 1.5 * np.pi * (1 - a / 3), 0.5 * np.pi * (1 - 3 * a))
    right = PcosParams(1 / (8 * a), -TWO_PI * (1 - a) / (8 * a), TWO_PI, TWO_PI * a)
    return left, middle, right


def refinement_filter(v, r):
    """Low-pass two-scale filter ``H``, 2 pi periodic.

    On ``[-pi, pi)``, ``H(v) = 2 sqrt(pi) Phi(2 v)``, the normalisation for which
    ``Phi(w) = H(w/2) Phi(w/2) / sqrt(2)`` holds when ``alpha <= 1/3``
    (``H(0) = sqrt(2)``). Larger roll-offs are evaluated too, so the failure of
    the relation can be measured.
    """
    r = as_rolloff(r)
    v = np.asarray(v, dtype=float)
    wrapped = np.mod(v + np.pi, TWO_PI) - np.pi
    return (2.0 * np.sqrt(np.pi) * sqrt_raised_cosine(2.0 * wrapped, r))[()]


def two_scale_residual(r, w) -> float:
    """``max |Phi(w) - H(w/2) Phi(w/2) / sqrt(2)|`` over the samples ``w``."""
    r = as_rolloff(r)
    w = np.asarray(w, dtype=float)
    lhs = sqrt_raised_cosine(w, r)
    rhs = refinement_filter(w / 2, r) * sqrt_raised_cosine(w / 2, r) / np.sqrt(2.0)
    return float(np.max(np.abs(lhs - rhs)))


@dataclass(frozen=True)
class VsbReport:
    residual: float
    worst_w: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance


def vsb_check(P: Callable, grid: SpectralGrid, tolerance: float = VSB_TOLERANCE) -> VsbReport:
    """Vestigial-sideband symmetry ``P(w) + P(w -+ 2 pi) = 1/(2 pi)`` on ``|w| < pi``.

    The partner copy is taken from the opposite side of the band, i.e.
    ``w - 2 pi`` for ``w >= 0`` and ``w + 2 pi`` for ``w < 0``.
    """
    w = grid.w_values[np.abs(grid.w_values) < np.pi]
    if w.size == 0:
        raise ValueError("grid has no samples inside |w| < pi")
    partner = np.where(w >= 0, w - TWO_PI, w + TWO_PI)
    dev = np.abs(np.asarray(P(w), dtype=float) + np.asarray(P(partner), dtype=float)
                 - 1.0 / TWO_PI)
    k = int(np.argmax(dev))
    return VsbReport(float(dev[k]), float(w[k]), tolerance)
