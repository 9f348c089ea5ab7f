"""Continuous wavelet transform with the complex raised-cosine wavelet."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .spectra import as_rolloff, require_orthogonal
from .wavelets import EFFECTIVE_SUPPORT, SampledSignal, WaveletTable, deo_wavelet

DEFAULT_SCALES = (1.0, 1.5, 2.0)
SUPPORT_RADIUS = EFFECTIVE_SUPPORT[1]


@dataclass(frozen=True)
class ScaleList:
    scales: tuple[float, ...]

    def __post_init__(self):
        s = tuple(float(a) for a in np.atleast_1d(self.scales))
        if not s:
            raise ValueError("scale list is empty")
        if not all(np.isfinite(s)):
            raise ValueError("scales must be finite")
        if any(a == 0.0 for a in s):
            raise ValueError("scale a = 0 is not allowed")
        if any(b <= a for a, b in zip(s, s[1:])):
            raise ValueError("scales must be strictly increasing")
        object.__setattr__(self, "scales", s)

    @classmethod
    def from_range(cls, lo: float, step: float, hi: float) -> "ScaleList":
        """``lo, lo + step, ...`` up to and including ``hi`` (within 1e-9 step)."""
        if step <= 0:
            raise ValueError("scale step must be positive")
        n = int(np.floor((hi - lo) / step + 1e-9)) + 1
        return cls(tuple(lo + step * np.arange(n)))

    def __len__(self):
        return len(self.scales)

    def __iter__(self):
        return iter(self.scales)


@dataclass(frozen=True)
class Scalogram:
    """Coefficients ``C[a][b]`` over a scale list and a uniform shift grid.

    ``valid[i, j]`` is False when the wavelet footprint ``b +- 12|a|`` runs
    past either end of the analysed signal.
    """

    scales: ScaleList
    b_start: float
    db: float
    coeffs: np.ndarray
    valid: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex)
        if c.ndim != 2 or c.shape[0] != len(self.scales):
            raise ValueError("coefficient matrix must have one row per scale")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        v = np.asarray(self.valid, dtype=bool)
        if v.shape != c.shape:
            raise ValueError("validity mask must match the coefficients")
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "valid", v)

    @property
    def b_values(self) -> np.ndarray:
        return self.b_start + self.db * np.arange(self.coeffs.shape[1])


def wavelet_from_table(table: WaveletTable | SampledSignal) -> Callable:
    """Linear interpolation of a tabulated wavelet; zero outside the table."""
    grid = table.grid if isinstance(table, WaveletTable) else table
    t = grid.times
    re = grid.samples.real.copy()
    im = grid.samples.imag.copy()

    def psi(x):
        x = np.asarray(x, dtype=float)
        return np.interp(x, t, re, left=0.0, right=0.0) \
            + 1j * np.interp(x, t, im, left=0.0, right=0.0)

    return psi


def _trapezoid_weights(n: int, dt: float) -> np.ndarray:
    w = np.full(n, dt)
    if n > 1:
        w[[0, -1]] *= 0.5
    return w


def _shift_grid(f: SampledSignal, shifts):
    if shifts is None:
        return f.t_start, f.dt, f.n
    b = np.atleast_1d(np.asarray(shifts, dtype=float))
    if b.ndim != 1 or b.size == 0:
        raise ValueError("shift grid must be a non-empty 1-D array")
    if b.size == 1:
        return float(b[0]), f.dt, 1
    steps = np.diff(b)
    if np.any(steps <= 0) or np.ptp(steps) > 1e-9 * abs(steps[0]):
        raise ValueError("shift grid must be uniform and increasing")
    return float(b[0]), float(steps.mean()), b.size


def _row_on_grid(wf, offsets, a, dt, psi, conjugate):
    # shifts coincide with sample instants: one kernel evaluation per lag
    n = wf.size
    half = int(np.floor(SUPPORT_RADIUS * abs(a) / dt + 1e-9))
    lags = np.arange(-half, half + 1)
    kernel = psi(lags * dt / a)
    if conjugate:
        kernel = np.conj(kernel)
    row = np.zeros(offsets.size, dtype=complex)
    for m, g in zip(lags, kernel):
        idx = offsets + m
        ok = (idx >= 0) & (idx < n)
        row[ok] += wf[idx[ok]] * g
    return row


def _row_general(wf, times, b, a, psi, conjugate):
    row = np.zeros(b.size, dtype=complex)
    reach = SUPPORT_RADIUS * abs(a)
    for j, bj in enumerate(b):
        lo, hi = np.searchsorted(times, [bj - reach, bj + reach], side="left")
        hi = min(hi + 1, times.size)
        seg = times[lo:hi]
        x = (seg - bj) / a
        keep = np.abs(x) <= SUPPORT_RADIUS
        kernel = psi(x[keep])
        if conjugate:
            kernel = np.conj(kernel)
        row[j] = np.dot(wf[lo:hi][keep], kernel)
    return row


def cwt(f: SampledSignal, r=None, scales: Sequence[float] | ScaleList = DEFAULT_SCALES,
        shifts=None, *, conjugate: bool = True, wavelet: Callable | None = None,
        workers: int = 1) -> Scalogram:
    """``C[a, b] = |a|^-1/2 sum_k w_k f(t_k) conj(psi((t_k - b)/a))``.

    ``w_k`` are trapezoid weights on the signal's own grid, and only samples
    with ``|t_k - b| <= 12|a|`` enter the sum. ``conjugate=False`` gives the
    unconjugated kernel ``psi((t - b)/a)``. ``wavelet`` replaces the closed
    form (e.g. :func:`wavelet_from_table`); otherwise ``r`` selects the
    roll-off. ``shifts`` defaults to the sample instants of ``f``.
    Rows are independent, so ``workers > 1`` parallelises over scales without
    changing any bit of the result.
    """
    if not isinstance(scales, ScaleList):
        scales = ScaleList(tuple(scales))
    if wavelet is None:
        if r is None:
            raise ValueError("either a roll-off or a wavelet callable is required")
        r = as_rolloff(r)
        require_orthogonal(r, "the transform")

        def wavelet(x):
            return deo_wavelet(x, r)

    b_start, db, nb = _shift_grid(f, shifts)
    b = b_start + db * np.arange(nb)
    times = f.times
    wf = f.samples * _trapezoid_weights(f.n, f.dt)

    offsets = (b - f.t_start) / f.dt
    on_grid = np.allclose(offsets, np.round(offsets), rtol=0.0, atol=1e-9)
    offsets = np.round(offsets).astype(np.int64)

    def row(a):
        if on_grid:
            out = _row_on_grid(wf, offsets, a, f.dt, wavelet, conjugate)
        else:
            out = _row_general(wf, times, b, a, wavelet, conjugate)
        return out / np.sqrt(abs(a))

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(row, scales.scales))
    else:
        rows = [row(a) for a in scales.scales]

    t_first, t_last = times[0], times[-1]
    slack = 1e-9 * max(f.dt, 1.0)
    valid = np.array([(b - SUPPORT_RADIUS * abs(a) >= t_first - slack)
                      & (b + SUPPORT_RADIUS * abs(a) <= t_last + slack)
                      for a in scales.scales])
    return Scalogram(scales, b_start, db, np.vstack(rows), valid)


def coefficient_line(s: Scalogram, a: float) -> SampledSignal:
    """The row ``C[a, .]`` as a complex signal over the shift grid."""
    if a == 0:
        raise ValueError("scale a = 0 is not allowed")
    match = np.flatnonzero(np.isclose(s.scales.scales, a, rtol=1e-12, atol=0.0))
    if match.size == 0:
        raise ValueError(f"scale {a!r} is not in the scalogram")
    return SampledSignal(s.b_start, s.db, s.coeffs[match[0]].copy())


def modulus_phase(s: Scalogram) -> tuple[np.ndarray, np.ndarray]:
    """Elementwise ``|C|`` and phase in ``(-pi, pi]`` (phase of 0 is 0)."""
    c = s.coeffs
    # adding 0.0 turns -0.0 into +0.0 so negative reals map to +pi
    return np.abs(c), np.arctan2(c.imag + 0.0, c.real + 0.0)
