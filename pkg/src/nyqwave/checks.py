"""Invariant suite run by ``nyqwave check``.

Each check yields a :class:`CheckResult`; ``kind="max"`` passes when the
residual is at most the tolerance, ``kind="min"`` when it exceeds it (used
for witnesses that something is *not* zero).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import oracle
from .cwt import coefficient_line, cwt
from .mra import RollOffDensity, weighted_scaling_spectrum
from .pcos import PcosParams, pcos_spectrum, pcos_time
from .primitives import sinc
from .spectra import (DEFAULT_ALPHAS, TWO_PI, RollOff, meyer_sum, nyquist_sum,
                      raised_cosine, scaling_breakpoints, shaping_breakpoints,
                      shaping_pulse, shaping_pulse_pcos_decomposition,
                      sqrt_raised_cosine, two_scale_residual, wavelet_spectrum)
from .synth import FaultSpec, synthesize_fault_signal
from .wavelets import deo_scaling, deo_wavelet, shaping_imag, shaping_real

ORACLE_T = np.linspace(-32.0, 32.0, 513)
SWEEP_POINTS = 10_000
TRANSLATES = 8


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    tolerance: float
    kind: str = "max"

    @property
    def group(self) -> str:
        return self.name.split("[", 1)[0]

    @property
    def passed(self) -> bool:
        if self.kind == "min":
            return self.residual > self.tolerance
        return self.residual <= self.tolerance

    def scaled(self, factor: float) -> "CheckResult":
        return CheckResult(self.name, self.residual, self.tolerance * factor, self.kind)


def _tag(alpha: float) -> str:
    return f"[alpha={alpha:.5f}]"


def _sweep():
    return np.linspace(-np.pi, np.pi, SWEEP_POINTS)


def nyquist_partition(r: RollOff) -> float:
    dev = nyquist_sum(lambda w: raised_cosine(w, r), _sweep()) - 1.0 / TWO_PI
    return float(np.max(np.abs(dev)))


def meyer_condition(phi) -> float:
    return float(np.max(np.abs(meyer_sum(phi, _sweep()) - 1.0 / TWO_PI)))


def oracle_scaling(r: RollOff, t=ORACLE_T) -> float:
    band = (scaling_breakpoints(r)[0], scaling_breakpoints(r)[-1])
    ref = oracle.inverse_dft(lambda w: sqrt_raised_cosine(w, r), band, t)
    return float(np.max(np.abs(ref - deo_scaling(t, r))))


def _shaping_reference(r: RollOff, t):
    bp = shaping_breakpoints(r, one_sided=True)
    return oracle.inverse_dft(lambda w: shaping_pulse(w, r, one_sided=True),
                              (bp[0], bp[-1]), t)


def oracle_shaping(r: RollOff, t=ORACLE_T) -> tuple[float, float]:
    ref = _shaping_reference(r, t)
    return (float(np.max(np.abs(ref.real - shaping_real(t, r)))),
            float(np.max(np.abs(ref.imag - shaping_imag(t, r)))))


def oracle_pcos(p: PcosParams, t=ORACLE_T) -> float:
    ref = oracle.inverse_dft(lambda w: pcos_spectrum(w, p), p.edges, t)
    return float(np.max(np.abs(ref - pcos_time(t, p))))


def _gram_deviation(F, breakpoints, cross=None) -> float:
    # <f(. - n), g(. - m)> depends on n - m only
    worst = 0.0
    for k in range(-2 * TRANSLATES, 2 * TRANSLATES + 1):
        if cross is None:
            value = oracle.spectral_inner_product(F, F, breakpoints, shift=k)
            value -= 1.0 if k == 0 else 0.0
        else:
            value = oracle.spectral_inner_product(F, cross, breakpoints, shift=k)
        worst = max(worst, abs(value))
    return worst


def orthonormality(r: RollOff) -> tuple[float, float, float]:
    """Deviations for scaling translates, wavelet translates, and their cross products."""
    def phi(w):
        return sqrt_raised_cosine(w, r)

    def psi(w):
        return wavelet_spectrum(w, r)

    bp_phi = scaling_breakpoints(r)
    bp_psi = shaping_breakpoints(r)
    bp_all = sorted(set(bp_phi) | set(bp_psi))
    return (_gram_deviation(phi, bp_phi), _gram_deviation(psi, bp_psi),
            _gram_deviation(psi, bp_all, cross=phi))


def gsha_overlap(alpha: float = 0.5) -> float:
    """``|<phi, phi(. - 1)>|`` for the raised-cosine pulse (spectrum ``2 pi P``)."""
    r = RollOff(alpha)
    # time function has spectrum 2 pi P; inner product is (1/2pi) int |2 pi P|^2 e^{jw}
    value = oracle.spectral_inner_product(
        lambda w: TWO_PI * raised_cosine(w, r), lambda w: TWO_PI * raised_cosine(w, r),
        scaling_breakpoints(r), shift=1.0) / TWO_PI
    return float(abs(value))


def shannon_limit(alpha: float = 1e-4) -> float:
    t = np.linspace(-10.0, 10.0, 4001)
    return float(np.max(np.abs(deo_scaling(t, alpha) - sinc(t) / np.sqrt(TWO_PI))))


def effective_support(r: RollOff) -> float:
    t = np.linspace(-64.0, 64.0, 128 * 64 + 1)
    mag = np.abs(deo_wavelet(t, r))
    return float(mag[np.abs(t) > 12.0].max() / mag.max())


def transient_offset(r: RollOff) -> int:
    spec = FaultSpec()
    f = synthesize_fault_signal(fault=spec)
    line = coefficient_line(cwt(f, r, scales=(1.0,)), 1.0)
    return abs(int(np.argmax(np.abs(line.samples))) - spec.onset)


def pcos_decomposition(r: RollOff) -> float:
    w = np.linspace(0.0, 3 * np.pi, SWEEP_POINTS + 1)[1:]
    total = sum(pcos_spectrum(w, p) for p in shaping_pulse_pcos_decomposition(r))
    return float(np.max(np.abs(total - np.sqrt(TWO_PI) * shaping_pulse(w, r))))


def run_suite(alphas: Sequence[float] | None = None) -> Iterator[CheckResult]:
    """Yield every check; ``alphas`` restricts the roll-off-dependent ones."""
    explicit = alphas is not None
    rolloffs = [RollOff(a) for a in (alphas if explicit else DEFAULT_ALPHAS)]

    for r in rolloffs:
        tag = _tag(r.alpha)
        if not r.shannon:
            yield CheckResult("nyquist" + tag, nyquist_partition(r), 1e-13)
            yield CheckResult("meyer" + tag, meyer_condition(lambda w: sqrt_raised_cosine(w, r)),
                              1e-13)
        residual_grid = np.linspace(-4 * np.pi, 4 * np.pi, 4 * 4096 + 1)
        yield CheckResult("two-scale" + tag, two_scale_residual(r, residual_grid), 1e-12)
        yield CheckResult("oracle-scaling" + tag, oracle_scaling(r), 1e-6)
        if not r.orthogonal_mra:
            continue
        re_err, im_err = oracle_shaping(r)
        yield CheckResult("oracle-shaping-real" + tag, re_err, 1e-6)
        yield CheckResult("oracle-shaping-imag" + tag, im_err, 1e-6)
        if 0 < r.alpha < 1 / 3:
            for label, p in zip(("left", "middle", "right"),
                                shaping_pulse_pcos_decomposition(r)):
                yield CheckResult(f"oracle-pcos-{label}" + tag, oracle_pcos(p), 1e-6)
            yield CheckResult("pcos-decomposition" + tag, pcos_decomposition(r), 1e-12)
        if not r.shannon:
            phi_dev, psi_dev, cross_dev = orthonormality(r)
            yield CheckResult("orthonormal-scaling" + tag, phi_dev, 1e-8)
            yield CheckResult("orthonormal-wavelet" + tag, psi_dev, 1e-8)
            yield CheckResult("wavelet-scaling-cross" + tag, cross_dev, 1e-8)
        yield CheckResult("effective-support" + tag, effective_support(r), 1e-2)
        if explicit or r.alpha in (1 / 15, 1 / 3):
            yield CheckResult("transient-localization" + tag, float(transient_offset(r)), 16.0)

    mixture = RollOffDensity.uniform(0.05, 0.30, 64)
    yield CheckResult("meyer-mixture",
                      meyer_condition(lambda w: weighted_scaling_spectrum(w, mixture)), 1e-13)
    yield CheckResult("gsha-nonorthogonal", gsha_overlap(0.5), 1e-3, kind="min")
    yield CheckResult("shannon-limit", shannon_limit(1e-4), 1e-3)
    if not explicit:
        for alpha in (0.1, 0.2, 0.3):
            r = RollOff(alpha)
            yield CheckResult("pcos-decomposition" + _tag(alpha), pcos_decomposition(r), 1e-12)
