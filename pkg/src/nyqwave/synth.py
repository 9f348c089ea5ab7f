"""Synthetic stand-in for a simulated transmission-line fault record.

Time is in milliseconds. With the defaults (60 Hz, 128 samples per cycle)
the sample interval is about 0.13 ms, so the scale-1 analysing band
(roughly 3 to 8 rad/ms) sits far above the fundamental and well below
the sampling limit.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .wavelets import SampledSignal


@dataclass(frozen=True)
class FaultSpec:
    """Damped high-frequency burst added at ``onset`` (a sample index)."""

    amplitude: float = 0.3
    onset: int = 512
    decay: float = 16.0
    burst_hz: float = 750.0


def synthesize_fault_signal(cycles: int = 8, samples_per_cycle: int = 128,
                            frequency_hz: float = 60.0, fault: FaultSpec | None = FaultSpec(),
                            noise_std: float = 0.0, seed: int | None = None) -> SampledSignal:
    """Unit sinusoid of ``cycles`` cycles, optionally with a fault burst and noise.

    The burst is ``amplitude * exp(-(k - onset)/decay) * sin(2 pi f_b (t - t_on))``
    for ``k >= onset``, with ``decay`` in samples. Noise is Gaussian and drawn
    from ``numpy.random.default_rng(seed)``.
    """
    if cycles < 1 or samples_per_cycle < 2:
        raise ValueError("need at least one cycle of two samples")
    n = cycles * samples_per_cycle
    dt = 1000.0 / (frequency_hz * samples_per_cycle)
    k = np.arange(n)
    t = k * dt
    x = np.sin(2 * np.pi * frequency_hz * t / 1000.0)
    if fault is not None:
        if not 0 <= fault.onset < n:
            raise ValueError("fault onset must fall inside the record")
        if fault.decay <= 0:
            raise ValueError("decay constant must be positive")
        after = k >= fault.onset
        lag = (k - fault.onset) * dt
        burst = fault.amplitude * np.exp(-(k - fault.onset) / fault.decay) \
            * np.sin(2 * np.pi * fault.burst_hz * lag / 1000.0)
        x = x + np.where(after, burst, 0.0)
    if noise_std > 0:
        x = x + np.random.default_rng(seed).normal(0.0, noise_std, n)
    return SampledSignal(0.0, dt, x)
