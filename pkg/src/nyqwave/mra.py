"""Orthogonal MRAs from vestigial-sideband spectra and roll-off mixtures."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from numpy.polynomial.legendre import leggauss

from .spectra import (TWO_PI, SpectralGrid, VsbReport, meyer_sum, raised_cosine,
                      vsb_check, VSB_TOLERANCE)

MEYER_TOLERANCE = 1e-10


@dataclass(frozen=True)
class RollOffDensity:
    """A probability density over roll-off, given as quadrature nodes and weights."""

    nodes: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        nodes = np.atleast_1d(np.asarray(self.nodes, dtype=float))
        weights = np.atleast_1d(np.asarray(self.weights, dtype=float))
        if nodes.shape != weights.shape or nodes.ndim != 1:
            raise ValueError("nodes and weights must be matching 1-D arrays")
        if np.any(nodes <= 0) or np.any(nodes >= 1):
            raise ValueError("roll-off nodes must lie in (0, 1)")
        if np.any(weights < 0):
            raise ValueError("weights must be non-negative")
        if abs(weights.sum() - 1.0) > 1e-12:
            raise ValueError(f"weights must sum to 1, got {weights.sum()!r}")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def point_mass(cls, alpha: float) -> "RollOffDensity":
        return cls(np.array([alpha]), np.array([1.0]))

    @classmethod
    def uniform(cls, lo: float, hi: float, n: int = 64) -> "RollOffDensity":
        """Uniform density on ``[lo, hi]`` discretised by ``n`` Gauss-Legendre nodes."""
        x, w = leggauss(n)
        nodes = 0.5 * (hi - lo) * x + 0.5 * (hi + lo)
        return cls(nodes, w / w.sum())

    @property
    def max_alpha(self) -> float:
        return float(self.nodes.max())


def weighted_scaling_spectrum(w, d: RollOffDensity):
    """``sqrt(sum_i weight_i P(w; alpha_i))``."""
    w = np.asarray(w, dtype=float)
    acc = np.zeros(w.shape)
    for alpha, weight in zip(d.nodes, d.weights):
        acc = acc + weight * raised_cosine(w, alpha)
    return np.sqrt(acc)[()]


@dataclass(frozen=True)
class MraBundle:
    """Scaling-function spectrum sampled on a grid plus the checks behind it."""

    phi: SpectralGrid | None
    vsb: VsbReport
    meyer_residual: float | None

    @property
    def passed(self) -> bool:
        return self.vsb.passed and self.meyer_residual is not None \
            and self.meyer_residual <= MEYER_TOLERANCE


def build_mra_from_vsb(P: Callable, grid: SpectralGrid,
                       tolerance: float = VSB_TOLERANCE) -> MraBundle:
    """Take ``Phi = sqrt(P)`` when ``P`` has vestigial-sideband symmetry.

    ``P`` must be real, non-negative and vanish for ``|w| > 2 pi``. On
    failure the bundle carries no ``phi`` and the report names the worst
    frequency.
    """
    values = np.asarray(P(grid.w_values), dtype=float)
    if np.any(values < 0):
        k = int(np.argmin(values))
        raise ValueError(f"spectrum is negative at w = {grid.w_values[k]:.6g}")
    outside = np.abs(grid.w_values) > TWO_PI
    if np.any(values[outside] != 0):
        raise ValueError("spectrum must vanish for |w| > 2 pi")
    report = vsb_check(P, grid, tolerance)
    if not report.passed:
        return MraBundle(None, report, None)

    def phi(w):
        return np.sqrt(np.asarray(P(w), dtype=float))

    inner = grid.w_values[np.abs(grid.w_values) <= np.pi]
    meyer = float(np.max(np.abs(meyer_sum(phi, inner) - 1.0 / TWO_PI)))
    return MraBundle(grid.sample(phi), report, meyer)
