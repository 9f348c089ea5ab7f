"""
Raised-cosine spectra and the orthogonal MRA they generate
==========================================================

A Nyquist pulse has 2 pi-shifted copies that add up to a constant. Taking the
square root of such a spectrum gives a scaling function whose integer
translates are orthonormal. This script walks through that chain numerically.
"""
# %%
import numpy as np

from nyqwave import (DEFAULT_ALPHAS, RollOffDensity, SpectralGrid, build_mra_from_vsb,
                     meyer_sum, nyquist_sum, raised_cosine, refinement_filter,
                     sqrt_raised_cosine, two_scale_residual, weighted_scaling_spectrum)

w = np.linspace(-np.pi, np.pi, 10_000)

# %%
# The raised cosine partitions unity (scaled by 1/2pi) for every roll-off.
for a in DEFAULT_ALPHAS[1:]:
    dev = np.abs(nyquist_sum(lambda x: raised_cosine(x, a), w) - 1 / (2 * np.pi)).max()
    print(f"alpha={a:.4f}  Nyquist deviation {dev:.1e}")

# %%
# Its square root meets the Meyer condition, so phi(t - n) is orthonormal.
for a in DEFAULT_ALPHAS[1:]:
    dev = np.abs(meyer_sum(lambda x: sqrt_raised_cosine(x, a), w) - 1 / (2 * np.pi)).max()
    print(f"alpha={a:.4f}  Meyer deviation {dev:.1e}")

# %%
# A refinement filter exists only up to alpha = 1/3. Past that, the
# roll-off of Phi(w/2) spills beyond the band the filter can reach.
grid = np.linspace(-4 * np.pi, 4 * np.pi, 16385)
for a in (0.25, 1 / 3, 0.34, 0.4):
    print(f"alpha={a:.4f}  two-scale residual {two_scale_residual(a, grid):.2e}")
print("H(0) =", refinement_filter(0.0, 0.25), "(sqrt 2 expected)")

# %%
# Mixing roll-offs keeps the partition property: sqrt of a weighted sum of
# raised cosines is again a valid scaling spectrum.
mix = RollOffDensity.uniform(0.05, 0.30, 64)
dev = np.abs(meyer_sum(lambda x: weighted_scaling_spectrum(x, mix), w) - 1 / (2 * np.pi)).max()
print(f"uniform mixture on [0.05, 0.30]: Meyer deviation {dev:.1e}")

# %%
# Any spectrum with vestigial-sideband symmetry works the same way. The
# square-root spectrum itself is not symmetric, and the check says so.
g = SpectralGrid.symmetric(2 * np.pi, 4097)
for label, P in (("raised cosine", lambda x: raised_cosine(x, 0.3)),
                 ("its square root", lambda x: sqrt_raised_cosine(x, 0.3))):
    b = build_mra_from_vsb(P, g)
    print(f"{label:16s} VSB residual {b.vsb.residual:.2e} -> MRA {'ok' if b.passed else 'rejected'}")
