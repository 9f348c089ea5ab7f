"""
Closed-form wavelets against brute-force spectral inversion
===========================================================

Every closed form in the package has an independent numerical twin: the
inverse transform of its spectrum computed by a 2^14-point trapezoid sum.
"""
# %%
import numpy as np

from nyqwave import deo_scaling, deo_wavelet, shaping_imag, shaping_real, tabulate
from nyqwave.oracle import inverse_dft
from nyqwave.spectra import (scaling_breakpoints, shaping_breakpoints, shaping_pulse,
                             sqrt_raised_cosine)

t = np.linspace(-32, 32, 513)

# %%
for a in (1 / 15, 1 / 4, 1 / 3):
    bp = scaling_breakpoints(a)
    ref = inverse_dft(lambda w: sqrt_raised_cosine(w, a), (bp[0], bp[-1]), t)
    e_phi = np.abs(ref - deo_scaling(t, a)).max()
    bp = shaping_breakpoints(a, one_sided=True)
    ref = inverse_dft(lambda w: shaping_pulse(w, a, one_sided=True), (bp[0], bp[-1]), t)
    e_re = np.abs(ref.real - shaping_real(t, a)).max()
    e_im = np.abs(ref.imag - shaping_imag(t, a)).max()
    print(f"alpha={a:.4f}  scaling {e_phi:.1e}  real {e_re:.1e}  imag {e_im:.1e}")

# %%
# The imaginary part is a difference of two 1/t poles; it is still finite
# and odd through t = 0.
print(shaping_imag(np.array([-1e-6, 0.0, 1e-6]), 0.25))

# %%
# How concentrated is the complex wavelet? The [-12, 12] window holds it
# well at large roll-off and less so as alpha -> 0 (sharper spectrum edges).
tt = np.linspace(-64, 64, 8193)
for a in (0.0, 1 / 15, 2 / 15, 1 / 3):
    mag = np.abs(deo_wavelet(tt, a))
    print(f"alpha={a:.4f}  tail/peak beyond |t|=12: {mag[np.abs(tt) > 12].max() / mag.max():.4f}")

# %%
table = tabulate(1 / 3)
print(table.name, table.grid.n, "samples on", table.grid.times[[0, -1]])
