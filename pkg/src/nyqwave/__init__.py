"""Orthogonal wavelets built from raised-cosine (Nyquist) pulse spectra.

Frequency-domain spectra live in :mod:`nyqwave.spectra`, closed-form time
functions in :mod:`nyqwave.wavelets` and :mod:`nyqwave.pcos`, MRA checks in
:mod:`nyqwave.mra`, the transform in :mod:`nyqwave.cwt`, and the numerical
reference integrals every closed form is tested against in
:mod:`nyqwave.oracle`.
"""
from .cwt import DEFAULT_SCALES, Scalogram, ScaleList, coefficient_line, cwt, modulus_phase
from .errors import AdmissibilityError, DistributionalLimitError, PoleError, SignalFormatError
from .mra import MraBundle, RollOffDensity, build_mra_from_vsb, weighted_scaling_spectrum
from .pcos import PcosParams, icos, pcos_spectrum, pcos_time, rcos
from .primitives import MPair, sa, sinc, special_H, special_Hbar, special_M, special_Mbar
from .spectra import (DEFAULT_ALPHAS, RollOff, SpectralGrid, meyer_sum, nyquist_sum,
                      raised_cosine, refinement_filter, shaping_pulse, sqrt_raised_cosine,
                      two_scale_residual, vsb_check, wavelet_spectrum)
from .synth import FaultSpec, synthesize_fault_signal
from .wavelets import (SampledSignal, WaveletTable, deo_scaling, deo_wavelet, gsha_scaling,
                       real_wavelet, shaping_imag, shaping_real, tabulate)

__version__ = "0.1.0"
