"""Sector indicators and their Fourier decomposition"""
from .decomposition import sector_decomposition_residual, sectorial_halasz_report, twisted_window_sums
from .fourier import (
    FourierTruncation,
    fourier_coeffs,
    remainder,
    remainder_array,
    remainder_shape,
    summed_remainder,
)
