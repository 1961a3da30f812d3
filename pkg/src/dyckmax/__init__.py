"""Exact and asymptotic statistics of the maximum height of uniform Dyck paths."""

__version__ = "0.1.0"

from .exact_counts import (DyckPath, catalan, count_bounded, count_bounded_matrix,
                           enumerate_paths, max_height_pmf)
from .spectral import log_spectral_ratio, spectral_count
from .asymptotics import SeriesSpec, f_of_t, f_of_x, k_of_x
from .deviations import cramer_prelimit, h_rate, ld_gaussian_prelimit, md_rate_prelimit
from .sampler import build_sampler, sample_path

__all__ = [
    "DyckPath", "catalan", "count_bounded", "count_bounded_matrix", "enumerate_paths",
    "max_height_pmf", "log_spectral_ratio", "spectral_count", "SeriesSpec", "f_of_t",
    "f_of_x", "k_of_x", "cramer_prelimit", "h_rate", "ld_gaussian_prelimit",
    "md_rate_prelimit", "build_sampler", "sample_path",
]
