"""Wavelet-coefficient denoising for the diagonal detail band.

The noise level is the classic MAD estimate (median absolute
coefficient over 0.6745, the standard-normal constant; correct here
because the transforms are orthonormal). The shrinkage threshold is the
noise level reduced by the spread between the harmonic and geometric
means of the coefficient magnitudes, clamped at zero, and is applied by
soft thresholding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .image import as_plane

DEFAULT_EPSILON = 1e-6


@dataclass(frozen=True)
class ThresholdReport:
    """Everything that went into one threshold decision, for logging."""

    sigma: float
    harmonic_mean: float
    geometric_mean: float
    threshold: float
    band_dims: tuple[int, int]


def mad_sigma(band: np.ndarray) -> float:
    """Median-absolute-deviation noise estimate of a coefficient band.

    For an even number of coefficients the median is the mean of the
    two central order statistics.
    """
    band = as_plane(band)
    return float(np.median(np.abs(band)) / 0.6745)


def band_means(band: np.ndarray, epsilon: float = DEFAULT_EPSILON) -> tuple[float, float]:
    """Harmonic and geometric means of coefficient magnitudes.

    Magnitudes are floored at ``epsilon`` so zero coefficients neither
    blow up the harmonic mean nor zero out the geometric mean. The
    geometric mean is computed in the log domain; a raw product of
    thousands of magnitudes would under- or overflow.
    """
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    band = as_plane(band)
    g = np.maximum(np.abs(band), epsilon)
    count = g.size
    harmonic = count / float(np.sum(1.0 / g))
    geometric = float(math.exp(np.mean(np.log(g))))
    return harmonic, geometric


def threshold_value(band: np.ndarray, epsilon: float = DEFAULT_EPSILON) -> ThresholdReport:
    """Shrinkage threshold for a band: noise level minus the absolute
    spread between the harmonic and geometric magnitude means, never
    negative."""
    band = as_plane(band)
    sigma = mad_sigma(band)
    harmonic, geometric = band_means(band, epsilon)
    threshold = max(0.0, sigma - abs(harmonic - geometric))
    h, w = band.shape
    return ThresholdReport(sigma, harmonic, geometric, threshold, (h, w))


def soft_threshold(band: np.ndarray, threshold: float) -> np.ndarray:
    """Shrink every coefficient toward zero by ``threshold``:
    sign(p) * max(0, |p| - T)."""
    if threshold < 0:
        raise ValueError(f"threshold must be >= 0, got {threshold}")
    band = as_plane(band)
    return np.sign(band) * np.maximum(np.abs(band) - threshold, 0.0)


def hard_threshold(band: np.ndarray, threshold: float) -> np.ndarray:
    """Keep coefficients with |p| > T, zero the rest.

    |p| == T is zeroed, consistent with soft thresholding which also
    sends boundary coefficients to zero.
    """
    if threshold < 0:
        raise ValueError(f"threshold must be >= 0, got {threshold}")
    band = as_plane(band)
    return np.where(np.abs(band) > threshold, band, 0.0)


def denoise_hh(band: np.ndarray, epsilon: float = DEFAULT_EPSILON,
               report_sink: list[ThresholdReport] | None = None) -> np.ndarray:
    """Soft-threshold a diagonal detail band at its estimated threshold.

    ``report_sink``, when given, receives the ThresholdReport so callers
    can log what was applied.
    """
    report = threshold_value(band, epsilon)
    if report_sink is not None:
        report_sink.append(report)
    return soft_threshold(band, report.threshold)
