"""One-level 2D Haar analysis/synthesis, decimated and stationary.

Both transforms use the orthonormal Haar pair (1/sqrt(2) gain per 1D
stage), so band energy equals input energy and the stationary transform
subsampled at even (row, col) phases reproduces the decimated transform
bit for bit. That phase consistency is what makes it meaningful to add
stationary detail bands of a small image to decimated detail bands of
its 2x enlargement: both live on the same grid with the same scaling.

Boundary handling is periodic. The decimated transform of an even-sized
plane never actually reads across the boundary (Haar taps do not
overlap), and the stationary transform wraps, which keeps perfect
reconstruction and shift covariance exact rather than approximate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .image import ShapeError, as_plane

_INV_SQRT2 = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class SubBands:
    """The (ll, lh, hl, hh) quadruple from a 1-level 2D analysis.

    ``decimated`` is True for the critically sampled transform (bands
    are half the source size per axis) and False for the stationary
    transform (bands keep the source size). In band names the first
    letter is the filter applied along rows (x), the second along
    columns (y): lh is the horizontal-edge band, hl the vertical-edge
    band, hh the diagonal band.
    """

    ll: np.ndarray
    lh: np.ndarray
    hl: np.ndarray
    hh: np.ndarray
    decimated: bool

    def __post_init__(self):
        shapes = {b.shape for b in (self.ll, self.lh, self.hl, self.hh)}
        if len(shapes) > 1:
            raise ShapeError(f"sub-bands differ in shape: {sorted(shapes)}")

    @property
    def band_shape(self) -> tuple[int, int]:
        return self.ll.shape


def _check_even(plane: np.ndarray) -> np.ndarray:
    plane = as_plane(plane)
    h, w = plane.shape
    if h % 2 or w % 2 or h < 2 or w < 2:
        raise ShapeError(f"wavelet analysis needs even dimensions >= 2, got {w}x{h}")
    return plane


def dwt2_haar(plane: np.ndarray) -> SubBands:
    """Decimated 1-level Haar analysis of an even-sized plane."""
    plane = _check_even(plane)
    lo = (plane[:, 0::2] + plane[:, 1::2]) * _INV_SQRT2
    hi = (plane[:, 0::2] - plane[:, 1::2]) * _INV_SQRT2
    ll = (lo[0::2, :] + lo[1::2, :]) * _INV_SQRT2
    lh = (lo[0::2, :] - lo[1::2, :]) * _INV_SQRT2
    hl = (hi[0::2, :] + hi[1::2, :]) * _INV_SQRT2
    hh = (hi[0::2, :] - hi[1::2, :]) * _INV_SQRT2
    return SubBands(ll, lh, hl, hh, decimated=True)


def idwt2_haar(bands: SubBands) -> np.ndarray:
    """Exact inverse of :func:`dwt2_haar`; returns a plane of twice the
    band size per axis."""
    if not bands.decimated:
        raise ShapeError("idwt2_haar expects decimated bands")
    m, n = bands.band_shape
    lo = np.empty((2 * m, n), dtype=np.float64)
    hi = np.empty((2 * m, n), dtype=np.float64)
    lo[0::2, :] = (bands.ll + bands.lh) * _INV_SQRT2
    lo[1::2, :] = (bands.ll - bands.lh) * _INV_SQRT2
    hi[0::2, :] = (bands.hl + bands.hh) * _INV_SQRT2
    hi[1::2, :] = (bands.hl - bands.hh) * _INV_SQRT2
    plane = np.empty((2 * m, 2 * n), dtype=np.float64)
    plane[:, 0::2] = (lo + hi) * _INV_SQRT2
    plane[:, 1::2] = (lo - hi) * _INV_SQRT2
    return plane


def swt2_haar(plane: np.ndarray) -> SubBands:
    """Stationary (undecimated) 1-level Haar analysis.

    Same filters and normalization as :func:`dwt2_haar`, applied at
    every phase with periodic wrapping, so each band has the source
    size and its even-phase samples equal the decimated bands exactly.
    """
    plane = _check_even(plane)
    right = np.roll(plane, -1, axis=1)
    lo = (plane + right) * _INV_SQRT2
    hi = (plane - right) * _INV_SQRT2
    lo_down = np.roll(lo, -1, axis=0)
    hi_down = np.roll(hi, -1, axis=0)
    ll = (lo + lo_down) * _INV_SQRT2
    lh = (lo - lo_down) * _INV_SQRT2
    hl = (hi + hi_down) * _INV_SQRT2
    hh = (hi - hi_down) * _INV_SQRT2
    return SubBands(ll, lh, hl, hh, decimated=False)


def wzp_upscale(plane: np.ndarray, ll_scale: float = 2.0) -> np.ndarray:
    """Zero-padding upscaler: synthesize a double-size plane from
    ``ll_scale * plane`` as the coarse band and all-zero detail bands.

    The default ll_scale of 2 makes a constant plane map to the same
    constant at double size (a constant c analyzes to a coarse band of
    2c under the orthonormal Haar transform).
    """
    plane = as_plane(plane)
    zero = np.zeros_like(plane)
    return idwt2_haar(SubBands(ll_scale * plane, zero, zero, zero, decimated=True))
