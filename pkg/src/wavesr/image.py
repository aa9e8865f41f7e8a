"""Image containers and elementwise plane arithmetic.

A "plane" throughout this package is a 2D float64 ndarray of shape
(height, width) holding one channel. Values are nominally 0..255 but
planes are signed and unbounded so they can carry residuals and wavelet
coefficients; clamping and rounding happen only when converting to
8-bit output (see :func:`quantize_plane` and :mod:`wavesr.pnm`).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class ShapeError(ValueError):
    """Raised when image or plane dimensions violate an operation's contract."""


def as_plane(data) -> np.ndarray:
    """Coerce array-like data to a float64 (H, W) plane."""
    plane = np.asarray(data, dtype=np.float64)
    if plane.ndim != 2:
        raise ShapeError(f"plane must be 2D, got shape {plane.shape}")
    if plane.shape[0] < 1 or plane.shape[1] < 1:
        raise ShapeError(f"plane must be non-empty, got shape {plane.shape}")
    return plane


@dataclass(frozen=True)
class Image:
    """A 1-plane (grayscale) or 3-plane (RGB) image.

    All planes share the same (height, width); ``max_value`` is the
    intensity ceiling used for 8-bit file round-trips and PSNR.
    """

    planes: tuple[np.ndarray, ...]
    max_value: int = 255

    def __post_init__(self):
        if len(self.planes) not in (1, 3):
            raise ShapeError(f"image must have 1 or 3 planes, got {len(self.planes)}")
        planes = tuple(as_plane(p) for p in self.planes)
        shapes = {p.shape for p in planes}
        if len(shapes) > 1:
            raise ShapeError(f"planes differ in shape: {sorted(shapes)}")
        object.__setattr__(self, "planes", planes)

    @property
    def height(self) -> int:
        return self.planes[0].shape[0]

    @property
    def width(self) -> int:
        return self.planes[0].shape[1]

    @property
    def n_planes(self) -> int:
        return len(self.planes)

    @classmethod
    def from_array(cls, arr) -> "Image":
        """Build an Image from an (H, W) or (H, W, 3) array."""
        arr = np.asarray(arr, dtype=np.float64)
        if arr.ndim == 2:
            return cls((arr,))
        if arr.ndim == 3 and arr.shape[2] == 3:
            return cls(tuple(arr[:, :, c] for c in range(3)))
        raise ShapeError(f"expected (H, W) or (H, W, 3), got shape {arr.shape}")

    def to_array(self) -> np.ndarray:
        """Return an (H, W) array for grayscale or (H, W, 3) for RGB."""
        if self.n_planes == 1:
            return self.planes[0].copy()
        return np.stack(self.planes, axis=-1)

    def map_planes(self, fn) -> "Image":
        """Apply ``fn(plane) -> plane`` to every channel independently."""
        return Image(tuple(fn(p) for p in self.planes), self.max_value)


def _check_same_shape(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise ShapeError(f"plane shapes differ: {a.shape} vs {b.shape}")


def plane_add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Elementwise sum of two planes. Never clamps."""
    a = as_plane(a)
    b = as_plane(b)
    _check_same_shape(a, b)
    return a + b


def plane_sub(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Elementwise difference a - b. The result keeps its sign: residual
    planes must not be clipped on the way through the pipeline."""
    a = as_plane(a)
    b = as_plane(b)
    _check_same_shape(a, b)
    return a - b


def quantize_plane(plane: np.ndarray, max_value: float = 255.0) -> np.ndarray:
    """Clamp to [0, max_value] and round half away from zero.

    This is the single place sample values get quantized; everything
    upstream stays in float64.
    """
    clamped = np.clip(np.asarray(plane, dtype=np.float64), 0.0, max_value)
    # all values are >= 0 after clamping, so floor(x + 0.5) rounds
    # halves away from zero (np.round would round them to even)
    return np.floor(clamped + 0.5)


def quantize(img: Image) -> Image:
    """Clamp and round every plane to the 8-bit grid (kept as float64)."""
    return img.map_planes(lambda p: quantize_plane(p, img.max_value))
