"""Image fidelity measures: mean squared error and PSNR."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .image import Image, ShapeError

# ITU-R BT.601 luminance weights, used by the luma-only comparison mode
_LUMA_WEIGHTS = (0.299, 0.587, 0.114)


@dataclass(frozen=True)
class PsnrResult:
    mse: float
    psnr: float  # math.inf when mse == 0
    max_value: float = 255.0


def _check_comparable(a: Image, b: Image) -> None:
    if a.n_planes != b.n_planes:
        raise ShapeError(f"plane counts differ: {a.n_planes} vs {b.n_planes}")
    if (a.height, a.width) != (b.height, b.width):
        raise ShapeError(
            f"image sizes differ: {a.width}x{a.height} vs {b.width}x{b.height}"
        )


def _luma(img: Image) -> np.ndarray:
    if img.n_planes == 1:
        return img.planes[0]
    return sum(w * p for w, p in zip(_LUMA_WEIGHTS, img.planes))


def mse(a: Image, b: Image, luma_only: bool = False) -> float:
    """Mean squared sample difference, over all planes jointly.

    With ``luma_only`` the images are reduced to BT.601 luminance first
    (a no-op for grayscale).
    """
    _check_comparable(a, b)
    if luma_only:
        diff = _luma(a) - _luma(b)
        return float(np.mean(diff * diff))
    total = 0.0
    for pa, pb in zip(a.planes, b.planes):
        diff = pa - pb
        total += float(np.sum(diff * diff))
    return total / (a.n_planes * a.height * a.width)


def psnr(a: Image, b: Image, luma_only: bool = False) -> PsnrResult:
    """Peak signal-to-noise ratio 20*log10(max / sqrt(mse)) in dB.

    Identical images give mse 0 and an infinite PSNR.
    """
    err = mse(a, b, luma_only=luma_only)
    peak = float(a.max_value)
    if err == 0.0:
        return PsnrResult(mse=0.0, psnr=math.inf, max_value=peak)
    return PsnrResult(mse=err, psnr=20.0 * math.log10(peak / math.sqrt(err)),
                      max_value=peak)
