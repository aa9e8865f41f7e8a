"""Shared fixtures: deterministic synthetic test images.

The generators below produce photo-like planes (smooth shading, dense
edges, periodic texture patches, band-limited grain) so that resolution
experiments behave the way they do on real photographs. Everything is
seeded; the same seed always gives the same image.

Several tests assert PSNR margins measured on these images. Those
margins were validated against the generator as written, so treat the
construction as frozen: changing amplitudes, counts or blur radii
invalidates the frozen expectations.
"""

from __future__ import annotations

import numpy as np
import pytest

from wavesr.resample import SMOOTHER, bicubic_resize, gaussian_blur


def synthetic_plane(seed: int, size: int = 256) -> np.ndarray:
    """A photo-like grayscale plane in [0, 255], shape (size, size)."""
    rng = np.random.default_rng(seed)
    h = w = size
    coarse = rng.uniform(40.0, 215.0, size=(8, 8))
    base = bicubic_resize(coarse, w, h, SMOOTHER)
    yy, xx = np.mgrid[0:h, 0:w]
    for _ in range(30):
        cy, cx = rng.uniform(0, h), rng.uniform(0, w)
        r = rng.uniform(size * 0.015, size * 0.12)
        base = base + rng.uniform(-60, 60) * (((yy - cy) ** 2 + (xx - cx) ** 2) < r * r)
    for _ in range(15):
        y0, x0 = rng.integers(0, h - 8, 2)
        y1 = min(h, y0 + int(rng.uniform(size * 0.03, size * 0.3)))
        x1 = min(w, x0 + int(rng.uniform(size * 0.03, size * 0.3)))
        base[y0:y1, x0:x1] += rng.uniform(-45, 45)
    for _ in range(5):
        ang = rng.uniform(0, np.pi)
        period = rng.uniform(6.0, 13.0)
        amp = rng.uniform(10.0, 18.0)
        stripes = amp * np.sin(2 * np.pi * (np.cos(ang) * xx + np.sin(ang) * yy) / period)
        sy, sx = rng.integers(0, h // 2, 2)
        ph, pw = int(rng.uniform(size * 0.2, size * 0.45)), int(rng.uniform(size * 0.2, size * 0.45))
        base[sy:sy + ph, sx:sx + pw] += stripes[sy:sy + ph, sx:sx + pw]
    tex = gaussian_blur(rng.normal(0.0, 1.0, size=(h, w)), 1.1)
    base = base + 20.0 * tex
    return np.clip(base, 0.0, 255.0)


def synthetic_rgb(seed: int, size: int = 128) -> np.ndarray:
    """A photo-like RGB array, shape (size, size, 3).

    Channels share the structural content of one luminance plane and
    differ by smooth chroma offsets, mimicking the channel correlation
    of photographs.
    """
    rng = np.random.default_rng(seed + 9000)
    luma = synthetic_plane(seed, size)
    channels = []
    for c in range(3):
        offset = bicubic_resize(rng.uniform(-35.0, 35.0, size=(4, 4)), size, size, SMOOTHER)
        channels.append(np.clip(luma + offset, 0.0, 255.0))
    return np.stack(channels, axis=-1)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)
