"""Synthetic photo-like test images for the demo scripts.

Real photographs cannot ship with the package, so the demos run on
generated images with similar statistics: smooth shading, dense edges
at several scales, patches of periodic texture and band-limited grain.
"""

import numpy as np

from wavesr.resample import SMOOTHER, bicubic_resize, gaussian_blur


def photo_like(seed, size=256):
    rng = np.random.default_rng(seed)
    h = w = size
    base = bicubic_resize(rng.uniform(40.0, 215.0, size=(8, 8)), w, h, SMOOTHER)
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
        stripes = rng.uniform(10.0, 18.0) * np.sin(
            2 * np.pi * (np.cos(ang) * xx + np.sin(ang) * yy) / period)
        sy, sx = rng.integers(0, h // 2, 2)
        ph = int(rng.uniform(size * 0.2, size * 0.45))
        pw = int(rng.uniform(size * 0.2, size * 0.45))
        base[sy:sy + ph, sx:sx + pw] += stripes[sy:sy + ph, sx:sx + pw]
    base = base + 20.0 * gaussian_blur(rng.normal(0.0, 1.0, size=(h, w)), 1.1)
    return np.clip(base, 0.0, 255.0)
