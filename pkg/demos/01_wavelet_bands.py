"""What the one-level Haar analysis does to an image.

Walks through the decimated and stationary transforms on a photo-like
plane: band shapes, where the energy goes, perfect reconstruction, and
the phase relationship that the rest of the toolkit builds on.
"""

import numpy as np

from wavesr import dwt2_haar, idwt2_haar, swt2_haar
from synth import photo_like


def band_energy(band):
    return float(np.sum(band * band))


plane = photo_like(seed=3, size=256)
print(f"input plane: {plane.shape[1]}x{plane.shape[0]}, "
      f"range [{plane.min():.1f}, {plane.max():.1f}]")

print("\n-- decimated analysis --")
dec = dwt2_haar(plane)
total = band_energy(plane)
print(f"band shape: {dec.band_shape[1]}x{dec.band_shape[0]} (half per axis)")
for name in ("ll", "lh", "hl", "hh"):
    share = band_energy(getattr(dec, name)) / total
    print(f"  {name}: {100 * share:6.2f}% of the energy")
print("the coarse band dominates; that is typical of photographs and is")
print("why discarding detail bands (as plain zero padding does) looks soft")

recon = idwt2_haar(dec)
print(f"\nperfect reconstruction: max |idwt(dwt(x)) - x| = "
      f"{np.max(np.abs(recon - plane)):.3g}")

energy_sum = sum(band_energy(getattr(dec, n)) for n in ("ll", "lh", "hl", "hh"))
print(f"energy preservation: bands sum to {energy_sum:.6e}, "
      f"input is {total:.6e} (orthonormal filters)")

print("\n-- stationary analysis --")
stat = swt2_haar(plane)
print(f"band shape: {stat.band_shape[1]}x{stat.band_shape[0]} (undecimated)")

# The property everything else relies on: sampling the stationary bands
# at even (row, col) phases reproduces the decimated bands exactly.
matches = all(
    np.array_equal(getattr(stat, n)[0::2, 0::2], getattr(dec, n))
    for n in ("ll", "lh", "hl", "hh")
)
print(f"even-phase samples equal the decimated bands bit for bit: {matches}")

shifted = np.roll(plane, shift=(1, 3), axis=(0, 1))
covariant = np.array_equal(
    swt2_haar(shifted).hh, np.roll(stat.hh, shift=(1, 3), axis=(0, 1)))
print(f"shifting the image shifts every stationary band the same way: {covariant}")
print("(the decimated transform has no such property; that is the reason")
print("the stationary transform is the one used to harvest detail bands)")
