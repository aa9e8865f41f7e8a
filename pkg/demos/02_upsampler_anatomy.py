"""The wavelet-corrected 2x upsampler, taken apart.

A smooth bicubic enlargement gets the coarse structure right but its
detail bands are weak. The input image's own stationary detail bands
live on the same grid with the same scaling, so they can be added back
to restore the high frequencies the enlargement lost. The raw sum
overshoots; the Gaussian pass and the back-projection loop downstream
re-balance it. This script measures every stage, then compares how much
genuine detail survives to the final output.
"""

import numpy as np

from wavesr import (
    Image,
    SMOOTHER,
    SrConfig,
    bicubic_resize,
    bicubic_sr_baseline,
    dwt2_haar,
    psnr,
    quantize,
    simulate_lr,
    super_resolve,
    swt2_haar,
    wavelet_upsample_2x,
)
from wavesr.pipeline import gaussian_psf
from synth import photo_like

hr_plane = photo_like(seed=8, size=256)
hr = Image.from_array(hr_plane)
cfg = SrConfig()
lr_img = quantize(simulate_lr(hr, cfg))
lr = lr_img.planes[0]
print(f"ground truth {hr.width}x{hr.height}, observed {lr.shape[1]}x{lr.shape[0]}")


def db(plane):
    return psnr(quantize(Image.from_array(np.asarray(plane))), hr).psnr


plain = bicubic_resize(lr, hr.width, hr.height, SMOOTHER)
up_bands = dwt2_haar(plain)
lr_bands = swt2_haar(lr)
print(f"\nplain smooth enlargement: {db(plain):.3f} dB, but look at its detail bands:")
for name in ("lh", "hl", "hh"):
    kept = float(np.sum(getattr(up_bands, name) ** 2))
    measured = float(np.sum(getattr(lr_bands, name) ** 2))
    print(f"  {name}: enlargement carries {kept:10.1f}, "
          f"observation estimates {measured:10.1f}")
print("the enlargement suppressed most of the detail energy the observation")
print("says should be there; summing the two estimates puts it back (with")
print("interest: stationary bands count all four sampling phases, so their")
print("energy runs about four times the decimated equivalent)")

reports = []
corrected = wavelet_upsample_2x(lr, cfg, report_sink=reports)
rep = reports[0]
smoothed = gaussian_psf(corrected, cfg.psf_sigma, cfg.psf_size)
full = super_resolve(lr_img, cfg)[0].planes[0]

print(f"\nstage by stage:")
print(f"  raw corrected enlargement   {db(corrected):7.3f} dB  (detail overshoots)")
print(f"  after the Gaussian pass     {db(smoothed):7.3f} dB")
print(f"  after back-projection       {db(full):7.3f} dB")
print("the raw sum over-injects energy and actually scores worse; the")
print("smoothing pass and the consistency loop are what make it usable")

print(f"\ndiagonal band threshold during correction: sigma={rep.sigma:.3f}, "
      f"|HM-GM|={abs(rep.harmonic_mean - rep.geometric_mean):.3f}, "
      f"T={rep.threshold:.3f}")

# PSNR alone undersells the point. Compare how much of the truth's
# detail energy each restoration actually carries.
plain_cr = bicubic_sr_baseline(lr_img, 2).planes[0]
print(f"\ndetail energy in the outputs (plain interpolating bicubic scores "
      f"{db(plain_cr):.3f} dB):")
print("               lh          hl          hh")
for label, out in (("truth", hr_plane), ("proposed", full), ("bicubic", plain_cr)):
    bands = dwt2_haar(np.asarray(out))
    energies = [float(np.sum(getattr(bands, n) ** 2)) for n in ("lh", "hl", "hh")]
    print(f"  {label:10s} {energies[0]:10.3g}  {energies[1]:10.3g}  {energies[2]:10.3g}")
print("at near-identical PSNR the corrected result keeps visibly more of")
print("the true high-frequency content than the interpolating baseline")
