"""Iterative back-projection, watched one iteration at a time.

The initial estimate is the wavelet-corrected enlargement after one
Gaussian smoothing pass. Each iteration re-downsamples the estimate,
compares it with the observed image, and adds the enlarged residual
back. If the downsampler matches the observation model, the residual
shrinks geometrically and quickly stops mattering.
"""

import dataclasses

from wavesr import Image, SrConfig, psnr, quantize, simulate_lr, super_resolve
from synth import photo_like

hr = Image.from_array(photo_like(seed=5, size=256))
cfg = SrConfig(iterations=6)  # a few extra to show the tail
lr = quantize(simulate_lr(hr, cfg))

result, trace = super_resolve(lr, cfg, ground_truth=hr)

print("iter   rms residual     psnr (dB)")
for i, (rms, db) in enumerate(zip(trace.rms_error, trace.psnr_db), start=1):
    print(f"  {i}      {rms:9.4f}      {db:8.3f}")

print(f"\nresidual after 3 iterations is "
      f"{100 * trace.rms_error[2] / trace.rms_error[0]:.1f}% of the first")
print("the default configuration stops at 3, past that the gains are tiny")

no_ibp = super_resolve(lr, dataclasses.replace(cfg, iterations=0))[0]
print(f"\nwithout back-projection: {psnr(quantize(no_ibp), hr).psnr:.3f} dB")
print(f"with 6 iterations:       {psnr(quantize(result), hr).psnr:.3f} dB")

# The loop needs to know how the observation was produced. Tell it the
# wrong downsampler and the fixed point moves away from the truth.
block_cfg = dataclasses.replace(cfg, iterations=3, down_variant="block_2x2")
mismatched = super_resolve(lr, block_cfg)[0]
print(f"\nsame observation, wrong observation model in the loop: "
      f"{psnr(quantize(mismatched), hr).psnr:.3f} dB")
print("(the observation was made with the sharpened bicubic reducer, so")
print("back-projecting through a box average converges to the wrong image)")
