"""How the diagonal-band shrinkage threshold is chosen and what it buys.

The noise level comes from the median absolute coefficient (the MAD
rule). The threshold is that estimate minus the spread between the
harmonic and geometric means of the coefficient magnitudes. On a noisy
band the means nearly agree and the threshold tracks the noise; on a
detail-rich band they disagree and the threshold backs off, protecting
real structure.
"""

import numpy as np

from wavesr import denoise_hh, dwt2_haar, mad_sigma, threshold_value
from synth import photo_like

clean = dwt2_haar(photo_like(seed=0, size=256)).hh
rng = np.random.default_rng(7)

print("true sigma   MAD estimate")
for sigma in (2.0, 5.0, 10.0, 20.0):
    noise = rng.normal(0.0, sigma, size=(128, 128))
    print(f"   {sigma:5.1f}      {mad_sigma(dwt2_haar(noise).hh):8.3f}")
print("(the MAD rule is calibrated for Gaussian noise and the orthonormal")
print("transform keeps white noise white, so the estimate lands on target)")

print("\nthreshold anatomy on bands with different content:")
for label, band in (
    ("pure noise, sigma 5", rng.normal(0.0, 5.0, size=clean.shape)),
    ("clean photo detail", clean),
    ("photo detail + noise", clean + rng.normal(0.0, 5.0, size=clean.shape)),
):
    rep = threshold_value(band)
    print(f"  {label:22s} sigma={rep.sigma:7.3f}  |HM-GM|="
          f"{abs(rep.harmonic_mean - rep.geometric_mean):7.3f}  T={rep.threshold:6.3f}")

print("\nshrinking a corrupted band at the chosen threshold:")
print("sigma    MSE before    MSE after")
for sigma in (2.0, 5.0, 10.0):
    noisy = clean + rng.normal(0.0, sigma, size=clean.shape)
    denoised = denoise_hh(noisy)
    before = float(np.mean((noisy - clean) ** 2))
    after = float(np.mean((denoised - clean) ** 2))
    print(f" {sigma:4.1f}    {before:9.3f}    {after:9.3f}")
print("soft thresholding never grows a coefficient, so the worst case is")
print("a band it leaves nearly alone (threshold clamped toward zero)")
