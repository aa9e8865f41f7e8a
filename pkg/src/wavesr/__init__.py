"""wavesr: single-image super-resolution in the wavelet and spatial domains.

A small numpy library around three ideas: a wavelet-domain 2x upsampler
that corrects the detail bands of a smooth bicubic enlargement with the
stationary-transform bands of the input, soft-threshold denoising of
the diagonal band, and an iterative back-projection loop that enforces
consistency with the observed low-resolution image. A PSNR benchmark
harness compares the pipeline against bicubic and zero-padding
baselines.
"""

from .image import (
    Image,
    ShapeError,
    as_plane,
    plane_add,
    plane_sub,
    quantize,
    quantize_plane,
)
from .pnm import FormatError, load_pnm, save_pnm
from .resample import (
    CATMULL_ROM,
    MITCHELL,
    SHARPER,
    SMOOTHER,
    STANDARD,
    VARIANTS,
    CubicKernel,
    ResampleVariant,
    bicubic_resize,
    block_downsample_2x2,
    gaussian_blur,
    gaussian_kernel1d,
    unsharp_mask,
)
from .wavelet import SubBands, dwt2_haar, idwt2_haar, swt2_haar, wzp_upscale
from .denoise import (
    DEFAULT_EPSILON,
    ThresholdReport,
    band_means,
    denoise_hh,
    hard_threshold,
    mad_sigma,
    soft_threshold,
    threshold_value,
)
from .metrics import PsnrResult, mse, psnr
from .pipeline import (
    IterationTrace,
    SrConfig,
    bicubic_sr_baseline,
    gaussian_psf,
    simulate_lr,
    super_resolve,
    wavelet_upsample_2x,
    wzp_sr_baseline,
)

__version__ = "0.1.0"

__all__ = [
    "Image", "ShapeError", "as_plane", "plane_add", "plane_sub",
    "quantize", "quantize_plane",
    "FormatError", "load_pnm", "save_pnm",
    "CubicKernel", "ResampleVariant", "CATMULL_ROM", "MITCHELL",
    "STANDARD", "SMOOTHER", "SHARPER", "VARIANTS",
    "bicubic_resize", "block_downsample_2x2", "gaussian_blur",
    "gaussian_kernel1d", "unsharp_mask",
    "SubBands", "dwt2_haar", "idwt2_haar", "swt2_haar", "wzp_upscale",
    "DEFAULT_EPSILON", "ThresholdReport", "band_means", "denoise_hh",
    "hard_threshold", "mad_sigma", "soft_threshold", "threshold_value",
    "PsnrResult", "mse", "psnr",
    "IterationTrace", "SrConfig", "bicubic_sr_baseline", "gaussian_psf",
    "simulate_lr", "super_resolve", "wavelet_upsample_2x", "wzp_sr_baseline",
]
