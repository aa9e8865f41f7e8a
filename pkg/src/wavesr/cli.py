"""Command-line interface: run the pipeline, the baselines and the PSNR
benchmark.

Exit codes: 0 success, 1 usage error, 2 I/O error, 3 shape/format error.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .denoise import DEFAULT_EPSILON
from .image import Image, ShapeError, quantize
from .metrics import psnr
from .pipeline import (
    SrConfig,
    bicubic_sr_baseline,
    simulate_lr,
    super_resolve,
    wzp_sr_baseline,
)
from .pnm import FormatError, load_pnm, save_pnm

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_SHAPE = 3

BENCH_HEADER = "image,method,scale,iterations,psnr_db,runtime_s"
_DOWN_BY_FLAG = {"sharper": "bicubic_sharper", "block": "block_2x2"}


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; the contract reserves 2 for I/O
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_config_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--scale", type=int, default=2, choices=(2, 4, 8),
                     help="magnification factor (default 2)")
    sub.add_argument("--iterations", type=int, default=3,
                     help="back-projection iterations (default 3)")
    sub.add_argument("--psf-sigma", type=float, default=1.0,
                     help="Gaussian PSF sigma in pixels (default 1.0)")
    sub.add_argument("--psf-size", type=int, default=5,
                     help="Gaussian PSF kernel width, odd (default 5)")
    sub.add_argument("--no-denoise", action="store_true",
                     help="disable diagonal-band denoising")
    sub.add_argument("--down", choices=sorted(_DOWN_BY_FLAG), default="sharper",
                     help="downsampler: bicubic sharper or 2x2 block mean")
    sub.add_argument("--sharpen-amount", type=float, default=0.3,
                     help="unsharp amount of the sharper resampler (default 0.3)")
    sub.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON,
                     help="magnitude floor for the threshold means")
    sub.add_argument("--verbose", action="store_true",
                     help="log per-iteration residuals and threshold decisions")


def _config_from(args: argparse.Namespace) -> SrConfig:
    return SrConfig(
        scale=args.scale,
        iterations=args.iterations,
        psf_sigma=args.psf_sigma,
        psf_size=args.psf_size,
        denoise_enabled=not args.no_denoise,
        down_variant=_DOWN_BY_FLAG[args.down],
        sharpen_amount=args.sharpen_amount,
        epsilon=args.epsilon,
    )


def cmd_sr(args: argparse.Namespace) -> int:
    cfg = _config_from(args)
    image = load_pnm(args.input)
    reports: list = []
    result, trace = super_resolve(image, cfg, report_sink=reports)
    save_pnm(result, args.output)
    if args.verbose:
        sys.stdout.write(trace.to_csv())
        for rep in reports:
            sys.stdout.write(
                f"threshold sigma={rep.sigma:.6g} hm={rep.harmonic_mean:.6g} "
                f"gm={rep.geometric_mean:.6g} T={rep.threshold:.6g}\n"
            )
    return EXIT_OK


def cmd_psnr(args: argparse.Namespace) -> int:
    a = load_pnm(args.a)
    b = load_pnm(args.b)
    result = psnr(a, b, luma_only=args.luma_only)
    sys.stdout.write(f"mse={result.mse:.6g}\n")
    sys.stdout.write(f"psnr_db={result.psnr:.6g}\n")
    return EXIT_OK


def _format_psnr(value: float) -> str:
    return "inf" if value == float("inf") else f"{value:.3f}"


def _bench_methods(lr: Image, cfg: SrConfig, ll_scale: float, reports: list):
    """Yield (method name, runner) pairs for the benchmark trio."""
    yield "bicubic", lambda: bicubic_sr_baseline(lr, cfg.scale)
    yield "proposed", lambda: super_resolve(lr, cfg, report_sink=reports)[0]
    yield "wzp", lambda: wzp_sr_baseline(lr, cfg.scale, ll_scale)


def cmd_bench(args: argparse.Namespace) -> int:
    cfg = _config_from(args)
    corpus = Path(args.corpus_dir)
    if not corpus.is_dir():
        sys.stderr.write(f"bench: not a directory: {corpus}\n")
        return EXIT_USAGE
    paths = sorted(p for p in corpus.iterdir()
                   if p.suffix.lower() in (".pgm", ".ppm"))
    if not paths:
        sys.stderr.write(f"bench: no PNM images in {corpus}\n")
        return EXIT_USAGE

    rows = []
    threshold_rows = []
    failures = []
    for path in paths:
        try:
            hr = load_pnm(path)
            if hr.width % (2 * cfg.scale) or hr.height % (2 * cfg.scale):
                raise ShapeError(
                    f"{path.name}: dimensions must be divisible by "
                    f"{2 * cfg.scale} for scale {cfg.scale}"
                )
            lr = quantize(simulate_lr(hr, cfg))
            reports: list = []
            results = {}
            for method, run in _bench_methods(lr, cfg, args.ll_scale, reports):
                start = time.perf_counter()
                output = run()
                runtime = time.perf_counter() - start
                value = psnr(quantize(output), hr, luma_only=args.luma_only).psnr
                results[method] = (value, runtime)
            for method in sorted(results):
                value, runtime = results[method]
                iterations = cfg.iterations if method == "proposed" else 0
                rows.append(f"{path.stem},{method},{cfg.scale},{iterations},"
                            f"{_format_psnr(value)},{runtime:.3f}")
            if args.verbose:
                for rep in reports:
                    threshold_rows.append(
                        f"{path.stem},{rep.sigma:.6g},{rep.harmonic_mean:.6g},"
                        f"{rep.geometric_mean:.6g},{rep.threshold:.6g}"
                    )
                sys.stderr.write(f"bench: {path.name} done\n")
        except (OSError, ValueError) as exc:
            failures.append((path, exc))
            sys.stderr.write(f"bench: {path.name} failed: {exc}\n")

    report_path = Path(args.report)
    with open(report_path, "w") as fh:
        fh.write(BENCH_HEADER + "\n")
        for row in rows:
            fh.write(row + "\n")
    if args.verbose:
        sidecar = report_path.with_suffix(".thresholds.csv")
        with open(sidecar, "w") as fh:
            fh.write("image,sigma,hm,gm,T\n")
            for row in threshold_rows:
                fh.write(row + "\n")

    if failures:
        first = failures[0][1]
        if isinstance(first, (ShapeError, FormatError)):
            return EXIT_SHAPE
        if isinstance(first, OSError):
            return EXIT_IO
        return EXIT_SHAPE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wavesr",
                     description="Wavelet/spatial single-image super-resolution")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sr = sub.add_parser("sr", help="super-resolve one PNM image")
    p_sr.add_argument("input", help="input PGM/PPM file")
    p_sr.add_argument("output", help="output PGM/PPM file")
    _add_config_flags(p_sr)
    p_sr.set_defaults(func=cmd_sr)

    p_bench = sub.add_parser("bench",
                             help="PSNR benchmark over a ground-truth corpus")
    p_bench.add_argument("corpus_dir", help="directory of HR PGM/PPM images")
    p_bench.add_argument("report", help="output CSV path")
    _add_config_flags(p_bench)
    p_bench.add_argument("--ll-scale", type=float, default=2.0,
                         help="coarse-band gain of the zero-padding baseline")
    p_bench.add_argument("--luma-only", action="store_true",
                         help="compare BT.601 luminance instead of all channels")
    p_bench.set_defaults(func=cmd_bench)

    p_psnr = sub.add_parser("psnr", help="PSNR/MSE between two PNM files")
    p_psnr.add_argument("a")
    p_psnr.add_argument("b")
    p_psnr.add_argument("--luma-only", action="store_true",
                        help="compare BT.601 luminance instead of all channels")
    p_psnr.set_defaults(func=cmd_psnr)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ShapeError, FormatError) as exc:
        sys.stderr.write(f"wavesr: {exc}\n")
        return EXIT_SHAPE
    except ValueError as exc:
        sys.stderr.write(f"wavesr: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        sys.stderr.write(f"wavesr: {exc}\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
