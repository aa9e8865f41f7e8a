"""Binary PNM (P5/P6) reader and writer.

PNM is the package's lossless interchange format: 8-bit samples survive a
load/save round trip byte for byte, so golden files stay stable. Header
grammar: magic, then whitespace-separated width/height/maxval with ``#``
comments allowed, then a single whitespace byte, then raw row-major
samples (RGB interleaved for P6).
"""

from __future__ import annotations

import os

import numpy as np

from .image import Image, quantize_plane


class FormatError(ValueError):
    """Malformed PNM header or an unsupported sample format."""


def _read_header_token(buf: bytes, pos: int) -> tuple[bytes, int]:
    """Return the next header token and the position after it.

    Skips whitespace and '#' comments (which run to end of line).
    """
    n = len(buf)
    while pos < n:
        c = buf[pos : pos + 1]
        if c.isspace():
            pos += 1
        elif c == b"#":
            while pos < n and buf[pos : pos + 1] not in (b"\n", b"\r"):
                pos += 1
        else:
            break
    if pos >= n:
        raise FormatError("unexpected end of header")
    start = pos
    while pos < n and not buf[pos : pos + 1].isspace():
        pos += 1
    return buf[start:pos], pos


def load_pnm(path: str | os.PathLike) -> Image:
    """Load a binary PGM (P5) or PPM (P6) file as a float64 Image.

    Sample bytes are converted to real values with no scaling. Only
    maxval 255 is supported.
    """
    with open(path, "rb") as fh:
        buf = fh.read()

    if len(buf) < 2 or buf[:1] != b"P":
        raise FormatError(f"{path}: not a PNM file (bad magic)")
    magic = buf[:2]
    if magic not in (b"P5", b"P6"):
        raise FormatError(f"{path}: unsupported PNM magic {magic!r} (need P5 or P6)")
    channels = 1 if magic == b"P5" else 3

    pos = 2
    fields = []
    for name in ("width", "height", "maxval"):
        token, pos = _read_header_token(buf, pos)
        try:
            value = int(token)
        except ValueError:
            raise FormatError(f"{path}: non-numeric {name} {token!r}") from None
        if value <= 0:
            raise FormatError(f"{path}: {name} must be positive, got {value}")
        fields.append(value)
    width, height, maxval = fields
    if maxval != 255:
        raise FormatError(f"{path}: unsupported maxval {maxval} (only 8-bit, 255)")

    # exactly one whitespace byte separates the header from the payload
    if pos >= len(buf) or not buf[pos : pos + 1].isspace():
        raise FormatError(f"{path}: missing whitespace after maxval")
    pos += 1

    expected = width * height * channels
    payload = buf[pos : pos + expected]
    if len(payload) < expected:
        raise OSError(
            f"{path}: truncated pixel data ({len(payload)} of {expected} bytes)"
        )

    raw = np.frombuffer(payload, dtype=np.uint8).astype(np.float64)
    if channels == 1:
        return Image((raw.reshape(height, width),))
    rgb = raw.reshape(height, width, 3)
    return Image(tuple(rgb[:, :, c] for c in range(3)))


def save_pnm(img: Image, path: str | os.PathLike) -> None:
    """Write an Image as binary P5 (1 plane) or P6 (3 planes).

    Samples are clamped to [0, 255] and rounded half away from zero.
    """
    quantized = [quantize_plane(p, img.max_value).astype(np.uint8) for p in img.planes]
    if img.n_planes == 1:
        magic = b"P5"
        payload = quantized[0].tobytes()
    else:
        magic = b"P6"
        payload = np.stack(quantized, axis=-1).tobytes()
    header = b"%s\n%d %d\n255\n" % (magic, img.width, img.height)
    with open(path, "wb") as fh:
        fh.write(header + payload)
