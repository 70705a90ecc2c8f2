# app/lib/pgm.py
"""
Netpbm graymap codec: reads P2 (ASCII) and P5 (binary) with maxval <= 255,
writes P5 with maxval 255.
"""

import logging
from pathlib import Path
from typing import List, Tuple, Union

import numpy as np

from app.core.exception import (
    FileNotFound,
    InvalidPixel,
    IoError,
    MalformedHeader,
    TruncatedData,
    UnsupportedFormat,
)
from app.schemas.image_schemas import GrayImage

logger = logging.getLogger("fasthaar.io")

PathLike = Union[str, Path]

_WHITESPACE = b" \t\n\r\v\f"
_OTHER_NETPBM = {b"P1", b"P3", b"P4", b"P6", b"P7"}


def _header_tokens(data: bytes, count: int) -> Tuple[List[bytes], int]:
    """
    Reads `count` whitespace-separated header tokens, skipping '#' comments.
    Returns the tokens and the offset just past the last token.
    """
    tokens: List[bytes] = []
    pos = 0
    n = len(data)
    while len(tokens) < count:
        while pos < n and data[pos] in _WHITESPACE:
            pos += 1
        if pos >= n:
            raise MalformedHeader(f"header ended after {len(tokens)} of {count} fields")
        if data[pos:pos + 1] == b"#":
            while pos < n and data[pos:pos + 1] not in (b"\n", b"\r"):
                pos += 1
            continue
        start = pos
        while pos < n and data[pos] not in _WHITESPACE and data[pos:pos + 1] != b"#":
            pos += 1
        tokens.append(data[start:pos])
    return tokens, pos


def _positive_int(token: bytes, name: str) -> int:
    if not token.isdigit():
        raise MalformedHeader(f"{name} {token!r} is not a decimal integer")
    value = int(token)
    if value <= 0:
        raise MalformedHeader(f"{name} must be positive, got {value}")
    return value


def decode_pgm(data: bytes) -> GrayImage:
    magic = data[:2]
    if magic in _OTHER_NETPBM:
        raise UnsupportedFormat(f"{magic.decode()} images are not graymaps")
    if magic not in (b"P2", b"P5"):
        raise MalformedHeader("missing P2/P5 magic number")

    (magic_tok, w_tok, h_tok, max_tok), pos = _header_tokens(data, 4)
    if magic_tok != magic:
        raise MalformedHeader(f"bad magic number {magic_tok!r}")
    width = _positive_int(w_tok, "width")
    height = _positive_int(h_tok, "height")
    maxval = _positive_int(max_tok, "maxval")
    if maxval > 255:
        raise UnsupportedFormat(f"maxval {maxval} needs 16-bit samples; only <= 255 is supported")

    count = width * height
    if magic == b"P5":
        # exactly one whitespace byte separates the header from the raster
        if pos >= len(data) or data[pos] not in _WHITESPACE:
            raise MalformedHeader("expected a single whitespace byte after maxval")
        raster = data[pos + 1:pos + 1 + count]
        if len(raster) < count:
            raise TruncatedData(f"expected {count} pixel bytes, found {len(raster)}")
        pixels = np.frombuffer(raster, dtype=np.uint8).astype(np.float64)
    else:
        tokens = data[pos:].split()
        if len(tokens) < count:
            raise TruncatedData(f"expected {count} pixel values, found {len(tokens)}")
        try:
            pixels = np.array([int(t) for t in tokens[:count]], dtype=np.float64)
        except ValueError as exc:
            raise InvalidPixel(f"non-integer pixel value: {exc}") from exc

    if pixels.size and (pixels.min() < 0 or pixels.max() > maxval):
        raise InvalidPixel(f"pixel values must lie in [0, {maxval}]")

    return GrayImage(width=width, height=height, pixels=pixels.reshape(height, width))


def read_pgm(path: PathLike) -> GrayImage:
    path = Path(path)
    if not path.is_file():
        raise FileNotFound(f"{path} does not exist")
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc
    img = decode_pgm(data)
    logger.debug("read %dx%d graymap from %s", img.width, img.height, path)
    return img


def quantize(pixels: np.ndarray) -> np.ndarray:
    """Round half away from zero, then clamp to [0, 255]."""
    rounded = np.sign(pixels) * np.floor(np.abs(pixels) + 0.5)
    return np.clip(rounded, 0, 255).astype(np.uint8)


def encode_pgm(img: GrayImage) -> bytes:
    header = f"P5\n{img.width} {img.height}\n255\n".encode("ascii")
    return header + quantize(img.pixels).tobytes()


def write_pgm(img: GrayImage, path: PathLike) -> None:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(encode_pgm(img))
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc
    logger.info("🖼️ wrote %dx%d graymap to %s", img.width, img.height, path)
