# app/lib/image2d.py
"""
Separable one-level 2-D Haar transform.

Analysis filters every row, then every column of each half-image.
Synthesis undoes the columns first, then the rows.
"""

import logging
from typing import Optional, Union

import numpy as np

from app.core.exception import DimensionMismatch, OddDimension
from app.lib.haar import ANALYSIS_KERNELS, SYNTHESIS_KERNELS
from app.lib.random_source import Xoshiro256StarStar
from app.schemas.common_schemas import TransformMode
from app.schemas.image_schemas import GrayImage, QuadSubbands
from app.schemas.signal_schemas import ArithmeticSink

logger = logging.getLogger("fasthaar.image2d")

DISPLAY_MIN = 0.0
DISPLAY_MAX = 255.0


def analyze2d(
    img: GrayImage,
    mode: Union[TransformMode, str] = TransformMode.FAST,
    sink: Optional[ArithmeticSink] = None,
) -> QuadSubbands:
    if img.width % 2 or img.height % 2:
        raise OddDimension(f"image is {img.width}x{img.height}; both dimensions must be even")
    kernel = ANALYSIS_KERNELS[TransformMode(mode)]

    low, high = kernel(img.pixels, sink)
    # columns: transpose so the kernel runs along the last axis
    ll, lh = (band.T for band in kernel(low.T, sink))
    hl, hh = (band.T for band in kernel(high.T, sink))

    logger.debug("analyze2d %dx%d (%s)", img.width, img.height, TransformMode(mode).value)
    return QuadSubbands(
        ll=GrayImage.from_array(ll),
        lh=GrayImage.from_array(lh),
        hl=GrayImage.from_array(hl),
        hh=GrayImage.from_array(hh),
    )


def synthesize2d(
    q: QuadSubbands,
    mode: Union[TransformMode, str] = TransformMode.FAST,
    sink: Optional[ArithmeticSink] = None,
) -> GrayImage:
    shapes = {band.shape for band in (q.ll, q.lh, q.hl, q.hh)}
    if len(shapes) != 1:
        raise DimensionMismatch(f"subbands disagree on dimensions: {sorted(shapes)}")
    kernel = SYNTHESIS_KERNELS[TransformMode(mode)]

    low = kernel(q.ll.pixels.T, q.lh.pixels.T, sink).T
    high = kernel(q.hl.pixels.T, q.hh.pixels.T, sink).T
    return GrayImage.from_array(kernel(low, high, sink))


def lowpass_display(q: QuadSubbands) -> GrayImage:
    """LL halved and clamped to the 8-bit range."""
    halved = q.ll.pixels / 2.0
    clamped = int(np.count_nonzero((halved < DISPLAY_MIN) | (halved > DISPLAY_MAX)))
    if clamped:
        logger.warning("⚠️ %d lowpass pixels clamped to [0, 255]", clamped)
    return GrayImage.from_array(np.clip(halved, DISPLAY_MIN, DISPLAY_MAX))


def difference_image(a: GrayImage, b: GrayImage) -> GrayImage:
    if a.shape != b.shape:
        raise DimensionMismatch(f"cannot subtract a {b.width}x{b.height} image from {a.width}x{a.height}")
    return GrayImage.from_array(a.pixels - b.pixels)


def amplified_difference(diff: GrayImage, gain: float) -> GrayImage:
    """|diff| * gain clamped to [0, 255], for viewing near-zero differences."""
    return GrayImage.from_array(np.clip(np.abs(diff.pixels) * gain, DISPLAY_MIN, DISPLAY_MAX))


def synthetic_image(width: int, height: int, seed: int) -> GrayImage:
    """Diagonal gradient plus seeded noise, kept inside [0, 255]."""
    rows, cols = np.mgrid[0:height, 0:width]
    span = max(width + height - 2, 1)
    gradient = 200.0 * (rows + cols) / span
    noise = Xoshiro256StarStar(seed).uniform(width * height, 0.0, 55.0).reshape(height, width)
    return GrayImage.from_array(gradient + noise)
