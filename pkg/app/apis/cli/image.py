# app/apis/cli/image.py

import logging

import numpy as np

from app.apis.cli.common import emit
from app.core.config import settings
from app.core.exception import OddDimension
from app.lib.image2d import (
    amplified_difference,
    analyze2d,
    difference_image,
    lowpass_display,
    synthetic_image,
)
from app.lib.pgm import read_pgm, write_pgm
from app.lib.signal_io import write_table_csv
from app.schemas.cli_schemas import CliCommand
from app.schemas.common_schemas import TransformMode
from app.schemas.signal_schemas import ArithmeticSink

logger = logging.getLogger("fasthaar.cli.image")


def handle(cmd: CliCommand) -> int:
    """
    Lowpass (LL) band of one 2-D level in both modes, their displays and
    the signed difference between them.
    """
    if cmd.input is not None:
        img = read_pgm(cmd.input)
    else:
        size = settings.DEFAULT_IMAGE_SIZE if cmd.n is None else cmd.n
        if size < 2 or size % 2:
            raise OddDimension(f"--n must be a positive even image size, got {size}")
        img = synthetic_image(size, size, cmd.seed)
        logger.info("🎲 generated %dx%d synthetic image with seed %d", size, size, cmd.seed)

    bands = {}
    sinks = {}
    for mode in TransformMode:
        sinks[mode] = ArithmeticSink()
        bands[mode] = analyze2d(img, mode, sinks[mode])

    out_dir = cmd.output
    write_pgm(lowpass_display(bands[TransformMode.DIRECT]), out_dir / "ll_direct.pgm")
    write_pgm(lowpass_display(bands[TransformMode.FAST]), out_dir / "ll_fast.pgm")

    diff = difference_image(bands[TransformMode.DIRECT].ll, bands[TransformMode.FAST].ll)
    rows, cols = np.indices(diff.shape)
    write_table_csv(
        {"row": rows.ravel(), "col": cols.ravel(), "difference": diff.pixels.ravel()},
        out_dir / "difference.csv",
    )
    gain = settings.DIFFERENCE_DISPLAY_GAIN
    write_pgm(amplified_difference(diff, gain), out_dir / "difference_display.pgm")

    max_diff = float(np.max(np.abs(diff.pixels)))
    emit("image", f"{img.width}x{img.height}")
    emit("max_abs_difference", f"{max_diff:.6e}")
    emit("display_gain", f"{gain:g}")
    for mode in TransformMode:
        emit(f"{mode.value}_mul_count", sinks[mode].mul_count)
        emit(f"{mode.value}_add_count", sinks[mode].add_count)
    return 0
