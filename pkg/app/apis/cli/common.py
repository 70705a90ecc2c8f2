# app/apis/cli/common.py

import logging
from typing import Tuple

import numpy as np

from app.core.config import settings
from app.core.exception import EmptySignal, OddLength
from app.lib.random_source import random_signal
from app.lib.signal_io import read_signal_csv
from app.schemas.cli_schemas import CliCommand
from app.schemas.common_schemas import PadMode

logger = logging.getLogger("fasthaar.cli")


def emit(key: str, value: object) -> None:
    """Report line on stdout: `<key> <value>`."""
    print(f"{key} {value}")


def load_signal(cmd: CliCommand) -> np.ndarray:
    """--in CSV when given, otherwise the seeded synthetic signal of length --n."""
    if cmd.input is not None:
        return read_signal_csv(cmd.input)
    n = settings.DEFAULT_SIGNAL_LENGTH if cmd.n is None else cmd.n
    if n < 1:
        raise EmptySignal(f"--n must be positive, got {n}")
    logger.info("🎲 generated %d samples with seed %d", n, cmd.seed)
    return np.array(random_signal(n, cmd.seed))


def prepare_signal(cmd: CliCommand, x: np.ndarray) -> Tuple[np.ndarray, bool]:
    """
    Applies --pad. Returns the signal to transform and whether a zero was appended.
    """
    if x.size % 2 == 0:
        return x, False
    if cmd.pad is PadMode.ZERO:
        logger.warning("⚠️ odd length %d: appending one zero sample", x.size)
        return np.append(x, 0.0), True
    raise OddLength(f"signal length {x.size} is odd (use --pad zero to append a zero sample)")
