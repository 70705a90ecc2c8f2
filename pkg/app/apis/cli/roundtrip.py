# app/apis/cli/roundtrip.py

import logging

import numpy as np

from app.apis.cli.common import emit, load_signal, prepare_signal
from app.core.config import settings
from app.core.exception import EXIT_DOMAIN, EXIT_OK
from app.lib.multilevel import decompose, reconstruct
from app.schemas.cli_schemas import CliCommand

logger = logging.getLogger("fasthaar.cli.roundtrip")


def handle(cmd: CliCommand) -> int:
    """Analysis then synthesis in the selected mode; passes iff the error is within tolerance."""
    raw = load_signal(cmd)
    x, _ = prepare_signal(cmd, raw)

    rebuilt = reconstruct(decompose(x, cmd.levels, cmd.mode), cmd.mode)
    error = float(np.max(np.abs(rebuilt[: raw.size] - raw))) if raw.size else 0.0

    passed = error <= settings.ROUNDTRIP_TOLERANCE
    logger.info("roundtrip n=%d levels=%d max error %.3e", raw.size, cmd.levels, error)
    emit("max_abs_error", f"{error:.6e}")
    emit("tolerance", f"{settings.ROUNDTRIP_TOLERANCE:.1e}")
    emit("status", "pass" if passed else "fail")
    return EXIT_OK if passed else EXIT_DOMAIN
