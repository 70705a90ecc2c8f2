# app/apis/cli/compare.py

import logging
from pathlib import Path

import numpy as np

from app.apis.cli.common import emit, load_signal, prepare_signal
from app.core.config import settings
from app.core.exception import EXIT_DOMAIN, EXIT_OK
from app.lib.signal_io import write_table_csv
from app.lib.svg_plot import emit_svg_plot
from app.schemas.cli_schemas import CliCommand
from app.services.metrics_engine import MetricsEngine

logger = logging.getLogger("fasthaar.cli.compare")


def overlay_path(plot: Path, band: str) -> Path:
    return plot.with_name(f"{plot.stem}_{band}{plot.suffix or '.svg'}")


def handle(cmd: CliCommand) -> int:
    """
    Direct analysis is the oracle, fast analysis the candidate.
    Exit 0 iff both bands stay at or below COMPARE_THRESHOLD_DB.
    """
    raw = load_signal(cmd)
    x, _ = prepare_signal(cmd, raw)
    comparison = MetricsEngine.compare_bands(x)
    approx_db = comparison.approx_report.pointwise_db
    detail_db = comparison.detail_report.pointwise_db

    if cmd.output is not None:
        write_table_csv(
            {
                "index": np.arange(approx_db.size),
                "direct_approx": comparison.direct.approx,
                "fast_approx": comparison.fast.approx,
                "approx_db": approx_db,
                "direct_detail": comparison.direct.detail,
                "fast_detail": comparison.fast.detail,
                "detail_db": detail_db,
            },
            cmd.output,
        )

    if cmd.plot is not None:
        emit_svg_plot(
            [("approximation error (dB)", approx_db), ("detail error (dB)", detail_db)],
            cmd.plot,
            y_label="error (dB)",
            title="fast vs direct analysis",
        )
        # coefficient overlays next to the error plot: <stem>_approx.svg, <stem>_detail.svg
        for band in ("approx", "detail"):
            emit_svg_plot(
                [
                    (f"direct {band}", getattr(comparison.direct, band)),
                    (f"fast {band}", getattr(comparison.fast, band)),
                ],
                overlay_path(cmd.plot, band),
                x_label="coefficient index",
                y_label="coefficient",
                title=f"{band} coefficients, direct and fast",
            )

    approx_max = comparison.approx_report.max_db
    detail_max = comparison.detail_report.max_db
    threshold = settings.COMPARE_THRESHOLD_DB
    passed = approx_max <= threshold and detail_max <= threshold

    logger.info("📊 approx %.1f dB, detail %.1f dB (threshold %.1f dB)", approx_max, detail_max, threshold)
    emit("samples", x.size)
    emit("approx_max_db", f"{approx_max:.2f}")
    emit("detail_max_db", f"{detail_max:.2f}")
    emit("threshold_db", f"{threshold:.2f}")
    emit("status", "pass" if passed else "fail")
    return EXIT_OK if passed else EXIT_DOMAIN
