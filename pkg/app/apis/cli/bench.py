# app/apis/cli/bench.py

import logging

import pandas as pd

from app.apis.cli.common import emit
from app.core.config import settings
from app.schemas.cli_schemas import CliCommand
from app.schemas.report_schemas import ComplexityComparison
from app.services.metrics_engine import MetricsEngine

logger = logging.getLogger("fasthaar.cli.bench")


def _table(comparison: ComplexityComparison) -> pd.DataFrame:
    rows = [comparison.baseline, comparison.fast]
    return pd.DataFrame(
        {
            "label": [r.label for r in rows],
            "mul": [r.mul_count for r in rows],
            "add": [r.add_count for r in rows],
            "total": [r.total for r in rows],
        }
    )


def _seconds(value) -> str:
    return "n/a" if value is None else f"{value:.6e}"


def handle(cmd: CliCommand) -> int:
    """Operation counts (asserted elsewhere) and median wall-clock (informative)."""
    n = settings.DEFAULT_SIGNAL_LENGTH if cmd.n is None else cmd.n
    repeats = settings.BENCH_REPEATS if cmd.repeats is None else cmd.repeats

    analysis = MetricsEngine.complexity_report(n, cmd.levels, repeats=repeats, seed=cmd.seed)
    synthesis = MetricsEngine.synthesis_complexity_report(n, cmd.levels, repeats=repeats, seed=cmd.seed)

    print(_table(analysis).to_string(index=False))
    print(_table(synthesis).to_string(index=False))
    emit("mul_ratio", f"{analysis.mul_ratio:g}")
    emit("total_ratio", f"{analysis.total_ratio:.6f}")
    emit("synthesis_mul_ratio", f"{synthesis.mul_ratio:g}")
    emit("synthesis_total_ratio", f"{synthesis.total_ratio:.6f}")
    emit(
        "filter_evaluations_per_path",
        f"direct={analysis.filter_evaluations_baseline} fast={analysis.filter_evaluations_fast}",
    )
    emit(
        "wall_clock_median_s",
        f"direct={_seconds(analysis.wall_clock_baseline)} fast={_seconds(analysis.wall_clock_fast)}",
    )
    logger.info("🏁 bench n=%d levels=%d mul_ratio %g", n, cmd.levels, analysis.mul_ratio)
    return 0
