# app/services/metrics_engine.py

import logging
from typing import Optional, Tuple, Union

import numpy as np

from app.core.config import settings
from app.core.exception import LengthMismatch
from app.lib.haar import direct_analysis, fast_analysis, filter_evaluations, two_channel_bank
from app.lib.multilevel import check_levels, decompose, reconstruct
from app.lib.random_source import random_signal
from app.schemas.common_schemas import TransformMode
from app.schemas.report_schemas import (
    BandComparison,
    ComplexityComparison,
    ErrorReport,
    OpReport,
)
from app.schemas.signal_schemas import ArithmeticSink, as_signal
from app.services.performance_monitor import PerformanceMonitor

logger = logging.getLogger("fasthaar.metrics")


class MetricsEngine:
    # ------------------------------------------------------------------
    # 1. Error rate
    # ------------------------------------------------------------------
    @staticmethod
    def pointwise_error_db(
        candidate,
        oracle,
        floor_db: Optional[float] = None,
    ) -> ErrorReport:
        """
        20*log10(|candidate - oracle| / max|oracle|), floored.
        An all-zero oracle is normalised by 1 instead.
        """
        floor_db = settings.ERROR_FLOOR_DB if floor_db is None else floor_db
        candidate, oracle = as_signal(candidate), as_signal(oracle)
        if candidate.size != oracle.size:
            raise LengthMismatch(
                f"candidate has {candidate.size} samples but oracle has {oracle.size}"
            )

        peak = float(np.max(np.abs(oracle))) if oracle.size else 0.0
        if peak == 0.0:
            peak = 1.0

        diff = np.abs(candidate - oracle)
        with np.errstate(divide="ignore"):
            db = 20.0 * np.log10(diff / peak)
        db = np.where(diff == 0.0, floor_db, np.maximum(db, floor_db))

        max_db = float(np.max(db)) if db.size else floor_db
        return ErrorReport(pointwise_db=db, max_db=max_db, reference_peak=peak, floor_db=floor_db)

    @classmethod
    def compare_bands(cls, x) -> BandComparison:
        """direct_analysis is the oracle, fast_analysis the candidate."""
        direct = direct_analysis(x)
        fast = fast_analysis(x)
        comparison = BandComparison(
            direct=direct,
            fast=fast,
            approx_report=cls.pointwise_error_db(fast.approx, direct.approx),
            detail_report=cls.pointwise_error_db(fast.detail, direct.detail),
        )
        logger.debug(
            "compare n=%d approx %.1f dB detail %.1f dB",
            len(direct) * 2,
            comparison.approx_report.max_db,
            comparison.detail_report.max_db,
        )
        return comparison

    @classmethod
    def compare_transforms(cls, x) -> Tuple[ErrorReport, ErrorReport]:
        comparison = cls.compare_bands(x)
        return comparison.approx_report, comparison.detail_report

    @staticmethod
    def reconstruction_error(
        x,
        analysis_mode: Union[TransformMode, str] = TransformMode.FAST,
        synthesis_mode: Union[TransformMode, str] = TransformMode.FAST,
    ) -> float:
        x = as_signal(x)
        rebuilt = two_channel_bank(x, analysis_mode, synthesis_mode)
        return float(np.max(np.abs(rebuilt - x)))

    # ------------------------------------------------------------------
    # 2. Complexity
    # ------------------------------------------------------------------
    @staticmethod
    def _label(stage: str, mode: TransformMode, n: int, levels: int) -> str:
        return f"{mode.value} {stage} n={n} levels={levels}"

    @classmethod
    def complexity_report(
        cls,
        n: int,
        levels: int = 1,
        repeats: Optional[int] = None,
        seed: Optional[int] = None,
    ) -> ComplexityComparison:
        """
        Op counts of decompose in both modes on a deterministic signal.
        Counts depend only on n and levels. With `repeats`, median
        wall-clock times are attached as well.
        """
        check_levels(n, levels)
        x = random_signal(n, settings.DEFAULT_SEED if seed is None else seed)

        reports = {}
        timings = {}
        for mode in TransformMode:
            sink = ArithmeticSink()
            decompose(x, levels, mode, sink)
            reports[mode] = OpReport.from_sink(sink, cls._label("analysis", mode, n, levels))
            if repeats:
                timings[mode] = PerformanceMonitor.measure(
                    lambda m=mode: decompose(x, levels, m),
                    repeats,
                    label=reports[mode].label,
                )

        return ComplexityComparison.from_reports(
            reports[TransformMode.DIRECT],
            reports[TransformMode.FAST],
            filter_evaluations_baseline=filter_evaluations(n, TransformMode.DIRECT),
            filter_evaluations_fast=filter_evaluations(n, TransformMode.FAST),
            wall_clock_baseline=timings.get(TransformMode.DIRECT),
            wall_clock_fast=timings.get(TransformMode.FAST),
        )

    @classmethod
    def synthesis_complexity_report(
        cls,
        n: int,
        levels: int = 1,
        repeats: Optional[int] = None,
        seed: Optional[int] = None,
    ) -> ComplexityComparison:
        """Same as complexity_report, for reconstruct."""
        check_levels(n, levels)
        tree = decompose(random_signal(n, settings.DEFAULT_SEED if seed is None else seed), levels)

        reports = {}
        timings = {}
        for mode in TransformMode:
            sink = ArithmeticSink()
            reconstruct(tree, mode, sink)
            reports[mode] = OpReport.from_sink(sink, cls._label("synthesis", mode, n, levels))
            if repeats:
                timings[mode] = PerformanceMonitor.measure(
                    lambda m=mode: reconstruct(tree, m),
                    repeats,
                    label=reports[mode].label,
                )

        return ComplexityComparison.from_reports(
            reports[TransformMode.DIRECT],
            reports[TransformMode.FAST],
            wall_clock_baseline=timings.get(TransformMode.DIRECT),
            wall_clock_fast=timings.get(TransformMode.FAST),
        )


# Module-level aliases for the documented operations
pointwise_error_db = MetricsEngine.pointwise_error_db
compare_transforms = MetricsEngine.compare_transforms
complexity_report = MetricsEngine.complexity_report
