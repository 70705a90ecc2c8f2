from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.schemas.signal_schemas import ArithmeticSink, Signal, SubbandPair

DEFAULT_FLOOR_DB = -300.0


# ---------------------------------------------------------------------
# Error rate
# ---------------------------------------------------------------------

class ErrorReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    pointwise_db: Signal
    max_db: float
    reference_peak: float = Field(..., gt=0)
    floor_db: float = DEFAULT_FLOOR_DB

    @model_validator(mode="after")
    def check_floor(self):
        if self.pointwise_db.size and float(np.min(self.pointwise_db)) < self.floor_db:
            raise ValueError("pointwise error below the floor")
        expected_max = float(np.max(self.pointwise_db)) if self.pointwise_db.size else self.floor_db
        if self.max_db != expected_max:
            raise ValueError("max_db must equal the maximum pointwise value")
        return self


class BandComparison(BaseModel):
    """Both analysis outputs for one signal plus their per-band error rates."""

    direct: SubbandPair
    fast: SubbandPair
    approx_report: ErrorReport
    detail_report: ErrorReport


# ---------------------------------------------------------------------
# Complexity
# ---------------------------------------------------------------------

class OpReport(BaseModel):
    mul_count: int = Field(..., ge=0)
    add_count: int = Field(..., ge=0)
    label: str = ""

    @property
    def total(self) -> int:
        return self.mul_count + self.add_count

    @classmethod
    def from_sink(cls, sink: ArithmeticSink, label: str = "") -> "OpReport":
        return cls(mul_count=sink.mul_count, add_count=sink.add_count, label=label)


class ComplexityComparison(BaseModel):
    baseline: OpReport
    fast: OpReport
    mul_ratio: float
    total_ratio: float
    filter_evaluations_baseline: Optional[int] = None
    filter_evaluations_fast: Optional[int] = None
    wall_clock_baseline: Optional[float] = None
    wall_clock_fast: Optional[float] = None

    @model_validator(mode="after")
    def check_ratios(self):
        if self.baseline.mul_count == 0 or self.baseline.total == 0:
            raise ValueError("baseline must perform at least one operation")
        if self.mul_ratio != self.fast.mul_count / self.baseline.mul_count:
            raise ValueError("mul_ratio disagrees with the counts")
        if self.total_ratio != self.fast.total / self.baseline.total:
            raise ValueError("total_ratio disagrees with the counts")
        return self

    @classmethod
    def from_reports(cls, baseline: OpReport, fast: OpReport, **extra) -> "ComplexityComparison":
        return cls(
            baseline=baseline,
            fast=fast,
            mul_ratio=fast.mul_count / baseline.mul_count,
            total_ratio=fast.total / baseline.total,
            **extra,
        )
