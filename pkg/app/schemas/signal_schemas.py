from typing import Annotated, Any, List

import numpy as np
from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, model_validator

from app.core.exception import LengthMismatch, MalformedTree, NonFiniteValue


# ---------------------------------------------------------------------
# Signal
# ---------------------------------------------------------------------

def as_signal(values: Any) -> np.ndarray:
    """
    Coerce any 1-D sequence of reals to a fresh float64 array.
    Rejects NaN and +/-Inf.
    """
    arr = np.array(values, dtype=np.float64)
    if arr.ndim != 1:
        raise LengthMismatch(f"a signal must be one-dimensional, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        bad = int(np.flatnonzero(~np.isfinite(arr))[0])
        raise NonFiniteValue(f"sample {bad} is not finite ({arr[bad]})")
    return arr


Signal = Annotated[np.ndarray, BeforeValidator(as_signal)]


class _ArrayModel(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)


# ---------------------------------------------------------------------
# Instrumentation
# ---------------------------------------------------------------------

class ArithmeticSink(BaseModel):
    """
    Tally of sample-data multiplications and additions for one invocation.
    Subtractions count as additions; negation and indexing are free.
    """

    mul_count: int = Field(0, ge=0)
    add_count: int = Field(0, ge=0)

    def count_mul(self, n: int) -> None:
        self.mul_count += int(n)

    def count_add(self, n: int) -> None:
        self.add_count += int(n)

    @property
    def total(self) -> int:
        return self.mul_count + self.add_count


# ---------------------------------------------------------------------
# Subbands
# ---------------------------------------------------------------------

class SubbandPair(_ArrayModel):
    approx: Signal
    detail: Signal

    @model_validator(mode="after")
    def check_lengths(self):
        if self.approx.shape != self.detail.shape:
            raise LengthMismatch(
                f"approx has {self.approx.size} samples but detail has {self.detail.size}"
            )
        return self

    def __len__(self) -> int:
        return int(self.approx.size)

    def energy(self) -> float:
        return float(np.sum(self.approx ** 2) + np.sum(self.detail ** 2))


class DecompositionTree(_ArrayModel):
    """
    Multi-level decomposition. details[0] is the finest scale.
    """

    levels: int
    details: List[Signal]
    final_approx: Signal
    original_length: int

    @model_validator(mode="after")
    def check_invariants(self):
        self.check_shape()
        return self

    def check_shape(self) -> None:
        if self.levels < 1:
            raise MalformedTree(f"levels must be positive, got {self.levels}")
        if len(self.details) != self.levels:
            raise MalformedTree(
                f"tree declares {self.levels} levels but holds {len(self.details)} detail bands"
            )
        n = self.original_length
        if n < 1 or n % (1 << self.levels):
            raise MalformedTree(
                f"original length {n} is not a positive multiple of 2^{self.levels}"
            )
        for j, band in enumerate(self.details):
            expected = n >> (j + 1)
            if np.ndim(band) != 1 or np.size(band) != expected:
                raise MalformedTree(
                    f"details[{j}] has {np.size(band)} samples, expected {expected}"
                )
        if np.ndim(self.final_approx) != 1 or np.size(self.final_approx) != n >> self.levels:
            raise MalformedTree(
                f"final_approx has {np.size(self.final_approx)} samples, "
                f"expected {n >> self.levels}"
            )

    def coefficients(self) -> np.ndarray:
        """Flattened [final_approx, details[J-1], ..., details[0]]."""
        return np.concatenate([self.final_approx, *reversed(self.details)])

    def energy(self) -> float:
        return float(
            np.sum(self.final_approx ** 2) + sum(float(np.sum(d ** 2)) for d in self.details)
        )
