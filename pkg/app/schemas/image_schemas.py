from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.core.exception import DimensionMismatch, NonFiniteValue


class GrayImage(BaseModel):
    """
    Real-valued grayscale image. `pixels` is held as a (height, width)
    float64 array; a flat row-major sequence is reshaped on construction.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    width: int = Field(..., gt=0)
    height: int = Field(..., gt=0)
    pixels: np.ndarray

    @field_validator("pixels", mode="before")
    @classmethod
    def to_float_array(cls, v: Any) -> np.ndarray:
        arr = np.array(v, dtype=np.float64)
        if not np.all(np.isfinite(arr)):
            raise NonFiniteValue("image contains non-finite pixels")
        return arr

    @model_validator(mode="after")
    def check_dimensions(self):
        expected = (self.height, self.width)
        if self.pixels.ndim == 1 and self.pixels.size == self.width * self.height:
            self.pixels = self.pixels.reshape(expected)
        if self.pixels.shape != expected:
            raise DimensionMismatch(
                f"pixel array of shape {self.pixels.shape} does not match "
                f"{self.width}x{self.height}"
            )
        return self

    @classmethod
    def from_array(cls, pixels: Any) -> "GrayImage":
        arr = np.array(pixels, dtype=np.float64)
        if arr.ndim != 2:
            raise DimensionMismatch(f"expected a 2-D pixel array, got shape {arr.shape}")
        return cls(width=arr.shape[1], height=arr.shape[0], pixels=arr)

    @property
    def shape(self) -> tuple:
        return (self.height, self.width)

    def energy(self) -> float:
        return float(np.sum(self.pixels ** 2))


class QuadSubbands(BaseModel):
    ll: GrayImage
    lh: GrayImage
    hl: GrayImage
    hh: GrayImage

    @model_validator(mode="after")
    def check_shared_shape(self):
        shapes = {band.shape for band in (self.ll, self.lh, self.hl, self.hh)}
        if len(shapes) != 1:
            raise DimensionMismatch(f"subbands disagree on dimensions: {sorted(shapes)}")
        return self

    def energy(self) -> float:
        return sum(band.energy() for band in (self.ll, self.lh, self.hl, self.hh))
