from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, Field

from .common_schemas import CommandName, PadMode, TransformMode


class CliCommand(BaseModel):
    """One parsed invocation. Domain checks (levels, lengths) happen later."""

    command: CommandName
    mode: TransformMode = TransformMode.FAST
    levels: int = 1
    pad: PadMode = PadMode.NONE
    input: Optional[Path] = None
    output: Optional[Path] = None
    plot: Optional[Path] = None
    n: Optional[int] = None
    seed: int = 42
    repeats: Optional[int] = Field(None, ge=0)


class AnalysisMetadata(BaseModel):
    """Written next to the coefficient files by `analyze`, read by `synthesize`."""

    mode: TransformMode
    levels: int
    original_length: int = Field(..., ge=0)
    analyzed_length: int = Field(..., ge=0)
    padded: bool = False
    mul_count: int = Field(0, ge=0)
    add_count: int = Field(0, ge=0)
    approx_file: str = "approx.csv"
    detail_files: List[str] = Field(default_factory=list)
