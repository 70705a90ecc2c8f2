# app/lib/multilevel.py
"""
Multi-level decomposition: the single-level analysis iterated on the
approximation band. Details are kept finest first.
"""

import logging
from typing import List, Optional, Union

import numpy as np

from app.core.exception import InsufficientLength, InvalidLevels
from app.lib.haar import get_analysis, get_synthesis
from app.schemas.common_schemas import TransformMode
from app.schemas.signal_schemas import (
    ArithmeticSink,
    DecompositionTree,
    SubbandPair,
    as_signal,
)

logger = logging.getLogger("fasthaar.multilevel")


def max_levels(n: int) -> int:
    """Largest J with n divisible by 2^J (0 for empty or odd n)."""
    if n <= 0:
        return 0
    return (n & -n).bit_length() - 1


def check_levels(n: int, levels: int) -> None:
    if not isinstance(levels, (int, np.integer)) or isinstance(levels, bool) or levels < 1:
        raise InvalidLevels(f"levels must be a positive integer, got {levels!r}")
    if n < (1 << levels) or n % (1 << levels):
        raise InsufficientLength(
            f"signal length {n} is not a positive multiple of 2^{levels} = {1 << levels}"
        )


def decompose(
    x,
    levels: int,
    mode: Union[TransformMode, str] = TransformMode.FAST,
    sink: Optional[ArithmeticSink] = None,
) -> DecompositionTree:
    x = as_signal(x)
    check_levels(x.size, levels)
    analysis = get_analysis(mode)

    details: List[np.ndarray] = []
    approx = x
    for _ in range(levels):
        bands = analysis(approx, sink)
        details.append(bands.detail)
        approx = bands.approx

    logger.debug("decomposed n=%d into %d levels (%s)", x.size, levels, TransformMode(mode).value)
    return DecompositionTree(
        levels=levels,
        details=details,
        final_approx=approx,
        original_length=x.size,
    )


def reconstruct(
    tree: DecompositionTree,
    mode: Union[TransformMode, str] = TransformMode.FAST,
    sink: Optional[ArithmeticSink] = None,
) -> np.ndarray:
    tree.check_shape()
    synthesis = get_synthesis(mode)

    approx = as_signal(tree.final_approx)
    for detail in reversed(tree.details):
        approx = synthesis(SubbandPair(approx=approx, detail=detail), sink)
    return approx
