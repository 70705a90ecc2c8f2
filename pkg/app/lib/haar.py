# app/lib/haar.py
"""
Single-level Haar analysis and synthesis.

Two interchangeable implementations compute the same coefficients:

* direct: full-rate two-tap convolution, then decimation (or zero-insertion
  upsampling, then convolution, for synthesis). Every position is
  evaluated, including the ones the decimator throws away.
* fast: decimate into polyphase components first, then one sum/difference
  butterfly per pair scaled once by the shared polyphase constant.

The kernels work along the last axis, so the 2-D code feeds whole blocks of
rows through them; op counts are element counts and add up exactly as if
every row had been transformed on its own.

Input range: the fast butterfly adds before it scales, so samples with
|x| above about 8.9e307 (half of the largest double) can overflow to inf
in the fast path while the direct path, which scales first, stays finite.
The resulting subbands are then rejected with NonFiniteValue.
"""

import logging
import math
from typing import Callable, Dict, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict

from app.core.exception import EmptySignal, LengthMismatch, OddLength
from app.schemas.common_schemas import TransformMode
from app.schemas.signal_schemas import ArithmeticSink, SubbandPair, as_signal

logger = logging.getLogger("fasthaar.haar")

# Shared by both implementations so that they differ only in operation order.
INV_SQRT2 = 1.0 / math.sqrt(2.0)


# -------------------------------------------------------------------
# Filter set
# -------------------------------------------------------------------
class HaarFilterSet(BaseModel):
    """
    Orthonormal Haar taps. The highpass is the lowpass with alternating
    signs; both polyphase components of every filter equal INV_SQRT2.
    """

    model_config = ConfigDict(frozen=True)

    analysis_low: Tuple[float, float] = (INV_SQRT2, INV_SQRT2)
    analysis_high: Tuple[float, float] = (-INV_SQRT2, INV_SQRT2)
    synthesis_low: Tuple[float, float] = (INV_SQRT2, INV_SQRT2)
    synthesis_high: Tuple[float, float] = (INV_SQRT2, -INV_SQRT2)
    polyphase_scalar: float = INV_SQRT2
    polyphase_count: int = 2


HAAR = HaarFilterSet()


# -------------------------------------------------------------------
# Counted arithmetic
# -------------------------------------------------------------------
def _mul(a, b, sink: Optional[ArithmeticSink]) -> np.ndarray:
    out = np.multiply(a, b)
    if sink is not None:
        sink.count_mul(np.size(out))
    return out


def _add(a, b, sink: Optional[ArithmeticSink]) -> np.ndarray:
    out = np.add(a, b)
    if sink is not None:
        sink.count_add(np.size(out))
    return out


def _sub(a, b, sink: Optional[ArithmeticSink]) -> np.ndarray:
    out = np.subtract(a, b)
    if sink is not None:
        sink.count_add(np.size(out))
    return out


def _delay(x: np.ndarray) -> np.ndarray:
    """x[n-1] along the last axis, with x[-1] = 0."""
    out = np.zeros_like(x)
    out[..., 1:] = x[..., :-1]
    return out


def _fir2(taps: Tuple[float, float], x: np.ndarray, sink: Optional[ArithmeticSink]) -> np.ndarray:
    """y[n] = taps[0]*x[n] + taps[1]*x[n-1] at every position n."""
    return _add(_mul(taps[0], x, sink), _mul(taps[1], _delay(x), sink), sink)


# -------------------------------------------------------------------
# Validation
# -------------------------------------------------------------------
def _require_even(x: np.ndarray, *, allow_empty: bool) -> None:
    n = x.shape[-1]
    if n == 0 and not allow_empty:
        raise EmptySignal("cannot transform an empty signal")
    if n % 2:
        raise OddLength(f"signal length {n} is odd; single-level transforms need an even length")


def _require_bands(approx: np.ndarray, detail: np.ndarray) -> None:
    if approx.shape != detail.shape:
        raise LengthMismatch(
            f"approx has shape {approx.shape} but detail has shape {detail.shape}"
        )
    if approx.shape[-1] == 0:
        raise EmptySignal("cannot synthesize from empty subbands")


# -------------------------------------------------------------------
# Polyphase split / merge
# -------------------------------------------------------------------
def _split(x: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    return x[..., 0::2], x[..., 1::2]


def _merge(even: np.ndarray, odd: np.ndarray) -> np.ndarray:
    out = np.empty(even.shape[:-1] + (2 * even.shape[-1],), dtype=np.float64)
    out[..., 0::2] = even
    out[..., 1::2] = odd
    return out


def split_polyphase(x) -> Tuple[np.ndarray, np.ndarray]:
    """even[k] = x[2k], odd[k] = x[2k+1]."""
    x = as_signal(x)
    _require_even(x, allow_empty=True)
    even, odd = _split(x)
    return even.copy(), odd.copy()


def merge_polyphase(even, odd) -> np.ndarray:
    even, odd = as_signal(even), as_signal(odd)
    if even.size != odd.size:
        raise LengthMismatch(f"even has {even.size} samples but odd has {odd.size}")
    return _merge(even, odd)


# -------------------------------------------------------------------
# Kernels (last axis)
# -------------------------------------------------------------------
def direct_analysis_kernel(
    x: np.ndarray, sink: Optional[ArithmeticSink] = None
) -> Tuple[np.ndarray, np.ndarray]:
    # Full-rate filtering; the odd phase n = 2k+1 is kept so each output
    # depends on the pair (x[2k], x[2k+1]).
    y0 = _fir2(HAAR.analysis_low, x, sink)
    y1 = _fir2(HAAR.analysis_high, x, sink)
    return y0[..., 1::2], y1[..., 1::2]


def fast_analysis_kernel(
    x: np.ndarray, sink: Optional[ArithmeticSink] = None
) -> Tuple[np.ndarray, np.ndarray]:
    even, odd = _split(x)
    s = _add(even, odd, sink)
    d = _sub(even, odd, sink)
    return _mul(s, HAAR.polyphase_scalar, sink), _mul(d, HAAR.polyphase_scalar, sink)


def direct_synthesis_kernel(
    approx: np.ndarray, detail: np.ndarray, sink: Optional[ArithmeticSink] = None
) -> np.ndarray:
    zeros = np.zeros_like(approx)
    # zero-insertion upsampling; the zeros are still multiplied below
    u0 = _merge(approx, zeros)
    u1 = _merge(detail, zeros)
    branch_low = _fir2(HAAR.synthesis_low, u0, sink)
    branch_high = _fir2(HAAR.synthesis_high, u1, sink)
    # branch combiner sits outside the per-filter tally
    return branch_low + branch_high


def fast_synthesis_kernel(
    approx: np.ndarray, detail: np.ndarray, sink: Optional[ArithmeticSink] = None
) -> np.ndarray:
    u = _add(approx, detail, sink)
    v = _sub(approx, detail, sink)
    return _merge(_mul(u, HAAR.polyphase_scalar, sink), _mul(v, HAAR.polyphase_scalar, sink))


# -------------------------------------------------------------------
# Public 1-D operations
# -------------------------------------------------------------------
def direct_analysis(x, sink: Optional[ArithmeticSink] = None) -> SubbandPair:
    x = as_signal(x)
    _require_even(x, allow_empty=False)
    approx, detail = direct_analysis_kernel(x, sink)
    logger.debug("direct analysis n=%d", x.size)
    return SubbandPair(approx=approx, detail=detail)


def fast_analysis(x, sink: Optional[ArithmeticSink] = None) -> SubbandPair:
    x = as_signal(x)
    _require_even(x, allow_empty=False)
    approx, detail = fast_analysis_kernel(x, sink)
    logger.debug("fast analysis n=%d", x.size)
    return SubbandPair(approx=approx, detail=detail)


def _bands(sb: SubbandPair) -> Tuple[np.ndarray, np.ndarray]:
    approx, detail = as_signal(sb.approx), as_signal(sb.detail)
    _require_bands(approx, detail)
    return approx, detail


def direct_synthesis(sb: SubbandPair, sink: Optional[ArithmeticSink] = None) -> np.ndarray:
    approx, detail = _bands(sb)
    return direct_synthesis_kernel(approx, detail, sink)


def fast_synthesis(sb: SubbandPair, sink: Optional[ArithmeticSink] = None) -> np.ndarray:
    approx, detail = _bands(sb)
    return fast_synthesis_kernel(approx, detail, sink)


# -------------------------------------------------------------------
# Factory
# -------------------------------------------------------------------
AnalysisFn = Callable[..., SubbandPair]
SynthesisFn = Callable[..., np.ndarray]

_ANALYSIS: Dict[TransformMode, AnalysisFn] = {
    TransformMode.DIRECT: direct_analysis,
    TransformMode.FAST: fast_analysis,
}
_SYNTHESIS: Dict[TransformMode, SynthesisFn] = {
    TransformMode.DIRECT: direct_synthesis,
    TransformMode.FAST: fast_synthesis,
}
ANALYSIS_KERNELS = {
    TransformMode.DIRECT: direct_analysis_kernel,
    TransformMode.FAST: fast_analysis_kernel,
}
SYNTHESIS_KERNELS = {
    TransformMode.DIRECT: direct_synthesis_kernel,
    TransformMode.FAST: fast_synthesis_kernel,
}


def get_analysis(mode: Union[TransformMode, str]) -> AnalysisFn:
    """
    Factory function returning the analysis implementation for a mode.
    """
    return _ANALYSIS[TransformMode(mode)]


def get_synthesis(mode: Union[TransformMode, str]) -> SynthesisFn:
    return _SYNTHESIS[TransformMode(mode)]


def two_channel_bank(
    x,
    analysis_mode: Union[TransformMode, str] = TransformMode.FAST,
    synthesis_mode: Union[TransformMode, str] = TransformMode.FAST,
    sink: Optional[ArithmeticSink] = None,
) -> np.ndarray:
    """Complete analysis + synthesis; returns the reconstructed signal."""
    return get_synthesis(synthesis_mode)(get_analysis(analysis_mode)(x, sink), sink)


def filter_evaluations(n: int, mode: Union[TransformMode, str]) -> int:
    """Filter-output positions evaluated per path for one analysis level."""
    return n if TransformMode(mode) is TransformMode.DIRECT else n // 2
