from enum import Enum


class TransformMode(str, Enum):
    DIRECT = "direct"
    FAST = "fast"


class PadMode(str, Enum):
    NONE = "none"
    ZERO = "zero"


class CommandName(str, Enum):
    ANALYZE = "analyze"
    SYNTHESIZE = "synthesize"
    ROUNDTRIP = "roundtrip"
    COMPARE = "compare"
    BENCH = "bench"
    IMAGE = "image"
    VERSION = "version"
