# Re-export from common
from .common_schemas import (
    TransformMode,
    PadMode,
    CommandName,
)

# Re-export from signal_schemas
from .signal_schemas import (
    Signal,
    as_signal,
    ArithmeticSink,
    SubbandPair,
    DecompositionTree,
)

# Re-export from image_schemas
from .image_schemas import (
    GrayImage,
    QuadSubbands,
)

# Re-export from report_schemas
from .report_schemas import (
    ErrorReport,
    BandComparison,
    OpReport,
    ComplexityComparison,
)

# Re-export from cli_schemas
from .cli_schemas import (
    CliCommand,
    AnalysisMetadata,
)
