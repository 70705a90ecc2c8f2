# app/apis/cli/synthesize.py

import logging

from pydantic import ValidationError

from app.apis.cli.analyze import APPROX_FILE, METADATA_FILE, detail_file_names
from app.apis.cli.common import emit
from app.core.exception import MalformedHeader
from app.lib.multilevel import reconstruct
from app.lib.signal_io import read_signal_csv, read_text, write_signal_csv
from app.schemas.cli_schemas import AnalysisMetadata, CliCommand
from app.schemas.signal_schemas import ArithmeticSink, DecompositionTree

logger = logging.getLogger("fasthaar.cli.synthesize")


def _load_metadata(cmd: CliCommand) -> AnalysisMetadata:
    path = cmd.input / METADATA_FILE
    if not path.is_file():
        # bare approx.csv/detail.csv pair: one level, nothing padded
        logger.warning("⚠️ %s missing; assuming a single-level analysis", path)
        approx = read_signal_csv(cmd.input / APPROX_FILE)
        return AnalysisMetadata(
            mode=cmd.mode,
            levels=1,
            original_length=2 * approx.size,
            analyzed_length=2 * approx.size,
            detail_files=detail_file_names(1),
        )
    try:
        return AnalysisMetadata.model_validate_json(read_text(path))
    except ValidationError as exc:
        raise MalformedHeader(f"{path} is not valid analysis metadata: {exc.error_count()} errors") from exc


def handle(cmd: CliCommand) -> int:
    """Rebuilds the signal from an `analyze` output directory."""
    metadata = _load_metadata(cmd)

    tree = DecompositionTree(
        levels=metadata.levels,
        details=[read_signal_csv(cmd.input / name) for name in metadata.detail_files],
        final_approx=read_signal_csv(cmd.input / metadata.approx_file),
        original_length=metadata.analyzed_length,
    )
    sink = ArithmeticSink()
    rebuilt = reconstruct(tree, cmd.mode, sink)[: metadata.original_length]

    write_signal_csv(rebuilt, cmd.output)
    logger.info("✅ reconstructed %d samples into %s", rebuilt.size, cmd.output)
    emit("samples", rebuilt.size)
    emit("mul_count", sink.mul_count)
    emit("add_count", sink.add_count)
    return 0
