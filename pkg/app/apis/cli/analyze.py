# app/apis/cli/analyze.py

import logging

from app.apis.cli.common import emit, load_signal, prepare_signal
from app.lib.multilevel import decompose
from app.lib.signal_io import write_signal_csv, write_text
from app.schemas.cli_schemas import AnalysisMetadata, CliCommand
from app.schemas.signal_schemas import ArithmeticSink

logger = logging.getLogger("fasthaar.cli.analyze")

METADATA_FILE = "metadata.json"
APPROX_FILE = "approx.csv"


def detail_file_names(levels: int) -> list:
    if levels == 1:
        return ["detail.csv"]
    return [f"detail_{j}.csv" for j in range(levels)]


def handle(cmd: CliCommand) -> int:
    """
    Writes approx.csv plus one detail file per level (finest first) and
    metadata.json into the --out directory.
    """
    raw = load_signal(cmd)
    x, padded = prepare_signal(cmd, raw)

    sink = ArithmeticSink()
    tree = decompose(x, cmd.levels, cmd.mode, sink)

    out_dir = cmd.output
    detail_files = detail_file_names(tree.levels)
    write_signal_csv(tree.final_approx, out_dir / APPROX_FILE)
    for name, band in zip(detail_files, tree.details):
        write_signal_csv(band, out_dir / name)

    metadata = AnalysisMetadata(
        mode=cmd.mode,
        levels=tree.levels,
        original_length=raw.size,
        analyzed_length=x.size,
        padded=padded,
        mul_count=sink.mul_count,
        add_count=sink.add_count,
        approx_file=APPROX_FILE,
        detail_files=detail_files,
    )
    write_text(out_dir / METADATA_FILE, metadata.model_dump_json(indent=2) + "\n")

    logger.info("✅ analyzed %d samples into %d levels at %s", x.size, tree.levels, out_dir)
    emit("levels", tree.levels)
    emit("samples", x.size)
    emit("padded", str(padded).lower())
    emit("mul_count", sink.mul_count)
    emit("add_count", sink.add_count)
    return 0
