# app/apis/cli/__init__.py

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

from app.core.config import settings
from app.core.exception import format_error, handle_exception
from app.schemas.cli_schemas import CliCommand
from app.schemas.common_schemas import CommandName, PadMode, TransformMode

# Import all command modules
from app.apis.cli import (
    analyze,
    synthesize,
    roundtrip,
    compare,
    bench,
    image,
)

logger = logging.getLogger("fasthaar.cli")


def _version(cmd: CliCommand) -> int:
    print(f"{settings.PROJECT_NAME} {settings.APP_VERSION}")
    return 0


HANDLERS: Dict[CommandName, Callable[[CliCommand], int]] = {
    CommandName.ANALYZE: analyze.handle,
    CommandName.SYNTHESIZE: synthesize.handle,
    CommandName.ROUNDTRIP: roundtrip.handle,
    CommandName.COMPARE: compare.handle,
    CommandName.BENCH: bench.handle,
    CommandName.IMAGE: image.handle,
    CommandName.VERSION: _version,
}

# Flags each command must receive, beyond the shared set
_REQUIRED = {
    CommandName.ANALYZE: ("out",),
    CommandName.SYNTHESIZE: ("in", "out"),
    CommandName.IMAGE: ("out",),
}

_HELP = {
    CommandName.ANALYZE: "write approximation/detail coefficients of a signal",
    CommandName.SYNTHESIZE: "rebuild a signal from an analyze output directory",
    CommandName.ROUNDTRIP: "analyze then synthesize and report the max error",
    CommandName.COMPARE: "error rate (dB) of fast against direct analysis",
    CommandName.BENCH: "operation counts and wall-clock of both modes",
    CommandName.IMAGE: "lowpass band of a PGM image in both modes and their difference",
    CommandName.VERSION: "print the version",
}


def _non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _shared_flags() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--mode", choices=[m.value for m in TransformMode], default=TransformMode.FAST.value)
    shared.add_argument("--levels", type=int, default=1)
    shared.add_argument("--pad", choices=[p.value for p in PadMode], default=PadMode.NONE.value)
    shared.add_argument("--plot", type=Path, default=None)
    shared.add_argument("--n", type=int, default=None)
    shared.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    shared.add_argument("--repeats", type=_non_negative_int, default=None)
    return shared


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fasthaar",
        description="Direct and fast (polyphase) Haar wavelet transforms.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    shared = _shared_flags()

    for name in CommandName:
        sub = subparsers.add_parser(name.value, parents=[shared], help=_HELP[name])
        required = _REQUIRED.get(name, ())
        sub.add_argument("--in", dest="input", type=Path, default=None, required="in" in required)
        sub.add_argument("--out", dest="output", type=Path, default=None, required="out" in required)

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parses argv and dispatches one command. Returns the process exit code:
    0 success, 1 domain error or failed check, 2 I/O or usage error.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed usage; --help exits 0
        return int(exc.code or 0)

    cmd = CliCommand(**vars(args))
    logger.debug("dispatching %s", cmd.model_dump_json())
    try:
        return HANDLERS[cmd.command](cmd)
    except Exception as exc:
        print(format_error(exc), file=sys.stderr)
        return handle_exception(exc, command=cmd.command.value)
