# app/lib/signal_io.py
"""
Signal CSV: UTF-8, LF endings, one value per line, '#' comments and
blank lines ignored. Report tables are written with pandas.
"""

import logging
import math
import re
from pathlib import Path
from typing import Mapping, Sequence, Union

import numpy as np
import pandas as pd

from app.core.config import settings
from app.core.exception import FileNotFound, IoError, NonFiniteValue, ParseError
from app.schemas.signal_schemas import as_signal

logger = logging.getLogger("fasthaar.io")

PathLike = Union[str, Path]

# Plain decimal notation with an optional exponent; no underscores, hex or words.
_NUMBER_RE = re.compile(r"^[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?$")
_NON_FINITE_WORDS = {"nan", "inf", "infinity"}


def read_text(path: PathLike) -> str:
    path = Path(path)
    if not path.is_file():
        raise FileNotFound(f"{path} does not exist")
    try:
        return path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc


def parse_signal_text(text: str) -> np.ndarray:
    values = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        token = raw.strip()
        if not token or token.startswith("#"):
            continue
        if token.lstrip("+-").lower() in _NON_FINITE_WORDS:
            raise NonFiniteValue(f"line {lineno}: {token!r} is not a finite number")
        if not _NUMBER_RE.match(token):
            raise ParseError(f"cannot parse {token!r} as a number", line=lineno)
        value = float(token)
        if not math.isfinite(value):
            raise NonFiniteValue(f"line {lineno}: {token!r} overflows a double")
        values.append(value)
    return np.array(values, dtype=np.float64)


def read_signal_csv(path: PathLike) -> np.ndarray:
    signal = parse_signal_text(read_text(path))
    logger.debug("read %d samples from %s", signal.size, path)
    return signal


def format_sample(value: float) -> str:
    return f"{value:.{settings.CSV_SIGNIFICANT_DIGITS}g}"


def write_signal_csv(x, path: PathLike) -> None:
    """17 significant digits per line: reading the file back is bit-exact."""
    x = as_signal(x)
    body = "".join(f"{format_sample(v)}\n" for v in x.tolist())
    write_text(path, body)


def write_text(path: PathLike, body: str) -> None:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(body)
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def write_table_csv(columns: Mapping[str, Sequence], path: PathLike) -> pd.DataFrame:
    """Report table (header row + one row per sample) via pandas."""
    df = pd.DataFrame(dict(columns))
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        df.to_csv(
            path,
            index=False,
            float_format=f"%.{settings.CSV_SIGNIFICANT_DIGITS}g",
            lineterminator="\n",
        )
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc
    logger.info("📝 wrote %d rows to %s", len(df), path)
    return df
