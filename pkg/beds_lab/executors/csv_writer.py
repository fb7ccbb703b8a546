import pathlib
from typing import Iterable, Sequence

import pandas as pd

from ..utils.errors import ArtifactIOError, DomainError
from ..utils.logger import get_logger

logger = get_logger("csv_writer")

# 17 significant digits round-trip every 64-bit float
FLOAT_FORMAT = "%.17g"


def emit_frame(df: pd.DataFrame, path) -> pathlib.Path:
    path = pathlib.Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        df.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    except OSError as e:
        raise ArtifactIOError(f"cannot write CSV ({e.strerror or e})", path) from e
    logger.debug(f"wrote {len(df)} rows to {path}")
    return path


def emit_csv(rows: Iterable[Sequence], schema: Sequence[str], path) -> pathlib.Path:
    """Write rows under a header; every row must have one value per column."""
    rows = [list(r) for r in rows]
    for n, row in enumerate(rows):
        if len(row) != len(schema):
            raise DomainError(f"row {n} has {len(row)} values for {len(schema)} columns")
    return emit_frame(pd.DataFrame(rows, columns=list(schema)), path)


def write_text(text: str, path) -> pathlib.Path:
    path = pathlib.Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as e:
        raise ArtifactIOError(f"cannot write file ({e.strerror or e})", path) from e
    return path
