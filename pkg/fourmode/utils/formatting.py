"""Deterministic CSV and JSON rendering.

Floats are written with 17 significant digits so every double re-parses to
the identical value. Nothing time-dependent is emitted.
"""

import csv
import io
import json
import math
from typing import Any, Iterable, Mapping, Sequence

import numpy as np

SCHEMA_VERSION = 1
FLOAT_FORMAT = ".17g"


def format_float(value: float) -> str:
    if not math.isfinite(value):
        raise ValueError(f"cannot render non-finite value {value}")
    return format(float(value), FLOAT_FORMAT)


def render_csv(columns: Sequence[str], rows: Iterable[Sequence[float]]) -> str:
    """Header plus one line per row, comma separated, Unix line endings."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_float(v) for v in row])
    return buffer.getvalue()


def _render(value: Any, indent: int, level: int) -> str:
    if value is None:
        return "null"
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format_float(value)
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=False)

    pad = "\n" + " " * (indent * (level + 1))
    close = "\n" + " " * (indent * level)
    if isinstance(value, Mapping):
        if not value:
            return "{}"
        items = [f"{json.dumps(str(k))}: {_render(v, indent, level + 1)}" for k, v in value.items()]
        return "{" + pad + ("," + pad).join(items) + close + "}"
    if isinstance(value, (list, tuple, np.ndarray)):
        if len(value) == 0:
            return "[]"
        items = [_render(v, indent, level + 1) for v in value]
        return "[" + pad + ("," + pad).join(items) + close + "]"
    raise TypeError(f"cannot render {type(value).__name__} as JSON")


def render_json(payload: Mapping[str, Any], indent: int = 2) -> str:
    """JSON document with a leading ``"schema": 1`` field."""
    document = {"schema": SCHEMA_VERSION}
    document.update(payload)
    return _render(document, indent, 0) + "\n"
