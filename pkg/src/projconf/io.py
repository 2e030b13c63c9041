"""Config file parsing and JSON output."""
from __future__ import annotations

import json
import os
from pathlib import Path

from .errors import ConfigParseError, DecimalLiteralError, ShapeError
from .linalg import ProjConfig, to_scalar


def _reject_float(text: str):
    raise DecimalLiteralError(f"decimal literal {text} is not exact; write it as a string \"a/b\"", value=text)


def _load_json(source: str | os.PathLike) -> object:
    text = str(source)
    if isinstance(source, os.PathLike) or not text.lstrip().startswith("{"):
        path = Path(source)
        try:
            text = path.read_text()
        except OSError as exc:
            raise ConfigParseError(f"cannot read config file {str(path)!r}: {exc.strerror}", path=str(path)) from exc
    try:
        return json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise ConfigParseError(f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def config_from_json(data: object) -> ProjConfig:
    if not isinstance(data, dict) or "points" not in data:
        raise ConfigParseError('config must be an object with a "points" array')
    points = data["points"]
    if not isinstance(points, list) or not points or not all(isinstance(p, list) for p in points):
        raise ConfigParseError('"points" must be a nonempty array of coordinate arrays')
    n = data.get("n", len(points[0]))
    m = data.get("m", len(points))
    if len(points) != m or any(len(p) != n for p in points):
        raise ShapeError(f"declared n={n}, m={m} does not match the points given", n=n, m=m)
    cols = []
    for p in points:
        col = []
        for x in p:
            if isinstance(x, bool) or not isinstance(x, (int, str)):
                raise ConfigParseError(f"coordinate {x!r} must be an integer or a rational string")
            col.append(to_scalar(x))
        cols.append(tuple(col))
    return ProjConfig(tuple(cols))


def parse_config(source: str | os.PathLike) -> ProjConfig:
    """Read a config from JSON text or a file path.

    Error codes: malformed_config for bad JSON or structure, decimal_literal
    for inexact numbers, invalid_projective_point for a zero column.
    """
    return config_from_json(_load_json(source))


def dumps(obj: object) -> str:
    """Deterministic JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
