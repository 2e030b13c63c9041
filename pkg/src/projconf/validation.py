"""Input coercion shared by the estimators."""
from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from .errors import ShapeError
from .linalg import ProjConfig, to_scalar


def check_config(x) -> ProjConfig:
    """Accept a ProjConfig, or a sequence of points given as exact scalars."""
    if isinstance(x, ProjConfig):
        return x
    if isinstance(x, np.ndarray):
        if x.dtype.kind == "f":
            raise ShapeError("float arrays are not exact; use integer or object arrays of Fractions")
        x = x.tolist()
    if not isinstance(x, Sequence) or not x:
        raise ShapeError(f"expected a sequence of points, got {type(x).__name__}")
    return ProjConfig(tuple(tuple(to_scalar(c) for c in point) for point in x))


def check_configs(X, shape: tuple[int, int] | None = None) -> list[ProjConfig]:
    """Coerce a batch of configurations, optionally requiring (n, m)."""
    if isinstance(X, ProjConfig):
        raise ShapeError("expected a batch of configurations; wrap a single one in a list")
    configs = [check_config(x) for x in X]
    if shape is not None:
        for k, v in enumerate(configs):
            if (v.n, v.m) != shape:
                raise ShapeError(f"sample {k} has n={v.n}, m={v.m}; expected n={shape[0]}, m={shape[1]}", sample=k)
    return configs
