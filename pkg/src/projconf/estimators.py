"""Estimator-style wrappers: rank matrices as features, orbit families as predictions."""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .classifier import OrbitClass, classify
from .errors import ShapeError
from .rankmatrix import compute_rank_matrix, rho
from .validation import check_configs


class RankMatrixTransformer(TransformerMixin, BaseEstimator):
    """Map each configuration to its rank matrix, one column per subset bitmask.

    With ``include_empty=False`` the constant column for the empty set is dropped.
    """

    def __init__(self, include_empty: bool = True):
        self.include_empty = include_empty

    def fit(self, X, y=None):
        configs = check_configs(X)
        if not configs:
            raise ShapeError("cannot fit on an empty batch")
        shapes = {(v.n, v.m) for v in configs}
        if len(shapes) != 1:
            raise ShapeError(f"configurations have mixed shapes {sorted(shapes)}")
        (self.n_, self.m_), = shapes
        self.n_features_out_ = (1 << self.m_) - (0 if self.include_empty else 1)
        return self

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "m_")
        configs = check_configs(X, (self.n_, self.m_))
        start = 0 if self.include_empty else 1
        rows = [compute_rank_matrix(v).values[start:] for v in configs]
        return np.array(rows, dtype=np.int64).reshape(len(rows), self.n_features_out_)

    def splittings(self, X) -> list[str]:
        check_is_fitted(self, "m_")
        return [str(rho(compute_rank_matrix(v))) for v in check_configs(X, (self.n_, self.m_))]


class OrbitClassifier(BaseEstimator):
    """Predict the orbit family of five points in P^3.

    ``predict`` returns family labels, with the orbit parameter appended when
    ``with_parameter`` is set. Fitting only validates the batch; the
    classification itself is fixed.
    """

    def __init__(self, with_parameter: bool = False):
        self.with_parameter = with_parameter

    def fit(self, X, y=None):
        check_configs(X, (4, 5))
        self.n_, self.m_ = 4, 5
        return self

    def classify(self, X) -> list[OrbitClass]:
        check_is_fitted(self, "m_")
        return [classify(v) for v in check_configs(X, (self.n_, self.m_))]

    def predict(self, X) -> np.ndarray:
        out = []
        for o in self.classify(X):
            label = o.family.label()
            if self.with_parameter and o.parameter is not None:
                params = o.parameter if isinstance(o.parameter, tuple) else (o.parameter,)
                label += " " + ",".join(str(p) for p in params)
            out.append(label)
        return np.array(out, dtype=object)

    def predict_type(self, X) -> np.ndarray:
        return np.array([o.type_label for o in self.classify(X)], dtype=object)

    def score(self, X, y) -> float:
        """Fraction of exact label matches."""
        pred = self.predict(X)
        return float(np.mean([a == b for a, b in zip(pred, y)]))
