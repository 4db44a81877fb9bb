"""Thin classifier wrapper so the explainer and attribution code see one
probability interface regardless of the underlying estimator."""

from __future__ import annotations

import numpy as np
from sklearn.compose import ColumnTransformer
from sklearn.linear_model import LogisticRegression
from sklearn.pipeline import Pipeline
from sklearn.preprocessing import OneHotEncoder, StandardScaler

from .dataset import CATEGORICAL, NUMERIC, TabularDataset
from .errors import IncompatibleModel


class TabularModel:
    """A fitted binary classifier over a TabularDataset (class 1 = desired)."""

    def __init__(self, dataset: TabularDataset, estimator=None) -> None:
        self.dataset = dataset
        self.feature_names = dataset.feature_names
        numeric = [n for n in dataset.feature_names if dataset.kinds[n] == NUMERIC]
        categorical = [n for n in dataset.feature_names if dataset.kinds[n] == CATEGORICAL]
        self.pipeline = Pipeline(
            [
                (
                    "encode",
                    ColumnTransformer(
                        [
                            ("numeric", StandardScaler(), numeric),
                            ("categorical", OneHotEncoder(handle_unknown="ignore"), categorical),
                        ]
                    ),
                ),
                ("classify", estimator or LogisticRegression(max_iter=1000)),
            ]
        )
        self._numeric = numeric
        self._categorical = categorical
        self._fitted = False

    def fit(self) -> "TabularModel":
        frame = self._frame([dict(row) for row in self.dataset.rows])
        self.pipeline.fit(frame, np.array(self.dataset.labels))
        if not hasattr(self.pipeline, "predict_proba"):
            raise IncompatibleModel("estimator does not expose predict_proba")
        self._fitted = True
        return self

    def _frame(self, rows: list[dict]):
        import pandas as pd

        return pd.DataFrame(rows, columns=list(self.feature_names))

    def proba_desired(self, row: dict) -> float:
        """Probability of the desired class for one row."""
        if not self._fitted:
            raise IncompatibleModel("model must be fitted before prediction")
        return float(self.pipeline.predict_proba(self._frame([dict(row)]))[0, 1])

    def predicts_desired(self, row: dict) -> bool:
        return self.proba_desired(row) >= 0.5
