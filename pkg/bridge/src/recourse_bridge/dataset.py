"""Toy tabular data for exercising the bridge end to end.

The synthetic loan table is deterministic under its seed and uses rounded
numeric values, so every value has a short, stable decimal representation
that survives the trip into a case file byte-for-byte.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

NUMERIC = "numeric"
CATEGORICAL = "categorical"


@dataclass(frozen=True)
class TabularDataset:
    """Column-typed rows plus binary labels (1 = desired outcome)."""

    name: str
    feature_names: tuple[str, ...]
    kinds: dict[str, str]
    rows: tuple[dict[str, float | str], ...]
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        for row in self.rows:
            if set(row) != set(self.feature_names):
                raise ValueError("row keys must match feature_names")

    def column(self, name: str) -> list[float | str]:
        return [row[name] for row in self.rows]

    def unique_values(self, name: str) -> list[float | str]:
        values = set(self.column(name))
        if self.kinds[name] == NUMERIC:
            return sorted(values)
        return sorted(values, key=str)


def toy_loan_dataset(seed: int = 0, rows: int = 400) -> TabularDataset:
    """A seeded synthetic loan-approval table with a learnable decision rule."""
    rng = np.random.default_rng(seed)
    ownership_options = ("RENT", "MORTGAGE", "OWN")
    purpose_options = ("car", "education", "home")

    records = []
    labels = []
    for _ in range(rows):
        income = float(np.round(rng.uniform(6_000, 60_000), -2))
        loan = float(np.round(rng.uniform(500, 20_000), -2))
        rate = float(np.round(rng.uniform(4.0, 22.0), 2))
        years = float(np.round(rng.uniform(0.0, 12.0), 1))
        ownership = str(rng.choice(ownership_options))
        purpose = str(rng.choice(purpose_options))
        record = {
            "annual_income": income,
            "loan_amount": loan,
            "interest_rate": rate,
            "employment_length": years,
            "home_ownership": ownership,
            "purpose": purpose,
        }
        score = (
            0.00008 * income
            - 0.00012 * loan
            - 0.11 * rate
            + 0.22 * years
            + (0.8 if ownership == "OWN" else 0.0)
            + (0.3 if purpose == "home" else 0.0)
        )
        records.append(record)
        labels.append(int(score > 1.2))

    return TabularDataset(
        name="toy_loan",
        feature_names=(
            "annual_income",
            "loan_amount",
            "interest_rate",
            "employment_length",
            "home_ownership",
            "purpose",
        ),
        kinds={
            "annual_income": NUMERIC,
            "loan_amount": NUMERIC,
            "interest_rate": NUMERIC,
            "employment_length": NUMERIC,
            "home_ownership": CATEGORICAL,
            "purpose": CATEGORICAL,
        },
        rows=tuple(records),
        labels=tuple(labels),
    )
