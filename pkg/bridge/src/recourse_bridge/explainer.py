"""A small counterfactual search plus a local attribution method.

The greedy explainer stands in for an external counterfactual tool: it edits
one feature at a time towards the desired prediction, using only values
observed in the dataset, then prunes redundant edits. When several candidate
counterfactuals flip the prediction, the sparsest one (fewest changed
features) is selected and the choice is recorded.

Attribution is occlusion-based: each feature's weight is the drop in the
desired-class probability when that feature is pushed to its dataset-typical
value, signed so that features supporting the current prediction get the
larger magnitudes.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .dataset import NUMERIC, TabularDataset
from .errors import NoCounterfactualFound
from .model import TabularModel


@dataclass(frozen=True)
class CounterfactualResult:
    query: dict
    counterfactual: dict
    changed_features: tuple[str, ...]
    candidates_considered: int


def _changed(query: dict, candidate: dict) -> tuple[str, ...]:
    return tuple(name for name in query if query[name] != candidate[name])


def _candidate_values(dataset: TabularDataset, name: str, current) -> list:
    values = [value for value in dataset.unique_values(name) if value != current]
    if dataset.kinds[name] == NUMERIC:
        # Candidates stay inside the observed value range: a spread of
        # quantile-spaced values lets the search make large moves, and the
        # nearest few keep small corrections available.
        if len(values) > 20:
            step = max(len(values) // 15, 1)
            spread = values[::step][:15]
        else:
            spread = list(values)
        nearest = sorted(values, key=lambda value: abs(float(value) - float(current)))[:5]
        merged = {decimal_candidate: None for decimal_candidate in spread + nearest}
        return sorted(merged, key=float)
    return values


def _greedy_search(
    model: TabularModel, dataset: TabularDataset, query: dict, max_changes: int
) -> dict | None:
    current = dict(query)
    for _ in range(max_changes):
        if model.predicts_desired(current):
            break
        best_gain, best_edit = 0.0, None
        baseline = model.proba_desired(current)
        for name in dataset.feature_names:
            for value in _candidate_values(dataset, name, current[name]):
                probe = dict(current)
                probe[name] = value
                gain = model.proba_desired(probe) - baseline
                if gain > best_gain:
                    best_gain, best_edit = gain, (name, value)
        if best_edit is None:
            return None
        current[best_edit[0]] = best_edit[1]
    if not model.predicts_desired(current):
        return None
    # Sparsity pass: drop edits the flip does not actually need.
    for name in list(_changed(query, current)):
        trial = dict(current)
        trial[name] = query[name]
        if model.predicts_desired(trial):
            current = trial
    return current


def find_counterfactual(
    model: TabularModel,
    dataset: TabularDataset,
    query: dict,
    max_changes: int = 6,
) -> CounterfactualResult:
    """Return the sparsest counterfactual found for an undesired query.

    Candidates are every prediction-flipping single-feature edit plus the
    greedy multi-feature search result; the one changing the fewest features
    wins, with the model's probability as the deterministic tie-break.
    """
    if model.predicts_desired(query):
        raise NoCounterfactualFound(
            "query already receives the desired outcome; nothing to explain"
        )

    candidates: list[dict] = []
    for name in dataset.feature_names:
        for value in _candidate_values(dataset, name, query[name]):
            probe = dict(query)
            probe[name] = value
            if model.predicts_desired(probe):
                candidates.append(probe)
    greedy = _greedy_search(model, dataset, query, max_changes)
    if greedy is not None:
        candidates.append(greedy)
    if not candidates:
        raise NoCounterfactualFound(
            f"no counterfactual found within {max_changes} feature changes"
        )

    best = min(
        candidates,
        key=lambda candidate: (
            len(_changed(query, candidate)),
            -model.proba_desired(candidate),
        ),
    )
    return CounterfactualResult(
        query=dict(query),
        counterfactual=best,
        changed_features=_changed(query, best),
        candidates_considered=len(candidates),
    )


def occlusion_attributions(
    model: TabularModel, dataset: TabularDataset, query: dict
) -> dict[str, float]:
    """Signed local importance per feature via typical-value substitution."""
    typical = {}
    for name in dataset.feature_names:
        column = dataset.column(name)
        if dataset.kinds[name] == NUMERIC:
            ordered = sorted(float(value) for value in column)
            typical[name] = ordered[len(ordered) // 2]
        else:
            typical[name] = Counter(column).most_common(1)[0][0]

    baseline = model.proba_desired(query)
    weights = {}
    for name in dataset.feature_names:
        probe = dict(query)
        probe[name] = typical[name]
        weights[name] = round(baseline - model.proba_desired(probe), 6)
    return weights
