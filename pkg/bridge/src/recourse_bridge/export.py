"""Write engine-compatible case files and taxonomy skeletons.

Numeric feature values are serialised as raw JSON number tokens carrying the
exact decimal text chosen here, so the engine (which preserves number text
verbatim) will print precisely these characters in its explanations. A
standard float dump could silently reformat them; this writer cannot.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .dataset import NUMERIC, TabularDataset
from .errors import BridgeError
from .explainer import find_counterfactual, occlusion_attributions
from .model import TabularModel

UNASSIGNED = "UNASSIGNED"

_EXPLAINERS = {"greedy": find_counterfactual}
_ATTRIBUTIONS = {"occlusion": occlusion_attributions}


class RawNumber(str):
    """Decimal text to be emitted as a bare JSON number token."""

    __slots__ = ()


def decimal_text(value: float | int) -> str:
    """Shortest round-trip decimal text for a numeric value."""
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


def dump_json(value, indent: int = 0) -> str:
    """Minimal JSON writer that understands RawNumber."""
    import json

    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(value, RawNumber):
        return str(value)
    if isinstance(value, dict):
        if not value:
            return "{}"
        entries = [
            f"{inner}{json.dumps(str(key))}: {dump_json(item, indent + 1)}"
            for key, item in value.items()
        ]
        return "{\n" + ",\n".join(entries) + f"\n{pad}}}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        entries = [f"{inner}{dump_json(item, indent + 1)}" for item in value]
        return "[\n" + ",\n".join(entries) + f"\n{pad}]"
    return json.dumps(value)


@dataclass(frozen=True)
class OutcomePhrases:
    """Domain wording supplied by the person running the bridge."""

    desired: str
    undesired: str
    desired_state_phrase: str
    undesired_state_phrase: str


@dataclass(frozen=True)
class BridgeJob:
    """Everything needed to turn one query row into a case file."""

    model: TabularModel
    dataset: TabularDataset
    query_index: int
    outcomes: OutcomePhrases
    output_path: str | Path
    explainer: str = "greedy"
    attribution: str = "occlusion"
    max_changes: int = 6
    dataset_id: str | None = None
    extra_metadata: dict = field(default_factory=dict)


def _value_entry(dataset: TabularDataset, name: str, value):
    if dataset.kinds[name] == NUMERIC:
        return RawNumber(decimal_text(value))
    return str(value)


def export_case(job: BridgeJob) -> str:
    """Run explainer plus attribution for one query row and write a case file.

    Returns the serialised text (also written to ``job.output_path``). Raises
    NoCounterfactualFound when the query already gets the desired outcome or
    the search budget is exhausted, and BridgeError for unknown tool names.
    """
    if not 0 <= job.query_index < len(job.dataset.rows):
        raise BridgeError(
            f"query index {job.query_index} outside dataset of {len(job.dataset.rows)} rows"
        )
    try:
        explain = _EXPLAINERS[job.explainer]
    except KeyError:
        raise BridgeError(f"unknown explainer {job.explainer!r}") from None
    try:
        attribute = _ATTRIBUTIONS[job.attribution]
    except KeyError:
        raise BridgeError(f"unknown attribution method {job.attribution!r}") from None

    query = dict(job.dataset.rows[job.query_index])
    result = explain(job.model, job.dataset, query, job.max_changes)
    weights = attribute(job.model, job.dataset, query)

    features = []
    for name in job.dataset.feature_names:
        features.append(
            {
                "name": name,
                "kind": job.dataset.kinds[name],
                "query_value": _value_entry(job.dataset, name, result.query[name]),
                "cf_value": _value_entry(job.dataset, name, result.counterfactual[name]),
                "attribution": RawNumber(decimal_text(weights[name])),
            }
        )

    document = {
        "dataset_id": job.dataset_id or job.dataset.name,
        "predicted_outcome": "undesired",
        "outcomes": {
            "desired": job.outcomes.desired,
            "undesired": job.outcomes.undesired,
            "desired_state_phrase": job.outcomes.desired_state_phrase,
            "undesired_state_phrase": job.outcomes.undesired_state_phrase,
        },
        "features": features,
        "bridge_metadata": {
            "explainer": job.explainer,
            "attribution": job.attribution,
            "query_index": job.query_index,
            "candidates_considered": result.candidates_considered,
            "selection_rule": "fewest feature changes",
            "changed_features": list(result.changed_features),
            **job.extra_metadata,
        },
    }
    text = dump_json(document) + "\n"
    Path(job.output_path).write_text(text, encoding="utf-8")
    return text


def export_taxonomy_skeleton(
    dataset: TabularDataset,
    output_path: str | Path,
    dataset_id: str | None = None,
) -> str:
    """Write a taxonomy file with every feature marked UNASSIGNED.

    The engine refuses this file as-is: assigning categories is deliberately
    a human step, and the placeholder keeps it that way.
    """
    document = {
        "dataset_id": dataset_id or dataset.name,
        "goal_phrase": "reach the desired outcome",
        "prologue_template": (
            "In order to {GOAL} you would need to change {COUNT} attributes."
        ),
        "epilogue": "Good luck!",
        "assignments": {name: UNASSIGNED for name in dataset.feature_names},
    }
    text = dump_json(document) + "\n"
    Path(output_path).write_text(text, encoding="utf-8")
    return text
