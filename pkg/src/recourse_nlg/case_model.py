"""Canonical case representation: one query/counterfactual pair.

A case file carries, per feature, the original (query) value, the suggested
counterfactual value, and a signed attribution weight. Numeric values are kept
as the exact decimal text found in the file so that every number later printed
in an explanation is byte-identical to its source; a binary float round-trip
would quietly turn "94.0" into "94".
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from enum import Enum
from typing import Any

from .errors import DuplicateFeature, MalformedInput, SchemaViolation
from .taxonomy import ActionabilityCategory, category_from_string


class ValueKind(Enum):
    NUMERIC = "numeric"
    CATEGORICAL = "categorical"


class Direction(Enum):
    """How a feature moves from query to counterfactual."""

    INCREASE = "increase"
    DECREASE = "decrease"
    MODIFY = "modify"
    NONE = "none"


class PredictedOutcome(Enum):
    DESIRED = "desired"
    UNDESIRED = "undesired"


class _JsonNumber(str):
    """Marker for values that were JSON number tokens; preserves their text."""

    __slots__ = ()


def _reject_constant(token: str) -> None:
    raise SchemaViolation(f"non-finite number {token!r} is not allowed in a case file")


@dataclass(frozen=True)
class OutcomeLabels:
    """Domain wording for the two prediction outcomes.

    ``desired``/``undesired`` are short labels ("accepted", "rejected");
    the state phrases are clauses that slot into factual sentences
    ("a healthy heart", "having a heart problem").
    """

    desired: str
    undesired: str
    desired_state_phrase: str
    undesired_state_phrase: str

    def __post_init__(self) -> None:
        for name in ("desired", "undesired", "desired_state_phrase", "undesired_state_phrase"):
            if not getattr(self, name):
                raise SchemaViolation(f"outcome label {name!r} must be non-empty")


@dataclass(frozen=True)
class FeatureRecord:
    """A single feature with its query value, counterfactual value, and weight.

    Values are exact decimal strings for numeric features and verbatim labels
    for categorical ones; ``attribution`` is the signed local importance used
    only as an ordering key.
    """

    name: str
    kind: ValueKind
    query_value: str
    cf_value: str
    attribution: float
    display_name: str | None = None
    unit: str | None = None

    def __post_init__(self) -> None:
        if not self.name:
            raise SchemaViolation("feature name must be non-empty")
        if self.kind is ValueKind.NUMERIC:
            for label, value in (("query_value", self.query_value), ("cf_value", self.cf_value)):
                try:
                    Decimal(value)
                except InvalidOperation:
                    raise SchemaViolation(
                        f"feature {self.name!r}: numeric {label} {value!r} "
                        "is not a decimal number"
                    ) from None

    @property
    def label(self) -> str:
        """Human-readable feature name; identifiers fall back to spaced words."""
        if self.display_name:
            return self.display_name
        return self.name.replace("_", " ")


@dataclass(frozen=True)
class ExplanationCase:
    """A validated query/counterfactual pair, the engine's sole data input."""

    dataset_id: str
    features: tuple[FeatureRecord, ...]
    outcomes: OutcomeLabels
    predicted_outcome: PredictedOutcome
    overrides: dict[str, ActionabilityCategory] = field(default_factory=dict)
    force_overrides: bool = False

    def __post_init__(self) -> None:
        if not self.features:
            raise SchemaViolation("a case must contain at least one feature")
        seen: set[str] = set()
        for record in self.features:
            if record.name in seen:
                raise DuplicateFeature(f"feature {record.name!r} appears more than once")
            seen.add(record.name)

    def value_strings(self) -> set[str]:
        """Every query/cf value text in the case; the numeric audit's whitelist."""
        values: set[str] = set()
        for record in self.features:
            values.add(record.query_value)
            values.add(record.cf_value)
        return values


@dataclass(frozen=True)
class FeatureChange:
    """A feature's movement between query and counterfactual."""

    record: FeatureRecord
    direction: Direction

    @property
    def changed(self) -> bool:
        return self.direction is not Direction.NONE


def _scalar_text(name: str, label: str, value: Any, kind: ValueKind) -> str:
    """Validate a raw parsed value against the declared kind, return its text."""
    if isinstance(value, bool) or value is None or isinstance(value, (list, dict)):
        raise SchemaViolation(f"feature {name!r}: {label} must be a number or string")
    if kind is ValueKind.NUMERIC:
        if not isinstance(value, _JsonNumber):
            raise SchemaViolation(
                f"feature {name!r}: {label} {value!r} is not numeric "
                "but the feature kind is 'numeric'"
            )
        return str(value)
    # Categorical labels are usually strings, but numeric-looking category
    # codes are accepted and kept as their exact text.
    return str(value)


def parse_case(raw: bytes | str) -> ExplanationCase:
    """Parse and validate a case file.

    Number tokens are intercepted at the JSON layer so their exact decimal
    text survives into the case. Raises MalformedInput, SchemaViolation, or
    DuplicateFeature.
    """
    if isinstance(raw, bytes):
        raw = raw.decode("utf-8")
    try:
        doc = json.loads(
            raw,
            parse_float=_JsonNumber,
            parse_int=_JsonNumber,
            parse_constant=_reject_constant,
        )
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"case file is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise MalformedInput("case file must be a JSON object")

    for key in ("dataset_id", "predicted_outcome", "outcomes", "features"):
        if key not in doc:
            raise SchemaViolation(f"case file missing required key {key!r}")

    outcomes_doc = doc["outcomes"]
    if not isinstance(outcomes_doc, dict):
        raise SchemaViolation("'outcomes' must be an object")
    try:
        outcomes = OutcomeLabels(
            desired=str(outcomes_doc["desired"]),
            undesired=str(outcomes_doc["undesired"]),
            desired_state_phrase=str(outcomes_doc["desired_state_phrase"]),
            undesired_state_phrase=str(outcomes_doc["undesired_state_phrase"]),
        )
    except KeyError as exc:
        raise SchemaViolation(f"outcomes missing key {exc.args[0]!r}") from None

    try:
        predicted = PredictedOutcome(str(doc["predicted_outcome"]))
    except ValueError:
        raise SchemaViolation(
            f"predicted_outcome must be 'desired' or 'undesired', "
            f"got {doc['predicted_outcome']!r}"
        ) from None

    features_doc = doc["features"]
    if not isinstance(features_doc, list):
        raise SchemaViolation("'features' must be an array")

    records = []
    for entry in features_doc:
        if not isinstance(entry, dict):
            raise SchemaViolation("each feature must be an object")
        for key in ("name", "kind", "query_value", "cf_value", "attribution"):
            if key not in entry:
                raise SchemaViolation(f"feature entry missing key {key!r}")
        name = str(entry["name"])
        try:
            kind = ValueKind(str(entry["kind"]))
        except ValueError:
            raise SchemaViolation(
                f"feature {name!r}: kind must be 'numeric' or 'categorical', "
                f"got {entry['kind']!r}"
            ) from None
        attribution_raw = entry["attribution"]
        if not isinstance(attribution_raw, _JsonNumber):
            raise SchemaViolation(f"feature {name!r}: attribution must be a number")
        records.append(
            FeatureRecord(
                name=name,
                kind=kind,
                query_value=_scalar_text(name, "query_value", entry["query_value"], kind),
                cf_value=_scalar_text(name, "cf_value", entry["cf_value"], kind),
                attribution=float(attribution_raw),
                display_name=str(entry["display_name"]) if entry.get("display_name") else None,
                unit=str(entry["unit"]) if entry.get("unit") else None,
            )
        )

    overrides_doc = doc.get("overrides", {})
    if not isinstance(overrides_doc, dict):
        raise SchemaViolation("'overrides' must be an object of feature -> category")
    overrides = {
        str(name): category_from_string(str(value)) for name, value in overrides_doc.items()
    }

    return ExplanationCase(
        dataset_id=str(doc["dataset_id"]),
        features=tuple(records),
        outcomes=outcomes,
        predicted_outcome=predicted,
        overrides=overrides,
        force_overrides=bool(doc.get("force_overrides", False)),
    )


def extract_changes(case: ExplanationCase) -> list[FeatureChange]:
    """Derive one FeatureChange per feature, preserving case-file order.

    Numeric values compare by exact decimal value (no epsilon: counterfactual
    explainers emit the precise value they mean, and a tolerance would hide
    real changes). Categorical labels compare case-sensitively; labels that
    differ only by case are flagged as a likely data error, not normalised.
    """
    changes = []
    for record in case.features:
        if record.kind is ValueKind.NUMERIC:
            query, cf = Decimal(record.query_value), Decimal(record.cf_value)
            if cf > query:
                direction = Direction.INCREASE
            elif cf < query:
                direction = Direction.DECREASE
            else:
                direction = Direction.NONE
        else:
            if record.query_value == record.cf_value:
                direction = Direction.NONE
            else:
                if record.query_value.casefold() == record.cf_value.casefold():
                    warnings.warn(
                        f"feature {record.name!r}: values {record.query_value!r} and "
                        f"{record.cf_value!r} differ only by case; treating as a change",
                        stacklevel=2,
                    )
                direction = Direction.MODIFY
        changes.append(FeatureChange(record=record, direction=direction))
    return changes
