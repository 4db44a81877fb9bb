"""Feature actionability taxonomy: loading, validation, and lookup.

A taxonomy maps each feature of a dataset to one of four actionability
categories. Two are mutable (the user can act on the feature, directly or via
another quantity) and two are immutable (the feature can only ever be talked
about factually; the sensitive one additionally carries ethical weight).
The engine refuses to process a changed feature with no category: silently
treating a sensitive feature as actionable is the failure mode this whole
component exists to prevent.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .errors import (
    MalformedInput,
    MissingPrologueSlot,
    OverrideNotPermitted,
    SchemaViolation,
    UnassignedFeature,
    UnknownCategoryName,
)

COUNT_SLOT = "{COUNT}"
GOAL_SLOT = "{GOAL}"


class ActionabilityCategory(Enum):
    """The four-way feature actionability classification."""

    MUTABLE_DIRECTLY = "mutable_directly"
    MUTABLE_INDIRECTLY = "mutable_indirectly"
    IMMUTABLE_SENSITIVE = "immutable_sensitive"
    IMMUTABLE_NON_SENSITIVE = "immutable_non_sensitive"

    @property
    def is_mutable(self) -> bool:
        return self in (
            ActionabilityCategory.MUTABLE_DIRECTLY,
            ActionabilityCategory.MUTABLE_INDIRECTLY,
        )

    @property
    def is_immutable(self) -> bool:
        return not self.is_mutable


def category_from_string(raw: str) -> ActionabilityCategory:
    """Parse a category name as it appears in taxonomy and case files."""
    try:
        return ActionabilityCategory(raw)
    except ValueError:
        valid = ", ".join(c.value for c in ActionabilityCategory)
        raise UnknownCategoryName(
            f"unknown actionability category {raw!r}; expected one of: {valid}"
        ) from None


@dataclass(frozen=True)
class TaxonomyConfig:
    """Per-dataset actionability assignments plus domain wording.

    The prologue template must contain the ``{COUNT}`` slot exactly once;
    ``{GOAL}`` is optional and filled from ``goal_phrase``.
    """

    dataset_id: str
    assignments: Mapping[str, ActionabilityCategory]
    prologue_template: str
    epilogue: str
    goal_phrase: str = ""

    def __post_init__(self) -> None:
        if self.prologue_template.count(COUNT_SLOT) != 1:
            raise MissingPrologueSlot(
                f"prologue_template must contain {COUNT_SLOT} exactly once, "
                f"found {self.prologue_template.count(COUNT_SLOT)}"
            )
        for name in self.assignments:
            if not name:
                raise SchemaViolation("assignment keys must be non-empty feature names")
        object.__setattr__(self, "assignments", dict(self.assignments))


@dataclass(frozen=True)
class CategoryCounts:
    """How many features fall in each category; sums to the assignment count."""

    md: int = 0
    mi: int = 0
    is_: int = 0
    ins: int = 0

    @property
    def total(self) -> int:
        return self.md + self.mi + self.is_ + self.ins

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.md, self.mi, self.is_, self.ins)


def load_taxonomy(raw: bytes | str) -> TaxonomyConfig:
    """Parse and validate a taxonomy file.

    Raises MalformedInput on bad JSON, SchemaViolation on missing or
    mistyped keys, UnknownCategoryName on a bad category string, and
    MissingPrologueSlot when the prologue lacks its COUNT slot.
    """
    if isinstance(raw, bytes):
        raw = raw.decode("utf-8")
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"taxonomy file is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise MalformedInput("taxonomy file must be a JSON object")

    for key in ("dataset_id", "prologue_template", "epilogue", "assignments"):
        if key not in doc:
            raise SchemaViolation(f"taxonomy file missing required key {key!r}")
    if not isinstance(doc["assignments"], dict):
        raise SchemaViolation("'assignments' must be an object of feature -> category")

    assignments = {
        name: category_from_string(value) for name, value in doc["assignments"].items()
    }
    return TaxonomyConfig(
        dataset_id=str(doc["dataset_id"]),
        assignments=assignments,
        prologue_template=str(doc["prologue_template"]),
        epilogue=str(doc["epilogue"]),
        goal_phrase=str(doc.get("goal_phrase", "")),
    )


def categorize(config: TaxonomyConfig, feature_name: str) -> ActionabilityCategory:
    """Look up a feature's category; there is deliberately no default."""
    try:
        return config.assignments[feature_name]
    except KeyError:
        raise UnassignedFeature(
            f"feature {feature_name!r} has no actionability category in "
            f"taxonomy {config.dataset_id!r}; assign one before explaining"
        ) from None


def category_counts(config: TaxonomyConfig) -> CategoryCounts:
    """Tally assignments per category."""
    tally = {category: 0 for category in ActionabilityCategory}
    for category in config.assignments.values():
        tally[category] += 1
    return CategoryCounts(
        md=tally[ActionabilityCategory.MUTABLE_DIRECTLY],
        mi=tally[ActionabilityCategory.MUTABLE_INDIRECTLY],
        is_=tally[ActionabilityCategory.IMMUTABLE_SENSITIVE],
        ins=tally[ActionabilityCategory.IMMUTABLE_NON_SENSITIVE],
    )


@dataclass(frozen=True)
class OverrideRecord:
    """One applied per-case override, kept for output metadata."""

    feature: str
    previous: ActionabilityCategory | None
    new: ActionabilityCategory


def apply_overrides(
    config: TaxonomyConfig,
    overrides: Mapping[str, ActionabilityCategory],
    force: bool = False,
) -> tuple[TaxonomyConfig, list[OverrideRecord]]:
    """Shadow taxonomy assignments with per-case overrides.

    Actionability is user-dependent, so a case may re-state it, but moving a
    feature across the mutable/immutable boundary weakens or invents
    feasibility knowledge and requires the explicit force flag. Overrides for
    features the taxonomy never assigned are plain additions and always
    allowed (without them the engine would refuse the case outright).
    """
    if not overrides:
        return config, []
    assignments = dict(config.assignments)
    applied: list[OverrideRecord] = []
    for name, category in overrides.items():
        previous = assignments.get(name)
        if previous is not None and previous.is_mutable != category.is_mutable and not force:
            raise OverrideNotPermitted(
                f"override for {name!r} moves {previous.value} -> {category.value} "
                "across the mutable/immutable boundary; set force_overrides to allow"
            )
        if previous != category:
            applied.append(OverrideRecord(feature=name, previous=previous, new=category))
        assignments[name] = category
    shadowed = TaxonomyConfig(
        dataset_id=config.dataset_id,
        assignments=assignments,
        prologue_template=config.prologue_template,
        epilogue=config.epilogue,
        goal_phrase=config.goal_phrase,
    )
    return shadowed, applied
