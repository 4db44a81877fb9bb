"""Sentence planning: route each changed feature to a sentence template.

Directly and indirectly mutable features become recommended actions, in a
full (query and counterfactual value) or concise (counterfactual value only)
variant. Immutable features that the upstream explainer altered are reframed
factually: the non-sensitive ones as a comparative chance statement, the
sensitive ones as a bare contribution statement that carries no values at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .case_model import Direction, ExplanationCase, FeatureChange, FeatureRecord, ValueKind
from .errors import NoChanges
from .rng import draw
from .taxonomy import ActionabilityCategory, TaxonomyConfig, categorize


class TemplateId(Enum):
    MD_FULL = "md_full"
    MD_CONCISE = "md_concise"
    MI_FULL = "mi_full"
    MI_CONCISE = "mi_concise"
    INS_COMPARATIVE = "ins_comparative"
    IS_ATTRIBUTIVE = "is_attributive"


# Surface skeletons. Lexical slots (VERB, OBJECT, ACTION, COMPARATIVE,
# POSSESSIVE) are chosen from the lexicon at realisation time; the remaining
# slots are value slots bound during planning.
TEMPLATE_SURFACES: dict[TemplateId, str] = {
    TemplateId.MD_FULL: "{ACTION} {FEATURE} from {QUERY_VALUE} to {CF_VALUE}",
    TemplateId.MD_CONCISE: "{ACTION} {FEATURE} to {CF_VALUE}",
    TemplateId.MI_FULL: "{VERB} {OBJECT} to {ACTION} {FEATURE} from {QUERY_VALUE} to {CF_VALUE}",
    TemplateId.MI_CONCISE: "{VERB} {OBJECT} to {ACTION} {FEATURE} to {CF_VALUE}",
    TemplateId.INS_COMPARATIVE: (
        "having a value of {CF_VALUE} for {FEATURE} would provide a {COMPARATIVE} "
        "chance of {DESIRED_OUTCOME} compared to a value of {QUERY_VALUE}"
    ),
    TemplateId.IS_ATTRIBUTIVE: "{POSSESSIVE} {FEATURE} has contributed to {OUTCOME}",
}

LEXICAL_SLOTS = frozenset({"VERB", "OBJECT", "ACTION", "COMPARATIVE", "POSSESSIVE"})

VALUE_SLOTS: dict[TemplateId, frozenset[str]] = {
    TemplateId.MD_FULL: frozenset({"FEATURE", "QUERY_VALUE", "CF_VALUE"}),
    TemplateId.MD_CONCISE: frozenset({"FEATURE", "CF_VALUE"}),
    TemplateId.MI_FULL: frozenset({"FEATURE", "QUERY_VALUE", "CF_VALUE"}),
    TemplateId.MI_CONCISE: frozenset({"FEATURE", "CF_VALUE"}),
    TemplateId.INS_COMPARATIVE: frozenset(
        {"FEATURE", "QUERY_VALUE", "CF_VALUE", "DESIRED_OUTCOME"}
    ),
    TemplateId.IS_ATTRIBUTIVE: frozenset({"FEATURE", "OUTCOME"}),
}

FULL_TEMPLATES = frozenset({TemplateId.MD_FULL, TemplateId.MI_FULL})


class VariantPolicy(Enum):
    """How to choose between full and concise mutable templates."""

    ALWAYS_FULL = "always_full"
    ALWAYS_CONCISE = "always_concise"
    SEEDED_MIX = "seeded_mix"


@dataclass(frozen=True)
class PlannedSentence:
    """A template selected for one feature, with its value slots bound."""

    template: TemplateId
    feature: FeatureRecord
    category: ActionabilityCategory
    direction: Direction
    slots: Mapping[str, str]
    rank_weight: float

    def __post_init__(self) -> None:
        expected = VALUE_SLOTS[self.template]
        bound = frozenset(self.slots)
        if bound != expected:
            raise ValueError(
                f"{self.template.value} requires slots {sorted(expected)}, "
                f"got {sorted(bound)}"
            )
        object.__setattr__(self, "slots", dict(self.slots))


def select_template_variant(
    category: ActionabilityCategory,
    policy: VariantPolicy,
    feature_index: int,
    has_query_value: bool,
    seed: int = 0,
) -> TemplateId:
    """Pick the full or concise template for a mutable feature.

    Immutable categories each have a single template and return it
    unconditionally. The seeded mix draws one bit per feature index so a run
    mixes both styles yet stays reproducible; a full variant is never chosen
    when the query value is not to be verbalised.
    """
    if category is ActionabilityCategory.IMMUTABLE_SENSITIVE:
        return TemplateId.IS_ATTRIBUTIVE
    if category is ActionabilityCategory.IMMUTABLE_NON_SENSITIVE:
        return TemplateId.INS_COMPARATIVE

    if policy is VariantPolicy.ALWAYS_FULL:
        full = True
    elif policy is VariantPolicy.ALWAYS_CONCISE:
        full = False
    else:
        full = draw(seed, "variant", feature_index) % 2 == 0
    if not has_query_value:
        full = False

    if category is ActionabilityCategory.MUTABLE_DIRECTLY:
        return TemplateId.MD_FULL if full else TemplateId.MD_CONCISE
    return TemplateId.MI_FULL if full else TemplateId.MI_CONCISE


def plan_sentences(
    case: ExplanationCase,
    changes: list[FeatureChange],
    taxonomy: TaxonomyConfig,
    policy: VariantPolicy = VariantPolicy.SEEDED_MIX,
    seed: int = 0,
) -> list[PlannedSentence]:
    """Produce one sentence plan per changed feature, in case-file order.

    Unchanged features yield nothing, whatever their category. Raises
    NoChanges when the counterfactual is identical to the query and
    propagates UnassignedFeature from the taxonomy lookup.
    """
    changed = [change for change in changes if change.changed]
    if not changed:
        raise NoChanges(
            f"counterfactual for dataset {case.dataset_id!r} is identical to the query"
        )

    plans = []
    for index, change in enumerate(changed):
        record = change.record
        category = categorize(taxonomy, record.name)
        plans.append(
            _plan_for(record, category, change.direction, policy, index, seed, case)
        )
    return plans


def _plan_for(
    record: FeatureRecord,
    category: ActionabilityCategory,
    direction: Direction,
    policy: VariantPolicy,
    feature_index: int,
    seed: int,
    case: ExplanationCase,
) -> PlannedSentence:
    weight = abs(record.attribution)
    if category is ActionabilityCategory.IMMUTABLE_SENSITIVE:
        # Sensitive features are acknowledged, never quantified: the slots
        # deliberately exclude both values.
        slots = {
            "FEATURE": record.label,
            "OUTCOME": case.outcomes.undesired_state_phrase,
        }
        return PlannedSentence(
            template=TemplateId.IS_ATTRIBUTIVE,
            feature=record,
            category=category,
            direction=direction,
            slots=slots,
            rank_weight=weight,
        )

    if category is ActionabilityCategory.IMMUTABLE_NON_SENSITIVE:
        slots = {
            "FEATURE": record.label,
            "QUERY_VALUE": record.query_value,
            "CF_VALUE": record.cf_value,
            "DESIRED_OUTCOME": case.outcomes.desired_state_phrase,
        }
        return PlannedSentence(
            template=TemplateId.INS_COMPARATIVE,
            feature=record,
            category=category,
            direction=direction,
            slots=slots,
            rank_weight=weight,
        )

    # Mutable: categorical changes only verbalise a from-clause when the
    # policy insists on full forms ("modify X to Y" reads better without one).
    has_query_value = record.kind is ValueKind.NUMERIC or policy is VariantPolicy.ALWAYS_FULL
    template = select_template_variant(category, policy, feature_index, has_query_value, seed)
    slots = {"FEATURE": record.label, "CF_VALUE": record.cf_value}
    if template in FULL_TEMPLATES:
        slots["QUERY_VALUE"] = record.query_value
    return PlannedSentence(
        template=template,
        feature=record,
        category=category,
        direction=direction,
        slots=slots,
        rank_weight=weight,
    )
