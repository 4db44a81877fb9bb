"""Discourse planning: order sentences and assemble the final explanation.

Sentences are grouped by actionability (recommended actions first, then the
factual reframings of immutable features) and sorted inside each group by
attribution weight. Actions get ordinal labels; factual sentences get cycling
connectives. The assembled output is prologue + body + epilogue and is fully
reproducible from the recorded metadata.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .case_model import ExplanationCase, extract_changes
from .errors import NoChanges
from .planner import PlannedSentence, VariantPolicy, plan_sentences
from .realiser import (
    Lexicon,
    RealisedSentence,
    choose_synonym,
    realise,
    realise_epilogue,
    realise_prologue,
)
from .taxonomy import ActionabilityCategory, TaxonomyConfig, apply_overrides

STYLE_TAXONOMY = "t-xai"
STYLE_IMPORTANCE = "b-xai"
STYLE_GROUPED = "gb-xai"
STYLE_ALL_ACTIONABLE = "base-xai"

NUMBERED_STYLES = frozenset({STYLE_TAXONOMY, STYLE_ALL_ACTIONABLE})


@dataclass(frozen=True)
class ExplanationItem:
    """One body sentence with its discourse decoration."""

    sentence: RealisedSentence
    ordinal: int | None = None
    connective: str | None = None


@dataclass(frozen=True)
class Explanation:
    """The assembled output: prologue, decorated body, epilogue, metadata."""

    style: str
    prologue: str
    body: tuple[ExplanationItem, ...]
    epilogue: str
    metadata: dict[str, Any] = field(default_factory=dict)

    @property
    def actionable_count(self) -> int:
        return sum(1 for item in self.body if item.ordinal is not None)


def _group_rank(category: ActionabilityCategory, swap_immutable_order: bool) -> int:
    """Mutable sentences lead; factual ones trail, sensitive-first by default."""
    if category.is_mutable:
        return 0
    if category is ActionabilityCategory.IMMUTABLE_SENSITIVE:
        return 2 if swap_immutable_order else 1
    return 1 if swap_immutable_order else 2


def order_sentences(
    sentences: list[RealisedSentence],
    swap_immutable_order: bool = False,
) -> list[RealisedSentence]:
    """Stable sort by (category group, attribution weight descending).

    Ties keep their input order, which the planner guarantees to be the
    case-file feature order.
    """
    for sentence in sentences:
        if sentence.category is None:
            raise ValueError("taxonomy-aware ordering requires categorised sentences")
    return sorted(
        sentences,
        key=lambda s: (_group_rank(s.category, swap_immutable_order), -s.rank_weight),
    )


def _decorate(
    ordered: list[RealisedSentence],
    lexicon: Lexicon,
    seed: int,
) -> tuple[ExplanationItem, ...]:
    items = []
    ordinal = 0
    factual_index = 0
    for sentence in ordered:
        if sentence.category is not None and sentence.category.is_mutable:
            ordinal += 1
            items.append(ExplanationItem(sentence=sentence, ordinal=ordinal))
        else:
            connective = choose_synonym(lexicon.connectives, seed, factual_index)
            factual_index += 1
            items.append(ExplanationItem(sentence=sentence, connective=connective))
    return tuple(items)


def _category_counts(plans: list[PlannedSentence]) -> dict[str, int]:
    counts = {category.value: 0 for category in ActionabilityCategory}
    for plan in plans:
        counts[plan.category.value] += 1
    return counts


def assemble_explanation(
    case: ExplanationCase,
    taxonomy: TaxonomyConfig,
    lexicon: Lexicon | None = None,
    *,
    policy: VariantPolicy = VariantPolicy.SEEDED_MIX,
    seed: int = 0,
    swap_immutable_order: bool = False,
) -> Explanation:
    """Run the full pipeline: plan, realise, order, and assemble.

    Raises NoChanges when nothing changed, or when every change landed on an
    immutable feature and there is therefore no action to recommend; raises
    UnassignedFeature for changed features the taxonomy does not cover.
    """
    lexicon = lexicon or Lexicon()
    effective_taxonomy, applied = apply_overrides(
        taxonomy, case.overrides, case.force_overrides
    )
    changes = extract_changes(case)
    plans = plan_sentences(case, changes, effective_taxonomy, policy, seed)

    realised = [
        realise(plan, lexicon, case.outcomes, seed, ordinal=index)
        for index, plan in enumerate(plans)
    ]
    ordered = order_sentences(realised, swap_immutable_order)

    actionable = sum(1 for sentence in ordered if sentence.category.is_mutable)
    if actionable == 0:
        raise NoChanges(
            f"counterfactual for dataset {case.dataset_id!r} changes only "
            "immutable features; there is no action to recommend"
        )

    metadata = {
        "style": STYLE_TAXONOMY,
        "dataset_id": case.dataset_id,
        "seed": seed,
        "variant_policy": policy.value,
        "swap_immutable_order": swap_immutable_order,
        "actionable_count": actionable,
        "category_counts": _category_counts(plans),
        "overrides_applied": {
            record.feature: {
                "previous": record.previous.value if record.previous else None,
                "new": record.new.value,
            }
            for record in applied
        },
        "default_lexicon": lexicon == Lexicon(),
    }
    return Explanation(
        style=STYLE_TAXONOMY,
        prologue=realise_prologue(effective_taxonomy, actionable),
        body=_decorate(ordered, lexicon, seed),
        epilogue=realise_epilogue(effective_taxonomy),
        metadata=metadata,
    )


def render_text(explanation: Explanation) -> str:
    """Plain-text rendering; the exact joining strings are part of the contract."""
    lines = []
    if explanation.prologue:
        lines.append(explanation.prologue)

    if explanation.style in NUMBERED_STYLES:
        numbered = [item for item in explanation.body if item.ordinal is not None]
        factual = [item for item in explanation.body if item.ordinal is None]
        for position, item in enumerate(numbered):
            terminator = " and," if position < len(numbered) - 1 else "."
            lines.append(f"{item.ordinal}), {item.sentence.text}{terminator}")
        for item in factual:
            lines.append(f"{item.connective}, {item.sentence.text}.")
    elif explanation.style == STYLE_IMPORTANCE:
        if explanation.body:
            lines.append(" then ".join(item.sentence.text for item in explanation.body) + ".")
    elif explanation.style == STYLE_GROUPED:
        if explanation.body:
            lines.append(
                ", thereafter ".join(item.sentence.text for item in explanation.body) + "."
            )
    else:
        raise ValueError(f"unknown explanation style {explanation.style!r}")

    if explanation.epilogue:
        lines.append(explanation.epilogue)
    return "\n".join(lines) + "\n"


def render_markdown(explanation: Explanation) -> str:
    """Markdown rendering with a numbered list for the recommended actions."""
    blocks = []
    if explanation.prologue:
        blocks.append(explanation.prologue)
    if explanation.style in NUMBERED_STYLES:
        numbered = [item for item in explanation.body if item.ordinal is not None]
        factual = [item for item in explanation.body if item.ordinal is None]
        if numbered:
            blocks.append("\n".join(f"{item.ordinal}. {item.sentence.text}" for item in numbered))
        for item in factual:
            blocks.append(f"{item.connective}, {item.sentence.text}.")
    else:
        if explanation.body:
            blocks.append("\n".join(f"- {item.sentence.text}" for item in explanation.body))
    if explanation.epilogue:
        blocks.append(explanation.epilogue)
    return "\n\n".join(blocks) + "\n"


def render_json(explanation: Explanation) -> str:
    """Structured rendering for downstream tooling; stable key order."""
    document = {
        "style": explanation.style,
        "prologue": explanation.prologue,
        "sentences": [
            {
                "ordinal": item.ordinal,
                "connective": item.connective,
                "feature": item.sentence.feature_name,
                "category": item.sentence.category.value if item.sentence.category else None,
                "template": item.sentence.template.value if item.sentence.template else None,
                "text": item.sentence.text,
            }
            for item in explanation.body
        ],
        "epilogue": explanation.epilogue,
        "metadata": explanation.metadata,
    }
    return json.dumps(document, indent=2) + "\n"


RENDERERS = {
    "text": render_text,
    "markdown": render_markdown,
    "json": render_json,
}
