"""Comparison formats that ignore feature actionability.

Three baselines share the realiser's lexicon and numeric-fidelity contract so
that any difference against the taxonomy-guided output is structural, not a
wording artifact: a flat importance-ordered list, the same list aggregated by
action direction, and a fully formatted variant that numbers every change as
if it were actionable.
"""

from __future__ import annotations

from dataclasses import replace
from enum import Enum

from .case_model import Direction, ExplanationCase, FeatureChange, extract_changes
from .discourse import (
    STYLE_ALL_ACTIONABLE,
    STYLE_GROUPED,
    STYLE_IMPORTANCE,
    Explanation,
    ExplanationItem,
)
from .errors import NoChanges
from .planner import PlannedSentence, TemplateId, VariantPolicy, plan_sentences
from .realiser import (
    Lexicon,
    RealisedSentence,
    choose_synonym,
    decimal_tokens,
    format_value,
    realise,
    realise_epilogue,
    realise_prologue,
)
from .taxonomy import ActionabilityCategory, TaxonomyConfig, apply_overrides


class BaselineStyle(Enum):
    BXAI = STYLE_IMPORTANCE
    GBXAI = STYLE_GROUPED
    BASEXAI = STYLE_ALL_ACTIONABLE


def _changed_or_raise(case: ExplanationCase) -> list[FeatureChange]:
    changed = [change for change in extract_changes(case) if change.changed]
    if not changed:
        raise NoChanges(
            f"counterfactual for dataset {case.dataset_id!r} is identical to the query"
        )
    return changed


def _framing(taxonomy: TaxonomyConfig | None, count: int) -> tuple[str, str]:
    if taxonomy is None:
        return "", ""
    return realise_prologue(taxonomy, count), realise_epilogue(taxonomy)


def _metadata(style: str, case: ExplanationCase, seed: int, count: int) -> dict:
    return {
        "style": style,
        "dataset_id": case.dataset_id,
        "seed": seed,
        "actionable_count": count,
    }


def generate_bxai(
    case: ExplanationCase,
    lexicon: Lexicon | None = None,
    seed: int = 0,
    taxonomy: TaxonomyConfig | None = None,
) -> Explanation:
    """Flat action list: every changed feature, ordered by attribution alone."""
    lexicon = lexicon or Lexicon()
    changed = _changed_or_raise(case)

    realised = []
    for index, change in enumerate(changed):
        plan = PlannedSentence(
            template=TemplateId.MD_CONCISE,
            feature=change.record,
            category=ActionabilityCategory.MUTABLE_DIRECTLY,
            direction=change.direction,
            slots={"FEATURE": change.record.label, "CF_VALUE": change.record.cf_value},
            rank_weight=abs(change.record.attribution),
        )
        sentence = realise(plan, lexicon, case.outcomes, seed, ordinal=index)
        realised.append(replace(sentence, category=None, template=None))

    ordered = sorted(realised, key=lambda s: -s.rank_weight)
    prologue, epilogue = _framing(taxonomy, len(ordered))
    return Explanation(
        style=STYLE_IMPORTANCE,
        prologue=prologue,
        body=tuple(ExplanationItem(sentence=s) for s in ordered),
        epilogue=epilogue,
        metadata=_metadata(STYLE_IMPORTANCE, case, seed, len(ordered)),
    )


def generate_gbxai(
    case: ExplanationCase,
    lexicon: Lexicon | None = None,
    seed: int = 0,
    taxonomy: TaxonomyConfig | None = None,
) -> Explanation:
    """Direction-grouped actions: one aggregated sentence per direction.

    Groups are ordered by their strongest member's attribution; members stay
    attribution-ordered inside the group, so directions never interleave.
    """
    lexicon = lexicon or Lexicon()
    changed = _changed_or_raise(case)

    by_direction: dict[Direction, list[FeatureChange]] = {}
    for change in changed:
        by_direction.setdefault(change.direction, []).append(change)

    groups = []
    for direction, members in by_direction.items():
        members = sorted(members, key=lambda c: -abs(c.record.attribution))
        max_weight = abs(members[0].record.attribution)
        groups.append((direction, members, max_weight))
    groups.sort(key=lambda g: -g[2])

    items = []
    for position, (direction, members, max_weight) in enumerate(groups):
        action = choose_synonym(lexicon.action_set(direction), seed, position)
        if len(members) == 1:
            record = members[0].record
            text = f"{action} {record.label} to {format_value(record, 'cf')}"
        else:
            names = " & ".join(member.record.label for member in members)
            values = " & ".join(format_value(member.record, "cf") for member in members)
            text = f"{action} {names} to {values}"
        sentence = RealisedSentence(
            text=text,
            feature_name=",".join(member.record.name for member in members),
            category=None,
            rank_weight=max_weight,
            numeric_tokens=decimal_tokens(text),
        )
        items.append(ExplanationItem(sentence=sentence))

    prologue, epilogue = _framing(taxonomy, len(changed))
    return Explanation(
        style=STYLE_GROUPED,
        prologue=prologue,
        body=tuple(items),
        epilogue=epilogue,
        metadata=_metadata(STYLE_GROUPED, case, seed, len(changed)),
    )


def generate_basexai(
    case: ExplanationCase,
    taxonomy: TaxonomyConfig,
    lexicon: Lexicon | None = None,
    seed: int = 0,
    policy: VariantPolicy = VariantPolicy.SEEDED_MIX,
) -> Explanation:
    """Fully formatted output that treats every changed feature as actionable.

    Keeps the taxonomy-guided prologue, numbering, and epilogue, and keeps the
    template shape of genuinely mutable features, but renders immutable and
    unassigned features as direct actions instead of factual statements.
    """
    lexicon = lexicon or Lexicon()
    effective_taxonomy, _ = apply_overrides(taxonomy, case.overrides, case.force_overrides)
    changed = _changed_or_raise(case)

    # Re-route every non-mutable assignment to a directly-mutable one so the
    # planner emits an action sentence for it.
    assignments = dict(effective_taxonomy.assignments)
    for change in changed:
        category = assignments.get(change.record.name)
        if category is None or category.is_immutable:
            assignments[change.record.name] = ActionabilityCategory.MUTABLE_DIRECTLY
    all_actionable = TaxonomyConfig(
        dataset_id=effective_taxonomy.dataset_id,
        assignments=assignments,
        prologue_template=effective_taxonomy.prologue_template,
        epilogue=effective_taxonomy.epilogue,
        goal_phrase=effective_taxonomy.goal_phrase,
    )

    plans = plan_sentences(case, extract_changes(case), all_actionable, policy, seed)
    realised = [
        realise(plan, lexicon, case.outcomes, seed, ordinal=index)
        for index, plan in enumerate(plans)
    ]
    ordered = sorted(realised, key=lambda s: -s.rank_weight)

    items = tuple(
        ExplanationItem(sentence=sentence, ordinal=position + 1)
        for position, sentence in enumerate(ordered)
    )
    metadata = _metadata(STYLE_ALL_ACTIONABLE, case, seed, len(ordered))
    metadata["variant_policy"] = policy.value
    return Explanation(
        style=STYLE_ALL_ACTIONABLE,
        prologue=realise_prologue(all_actionable, len(ordered)),
        body=items,
        epilogue=realise_epilogue(all_actionable),
        metadata=metadata,
    )
