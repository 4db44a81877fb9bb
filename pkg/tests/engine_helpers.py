"""Test helpers: a deterministic case fuzzer and a template-skeleton matcher.

The fuzzer keeps names, labels, and phrases digit-free so every number in a
rendered explanation is attributable to a feature value or an ordinal. The
matcher turns a template into an exact regex where lexical slots may be any
member of their synonym set.
"""

from __future__ import annotations

import random
import re
import string

from recourse_nlg import (
    ActionabilityCategory,
    ExplanationCase,
    FeatureRecord,
    OutcomeLabels,
    PredictedOutcome,
    TaxonomyConfig,
    ValueKind,
)

_LABELS = (
    "alpha", "beta", "gamma", "delta", "east", "west", "north", "south",
    "low", "mid", "high", "basic", "premium", "standard",
)
_PHRASES_DESIRED = (
    "a favourable outcome",
    "a strong standing",
    "a good result",
    "an approved application",
)
_PHRASES_UNDESIRED = (
    "an unfavourable outcome",
    "a weak standing",
    "a poor result",
    "a declined application",
)
_PROLOGUES = (
    "In order to reach your goal you would need to change {COUNT} attributes.",
    "To get there, you would need to change the following {COUNT} attributes.",
)
_EPILOGUES = ("Good luck!", "All the best!", "Stay on track!")


def _unique_name(rng: random.Random, seen: set[str]) -> str:
    while True:
        name = "".join(rng.choices(string.ascii_lowercase, k=7))
        if name not in seen:
            seen.add(name)
            return name


def _numeric_text(rng: random.Random) -> str:
    style = rng.randrange(3)
    if style == 0:
        return str(rng.randint(0, 5000))
    if style == 1:
        return f"{rng.uniform(0, 500):.1f}"
    return f"{rng.uniform(0, 50):.2f}"


def random_case_and_taxonomy(
    rng: random.Random,
    distinct_weights: bool = False,
) -> tuple[ExplanationCase, TaxonomyConfig]:
    """A random small case plus a taxonomy covering its changed features.

    Names, labels, and phrases are digit-free so that every number in the
    rendered output is attributable to a feature value or an ordinal. At
    least one changed feature is mutable, so the case always has recourse.
    """
    size = rng.randint(2, 10)
    seen: set[str] = set()
    records = []
    assignments: dict[str, ActionabilityCategory] = {}

    if distinct_weights:
        weights = [w / 10000 for w in rng.sample(range(1, 10000), size)]
    else:
        weights = [rng.randint(1, 5) / 10 for _ in range(size)]

    for index in range(size):
        name = _unique_name(rng, seen)
        kind = rng.choice((ValueKind.NUMERIC, ValueKind.CATEGORICAL))
        changed = index == 0 or rng.random() < 0.7
        if kind is ValueKind.NUMERIC:
            query = _numeric_text(rng)
            cf = _numeric_text(rng) if changed else query
            while changed and float(cf) == float(query):
                cf = _numeric_text(rng)
        else:
            query = rng.choice(_LABELS)
            cf = rng.choice([label for label in _LABELS if label != query]) if changed else query
        sign = rng.choice((-1, 1))
        records.append(
            FeatureRecord(
                name=name,
                kind=kind,
                query_value=query,
                cf_value=cf,
                attribution=sign * weights[index],
                unit=rng.choice((None, None, None, "kg", "points")),
            )
        )
        if index == 0:
            category = rng.choice(
                (ActionabilityCategory.MUTABLE_DIRECTLY, ActionabilityCategory.MUTABLE_INDIRECTLY)
            )
        else:
            category = rng.choice(tuple(ActionabilityCategory))
        # Unchanged features are occasionally left out of the taxonomy: the
        # engine must only require categories for changed features.
        if changed or rng.random() < 0.5:
            assignments[name] = category

    case = ExplanationCase(
        dataset_id="fuzz",
        features=tuple(records),
        outcomes=OutcomeLabels(
            desired="approved",
            undesired="declined",
            desired_state_phrase=rng.choice(_PHRASES_DESIRED),
            undesired_state_phrase=rng.choice(_PHRASES_UNDESIRED),
        ),
        predicted_outcome=PredictedOutcome.UNDESIRED,
    )
    taxonomy = TaxonomyConfig(
        dataset_id="fuzz",
        assignments=assignments,
        prologue_template=rng.choice(_PROLOGUES),
        epilogue=rng.choice(_EPILOGUES),
        goal_phrase="reach your goal",
    )
    return case, taxonomy


def _lexical_options(lexicon, slot: str, direction=None) -> tuple[str, ...]:
    from recourse_nlg import Direction

    if slot == "VERB":
        return lexicon.verb
    if slot == "OBJECT":
        return lexicon.object
    if slot == "COMPARATIVE":
        return lexicon.comparative_pos + lexicon.comparative_neg
    if slot == "POSSESSIVE":
        return lexicon.possessive
    if slot == "ACTION":
        if direction is None:
            return lexicon.action_pos + lexicon.action_neg + lexicon.action_modify
        return lexicon.action_set(Direction(direction) if isinstance(direction, str) else direction)
    raise KeyError(slot)


def template_regex(template_id, lexicon, values: dict[str, str], direction=None) -> re.Pattern:
    """Exact-match pattern for one template: literals and value bindings are
    fixed, lexical slots may be any member of their synonym set."""
    from recourse_nlg.planner import TEMPLATE_SURFACES

    parts = re.split(r"(\{[A-Z_]+\})", TEMPLATE_SURFACES[template_id])
    compiled = []
    for part in parts:
        if part.startswith("{") and part.endswith("}"):
            slot = part[1:-1]
            if slot in values:
                compiled.append(re.escape(values[slot]))
            else:
                options = _lexical_options(lexicon, slot, direction)
                compiled.append("(?:" + "|".join(re.escape(option) for option in options) + ")")
        else:
            compiled.append(re.escape(part))
    return re.compile("^" + "".join(compiled) + "$")
