"""Surface realisation: turn sentence plans into final sentence strings.

Every word of a realised sentence comes from the template literal, the
lexicon, or the case data; there is no free generation. Numeric slot values
are reproduced as the exact decimal text carried by the case, which makes the
downstream numeric-fidelity audit a byte-level check.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field, fields, replace
from typing import Literal

from .case_model import Direction, FeatureRecord, OutcomeLabels
from .errors import MalformedInput, SchemaViolation
from .planner import TEMPLATE_SURFACES, PlannedSentence, TemplateId
from .rng import draw
from .taxonomy import ActionabilityCategory, TaxonomyConfig

_SLOT_PATTERN = re.compile(r"\{([A-Z_]+)\}")
_DECIMAL_PATTERN = re.compile(r"\d+(?:\.\d+)?")

# Comparative slots prefer true comparative adjectives; the verb-like members
# stay in the set (callers may still want them) but are skipped while a
# grammatical alternative exists.
_AWKWARD_COMPARATIVES = frozenset({"increase", "decrease"})


@dataclass(frozen=True)
class Lexicon:
    """Synonym sets for the lexical template slots.

    Members are stored in the case they surface mid-sentence; the possessive
    opens its sentence and stays capitalised.
    """

    verb: tuple[str, ...] = ("take", "initiate", "undertake", "pursue", "negotiate")
    object: tuple[str, ...] = ("steps", "measures", "actions")
    action_pos: tuple[str, ...] = ("increase", "improve", "raise")
    action_neg: tuple[str, ...] = ("decrease", "reduce")
    action_modify: tuple[str, ...] = ("change", "modify")
    comparative_pos: tuple[str, ...] = ("increase", "higher", "better")
    comparative_neg: tuple[str, ...] = ("decrease", "lower", "worse")
    possessive: tuple[str, ...] = ("Your",)
    connectives: tuple[str, ...] = ("Furthermore", "Moreover", "In addition")

    def __post_init__(self) -> None:
        for field_def in fields(self):
            values = getattr(self, field_def.name)
            if not values or any(not item for item in values):
                raise SchemaViolation(f"lexicon set {field_def.name!r} must be non-empty")
            object.__setattr__(self, field_def.name, tuple(values))

    def action_set(self, direction: Direction) -> tuple[str, ...]:
        if direction is Direction.INCREASE:
            return self.action_pos
        if direction is Direction.DECREASE:
            return self.action_neg
        if direction is Direction.MODIFY:
            return self.action_modify
        raise ValueError("no action lexemes for an unchanged feature")


def load_lexicon(raw: bytes | str) -> Lexicon:
    """Build a lexicon from an override file; absent sets keep their defaults."""
    if isinstance(raw, bytes):
        raw = raw.decode("utf-8")
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"lexicon file is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise MalformedInput("lexicon file must be a JSON object")
    known = {field_def.name for field_def in fields(Lexicon)}
    unknown = set(doc) - known
    if unknown:
        raise SchemaViolation(f"unknown lexicon sets: {sorted(unknown)}")
    replacements = {}
    for name, values in doc.items():
        if not isinstance(values, list) or not all(isinstance(v, str) for v in values):
            raise SchemaViolation(f"lexicon set {name!r} must be an array of strings")
        replacements[name] = tuple(values)
    return replace(Lexicon(), **replacements)


@dataclass(frozen=True)
class RealisedSentence:
    """A final sentence string plus the metadata discourse planning needs."""

    text: str
    feature_name: str
    category: ActionabilityCategory | None
    rank_weight: float
    template: TemplateId | None = None
    numeric_tokens: frozenset[str] = field(default_factory=frozenset)


def decimal_tokens(text: str) -> frozenset[str]:
    """All maximal decimal-number tokens appearing in a string."""
    return frozenset(_DECIMAL_PATTERN.findall(text))


def choose_synonym(options: tuple[str, ...], seed: int, slot_index: int) -> str:
    """Deterministically pick one member of a synonym set.

    The pick rotates through the set from a seed-dependent offset, so
    consecutive slot indices never repeat a lexeme when the set has more than
    one member, and the whole sequence is a pure function of (set, seed,
    slot_index).
    """
    if not options:
        raise ValueError("synonym set must be non-empty")
    size = len(options)
    if size == 1:
        return options[0]
    offset = draw(seed, "lex:" + "|".join(options), 0) % size
    return options[(offset + slot_index) % size]


def format_value(record: FeatureRecord, which: Literal["query", "cf"]) -> str:
    """Render a feature value for output: exact text, unit appended if any."""
    value = record.query_value if which == "query" else record.cf_value
    if record.unit:
        return f"{value} {record.unit}"
    return value


def _comparative_options(options: tuple[str, ...]) -> tuple[str, ...]:
    preferred = tuple(word for word in options if word not in _AWKWARD_COMPARATIVES)
    return preferred or options


def realise(
    plan: PlannedSentence,
    lexicon: Lexicon,
    outcomes: OutcomeLabels,
    seed: int,
    ordinal: int = 0,
) -> RealisedSentence:
    """Fill one plan's template with lexical choices and formatted values.

    ``ordinal`` is the sentence's position within its run and drives the
    synonym rotation across sentences. Non-sensitive immutable sentences are
    always framed positively: the comparative comes from the positive set and
    is paired with the desired-outcome phrase, never with the undesired one.
    """
    record = plan.feature
    bindings = dict(plan.slots)
    if "QUERY_VALUE" in bindings:
        bindings["QUERY_VALUE"] = format_value(record, "query")
    if "CF_VALUE" in bindings:
        bindings["CF_VALUE"] = format_value(record, "cf")

    if plan.template is TemplateId.INS_COMPARATIVE:
        bindings["COMPARATIVE"] = choose_synonym(
            _comparative_options(lexicon.comparative_pos), seed, ordinal
        )
        bindings["DESIRED_OUTCOME"] = outcomes.desired_state_phrase
    if plan.template is TemplateId.IS_ATTRIBUTIVE:
        bindings["POSSESSIVE"] = choose_synonym(lexicon.possessive, seed, ordinal)
        bindings["OUTCOME"] = outcomes.undesired_state_phrase
    if plan.template in (TemplateId.MI_FULL, TemplateId.MI_CONCISE):
        bindings["VERB"] = choose_synonym(lexicon.verb, seed, ordinal)
        bindings["OBJECT"] = choose_synonym(lexicon.object, seed, ordinal)
    if "ACTION" in _SLOT_PATTERN.findall(TEMPLATE_SURFACES[plan.template]):
        bindings["ACTION"] = choose_synonym(
            lexicon.action_set(plan.direction), seed, ordinal
        )

    text = _SLOT_PATTERN.sub(lambda match: bindings[match.group(1)], TEMPLATE_SURFACES[plan.template])
    return RealisedSentence(
        text=text,
        feature_name=record.name,
        category=plan.category,
        rank_weight=plan.rank_weight,
        template=plan.template,
        numeric_tokens=decimal_tokens(text),
    )


def realise_prologue(taxonomy: TaxonomyConfig, actionable_count: int) -> str:
    """Fill the dataset prologue with the number of recommended actions."""
    if actionable_count < 1:
        raise ValueError("prologue requires at least one actionable change")
    text = taxonomy.prologue_template.replace("{COUNT}", str(actionable_count))
    return text.replace("{GOAL}", taxonomy.goal_phrase)


def realise_epilogue(taxonomy: TaxonomyConfig) -> str:
    """The domain sign-off, verbatim from config."""
    return taxonomy.epilogue
