"""Feasibility-aware natural-language recourse from counterfactual explanations.

The pipeline takes a query/counterfactual pair with attribution weights,
routes each changed feature through a feature-actionability taxonomy to a
sentence template, realises the templates with controlled lexical variation
and byte-exact numeric values, and assembles the sentences into a prologue,
an ordered body, and an epilogue. Baseline formats and an evaluation toolkit
(readability, similarity, rank correlation, numeric-fidelity audit) ship
alongside.
"""

from .baselines import BaselineStyle, generate_basexai, generate_bxai, generate_gbxai
from .case_model import (
    Direction,
    ExplanationCase,
    FeatureChange,
    FeatureRecord,
    OutcomeLabels,
    PredictedOutcome,
    ValueKind,
    extract_changes,
    parse_case,
)
from .discourse import (
    Explanation,
    ExplanationItem,
    assemble_explanation,
    order_sentences,
    render_json,
    render_markdown,
    render_text,
)
from .errors import (
    DegenerateInput,
    DuplicateFeature,
    EmptyText,
    LengthMismatch,
    MalformedInput,
    MissingPrologueSlot,
    NoChanges,
    OverrideNotPermitted,
    RecourseError,
    SchemaViolation,
    UnassignedFeature,
    UnknownCategoryName,
)
from .metrics import (
    FidelityViolation,
    RankCorrelation,
    TextStats,
    flesch_score,
    numeric_fidelity_audit,
    spearman_rho,
    text_stats,
    token_similarity,
)
from .planner import (
    PlannedSentence,
    TemplateId,
    VariantPolicy,
    plan_sentences,
    select_template_variant,
)
from .realiser import (
    Lexicon,
    RealisedSentence,
    choose_synonym,
    format_value,
    load_lexicon,
    realise,
    realise_epilogue,
    realise_prologue,
)
from .taxonomy import (
    ActionabilityCategory,
    CategoryCounts,
    TaxonomyConfig,
    apply_overrides,
    categorize,
    category_counts,
    load_taxonomy,
)

__version__ = "0.1.0"

__all__ = [
    "ActionabilityCategory",
    "BaselineStyle",
    "CategoryCounts",
    "DegenerateInput",
    "Direction",
    "DuplicateFeature",
    "EmptyText",
    "Explanation",
    "ExplanationCase",
    "ExplanationItem",
    "FeatureChange",
    "FeatureRecord",
    "FidelityViolation",
    "LengthMismatch",
    "Lexicon",
    "MalformedInput",
    "MissingPrologueSlot",
    "NoChanges",
    "OutcomeLabels",
    "OverrideNotPermitted",
    "PlannedSentence",
    "PredictedOutcome",
    "RankCorrelation",
    "RecourseError",
    "RealisedSentence",
    "SchemaViolation",
    "TaxonomyConfig",
    "TemplateId",
    "TextStats",
    "UnassignedFeature",
    "UnknownCategoryName",
    "ValueKind",
    "VariantPolicy",
    "apply_overrides",
    "assemble_explanation",
    "categorize",
    "category_counts",
    "choose_synonym",
    "extract_changes",
    "flesch_score",
    "format_value",
    "generate_basexai",
    "generate_bxai",
    "generate_gbxai",
    "load_lexicon",
    "load_taxonomy",
    "numeric_fidelity_audit",
    "order_sentences",
    "parse_case",
    "plan_sentences",
    "realise",
    "realise_epilogue",
    "realise_prologue",
    "render_json",
    "render_markdown",
    "render_text",
    "select_template_variant",
    "spearman_rho",
    "text_stats",
    "token_similarity",
]
