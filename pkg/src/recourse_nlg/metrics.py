"""Quantitative text checks: readability, similarity, rank order, and the
numeric-fidelity audit.

The audit is the independent safety net behind the whole engine: it re-derives
every number token from the rendered output with its own tokeniser and insists
each one originates from the case data, the action count, or an ordinal label.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .case_model import ExplanationCase, ValueKind
from .discourse import Explanation, render_text
from .errors import DegenerateInput, EmptyText, LengthMismatch

_WORD_PATTERN = re.compile(r"[A-Za-z]+(?:'[A-Za-z]+)*")
_SENTENCE_SPLIT = re.compile(r"[.!?]+(?:\s+|$)")
_VOWEL_GROUPS = re.compile(r"[aeiouy]+")
_TOKEN_PATTERN = re.compile(r"[a-z0-9']+")
_NUMBER_PATTERN = re.compile(r"\d+(?:\.\d+)?")


@dataclass(frozen=True)
class TextStats:
    """Counts feeding the readability formula."""

    words: int
    sentences: int
    syllables: int


@dataclass(frozen=True)
class RankCorrelation:
    rho: float
    n: int

    def __post_init__(self) -> None:
        if abs(self.rho) > 1 + 1e-12:
            raise ValueError(f"rho out of range: {self.rho}")


@dataclass(frozen=True)
class FidelityViolation:
    """A number token that cannot be traced back to the input data."""

    token: str
    context: str

    def __str__(self) -> str:
        return f"untraceable number {self.token!r} in: {self.context}"


def count_syllables(word: str) -> int:
    """Vowel-group heuristic: contiguous vowel clusters, silent trailing 'e'
    discounted, and a floor of one syllable per word."""
    groups = _VOWEL_GROUPS.findall(word.lower())
    count = len(groups)
    if count > 1 and word.lower().endswith("e") and groups[-1] == "e":
        count -= 1
    return max(count, 1)


def text_stats(text: str) -> TextStats:
    """Tokenise into words, sentences, and syllables.

    Words are alphabetic runs (apostrophes allowed); sentences end at
    terminal punctuation followed by whitespace or end of text.
    """
    if not text.strip():
        raise EmptyText("cannot compute statistics of empty text")
    words = _WORD_PATTERN.findall(text)
    if not words:
        raise EmptyText("text contains no words")
    pieces = [piece for piece in _SENTENCE_SPLIT.split(text) if piece.strip()]
    sentences = max(len(pieces), 1)
    syllables = sum(count_syllables(word) for word in words)
    return TextStats(words=len(words), sentences=sentences, syllables=syllables)


def flesch_score(text: str) -> float:
    """Reading-ease score; higher means easier text.

    Standard formula over the documented tokeniser and syllable heuristic:
    206.835 - 1.015*(words/sentences) - 84.6*(syllables/words). The raw value
    is returned without clamping to [0, 100].
    """
    stats = text_stats(text)
    return (
        206.835
        - 1.015 * stats.words / stats.sentences
        - 84.6 * stats.syllables / stats.words
    )


def _tokens(text: str) -> list[str]:
    return _TOKEN_PATTERN.findall(text.lower())


def token_similarity(a: str, b: str) -> float:
    """Jaccard similarity over token multisets (lowercased, punctuation
    stripped); 1.0 means identical bags of tokens."""
    tokens_a, tokens_b = _tokens(a), _tokens(b)
    if not tokens_a or not tokens_b:
        raise EmptyText("token similarity requires two non-empty texts")
    count_a, count_b = Counter(tokens_a), Counter(tokens_b)
    intersection = sum((count_a & count_b).values())
    union = sum((count_a | count_b).values())
    return intersection / union


def _average_ranks(values: Sequence[float]) -> list[float]:
    """Ranks starting at 1, with tied values sharing their average rank."""
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    index = 0
    while index < len(order):
        upper = index
        while upper + 1 < len(order) and values[order[upper + 1]] == values[order[index]]:
            upper += 1
        average = (index + upper) / 2 + 1
        for position in range(index, upper + 1):
            ranks[order[position]] = average
        index = upper + 1
    return ranks


def spearman_rho(x: Sequence[float], y: Sequence[float]) -> RankCorrelation:
    """Rank-order correlation: average-rank ties, then Pearson on the ranks.

    For tie-free data this equals 1 - 6*sum(d^2)/(n*(n^2-1)). Raises
    LengthMismatch for unequal lists and DegenerateInput when either list is
    constant or shorter than two items.
    """
    if len(x) != len(y):
        raise LengthMismatch(f"rank lists differ in length: {len(x)} vs {len(y)}")
    n = len(x)
    if n < 2:
        raise DegenerateInput("rank correlation needs at least two observations")
    ranks_x, ranks_y = _average_ranks(x), _average_ranks(y)
    mean_x = sum(ranks_x) / n
    mean_y = sum(ranks_y) / n
    dev_x = [rank - mean_x for rank in ranks_x]
    dev_y = [rank - mean_y for rank in ranks_y]
    var_x = sum(d * d for d in dev_x)
    var_y = sum(d * d for d in dev_y)
    if var_x == 0 or var_y == 0:
        raise DegenerateInput("rank correlation is undefined for a constant list")
    rho = sum(dx * dy for dx, dy in zip(dev_x, dev_y)) / (var_x * var_y) ** 0.5
    return RankCorrelation(rho=rho, n=n)


def _allowed_number_tokens(case: ExplanationCase, actionable_count: int) -> set[str]:
    allowed = {str(ordinal) for ordinal in range(1, actionable_count + 1)}
    allowed.add(str(actionable_count))
    return allowed


def _traceable(token: str, case: ExplanationCase) -> bool:
    for record in case.features:
        for value in (record.query_value, record.cf_value):
            if token == value or token in value:
                return True
    return False


def audit_text(
    text: str,
    case: ExplanationCase,
    actionable_count: int,
) -> list[FidelityViolation]:
    """Check every decimal-number token of a rendered explanation against the
    case's value strings, the action count, and the ordinal labels."""
    allowed = _allowed_number_tokens(case, actionable_count)
    violations = []
    for line in text.splitlines():
        for token in _NUMBER_PATTERN.findall(line):
            if token in allowed or _traceable(token, case):
                continue
            violations.append(FidelityViolation(token=token, context=line.strip()))
    return violations


def numeric_fidelity_audit(
    explanation: Explanation,
    case: ExplanationCase,
) -> list[FidelityViolation]:
    """Audit an assembled explanation's plain-text rendering.

    An empty list is the expected outcome for engine output; any entry names a
    number that cannot be traced back to the inputs.
    """
    count = explanation.metadata.get("actionable_count", explanation.actionable_count)
    return audit_text(render_text(explanation), case, count)


def value_tokens_of_case(case: ExplanationCase) -> Iterable[str]:
    """The numeric value strings of a case (useful for external audit tools)."""
    for record in case.features:
        if record.kind is ValueKind.NUMERIC:
            yield record.query_value
            yield record.cf_value
