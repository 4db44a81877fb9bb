"""Exception hierarchy shared by all engine modules.

Every error raised on a user input maps onto one of the documented CLI exit
codes: input/schema problems (exit 2), a feature with no actionability
assignment (exit 3), and a counterfactual with nothing to recommend (exit 4).
"""


class RecourseError(Exception):
    """Base class for all engine errors."""


class MalformedInput(RecourseError):
    """Input document is not syntactically valid (bad JSON, wrong top level)."""


class SchemaViolation(RecourseError):
    """Document parsed but violates the case or taxonomy schema."""


class DuplicateFeature(SchemaViolation):
    """The same feature name appears more than once in a case."""


class UnknownCategoryName(SchemaViolation):
    """A taxonomy or override entry names a category that does not exist."""


class MissingPrologueSlot(SchemaViolation):
    """The prologue template does not contain the COUNT slot exactly once."""


class OverrideNotPermitted(SchemaViolation):
    """A per-case override crosses the mutable/immutable boundary without force."""


class UnassignedFeature(RecourseError):
    """A changed feature has no actionability category; the engine never guesses."""


class NoChanges(RecourseError):
    """The counterfactual proposes no (actionable) change, so there is no recourse."""


class EmptyText(RecourseError):
    """A text metric was asked to score empty or word-free text."""


class LengthMismatch(RecourseError):
    """Rank correlation requires two lists of equal length."""


class DegenerateInput(RecourseError):
    """Rank correlation is undefined (constant list or fewer than two items)."""
