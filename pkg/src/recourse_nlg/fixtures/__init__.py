"""Bundled example cases and taxonomies for three demo datasets, plus the
taxonomy instantiations for six training-domain datasets."""

from __future__ import annotations

from importlib import resources

CASE_FIXTURES = ("heart", "student", "credit")
TAXONOMY_FIXTURES = (
    "heart",
    "student",
    "credit",
    "diabetes",
    "breast_cancer",
    "oulad",
    "student_uci",
    "loan_approval",
    "income",
)
TRAINING_TAXONOMIES = (
    "diabetes",
    "breast_cancer",
    "oulad",
    "student_uci",
    "loan_approval",
    "income",
)


def fixture_filenames() -> list[str]:
    names = [f"{name}_case.json" for name in CASE_FIXTURES]
    names += [f"{name}_taxonomy.json" for name in TAXONOMY_FIXTURES]
    return names


def read_fixture(filename: str) -> str:
    """Return the text of a bundled fixture file."""
    if filename not in fixture_filenames():
        raise KeyError(f"no bundled fixture named {filename!r}")
    return resources.files(__package__).joinpath(filename).read_text(encoding="utf-8")


def case_text(dataset: str) -> str:
    return read_fixture(f"{dataset}_case.json")


def taxonomy_text(dataset: str) -> str:
    return read_fixture(f"{dataset}_taxonomy.json")
