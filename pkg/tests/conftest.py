"""Pytest fixtures shared by the engine test suite."""

from __future__ import annotations

import pytest

from recourse_nlg import load_taxonomy, parse_case
from recourse_nlg.fixtures import case_text, taxonomy_text

DATASETS = ("heart", "student", "credit")


@pytest.fixture(scope="session")
def cases():
    return {name: parse_case(case_text(name)) for name in DATASETS}


@pytest.fixture(scope="session")
def taxonomies():
    return {name: load_taxonomy(taxonomy_text(name)) for name in DATASETS}
