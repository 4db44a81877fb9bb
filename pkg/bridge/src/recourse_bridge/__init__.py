"""Bridge from ML-ecosystem explainers to the recourse text engine.

The bridge and the engine share nothing but file formats: a case file (one
query/counterfactual pair with attribution weights) and a taxonomy file. The
bridge writes them; a human assigns actionability categories; the engine does
the rest.
"""

from .dataset import TabularDataset, toy_loan_dataset
from .errors import BridgeError, IncompatibleModel, NoCounterfactualFound
from .explainer import CounterfactualResult, find_counterfactual, occlusion_attributions
from .export import (
    BridgeJob,
    OutcomePhrases,
    decimal_text,
    dump_json,
    export_case,
    export_taxonomy_skeleton,
)
from .model import TabularModel

__version__ = "0.1.0"

__all__ = [
    "BridgeError",
    "BridgeJob",
    "CounterfactualResult",
    "IncompatibleModel",
    "NoCounterfactualFound",
    "OutcomePhrases",
    "TabularDataset",
    "TabularModel",
    "decimal_text",
    "dump_json",
    "export_case",
    "export_taxonomy_skeleton",
    "find_counterfactual",
    "occlusion_attributions",
    "toy_loan_dataset",
]
