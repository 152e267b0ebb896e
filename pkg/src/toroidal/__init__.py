"""Exact verification of the classification of smooth toroidal compactifications
with 3*c2bar = c1bar^2 and c2bar = 1 (non-bi-elliptic case)."""

from .caselaw import ClassificationReport, run_classification
from .rings import OrderKind, QuadInt
from .surfaces import Configuration, Slope, search_good_configurations

__all__ = [
    "ClassificationReport",
    "Configuration",
    "OrderKind",
    "QuadInt",
    "Slope",
    "run_classification",
    "search_good_configurations",
]
__version__ = "0.1.0"
