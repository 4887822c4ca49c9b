"""Combinatorics and decision procedures for irreducible restrictions of
alternating-group modules in small characteristic."""

from .branching import js_truncation, reachable
from .nodes import e_tilde, f_tilde, is_JS
from .partitions import Composition, Partition, beta, double, enumerate_splitting, parse_partition
from .mullineux import mullineux_map
from .verdicts import Outcome, RestrictionQuery, Verdict, classify

__version__ = "0.1.0"

__all__ = [
    "Composition",
    "Outcome",
    "Partition",
    "RestrictionQuery",
    "Verdict",
    "__version__",
    "beta",
    "classify",
    "double",
    "e_tilde",
    "enumerate_splitting",
    "f_tilde",
    "is_JS",
    "js_truncation",
    "mullineux_map",
    "parse_partition",
    "reachable",
]
