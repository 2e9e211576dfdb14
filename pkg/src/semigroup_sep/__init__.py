"""Finite semigroup analysis: binary quasiorder, semilattice reflection,
H-classes, E-separatedness, and exhaustive theorem sweeps."""

from .analysis import Analysis
from .core import (
    TWO,
    AssociativityError,
    CayleyTable,
    Orbit,
    SubsetClassification,
    TableParseError,
    adjoin_identity,
    canonical_form,
    classify_subset,
    hom_check,
    idempotents,
    load_table,
    monogenic_orbit,
    set_product,
)
from .predicates import PropertyReport, center, evaluate_properties

__all__ = [
    "TWO",
    "Analysis",
    "AssociativityError",
    "CayleyTable",
    "Orbit",
    "PropertyReport",
    "SubsetClassification",
    "TableParseError",
    "adjoin_identity",
    "canonical_form",
    "center",
    "classify_subset",
    "evaluate_properties",
    "hom_check",
    "idempotents",
    "load_table",
    "monogenic_orbit",
    "set_product",
]
