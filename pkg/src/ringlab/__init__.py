"""Finite-ring workbench: subsets, ring classes, constructions and theorem checks."""

from .classifiers import ClassificationReport, classify
from .expr import eval_expr, parse_expr, to_text
from .ring import AxiomError, FiniteRing, OrderError, RingError, make_ring, validate
from .subsets import (center, delta, idempotents, ideal_lattice, jacobson_radical, nilpotents,
                      units)

__version__ = "0.1.0"

__all__ = [
    "ClassificationReport", "classify", "eval_expr", "parse_expr", "to_text",
    "AxiomError", "FiniteRing", "OrderError", "RingError", "make_ring", "validate",
    "center", "delta", "idempotents", "ideal_lattice", "jacobson_radical", "nilpotents",
    "units",
]
