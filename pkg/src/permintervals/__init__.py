"""Common-interval search over sets of signed permutations.

Finds all common intervals of K signed permutations, plus six subclasses
(nested, maximal nested, conserved, irreducible conserved, irreducible
common, same-sign common), in time linear in the input plus the output.
"""

from .core import (
    CONSERVED_CLASSES,
    ConservedEndpointViolation,
    DuplicateElement,
    Interval,
    IntervalClass,
    LengthMismatch,
    OutOfRange,
    ProblemInstance,
    SignedPermutation,
    ValidationError,
    renumber,
    validate,
)
from .search import IntervalReport, run

__version__ = "0.1.0"

__all__ = [
    "CONSERVED_CLASSES",
    "ConservedEndpointViolation",
    "DuplicateElement",
    "Interval",
    "IntervalClass",
    "IntervalReport",
    "LengthMismatch",
    "OutOfRange",
    "ProblemInstance",
    "SignedPermutation",
    "ValidationError",
    "renumber",
    "run",
    "validate",
]
