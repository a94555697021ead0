"""Classification families, their materialization and the oracle cross-check."""

from .crosscheck import (
    ACCEPTANCE_BOUNDS,
    VerificationReport,
    compare_with_expected,
    crosscheck,
    enumerate_family,
    load_expected,
    third_factors,
    verify_one,
)
from .families import (
    ROWS,
    THEOREMS,
    FamilySpec,
    form_strict,
    predicate,
    predicate_simple,
    predicate_splittable,
    predicate_typeI,
    predicate_typeII,
    predicate_typeIII,
    splittable_envelope,
    splittable_lookup,
)
from .materialize import materialize, pair_subgroup, quintuple_of

__all__ = [
    "ACCEPTANCE_BOUNDS", "VerificationReport", "compare_with_expected", "crosscheck", "enumerate_family",
    "load_expected", "third_factors", "verify_one", "ROWS", "THEOREMS", "FamilySpec", "form_strict",
    "predicate", "predicate_simple", "predicate_splittable", "predicate_typeI", "predicate_typeII",
    "predicate_typeIII", "splittable_envelope", "splittable_lookup", "materialize", "pair_subgroup",
    "quintuple_of",
]
