"""Finite subgroups of SU(2)^3 and their free actions on S^3 x S^3."""

from .exact import RatCos, SurdValue, cos_turn, realpart_equal
from .freeness import (
    BudgetExceeded,
    Explicit,
    SemiSplittable,
    Simple,
    Splittable,
    coincidence_set,
    is_free,
    splittable_free_test,
)
from .goursat import GoursatQuintuple, PairSubgroup, build_goursat, decompose, quintuple_from_descriptors
from .groups import build_group, real_part_set
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BudgetExceeded", "Explicit", "GoursatQuintuple", "PairSubgroup", "RatCos", "SemiSplittable",
    "Simple", "Splittable", "SurdValue", "build_goursat", "build_group", "coincidence_set", "cos_turn",
    "decompose", "is_free", "quintuple_from_descriptors", "real_part_set", "realpart_equal",
    "splittable_free_test",
]
