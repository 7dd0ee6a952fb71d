"""Exact minimal-genus bounds for surfaces in 4-manifolds with b2+ = 1,
and intersection bounds for b2+ = 2, computed from the intersection form."""

__version__ = "0.1.0"

from .adjunction import (
    BoundReport,
    KParity,
    KSetResult,
    Method,
    adjunction_genus_lb,
    characteristic_class_bound,
    characteristic_number,
    characteristic_numbers,
    divisible_genus_lb,
    formal_dimension,
    formal_dimension_orthogonal,
    k_set,
)
from .catalog import (
    ExactFamily,
    Family,
    ReducedForm,
    closed_form_lb,
    exact_genus,
    is_reduced,
    list_reduced_classes_with_genus_le,
    reduced_search_region,
)
from .constructions import (
    ConstructionPlan,
    e_form_plan,
    genus_from_strict,
    h_form_plan,
    multiple_class_plan,
    multiple_class_upper_bound,
    primitive_bound_transfer,
    reduced_class_construction,
    reduced_class_plan,
    resolve_genus,
)
from .errors import (
    BudgetExhausted,
    DimensionError,
    LatticeError,
    ManifestError,
    MinGenusError,
    NotUnimodularError,
    PreconditionError,
)
from .intersections import IntersectionReport, disjointness_obstruction, gilmer_lb, intersection_lb
from .lattice import (
    Lattice,
    Signature,
    characteristic_basepoint,
    divisibility,
    is_characteristic,
    orthogonal_defect,
    pairing,
    signature,
)
from .search import (
    DEFAULT_BUDGET,
    CharWitness,
    SearchBudget,
    brute_force_min_pairing,
    max_square_with_pairings,
    min_abs_pairing,
    min_pairing_sum_2,
)
