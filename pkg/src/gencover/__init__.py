"""Covering-radius hierarchies of linear codes.

Exact computation of the generalized covering radii R_t by three independent
routes, generalized Hamming weights and packing radii, closed-form rate
bounds with grid-search oracles, randomized covering experiments, and a
planner that answers batched syndrome queries with few parity-check columns.
"""

from .errors import GencoverError
from .gf import FieldSpec, GFElement, embed_base, field_create, xi_inv, xi_map
from .fqlinalg import GFMatrix, RrefResult, in_span, random_matrix, rank, rref
from .code import (
    LinearCode,
    code_from_generator,
    code_from_parity,
    direct_sum,
    extend,
    hamming_code,
    lift,
    load_code,
    puncture,
    save_code,
    shorten,
    u_uplusv,
)
from .radii import (
    RadiiEntry,
    RadiiReport,
    ball_volume,
    covering_radius,
    generalized_radius,
    radii_hierarchy,
    t_distance,
    t_weight,
)
from .weights import WeightHierarchy, packing_radius, verify_packing, weight_hierarchy
from .planner import BatchPlan, plan_exact, plan_greedy, verify_plan

__all__ = [
    "GencoverError",
    "FieldSpec",
    "GFElement",
    "field_create",
    "embed_base",
    "xi_map",
    "xi_inv",
    "GFMatrix",
    "RrefResult",
    "rref",
    "rank",
    "in_span",
    "random_matrix",
    "LinearCode",
    "code_from_generator",
    "code_from_parity",
    "hamming_code",
    "lift",
    "puncture",
    "extend",
    "shorten",
    "u_uplusv",
    "direct_sum",
    "load_code",
    "save_code",
    "RadiiEntry",
    "RadiiReport",
    "ball_volume",
    "covering_radius",
    "generalized_radius",
    "radii_hierarchy",
    "t_weight",
    "t_distance",
    "WeightHierarchy",
    "weight_hierarchy",
    "packing_radius",
    "verify_packing",
    "BatchPlan",
    "plan_exact",
    "plan_greedy",
    "verify_plan",
]

__version__ = "0.1.0"
