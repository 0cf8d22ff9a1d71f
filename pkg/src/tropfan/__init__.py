"""Exact computation of tropical varieties, prevarieties and Groebner cones."""

from .cones import Cone, Fan, common_refinement, cone, fan_statistics, full_space
from .groebner import (
    GroebnerConePair,
    Ideal,
    MarkedReducedGB,
    buchberger,
    homogeneity_space,
    initial_marked_gb,
    krull_dimension,
    lift,
    monomial_in_ideal,
    normal_form,
    saturate_by_variable_product,
    witness,
)
from .poly import (
    DEGREVLEX,
    LEX,
    Polynomial,
    RingDescriptor,
    TermOrder,
    dehomogenize,
    format_polynomial,
    homogenize,
    initial_form,
    parse_polynomial,
    weight_order,
)
from .symmetry import PermGroup, Permutation, close_group, trivial_group
from .tropical import (
    LinearIdealModel,
    RetryExhausted,
    groebner_cone,
    linear_circuits,
    neighbors,
    starting_cone,
    traverse,
    tropical_basis_of_curve,
    tropical_hypersurface,
    tropical_prevariety,
    uniform_bergman_member,
)

__all__ = [
    "Cone", "Fan", "common_refinement", "cone", "fan_statistics", "full_space",
    "GroebnerConePair", "Ideal", "MarkedReducedGB", "buchberger",
    "homogeneity_space", "initial_marked_gb", "krull_dimension", "lift",
    "monomial_in_ideal", "normal_form", "saturate_by_variable_product",
    "witness", "DEGREVLEX", "LEX", "Polynomial", "RingDescriptor", "TermOrder",
    "dehomogenize", "format_polynomial", "homogenize", "initial_form",
    "parse_polynomial", "weight_order", "PermGroup", "Permutation",
    "close_group", "trivial_group", "LinearIdealModel", "RetryExhausted",
    "groebner_cone", "linear_circuits", "neighbors", "starting_cone",
    "traverse", "tropical_basis_of_curve", "tropical_hypersurface",
    "tropical_prevariety", "uniform_bergman_member",
]

__version__ = "0.1.0"
