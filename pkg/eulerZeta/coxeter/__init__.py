"""Coxeter systems: word problem, classification, growth and double cosets."""

from .classify import FiniteComponent, FiniteTypeDescriptor, classify_finite, coxeter_graph, is_spherical
from .cosets import (
    ParabolicDecomposition,
    conjugate,
    cross_section_Q,
    left_coset_factorization,
    min_double_coset_reps,
    minimal_left_coset_reps,
    p_qj_classes,
    p_qj_series,
    parabolic_decompose,
    parabolic_factorization,
)
from .growth import (
    LengthEnumeration,
    coxeter_euler_characteristic,
    enumerate_by_length,
    growth_polynomial_finite,
    growth_series,
    parabolic_elements,
    spherical_subsets,
)
from .catalog import right_angled_triangle, shipped_systems
from .system import INF, CoxeterSystem, NormalForm, Word

__all__ = [
    "INF",
    "CoxeterSystem",
    "FiniteComponent",
    "FiniteTypeDescriptor",
    "LengthEnumeration",
    "NormalForm",
    "ParabolicDecomposition",
    "Word",
    "classify_finite",
    "conjugate",
    "coxeter_euler_characteristic",
    "coxeter_graph",
    "cross_section_Q",
    "enumerate_by_length",
    "growth_polynomial_finite",
    "growth_series",
    "is_spherical",
    "left_coset_factorization",
    "min_double_coset_reps",
    "minimal_left_coset_reps",
    "p_qj_classes",
    "p_qj_series",
    "parabolic_decompose",
    "parabolic_elements",
    "parabolic_factorization",
    "right_angled_triangle",
    "shipped_systems",
    "spherical_subsets",
]
