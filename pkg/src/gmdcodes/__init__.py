"""Generalized Hamming weights, minimum distance and footprint functions of
Reed-Muller-type evaluation codes over finite fields."""

from .codes import (
    BudgetExceeded, EvaluationCode, build_code, gaussian_binomial, ghw, ghw_by_codewords,
    ghw_by_subspaces, ghw_by_supports, ghw_exact, singleton_bound, weight_hierarchy,
)
from .geometry import (
    PointSet, PointSetError, affine_cartesian_set, count_zeros, custom_point_set,
    from_description, nested_cartesian_set, projective_space, projective_torus,
    vanishing_ideal,
)
from .gf import FieldElement, FieldError, FieldSpec, make_field, parse_field
from .gmdfun import (
    WeightMatrix, delta_fn, footprint_fn, footprint_matrix, vasconcelos_fn,
    vasconcelos_matrix, weight_matrix,
)
from .groebner import GroebnerBasis, MonomialIdeal, buchberger, hilbert_function
from .poly import MonomialOrder, ParseError, Polynomial, parse_polynomial

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "EvaluationCode", "build_code", "gaussian_binomial", "ghw",
    "ghw_by_codewords", "ghw_by_subspaces", "ghw_by_supports", "ghw_exact",
    "singleton_bound", "weight_hierarchy", "PointSet", "PointSetError",
    "affine_cartesian_set", "count_zeros", "custom_point_set", "from_description",
    "nested_cartesian_set", "projective_space", "projective_torus", "vanishing_ideal",
    "FieldElement", "FieldError", "FieldSpec", "make_field", "parse_field", "WeightMatrix",
    "delta_fn", "footprint_fn", "footprint_matrix", "vasconcelos_fn", "vasconcelos_matrix",
    "weight_matrix", "GroebnerBasis", "MonomialIdeal", "buchberger", "hilbert_function",
    "MonomialOrder", "ParseError", "Polynomial", "parse_polynomial",
]
