"""Exact rationals, polynomials in the fixed parameters, matrices and subspaces."""
from __future__ import annotations

from .linalg import (
    LinearSubspace,
    ParameterizedMatrixError,
    determinant,
    express_in,
    kernel_of_rows,
    rank,
    rref,
    rref_kernel,
    solve,
)
from .matrix import Matrix, is_scalar_matrix, scalar_defect
from .poly import (
    GENS,
    PARAMS,
    RING,
    Coeff,
    ExpressionError,
    Poly,
    PolyElement,
    as_poly,
    evaluate_expression,
    format_coeff,
    is_constant,
    linear_coefficients,
    param,
    params,
    parse_poly,
    poly_substitute,
    simplify,
    substitute_cleared,
    to_fraction,
    total_degree,
    variables,
)

__all__ = [
    "Coeff",
    "ExpressionError",
    "GENS",
    "LinearSubspace",
    "Matrix",
    "PARAMS",
    "ParameterizedMatrixError",
    "Poly",
    "PolyElement",
    "RING",
    "as_poly",
    "determinant",
    "evaluate_expression",
    "express_in",
    "format_coeff",
    "is_constant",
    "is_scalar_matrix",
    "kernel_of_rows",
    "linear_coefficients",
    "param",
    "params",
    "parse_poly",
    "poly_substitute",
    "rank",
    "rref",
    "rref_kernel",
    "scalar_defect",
    "simplify",
    "solve",
    "substitute_cleared",
    "to_fraction",
    "total_degree",
    "variables",
]
