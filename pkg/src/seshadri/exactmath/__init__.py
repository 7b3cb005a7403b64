"""Exact arithmetic substrate: scalars, polynomials, and linear algebra."""

from .scalars import (
    QuadExt,
    Rational,
    Scalar,
    conjugate_scalar,
    format_scalar,
    is_zero,
    parse_scalar,
    rational_parts,
    to_scalar,
)
from .polynomials import (
    INFINITY,
    Exponent,
    WPolynomial,
    format_polynomial,
    graded_lex_monomials,
    jet_basis_size,
    jet_coefficients,
    multiplicity_at,
    parse_polynomial,
)
from .linalg import (
    ExactMatrix,
    determinant,
    exact_rank,
    is_negative_definite,
    matvec,
    nullspace_basis,
    rref,
    solve_unique,
)

__all__ = [
    "QuadExt",
    "Rational",
    "Scalar",
    "conjugate_scalar",
    "format_scalar",
    "is_zero",
    "parse_scalar",
    "rational_parts",
    "to_scalar",
    "INFINITY",
    "Exponent",
    "WPolynomial",
    "format_polynomial",
    "graded_lex_monomials",
    "jet_basis_size",
    "jet_coefficients",
    "multiplicity_at",
    "parse_polynomial",
    "ExactMatrix",
    "determinant",
    "exact_rank",
    "is_negative_definite",
    "matvec",
    "nullspace_basis",
    "rref",
    "solve_unique",
]
