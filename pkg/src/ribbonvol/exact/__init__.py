"""Exact arithmetic kernel: rationals, surds, polynomials, rational functions,
and dense linear algebra over those fields."""

from .surd import Surd, sqrt5
from .poly import Poly, poly_integrate
from .ratfun import (
    RationalFunction,
    laplace,
    orthant_exponential_integral,
    double_factorial,
)
from .linalg import (
    SingularMatrixError,
    identity,
    mat_mul,
    mat_vec,
    transpose,
    mat_rank,
    mat_det,
    mat_inverse,
    kernel_basis,
    right_inverse,
    pfaffian,
)

__all__ = [
    "Surd",
    "sqrt5",
    "Poly",
    "poly_integrate",
    "RationalFunction",
    "laplace",
    "orthant_exponential_integral",
    "double_factorial",
    "SingularMatrixError",
    "identity",
    "mat_mul",
    "mat_vec",
    "transpose",
    "mat_rank",
    "mat_det",
    "mat_inverse",
    "kernel_basis",
    "right_inverse",
    "pfaffian",
]
