"""Closed-form and oracle computations for generalized Thabit numerical
semigroups GT(n, k), the family generated by (2^k+1)*2^(n+i) - (2^k-1)."""

from .oracle import (
    AperyTable,
    EmptyInput,
    GcdNotOne,
    NotMember,
    Semigroup,
    SemigroupError,
    ZeroModulus,
    make_semigroup,
)
from .thabit import (
    Case,
    apery_coeffs,
    apery_set_closed,
    case_of,
    coeff_solve,
    coeff_value,
    delta,
    embedding_dimension,
    frobenius_closed,
    frobenius_k2_closed,
    generator_at,
    genus_closed,
    iter_apery_coeffs,
    max_apery,
    max_apery_fast_kltn,
    minimal_generating_set,
)
from .verify import grid_points, verify_grid, verify_point

__version__ = "0.1.0"

__all__ = [
    "AperyTable",
    "Case",
    "EmptyInput",
    "GcdNotOne",
    "NotMember",
    "Semigroup",
    "SemigroupError",
    "ZeroModulus",
    "apery_coeffs",
    "apery_set_closed",
    "case_of",
    "coeff_solve",
    "coeff_value",
    "delta",
    "embedding_dimension",
    "frobenius_closed",
    "frobenius_k2_closed",
    "generator_at",
    "genus_closed",
    "grid_points",
    "iter_apery_coeffs",
    "make_semigroup",
    "max_apery",
    "max_apery_fast_kltn",
    "minimal_generating_set",
    "verify_grid",
    "verify_point",
]
