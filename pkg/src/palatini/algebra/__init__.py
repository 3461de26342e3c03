"""Exact coefficient arithmetic, sparse polynomials and dense linear algebra."""

from .groebner import GroebnerLimitError, groebner_mod_p, minimal_leading_monomials, standard_monomial_count
from .fields import DEFAULT_PRIMES, GF, QQ, DomainError, FpElement, PrimeField, field_of
from .linalg import (
    determinant,
    is_proportional,
    kernel_mod_p,
    matmul,
    matvec,
    rank,
    rank_kernel,
    rank_mod_p,
    rref,
    transpose,
)
from .poly import MultiPoly, as_field_poly, default_names, gcd_univariate, monomials
