"""Bigraded polynomial rings, exact linear algebra and Groebner bases."""

from .groebner import GroebnerBasis, GroebnerEngine, MonomialOrder, groebner_basis
from .hilbert import hilbert_numerator, hilbert_polynomial, krull_dimension, monomial_hilbert_function
from .linalg import GradedMatrix, nullspace, rank
from .parse import PolyParseError, parse_poly
from .poly import Poly, linear_combination
from .ring import Bidegree, Monomial, RingSpec, count_monomials, count_y_monomials, monomial_basis, y_monomials

__all__ = [
    "Bidegree", "GradedMatrix", "GroebnerBasis", "GroebnerEngine", "Monomial", "MonomialOrder",
    "Poly", "PolyParseError", "RingSpec", "count_monomials", "count_y_monomials", "groebner_basis",
    "hilbert_numerator", "hilbert_polynomial", "krull_dimension", "linear_combination",
    "monomial_basis", "monomial_hilbert_function", "nullspace", "parse_poly", "rank", "y_monomials",
]
