"""Noncommutative Groebner bases for quaternionic polynomials."""

from .freealg import (
    BASIS_LETTERS, I, J, K, Alphabet, IndexOutOfRange, Letter, Ordering, Polynomial,
    Term, ZeroPolynomial, bracket, compare_words_deglex, conjugate_poly, conjugate_word,
    deglex_key, monoid_less, q, qbar, word,
)
from .qideal import (
    Basis, BasisElement, InvalidBound, InvalidN, bracket_commutator, enumerate_bg,
    extended_rules, ideal_generators, shift_difference,
)
from .reduce import (
    DegreeGuard, find_division, is_reduced_basis, normal_form, reduce_step, reduces_to_zero,
)
from .cert import CertReport, SQuadruplet, certify, is_clear, s_polynomial, squadruplets
from .oracle import coord_equal, coordinatize
from .structcheck import conforms_normal_pattern, irreducible_words, is_irreducible
from .syntax import ParseError, format_poly, format_word, parse_expression, parse_word

__version__ = "0.1.0"

__all__ = [
    "BASIS_LETTERS", "I", "J", "K", "Alphabet", "IndexOutOfRange", "Letter", "Ordering",
    "Polynomial", "Term", "ZeroPolynomial", "bracket", "compare_words_deglex",
    "conjugate_poly", "conjugate_word", "deglex_key", "monoid_less", "q", "qbar", "word",
    "Basis", "BasisElement", "InvalidBound", "InvalidN", "bracket_commutator",
    "enumerate_bg", "extended_rules", "ideal_generators", "shift_difference",
    "DegreeGuard", "find_division", "is_reduced_basis", "normal_form", "reduce_step",
    "reduces_to_zero", "CertReport", "SQuadruplet", "certify", "is_clear",
    "s_polynomial", "squadruplets", "coord_equal", "coordinatize",
    "conforms_normal_pattern", "irreducible_words", "is_irreducible",
    "ParseError", "format_poly", "format_word", "parse_expression", "parse_word",
]
