"""Core arithmetic layer: coefficient fields, monomial orders, sparse
polynomials, and exact polynomial matrices.

The implementation lives in focused submodules; this module is the
stable aggregate import surface for the layer.
"""

from .fields import GF, QQ, PrimeField, RationalField, is_prime
from .matrix import PolyMatrix, canonical_sign, parallel_map
from .orders import Block, DegRevLex, Lex, elimination_order
from .poly import (
    Polynomial,
    Ring,
    monomial_deg,
    monomial_div,
    monomial_divides,
    monomial_gcd,
    monomial_lcm,
    monomial_mul,
)

__all__ = [
    "GF",
    "QQ",
    "PrimeField",
    "RationalField",
    "is_prime",
    "PolyMatrix",
    "canonical_sign",
    "parallel_map",
    "Block",
    "DegRevLex",
    "Lex",
    "elimination_order",
    "Polynomial",
    "Ring",
    "monomial_deg",
    "monomial_div",
    "monomial_divides",
    "monomial_gcd",
    "monomial_lcm",
    "monomial_mul",
]
