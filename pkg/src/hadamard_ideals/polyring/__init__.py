"""Exact fields, monomial orders and sparse multivariate polynomials."""
from .field import QQ, CycloElement, CyclotomicField, RationalField, cyclotomic_polynomial, make_field, totient
from .orders import GREVLEX, GRLEX, LEX, MonomialOrder, compare_monomials
from .parse import parse_field_element, parse_polynomial
from .poly import Polynomial, Ring, apply_ring_map, embed


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def poly_scale(c, f: Polynomial) -> Polynomial:
    return f.scale(c)


__all__ = [
    "QQ", "CycloElement", "CyclotomicField", "RationalField", "cyclotomic_polynomial", "make_field",
    "totient", "GREVLEX", "GRLEX", "LEX", "MonomialOrder", "compare_monomials", "parse_field_element",
    "parse_polynomial", "Polynomial", "Ring", "apply_ring_map", "embed", "poly_add", "poly_mul",
    "poly_scale",
]
