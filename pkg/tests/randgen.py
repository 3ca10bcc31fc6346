"""Seeded random inputs for the fixed-size acceptance loops."""
from fractions import Fraction

from hadamard_ideals.groebner import Ideal
from hadamard_ideals.polyring import Polynomial, Ring

COEFFS = [1, -1, 2, -2, 3, Fraction(1, 2), Fraction(-2, 3)]


def random_poly(rng, ring, max_terms=3, max_entry=2, homogeneous_degree=None):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        while True:
            e = tuple(rng.randint(0, max_entry) for _ in range(ring.nvars))
            if homogeneous_degree is None or sum(e) == homogeneous_degree:
                break
        terms[e] = rng.choice(COEFFS)
    return Polynomial(ring, terms)


def random_ideal(rng, ring=None, max_gens=3, **kw):
    ring = ring or Ring(["x", "y", "z"])
    gens = [random_poly(rng, ring, **kw) for _ in range(rng.randint(1, max_gens))]
    return Ideal(ring, [g for g in gens if g] or [ring.gen(0)])
