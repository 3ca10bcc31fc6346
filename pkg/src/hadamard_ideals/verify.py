"""Randomized and fixed-corpus cross-checks between independent computation paths.

Each suite returns a :class:`SuiteResult` listing one boolean per check; the
CLI ``verify`` command and the acceptance tests both run these.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd

from .errors import ValidationError
from .fiber import CERTIFIED, HYPOTHESIS_FAILED, fiber_ideal, verify_fiber
from .groebner import (
    Ideal, contains_monomial, groebner_basis, ideal_equal, ideal_member, satisfies_buchberger_criterion,
)
from .hadamard import (
    ProjectivePoint, hadamard_product_binomial_fast, hadamard_product_elimination, hadamard_transform,
    point_variety_ideal, reduced_gb_transform, verify_point_on_variety,
)
from .hilbert import degree_and_dimension, hilbert_values, leading_term_ideal
from .polyring import GREVLEX, GRLEX, LEX, Polynomial, Ring
from .toricgraph import (
    check_walk_agreement, corpus_graphs, corpus_pairs, toric_ideal_graph, verify_subgraph_theorem,
)

COORDINATES = tuple(Fraction(v) for v in (1, -1, 2, -2, 3, Fraction(1, 2), Fraction(-1, 3), Fraction(3, 2)))
ORDERS = {"lex": LEX, "grlex": GRLEX, "grevlex": GREVLEX}


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    checks: list = field(default_factory=list)  # (label, passed)
    notes: list = field(default_factory=list)

    def record(self, label, passed):
        self.checks.append((label, bool(passed)))

    @property
    def passed(self):
        return all(ok for _, ok in self.checks)

    @property
    def failures(self):
        return [label for label, ok in self.checks if not ok]

    def to_dict(self):
        return {
            "suite": self.name,
            "cases": self.cases,
            "checks": len(self.checks),
            "passed": self.passed,
            "failures": self.failures,
            "notes": list(self.notes),
        }


# -- witness-planted binomial pairs -------------------------------------------------

def _homogeneous_exponent(rng, n, degree, max_entry):
    while True:
        e = tuple(rng.randint(0, max_entry) for _ in range(n))
        if sum(e) == degree:
            return e


def planted_ideal(ring: Ring, pairs, p: ProjectivePoint) -> Ideal:
    """<X^a - (p^a / p^b) X^b>, which vanishes at p by construction."""
    return Ideal(ring, [Polynomial(ring, {a: 1, b: -(p.power(a) / p.power(b))}) for a, b in pairs])


@dataclass
class PlantedCase:
    I: Ideal
    J: Ideal
    p: ProjectivePoint  # on V(I)
    q: ProjectivePoint  # on V(J)

    @cached_property
    def product(self) -> Ideal:
        return hadamard_product_elimination(self.I, self.J)


def random_planted_case(rng, min_vars=3, max_vars=5, max_gens=3, max_entry=3, max_degree=6):
    n = rng.randint(min_vars, max_vars)
    s = rng.randint(1, max_gens)
    ring = Ring([f"x{i}" for i in range(n)])
    pairs = set()
    while len(pairs) < s:
        d = rng.randint(1, min(max_degree, max_entry * n))
        a = _homogeneous_exponent(rng, n, d, max_entry)
        b = _homogeneous_exponent(rng, n, d, max_entry)
        if a != b:
            pairs.add((max(a, b), min(a, b)))
    pairs = sorted(pairs)
    p = ProjectivePoint(ring, [rng.choice(COORDINATES) for _ in range(n)])
    q = ProjectivePoint(ring, [rng.choice(COORDINATES) for _ in range(n)])
    return PlantedCase(planted_ideal(ring, pairs, p), planted_ideal(ring, pairs, q), p, q)


@lru_cache(maxsize=8)
def planted_cases(seed=0, cases=25):
    rng = random.Random(seed)
    return tuple(random_planted_case(rng) for _ in range(cases))


# -- suites ----------------------------------------------------------------------------

def _zero_note(result):
    if result.cases == 0:
        result.notes.append("0 cases: nothing to check")
    return result


def hadamard_suite(seed=0, cases=25) -> SuiteResult:
    res = SuiteResult("hadamard", cases)
    for k, c in enumerate(planted_cases(seed, cases)):
        elim = c.product
        fast = hadamard_product_binomial_fast(c.I, c.J, c.p)
        res.record(f"case {k}: fast path certified", fast.status == CERTIFIED)
        res.record(f"case {k}: fast = elimination", ideal_equal(fast.ideal, elim))
        res.record(f"case {k}: p * V(J) = elimination", ideal_equal(point_variety_ideal(c.p, c.J), elim))
        bare = hadamard_product_binomial_fast(c.I, c.J)
        res.record(f"case {k}: fast generators lie in the product",
                   all(ideal_member(g, elim) for g in bare.ideal.generators))
        gbJ = groebner_basis(c.J, GREVLEX)
        moved = [hadamard_transform(g, c.p) for g in gbJ.elements]
        res.record(f"case {k}: transformed basis is a Groebner basis",
                   satisfies_buchberger_criterion(moved, GREVLEX))
        res.record(f"case {k}: transformed basis has the product's leading terms",
                   leading_term_ideal(Ideal(c.I.ring, moved), GREVLEX) == leading_term_ideal(fast.ideal, GREVLEX))
        red = reduced_gb_transform(gbJ, c.p)
        res.record(f"case {k}: reduced basis transform", red.elements == groebner_basis(
            point_variety_ideal(c.p, c.J), GREVLEX).elements)
    return _zero_note(res)


def hilbert_suite(seed=0, cases=25, upto=10) -> SuiteResult:
    res = SuiteResult("hilbert", cases)
    for k, c in enumerate(planted_cases(seed, cases)):
        trio = (c.I, c.J, c.product)
        for name, order in ORDERS.items():
            lts = [leading_term_ideal(x, order) for x in trio]
            res.record(f"case {k}: equal initial ideals under {name}", lts[0] == lts[1] == lts[2])
        hfs = [hilbert_values(x, upto) for x in trio]
        res.record(f"case {k}: equal Hilbert functions up to {upto}", hfs[0] == hfs[1] == hfs[2])
        lex_hf = hilbert_values(c.I, upto, LEX)
        res.record(f"case {k}: Hilbert function independent of the order", lex_hf == hfs[0])
        dd = [degree_and_dimension(x) for x in trio]
        res.record(f"case {k}: equal degree and dimension", dd[0] == dd[1] == dd[2])
    return _zero_note(res)


def toric_suite() -> SuiteResult:
    graphs = corpus_graphs()
    pairs = corpus_pairs()
    res = SuiteResult("toric", len(graphs) + len(pairs))
    for name, g in graphs.items():
        IG = toric_ideal_graph(g)
        res.record(f"{name}: walk binomials agree with elimination", check_walk_agreement(g))
        res.record(f"{name}: pure-difference generators",
                   all(sorted(c for _, c in f.items()) == [-1, 1] for f in IG.generators))
        res.record(f"{name}: no monomials", IG.is_zero() or not contains_monomial(IG))
        res.record(f"{name}: all-ones point on the variety", verify_point_on_variety(ProjectivePoint.ones(IG.ring), IG))
        res.record(f"{name}: toric square I_G * I_G = I_G", verify_subgraph_theorem(g, g).holds)
    for name, G, H in pairs:
        res.record(f"{name}: I_G * I_H^e = I_H^e", verify_subgraph_theorem(G, H).holds)
    return res


# -- fiber inputs ------------------------------------------------------------------------

def _rational_kernel(rows, n):
    """Integer basis of the rational kernel of an integer matrix."""
    rows = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for col in range(n):
        pr = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][col]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    basis = []
    for free in (c for c in range(n) if c not in pivots):
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for i, col in enumerate(pivots):
            v[col] = -rows[i][free]
        den = 1
        for x in v:
            den = den * x.denominator // gcd(den, x.denominator)
        basis.append([int(x * den) for x in v])
    return basis


def sample_fiber_point(report, rng) -> ProjectivePoint:
    """p rescaled by a torus point t = 2^w, w in the kernel of the exponent differences."""
    p = report.point
    n = p.ring.nvars
    rows = []
    for g in report.fiber.generators:
        (a, _), (b, _) = g.items()
        rows.append([x - y for x, y in zip(a, b)])
    kernel = _rational_kernel(rows, n)
    w = [0] * n
    for v in kernel:
        c = rng.randint(-2, 2)
        w = [x + c * y for x, y in zip(w, v)]
    return ProjectivePoint(p.ring, [c * Fraction(2) ** e for c, e in zip(p.coords, w)])


def random_fiber_input(rng):
    """A homogeneous ideal meeting the fiber hypotheses and a point with no zero coordinate."""
    while True:
        n = rng.randint(3, 4)
        ring = Ring([f"x{i}" for i in range(n)])
        kind = rng.random()
        if kind < 0.5:
            d = rng.randint(2, 3)
            terms = {}
            for _ in range(rng.randint(2, 4)):
                terms[_homogeneous_exponent(rng, n, d, d)] = rng.choice((1, -1, 2, -3))
            I = Ideal(ring, [Polynomial(ring, terms)])
        else:
            pts = ProjectivePoint(ring, [rng.choice(COORDINATES) for _ in range(n)])
            pairs = set()
            s = rng.randint(1, 2)
            while len(pairs) < s:
                d = rng.randint(2, 3)
                a, b = _homogeneous_exponent(rng, n, d, d), _homogeneous_exponent(rng, n, d, d)
                if a != b:
                    pairs.add((max(a, b), min(a, b)))
            I = planted_ideal(ring, sorted(pairs), pts)
        p = ProjectivePoint(ring, [rng.choice(COORDINATES) for _ in range(n)])
        report = fiber_ideal(I, p)
        if report.fiber is not None:
            return I, p, report


def fiber_suite(seed=0, cases=25) -> SuiteResult:
    res = SuiteResult("fiber", cases)
    rng = random.Random(seed)
    for k in range(cases):
        I, p, rep = random_fiber_input(rng)
        J = rep.fiber
        res.record(f"case {k}: p lies on V(J)", verify_point_on_variety(p, J))
        q = sample_fiber_point(rep, rng)
        res.record(f"case {k}: sampled q lies on V(J)", verify_point_on_variety(q, J))
        res.record(f"case {k}: q * V = p * V", verify_fiber(I, p, q))
        pure = [hadamard_transform(g, p.inverse()) for g in J.generators]
        res.record(f"case {k}: J rescales to pure differences",
                   all(len(g) == 2 and sum(c for _, c in g.items()) == 0 for g in pure))
        res.record(f"case {k}: status consistent with the saturation check",
                   (rep.status == CERTIFIED) == rep.hypotheses["J_saturated"])
    R = Ring(["x0", "x1", "x2"])
    bad = fiber_ideal(Ideal(R, ["x0*x1 - x0*x2"]), ProjectivePoint(R, [1, 2, 3]))
    res.record("non-saturated input yields no fiber ideal",
               bad.status == HYPOTHESIS_FAILED and bad.fiber is None)
    return _zero_note(res)


def golden_suite() -> SuiteResult:
    res = SuiteResult("golden", 2)
    R = Ring(["x", "y", "z"])
    I, J = Ideal(R, ["x^3 - 2*y^2*z"]), Ideal(R, ["x^3 - 2*y*z^2"])
    res.record("I * J = <0> (distinct exponents)", hadamard_product_elimination(I, J).is_zero())
    res.record("I * I = <x^3 - 4*y^2*z>",
               [str(g) for g in hadamard_product_elimination(I, I).generators] == ["x^3 - 4*y^2*z"])
    R4 = Ring(["x", "y", "z", "w"])
    V = Ideal(R4, ["x^2 - x*y - y*z"])
    rep = fiber_ideal(V, ProjectivePoint(R4, [1, 2, 3, 4]), LEX)
    res.record("fiber pre-check I : xyzw = I", rep.hypotheses["I_saturated"])
    res.record("fiber ideal <x^2 - 1/2*x*y, x^2 - 1/6*y*z>",
               rep.fiber is not None and [str(g) for g in rep.fiber.generators] == ["x^2 - 1/2*x*y", "x^2 - 1/6*y*z"])
    res.notes.append(f"fiber example status: {rep.status}")
    return res


SUITES = ("hadamard", "hilbert", "toric", "fiber", "golden")


def run_suite(name, seed=0, cases=25):
    if name == "hadamard":
        return [hadamard_suite(seed, cases)]
    if name == "hilbert":
        return [hilbert_suite(seed, cases)]
    if name == "fiber":
        return [fiber_suite(seed, cases)]
    if name == "toric":
        return [toric_suite()]
    if name == "golden":
        return [golden_suite()]
    if name == "all":
        return [r for s in SUITES for r in run_suite(s, seed, cases)]
    raise ValidationError(f"unknown suite {name!r}")
