import random
from fractions import Fraction
from math import lcm

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from hadamard_ideals.errors import HypothesisError, ResourceCapExceeded, UndefinedProductError, ValidationError
from hadamard_ideals.groebner import Ideal, groebner_basis, ideal_equal, ideal_member, buchberger
from hadamard_ideals.hadamard import (
    CERTIFIED, CONTAINMENT_ONLY, EXACT, BinomialTypeSpec, ProjectivePoint, binomial_presentation,
    hadamard_power, hadamard_product, hadamard_product_binomial_fast, hadamard_product_elimination,
    hadamard_transform, point_ideal, point_star, point_variety_ideal, potency_exponent, reduced_gb_transform,
    same_exponent_match, type_ideal, verify_point_on_variety,
)
from hadamard_ideals.hilbert import leading_term_ideal
from hadamard_ideals.limits import limits
from hadamard_ideals.polyring import GREVLEX, GRLEX, LEX, Ring
from hadamard_ideals.verify import random_planted_case

from strategies import R3, homogeneous_polynomials, nonzero_rationals, polynomials

R4 = Ring(["x", "y", "z", "w"])
R2 = Ring(["x", "y"])
P1234 = ProjectivePoint(R4, [1, 2, 3, 4])

points3 = st.tuples(nonzero_rationals, nonzero_rationals, nonzero_rationals).map(
    lambda c: ProjectivePoint(R3, list(c)))


# -- points ----------------------------------------------------------------------------

def test_point_normalization():
    p = ProjectivePoint(R3, [0, 2, 4])
    assert p.coords == (0, 1, 2)
    assert not p.has_no_zero_coordinate()
    assert ProjectivePoint(R3, ["1/2", 1, 3]).coords == (1, 2, 6)
    with pytest.raises(ValidationError):
        ProjectivePoint(R3, [0, 0, 0])
    with pytest.raises(ValidationError):
        ProjectivePoint(R3, [1, 2])


def test_point_star_examples():
    assert point_star(P1234, ProjectivePoint.ones(R4)) == P1234
    with pytest.raises(UndefinedProductError):
        point_star(ProjectivePoint(R2, [1, 0]), ProjectivePoint(R2, [0, 1]))
    assert point_star(ProjectivePoint(R2, [1, 2]), ProjectivePoint(R2, [3, 4])).coords == (1, Fraction(8, 3))


@given(points3, points3)
def test_point_star_commutes_and_inverts(p, q):
    assert point_star(p, q) == point_star(q, p)
    assert point_star(p, p.inverse()) == ProjectivePoint.ones(R3)


# -- transforms ------------------------------------------------------------------------

def test_transform_examples():
    f = R4("x^2 - x*y - y*z")
    assert hadamard_transform(f, ProjectivePoint.ones(R4)) == f
    assert hadamard_transform(f, P1234) == R4("x^2 - 1/2*x*y - 1/6*y*z")
    with pytest.raises(HypothesisError):
        hadamard_transform(f, ProjectivePoint(R4, [1, 0, 1, 1]))


@given(polynomials(), points3)
def test_double_transform_is_identity(f, p):
    g = hadamard_transform(f, p)
    assert g.monomials() == f.monomials()
    assert hadamard_transform(g, p.inverse()) == f


def test_point_variety_ideal_examples():
    I = Ideal(R4, ["x^2 - x*y - y*z"])
    assert point_variety_ideal(ProjectivePoint.ones(R4), I).generators == I.generators
    assert point_variety_ideal(P1234, I).strings() == ["x^2 - 1/2*x*y - 1/6*y*z"]


@pytest.mark.parametrize("gens, coords", [
    (["x^2 - x*y - y*z"], [1, 2, 3, 4]),
    (["x*y - z^2", "x^2 - 2*y*w"], [1, -1, 2, "1/2"]),
    (["x*z - y^2"], [2, 3, 1, 1]),
])
def test_point_variety_matches_elimination(gens, coords):
    # p * V(I) computed two ways: transformed generators, and elimination against the point's ideal
    p = ProjectivePoint(R4, coords)
    I = Ideal(R4, gens)
    assert ideal_equal(point_variety_ideal(p, I), hadamard_product_elimination(point_ideal(p), I))


def test_point_ideal_vanishes_only_at_the_point():
    I = point_ideal(P1234)
    assert verify_point_on_variety(P1234, I)
    assert not verify_point_on_variety(ProjectivePoint(R4, [1, 2, 3, 5]), I)


def test_reduced_gb_transform_examples():
    gb = groebner_basis(Ideal(R4, ["x^2 - x*y - y*z"]), GREVLEX)
    assert reduced_gb_transform(gb, ProjectivePoint.ones(R4)).elements == gb.elements
    out = reduced_gb_transform(gb, P1234)
    assert [str(g) for g in out.elements] == ["x^2 - 1/2*x*y - 1/6*y*z"]
    with pytest.raises(ValidationError):
        reduced_gb_transform(buchberger(Ideal(R4, ["2*x - 2*y"])), P1234)


@settings(max_examples=30)
@given(st.lists(homogeneous_polynomials(R3, 2), min_size=1, max_size=2), points3,
       st.sampled_from([LEX, GRLEX, GREVLEX]))
def test_transformed_reduced_basis_is_reduced_basis(gens, p, order):
    gb = groebner_basis(Ideal(R3, gens), order)
    out = reduced_gb_transform(gb, p)
    assert out.elements == groebner_basis(point_variety_ideal(p, gb.ideal), order).elements
    assert [g.leading_monomial(order) for g in out.elements] == [g.leading_monomial(order) for g in gb.elements]
    # unreduced: transforming any GB gives a GB with the same leading terms
    moved = Ideal(R3, [hadamard_transform(g, p) for g in gb.elements])
    assert leading_term_ideal(moved, order) == leading_term_ideal(gb.ideal, order)


@settings(max_examples=30)
@given(st.lists(homogeneous_polynomials(R3, 2), min_size=1, max_size=2), points3)
def test_double_transform_on_ideals(gens, p):
    I = Ideal(R3, gens)
    assert ideal_equal(point_variety_ideal(p.inverse(), point_variety_ideal(p, I)), I)


# -- elimination path ------------------------------------------------------------------

def test_elimination_examples():
    I = Ideal(R3, ["x^3 - 2*y^2*z"])
    J = Ideal(R3, ["x^3 - 2*y*z^2"])
    assert hadamard_product_elimination(I, J).is_zero()
    assert hadamard_product_elimination(I, I).strings() == ["x^3 - 4*y^2*z"]
    ones = point_ideal(ProjectivePoint.ones(R3))
    assert ideal_equal(hadamard_product_elimination(I, ones), I)


def test_elimination_rejects_bad_input():
    with pytest.raises(ValidationError):
        hadamard_product_elimination(Ideal(R3, ["x - 1"]), Ideal(R3, ["x"]))
    with pytest.raises(ValidationError):
        hadamard_product_elimination(Ideal(R3, ["x"]), Ideal(R2, ["x"]))


def test_elimination_honors_cap():
    I = Ideal(R4, ["x^2 - x*y - y*z", "z*w - x^2"])
    with limits(max_spairs=2):
        with pytest.raises(ResourceCapExceeded):
            hadamard_product_elimination(I, I)


def test_product_with_zero_ideal():
    # V(<0>) is all of P^2, and so is its product with any nonempty variety off the coordinate planes
    assert hadamard_product_elimination(Ideal(R3), Ideal(R3, ["x - y"])).is_zero()


@settings(max_examples=15)
@given(homogeneous_polynomials(R3, 2, max_terms=2), homogeneous_polynomials(R3, 1, max_terms=2))
def test_elimination_commutes(f, g):
    I, J = Ideal(R3, [f]), Ideal(R3, [g])
    assert ideal_equal(hadamard_product_elimination(I, J), hadamard_product_elimination(J, I))


# -- binomial fast path ----------------------------------------------------------------

def test_same_exponent_match_examples():
    m = same_exponent_match(Ideal(R3, ["x^3 - 2*y^2*z"]), Ideal(R3, ["x^3 - 5*y^2*z"]))
    assert m is not None
    a, b = m
    assert a.exponent_pairs() == [((3, 0, 0), (0, 2, 1))] == b.exponent_pairs()
    assert (a.pairs[0].trail_coeff, b.pairs[0].trail_coeff) == (2, 5)
    assert same_exponent_match(Ideal(R3, ["x^3 - 2*y^2*z"]), Ideal(R3, ["x^3 - 2*y*z^2"])) is None
    m = same_exponent_match(Ideal(R3, ["x - y"]), Ideal(R3, ["y - x"]))
    assert m is not None and m[0].pairs == m[1].pairs


def test_same_exponent_match_rejects_non_binomials():
    assert same_exponent_match(Ideal(R3, ["x^2 - y*z + z^2"]), Ideal(R3, ["x^2 - y*z"])) is None
    assert same_exponent_match(Ideal(R3, ["x"]), Ideal(R3, ["x"])) is None
    assert same_exponent_match(Ideal(R3), Ideal(R3)) is None
    # generator order does not matter
    assert same_exponent_match(Ideal(R3, ["x - y", "x^2 - z^2"]), Ideal(R3, ["3*x^2 - z^2", "x - 2*y"]))


def test_binomial_presentation_invariants():
    pres = binomial_presentation(Ideal(R3, ["2*y*z - 6*x^2", "z - 4*y"]))
    for pair in pres.pairs:
        assert pair.alpha != pair.beta
        assert GRLEX.key(pair.alpha) > GRLEX.key(pair.beta)
        assert pair.lead_coeff == 1 and pair.trail_coeff != 0
    assert ideal_equal(pres.ideal(), Ideal(R3, ["2*y*z - 6*x^2", "z - 4*y"]))
    assert binomial_presentation(Ideal(R3, ["x - y", "2*x - 3*y"])) is None


def test_fast_path_examples():
    I = Ideal(R3, ["x^3 - 2*y^2*z"])
    res = hadamard_product_binomial_fast(I, I)
    assert res.ideal.strings() == ["x^3 - 4*y^2*z"]
    assert res.status == CONTAINMENT_ONLY and res.witness is None
    assert ideal_equal(res.ideal, hadamard_product_elimination(I, I))

    pure = Ideal(R4, ["x*y - z*w", "x^2 - y*w"])
    res = hadamard_product_binomial_fast(pure, pure)
    assert res.status == CERTIFIED and res.witness == ProjectivePoint.ones(R4)
    assert ideal_equal(res.ideal, pure)


def test_fast_path_with_rational_witness():
    I = Ideal(R4, ["x*y - 2*z*w", "x^2 - 3*y*w"])
    J = Ideal(R4, ["x*y - 5*z*w", "x^2 - 7*y*w"])
    p = ProjectivePoint(R4, [1, 1, "3/2", "1/3"])
    assert verify_point_on_variety(p, I)
    res = hadamard_product_binomial_fast(I, J, p)
    assert res.status == CERTIFIED
    assert sorted(res.ideal.strings()) == ["x*y - 10*z*w", "x^2 - 21*y*w"]
    assert ideal_equal(res.ideal, hadamard_product_elimination(I, J))


def test_fast_path_errors():
    I = Ideal(R3, ["x^3 - 2*y^2*z"])
    with pytest.raises(HypothesisError):
        hadamard_product_binomial_fast(I, Ideal(R3, ["x^3 - 2*y*z^2"]))
    with pytest.raises(HypothesisError):
        hadamard_product_binomial_fast(I, I, ProjectivePoint(R3, [1, 1, 1]))
    with pytest.raises(HypothesisError):
        hadamard_product_binomial_fast(I, I, ProjectivePoint(R3, [0, 1, 0]))


def test_dispatch():
    I = Ideal(R3, ["x^3 - 2*y^2*z"])
    res = hadamard_product(I, I)
    assert res.path == "elimination" and res.status == EXACT
    pure = Ideal(R3, ["x^2 - y*z"])
    res = hadamard_product(pure, pure)
    assert res.path == "fast" and res.status == CERTIFIED
    assert hadamard_product(I, I, mode="fast").status == CONTAINMENT_ONLY
    with pytest.raises(ValidationError):
        hadamard_product(I, I, mode="bogus")


@pytest.mark.parametrize("seed", range(6))
def test_planted_pairs_agree(seed):
    c = random_planted_case(random.Random(1000 + seed), max_vars=4, max_gens=2, max_degree=4)
    elim = c.product
    fast = hadamard_product_binomial_fast(c.I, c.J, c.p)
    assert fast.status == CERTIFIED
    assert ideal_equal(fast.ideal, elim)
    assert ideal_equal(point_variety_ideal(c.p, c.J), elim)
    assert ideal_equal(point_variety_ideal(c.q, c.I), elim)
    for order in (LEX, GRLEX, GREVLEX):
        lt = leading_term_ideal(c.I, order)
        assert lt == leading_term_ideal(c.J, order) == leading_term_ideal(elim, order)


@pytest.mark.parametrize("seed", range(4))
def test_fast_generators_lie_in_product_without_witness(seed):
    rng = random.Random(2000 + seed)
    c = random_planted_case(rng, max_vars=4, max_gens=2, max_degree=4)
    bare = hadamard_product_binomial_fast(c.I, c.J)
    assert all(ideal_member(g, c.product) for g in bare.ideal.generators)


# -- powers and potency ----------------------------------------------------------------

def test_power_examples():
    I = Ideal(R3, ["x^3 - 2*y^2*z"])
    assert hadamard_power(I, 1) is I
    assert hadamard_power(I, 2).strings() == ["x^3 - 4*y^2*z"]
    assert hadamard_power(I, 2, mode="elimination").strings() == ["x^3 - 4*y^2*z"]
    assert ideal_equal(hadamard_power(I, 0), point_ideal(ProjectivePoint.ones(R3)))
    q = Ideal(R4, ["x*y + z*w"])
    assert ideal_equal(hadamard_power(q, 3), q)
    assert not ideal_equal(hadamard_power(q, 2), q)


def test_power_errors():
    I = Ideal(R3, ["x^3 - 2*y^2*z"])
    for r in (-1, 1.5):
        with pytest.raises(ValidationError):
            hadamard_power(I, r)
    with pytest.raises(HypothesisError):
        hadamard_power(Ideal(R3, ["x^2 + y^2 + z^2"]), 2)


def test_fast_power_matches_iterated_elimination():
    I = Ideal(R3, ["x^2 - 3*y*z"])
    assert ideal_equal(hadamard_power(I, 3), hadamard_power(I, 3, mode="elimination"))


def test_type_ideal_examples():
    q = type_ideal(BinomialTypeSpec([((1, 1, 0, 0), (0, 0, 1, 1))], [(2, 1)]), ["x", "y", "z", "w"])
    assert q.strings() == ["x*y + z*w"]
    sq = type_ideal(BinomialTypeSpec([((2, 0, 0), (0, 1, 1))], [(4, 2)]), ["x", "y", "z"])
    assert sq.strings() == ["x^2 + y*z"]
    assert sq.ring.field.order == 4
    with pytest.raises(ValidationError):
        BinomialTypeSpec([((1, 0), (0, 1))], [(1, 1)])
    with pytest.raises(ValidationError):
        BinomialTypeSpec([((1, 0), (0, 1))], [(3, 3)])
    with pytest.raises(ValidationError):
        BinomialTypeSpec([((1, 0), (1, 0))], [(2, 1)])
    spec = BinomialTypeSpec([((1, 0), (0, 1))], [(13, 1)])
    with pytest.raises(ResourceCapExceeded):
        type_ideal(spec)
    with limits(max_cyclotomic_order=13):
        assert len(type_ideal(spec).generators) == 1


SPECS = [
    (BinomialTypeSpec([((1, 1, 0, 0), (0, 0, 1, 1))], [(2, 1)]), 3),
    (BinomialTypeSpec([((2, 0, 0), (0, 1, 1))], [(4, 2)]), 3),
    (BinomialTypeSpec([((1, 1, 0), (0, 0, 2)), ((2, 0, 0), (0, 1, 1))], [(3, 1), (2, 1)]), 7),
]


@pytest.mark.parametrize("spec, t", SPECS)
def test_potency(spec, t):
    assert potency_exponent(spec) == t
    V = type_ideal(spec)
    assert ideal_equal(hadamard_power(V, t), V)
    for r in range(2, t):
        assert not ideal_equal(hadamard_power(V, r), V)


@given(st.lists(st.integers(2, 6).flatmap(lambda t: st.tuples(st.just(t), st.integers(1, t - 1))),
                min_size=1, max_size=2))
def test_potency_is_a_fixed_point(types):
    assume(lcm(*(t for t, _ in types)) <= 12)
    pairs = [((2, 0, 0), (0, 1, 1)), ((1, 1, 0), (0, 0, 2))][:len(types)]
    spec = BinomialTypeSpec(pairs, types)
    V = type_ideal(spec)
    t = potency_exponent(spec)
    assert set(hadamard_power(V, t).generators) == set(V.generators)


# -- points on varieties ---------------------------------------------------------------

def test_verify_point_examples():
    assert verify_point_on_variety(ProjectivePoint.ones(R4), Ideal(R4, ["x*y - z*w", "x^3 - y^2*w"]))
    assert not verify_point_on_variety(P1234, Ideal(R4, ["x^2 - x*y - y*z"]))
    assert not verify_point_on_variety(ProjectivePoint(R3, [1, 1, 0]), Ideal(R3, ["x*y - z^2"]))
    # q on V(I) puts p * q on the transformed variety
    I = Ideal(R4, ["x^2 - x*y - y*z"])
    q = ProjectivePoint(R4, [2, 1, 2, 1])
    assert verify_point_on_variety(q, I)
    assert verify_point_on_variety(point_star(P1234, q), point_variety_ideal(P1234, I))
