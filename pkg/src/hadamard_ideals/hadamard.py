"""Hadamard products: of points, of a point with a variety, and of two varieties
presented by their ideals.

Two routes compute the product of ideals:

* :func:`hadamard_product_elimination` -- the general construction
  ``(I(y) + J(z) + <x_i - y_i z_i>)`` intersected with ``k[x]``;
* :func:`hadamard_product_binomial_fast` -- the closed form for binomial ideals
  with the same exponent pairs, ``<a_i c_i X^alpha_i - b_i d_i X^beta_i>``,
  valid when one factor has a point with no zero coordinate.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from typing import Optional

from .errors import HypothesisError, ResourceCapExceeded, UndefinedProductError, ValidationError
from .groebner import GroebnerBasis, Ideal, eliminate
from .limits import current_limits
from .polyring import GRLEX, CyclotomicField, Polynomial, Ring
from .polyring.parse import parse_field_element

CERTIFIED = "certified"
CONTAINMENT_ONLY = "containment-only"
EXACT = "exact"


class ProjectivePoint:
    """A point of P^n, scaled so that its first nonzero coordinate is 1."""

    __slots__ = ("ring", "coords")

    def __init__(self, ring: Ring, coords):
        field = ring.field
        vals = [parse_field_element(c, field) if isinstance(c, str) else field(c) for c in coords]
        if len(vals) != ring.nvars:
            raise ValidationError(f"point needs {ring.nvars} coordinates, got {len(vals)}")
        first = next((c for c in vals if c), None)
        if first is None:
            raise ValidationError("the zero vector is not a projective point")
        self.ring = ring
        self.coords = tuple(c / first for c in vals)

    @classmethod
    def ones(cls, ring: Ring):
        return cls(ring, [1] * ring.nvars)

    def has_no_zero_coordinate(self):
        return all(self.coords)

    def inverse(self) -> ProjectivePoint:
        if not self.has_no_zero_coordinate():
            raise HypothesisError("point has a zero coordinate")
        return ProjectivePoint(self.ring, [1 / c for c in self.coords])

    def power(self, exp):
        """p^alpha = prod p_i^alpha_i."""
        out = self.ring.field.one
        for c, k in zip(self.coords, exp):
            if k:
                out = out * c ** k
        return out

    def __eq__(self, other):
        return isinstance(other, ProjectivePoint) and self.ring == other.ring and self.coords == other.coords

    def __hash__(self):
        return hash((self.ring, self.coords))

    def __str__(self):
        from .polyring.field import format_element

        return "[" + ":".join(format_element(c) for c in self.coords) + "]"

    __repr__ = __str__


def point_star(p: ProjectivePoint, q: ProjectivePoint) -> ProjectivePoint:
    if p.ring != q.ring:
        raise ValidationError("points live in different spaces")
    prod = [a * b for a, b in zip(p.coords, q.coords)]
    if not any(prod):
        raise UndefinedProductError(f"{p} * {q} is undefined: every coordinate product vanishes")
    return ProjectivePoint(p.ring, prod)


def _require_nonzero_coords(p: ProjectivePoint):
    if not p.has_no_zero_coordinate():
        raise HypothesisError(f"point {p} has a zero coordinate")


def _require_homogeneous(*ideals):
    for ideal in ideals:
        for g in ideal.generators:
            if not g.is_homogeneous():
                raise ValidationError(f"generator {g} is not homogeneous")


def hadamard_transform(f: Polynomial, p: ProjectivePoint) -> Polynomial:
    """Replace each coefficient a_alpha with a_alpha / p^alpha."""
    if f.ring != p.ring:
        raise ValidationError("polynomial and point live in different rings")
    _require_nonzero_coords(p)
    return Polynomial._raw(f.ring, {e: c / p.power(e) for e, c in f.items()})


def point_variety_ideal(p: ProjectivePoint, ideal: Ideal) -> Ideal:
    """Ideal of ``p * V(I)``: the generators transformed by ``p``."""
    _require_nonzero_coords(p)
    return Ideal(ideal.ring, [hadamard_transform(g, p) for g in ideal.generators])


def reduced_gb_transform(gb: GroebnerBasis, p: ProjectivePoint) -> GroebnerBasis:
    """Reduced Groebner basis of ``p * V`` from the one of ``V``: {p^alpha_i f_i^{*p}}."""
    if not gb.reduced:
        raise ValidationError("input Groebner basis is not reduced")
    _require_nonzero_coords(p)
    out = []
    for f in gb.elements:
        lm = f.leading_monomial(gb.order)
        out.append(hadamard_transform(f, p).scale(p.power(lm)))
    ideal = point_variety_ideal(p, gb.ideal)
    return GroebnerBasis(ideal, gb.order, tuple(out), reduced=True)


def point_ideal(p: ProjectivePoint) -> Ideal:
    """<p_j x_i - p_i x_j : i < j>, the ideal of the single point ``p``."""
    R = p.ring
    gens = []
    x = R.gens
    for i in range(R.nvars):
        for j in range(i + 1, R.nvars):
            gens.append(x[i].scale(p.coords[j]) - x[j].scale(p.coords[i]))
    return Ideal(R, gens)


def _fresh_names(ring, stem, count, taken=()):
    names = []
    used = set(ring.vars) | set(taken)
    for i in range(count):
        name = f"{stem}{i}"
        while name in used:
            name = name + "_"
        used.add(name)
        names.append(name)
    return names


def hadamard_product_elimination(I: Ideal, J: Ideal) -> Ideal:
    """I * J by elimination; the result has the reduced grevlex basis as generators."""
    if I.ring != J.ring:
        raise ValidationError("ideals live in different rings")
    _require_homogeneous(I, J)
    R = I.ring
    n = R.nvars
    ys = _fresh_names(R, "y", n)
    zs = _fresh_names(R, "z", n, ys)
    S = Ring(ys + zs + list(R.vars), R.field)

    def lift(f, offset):
        out = {}
        for e, c in f.items():
            big = [0] * (3 * n)
            big[offset:offset + n] = e
            out[tuple(big)] = c
        return Polynomial._raw(S, out)

    gens = [lift(f, 0) for f in I.generators]
    gens += [lift(g, n) for g in J.generators]
    one = R.field.one
    for i in range(n):
        xi = [0] * (3 * n)
        xi[2 * n + i] = 1
        yz = [0] * (3 * n)
        yz[i] = yz[n + i] = 1
        gens.append(Polynomial._raw(S, {tuple(xi): one, tuple(yz): -one}))
    res = eliminate(Ideal(S, gens), range(2 * n), weights=[1] * (2 * n) + [2] * n)
    return Ideal(R, [Polynomial._raw(R, dict(g.items())) for g in res.generators])


# -- binomial fast path ------------------------------------------------------------

@dataclass(frozen=True)
class BinomialPair:
    alpha: tuple
    beta: tuple
    lead_coeff: object
    trail_coeff: object

    def polynomial(self, ring):
        return Polynomial(ring, {self.alpha: self.lead_coeff, self.beta: -self.trail_coeff})


@dataclass(frozen=True)
class BinomialPresentation:
    """Binomial generators ``lead * X^alpha - trail * X^beta`` with alpha > beta
    (grlex) and lead normalized to 1."""

    ring: Ring
    pairs: tuple

    def exponent_pairs(self):
        return [(p.alpha, p.beta) for p in self.pairs]

    def ideal(self):
        return Ideal(self.ring, [p.polynomial(self.ring) for p in self.pairs])


def binomial_presentation(ideal: Ideal) -> Optional[BinomialPresentation]:
    """Canonical binomial presentation of the given generators, or None."""
    key = GRLEX.key
    pairs = []
    for g in ideal.generators:
        if len(g) != 2:
            return None
        (e1, c1), (e2, c2) = sorted(g.items(), key=lambda t: key(t[0]), reverse=True)
        pairs.append(BinomialPair(e1, e2, ideal.ring.field.one, -c2 / c1))
    exps = [(p.alpha, p.beta) for p in pairs]
    if len(set(exps)) != len(exps):
        return None
    pairs.sort(key=lambda p: (key(p.alpha), key(p.beta)))
    return BinomialPresentation(ideal.ring, tuple(pairs))


def same_exponent_match(I: Ideal, J: Ideal):
    """Aligned presentations when the generators of I and J have the same exponent pairs."""
    if I.ring != J.ring:
        raise ValidationError("ideals live in different rings")
    a, b = binomial_presentation(I), binomial_presentation(J)
    if a is None or b is None or not a.pairs:
        return None
    if a.exponent_pairs() != b.exponent_pairs():
        return None
    return a, b


def verify_point_on_variety(p: ProjectivePoint, ideal: Ideal) -> bool:
    if p.ring != ideal.ring:
        raise ValidationError("point and ideal live in different rings")
    return all(not g.evaluate(p.coords) for g in ideal.generators)


@dataclass(frozen=True)
class ProductResult:
    ideal: Ideal
    path: str
    status: str
    witness: Optional[ProjectivePoint] = None
    note: str = ""


def _find_witness(I, J, witness):
    candidates = [witness] if witness is not None else [ProjectivePoint.ones(I.ring)]
    for p in candidates:
        if p.ring != I.ring:
            raise ValidationError("witness point lives in a different space")
        if p.has_no_zero_coordinate() and (verify_point_on_variety(p, I) or verify_point_on_variety(p, J)):
            return p
    if witness is not None:
        raise HypothesisError(
            f"witness {witness} has a zero coordinate or lies on neither variety")
    return None


def hadamard_product_binomial_fast(I: Ideal, J: Ideal, witness: ProjectivePoint | None = None) -> ProductResult:
    """Closed-form product for same-exponent binomial ideals.

    Without a witness point (a point with no zero coordinate on V(I) or V(J);
    [1:...:1] is tried by default) the returned ideal is only known to be
    contained in the product, and the status says so.
    """
    _require_homogeneous(I, J)
    match = same_exponent_match(I, J)
    if match is None:
        raise HypothesisError("the generators do not have the same binomial exponents")
    a, b = match
    gens = [
        Polynomial(I.ring, {pa.alpha: pa.lead_coeff * pb.lead_coeff, pa.beta: -pa.trail_coeff * pb.trail_coeff})
        for pa, pb in zip(a.pairs, b.pairs)
    ]
    w = _find_witness(I, J, witness)
    status = CERTIFIED if w is not None else CONTAINMENT_ONLY
    return ProductResult(Ideal(I.ring, gens), "fast", status, w)


def hadamard_product(I: Ideal, J: Ideal, mode="auto", witness=None) -> ProductResult:
    """Dispatch between the fast path and elimination.

    ``auto`` uses the fast path only when it is certified, otherwise eliminates.
    """
    if mode == "elimination":
        return ProductResult(hadamard_product_elimination(I, J), "elimination", EXACT)
    if mode == "fast":
        return hadamard_product_binomial_fast(I, J, witness)
    if mode != "auto":
        raise ValidationError(f"unknown mode {mode!r}")
    if same_exponent_match(I, J) is not None:
        try:
            res = hadamard_product_binomial_fast(I, J, witness)
        except HypothesisError:
            res = None
        if res is not None and res.status == CERTIFIED:
            return res
    return ProductResult(hadamard_product_elimination(I, J), "elimination", EXACT)


def hadamard_power(I: Ideal, r: int, mode="fast") -> Ideal:
    """I^{*r}; r = 0 gives the ideal of [1:...:1]."""
    if not isinstance(r, int) or r < 0:
        raise ValidationError(f"power must be a non-negative integer, got {r!r}")
    _require_homogeneous(I)
    if r == 0:
        return point_ideal(ProjectivePoint.ones(I.ring))
    if r == 1:
        return I
    if mode == "fast":
        pres = binomial_presentation(I)
        if pres is None:
            raise HypothesisError("fast power needs a binomial ideal with distinct exponent pairs")
        return Ideal(I.ring, [
            Polynomial(I.ring, {p.alpha: 1, p.beta: -(p.trail_coeff ** r)}) for p in pres.pairs
        ])
    if mode == "elimination":
        out = I
        for _ in range(r - 1):
            out = hadamard_product_elimination(I, out)
        return out
    raise ValidationError(f"unknown mode {mode!r}")


# -- typed binomial varieties ----------------------------------------------------------

@dataclass(frozen=True)
class BinomialTypeSpec:
    """Exponent pairs with type data [(t_i, eps_i)]; the i-th generator is
    ``X^alpha_i - xi_i^eps_i X^beta_i`` with xi_i a root of unity of order t_i."""

    pairs: tuple
    types: tuple

    def __post_init__(self):
        pairs = tuple((tuple(a), tuple(b)) for a, b in self.pairs)
        types = tuple((int(t), int(e)) for t, e in self.types)
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "types", types)
        if len(pairs) != len(types) or not pairs:
            raise ValidationError("need one (t, eps) entry per exponent pair")
        n = len(pairs[0][0])
        for a, b in pairs:
            if len(a) != n or len(b) != n or min(a + b) < 0:
                raise ValidationError("exponent vectors must have equal length and be non-negative")
            if a == b:
                raise ValidationError(f"alpha and beta coincide: {a}")
        if len(set(pairs)) != len(pairs):
            raise ValidationError("exponent pairs must be pairwise distinct")
        for t, e in types:
            if t < 2:
                raise ValidationError(f"type order t must be at least 2, got {t}")
            if not 1 <= e <= t - 1:
                raise ValidationError(f"eps must satisfy 1 <= eps <= t - 1, got ({t}, {e})")

    @property
    def nvars(self):
        return len(self.pairs[0][0])

    def cyclotomic_order(self):
        return lcm(*(t for t, _ in self.types))


def type_ideal(spec: BinomialTypeSpec, variables=None) -> Ideal:
    m = spec.cyclotomic_order()
    cap = current_limits().max_cyclotomic_order
    if m > cap:
        raise ResourceCapExceeded(f"cyclotomic order {m} exceeds the cap {cap}")
    field = CyclotomicField(m, max_order=cap)
    variables = variables or [f"x{i}" for i in range(spec.nvars)]
    R = Ring(variables, field)
    gens = []
    for (a, b), (t, e) in zip(spec.pairs, spec.types):
        xi = field.root_of_unity(m // t)
        gens.append(Polynomial(R, {a: field.one, b: -(xi ** e)}))
    return Ideal(R, gens)


def potency_exponent(spec: BinomialTypeSpec) -> int:
    return 1 + lcm(*(t // gcd(t, e) for t, e in spec.types))
