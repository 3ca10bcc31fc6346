"""Division, Buchberger's algorithm, reduced Groebner bases and the ideal
operations built on them (membership, equality, elimination, quotients,
saturation).

Internally polynomials are handled as plain ``{exponent tuple: coefficient}``
dicts; the public functions accept and return :class:`Polynomial` objects.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from operator import le
from typing import NamedTuple

from .errors import ResourceCapExceeded, RingMismatchError, ValidationError
from .limits import current_limits
from .polyring import GREVLEX, MonomialOrder, Polynomial, Ring, embed
from .polyring.poly import add_exp, lcm_exp, sub_exp

# Ordering of the eliminated block inside elimination orders.
ELIMINATION_HEAD = "lex"


class Ideal:
    """A finitely generated ideal; zero generators are dropped."""

    __slots__ = ("ring", "generators", "_hash")

    def __init__(self, ring: Ring, generators=()):
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = ring.parse(g)
            if not isinstance(g, Polynomial):
                raise ValidationError(f"not a polynomial: {g!r}")
            if g.ring != ring:
                raise RingMismatchError(f"generator {g} is not in {ring}")
            if g:
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._hash = None

    def is_zero(self):
        return not self.generators

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __eq__(self, other):
        # equality of presentations; use ideal_equal for equality of ideals
        return isinstance(other, Ideal) and self.ring == other.ring and self.generators == other.generators

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.generators))
        return self._hash

    def __contains__(self, f):
        if isinstance(f, str):
            f = self.ring.parse(f)
        return ideal_member(f, self)

    def strings(self):
        return [str(g) for g in self.generators]

    def __str__(self):
        return "<" + ", ".join(self.strings()) + ">"

    def __repr__(self):
        return f"Ideal({self.ring!r}, [{', '.join(repr(str(g)) for g in self.generators)}])"


@dataclass(frozen=True)
class GroebnerBasis:
    ideal: Ideal
    order: MonomialOrder
    elements: tuple
    reduced: bool = False

    @property
    def ring(self):
        return self.ideal.ring

    def leading_monomials(self):
        return [g.leading_monomial(self.order) for g in self.elements]

    def as_ideal(self) -> Ideal:
        return Ideal(self.ideal.ring, self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def strings(self):
        return [str(g) for g in self.elements]


class DivisionResult(NamedTuple):
    quotients: list
    remainder: Polynomial


# -- low-level helpers on term dicts -----------------------------------------

def _lm(p, key):
    return max(p, key=key)


def _coprime(a, b):
    return not any(x and y for x, y in zip(a, b))


def _divides(a, b):
    return all(map(le, a, b))


def _monic(p, key):
    lm = _lm(p, key)
    lc = p[lm]
    if lc == 1:
        return p
    return {e: c / lc for e, c in p.items()}


def _find_divisor(m, basis):
    for entry in basis:
        if all(map(le, entry[0], m)):
            return entry
    return None


def _normal_form(f, basis, neg_key, tail=True):
    """Remainder of ``f`` modulo monic ``basis`` entries ``(lm, poly)``."""
    p = dict(f)
    heap = [(neg_key(m), m) for m in p]
    heapq.heapify(heap)
    rem = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = p.pop(m, None)
        if c is None:
            continue
        entry = _find_divisor(m, basis)
        if entry is None:
            rem[m] = c
            if not tail:
                rem.update(p)
                return rem
            continue
        lm, g = entry
        shift = sub_exp(m, lm)
        for gm, gc in g.items():
            if gm == lm:
                continue
            t = add_exp(gm, shift)
            v = p.get(t)
            if v is None:
                p[t] = -c * gc
                heapq.heappush(heap, (neg_key(t), t))
            else:
                v = v - c * gc
                if v:
                    p[t] = v
                else:
                    del p[t]
    return rem


def _spoly(f, lmf, g, lmg):
    """S-polynomial of monic ``f`` and ``g``."""
    lcm = lcm_exp(lmf, lmg)
    sf, sg = sub_exp(lcm, lmf), sub_exp(lcm, lmg)
    out = {}
    for e, c in f.items():
        if e != lmf:
            out[add_exp(e, sf)] = c
    for e, c in g.items():
        if e == lmg:
            continue
        t = add_exp(e, sg)
        v = out.get(t)
        if v is None:
            out[t] = -c
        else:
            v = v - c
            if v:
                out[t] = v
            else:
                del out[t]
    return out


def _buchberger(polys, order: MonomialOrder):
    """Groebner basis (monic, not reduced) of nonzero term dicts.

    Normal selection strategy with the Gebauer-Moeller installation of
    Buchberger's coprime and chain criteria.
    """
    lim = current_limits()
    key, neg_key = order.key, order.neg_key
    store = []   # every polynomial ever added
    lms = []
    active = []  # indices forming the current basis
    pairs = {}   # (i, j) -> lcm, i < j
    heap = []
    spairs = 0

    def update(h):
        nonlocal active
        lh = lms[h]
        # group the new pairs by lcm; a group sharing its lcm with a coprime
        # pair is dropped whole, otherwise one representative survives
        groups = {}
        for g in active:
            l = lcm_exp(lh, lms[g])
            cop = _coprime(lh, lms[g])
            if l in groups:
                if cop:
                    groups[l] = None
            else:
                groups[l] = None if cop else g
        by_deg = sorted(groups, key=sum)
        degs = [sum(l) for l in by_deg]
        kept = []
        for i, l1 in enumerate(by_deg):
            g = groups[l1]
            d = degs[i]
            chained = False
            for j in range(i):
                if degs[j] == d:
                    break
                if _divides(by_deg[j], l1):
                    chained = True
                    break
            if not chained and g is not None:
                kept.append((g, l1))
        for (g1, g2), l in list(pairs.items()):
            if _divides(lh, l) and lcm_exp(lms[g1], lh) != l and lcm_exp(lh, lms[g2]) != l:
                del pairs[(g1, g2)]
        for g, l in kept:
            pairs[(g, h)] = l
            heapq.heappush(heap, (key(l), g, h))
        active = [g for g in active if not _divides(lh, lms[g])]
        active.append(h)

    def add(p):
        p = _monic(p, key)
        store.append(p)
        lms.append(_lm(p, key))
        update(len(store) - 1)
        if sum(len(store[g]) for g in active) > lim.max_terms:
            raise ResourceCapExceeded(f"term limit of {lim.max_terms} exceeded")

    for p in sorted(polys, key=lambda q: key(_lm(q, key))):
        basis = [(lms[g], store[g]) for g in active]
        p = _normal_form(p, basis, neg_key) if basis else p
        if p:
            add(p)

    while pairs:
        _, i, j = heapq.heappop(heap)
        if (i, j) not in pairs:
            continue
        del pairs[(i, j)]
        spairs += 1
        if spairs > lim.max_spairs:
            raise ResourceCapExceeded(f"S-pair limit of {lim.max_spairs} exceeded")
        s = _spoly(store[i], lms[i], store[j], lms[j])
        if not s:
            continue
        basis = [(lms[g], store[g]) for g in active]
        h = _normal_form(s, basis, neg_key)
        if h:
            add(h)
    return [store[g] for g in active]


def _interreduce(polys, order: MonomialOrder):
    """Reduced Groebner basis from a (monic) Groebner basis."""
    key, neg_key = order.key, order.neg_key
    polys = [_monic(p, key) for p in polys if p]
    with_lm = sorted(((_lm(p, key), p) for p in polys), key=lambda t: key(t[0]))
    minimal = []
    for lm, p in with_lm:
        if any(_divides(other, lm) for other, _ in minimal):
            continue
        minimal.append((lm, p))
    out = []
    for i, (lm, p) in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        tail = {e: c for e, c in p.items() if e != lm}
        r = _normal_form(tail, others, neg_key) if others else tail
        r[lm] = p[lm]
        out.append((lm, r))
    return out


def _terms(p: Polynomial):
    return dict(p.items())


def _wrap(ring, terms):
    return Polynomial._raw(ring, terms)


# -- public operations ---------------------------------------------------------

def _same_ring(polys, ring=None):
    for p in polys:
        if ring is None:
            ring = p.ring
        elif p.ring != ring:
            raise RingMismatchError(f"ring mismatch: {p.ring} vs {ring}")
    return ring


def divide(f: Polynomial, divisors, order: MonomialOrder = GREVLEX) -> DivisionResult:
    """Multivariate division; the first divisor whose leading term divides wins."""
    divisors = list(divisors)
    if not divisors:
        raise ValidationError("empty divisor list")
    ring = _same_ring(divisors, f.ring)
    if any(not g for g in divisors):
        raise ValidationError("division by the zero polynomial")
    neg_key = order.neg_key
    lead = []
    for g in divisors:
        lm = g.leading_monomial(order)
        lead.append((lm, g.coefficient(lm), _terms(g)))
    quots = [dict() for _ in divisors]
    p = _terms(f)
    heap = [(neg_key(m), m) for m in p]
    heapq.heapify(heap)
    rem = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = p.pop(m, None)
        if c is None:
            continue
        for k, (lm, lc, g) in enumerate(lead):
            if _divides(lm, m):
                break
        else:
            rem[m] = c
            continue
        q = c / lc
        shift = sub_exp(m, lm)
        quots[k][shift] = quots[k].get(shift, 0) + q
        for gm, gc in g.items():
            if gm == lm:
                continue
            t = add_exp(gm, shift)
            v = p.get(t)
            if v is None:
                p[t] = -q * gc
                heapq.heappush(heap, (neg_key(t), t))
            else:
                v = v - q * gc
                if v:
                    p[t] = v
                else:
                    del p[t]
    quotients = [Polynomial(ring, {e: c for e, c in qd.items() if c}) for qd in quots]
    return DivisionResult(quotients, _wrap(ring, rem))


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    if not f or not g:
        raise ValidationError("S-polynomial of the zero polynomial")
    _same_ring([g], f.ring)
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    lcm = lcm_exp(lf, lg)
    a = f.mul_term(sub_exp(lcm, lf), 1 / f.coefficient(lf))
    b = g.mul_term(sub_exp(lcm, lg), 1 / g.coefficient(lg))
    return a - b


def buchberger(ideal: Ideal, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    gens = [_terms(g) for g in ideal.generators]
    basis = _buchberger(gens, order) if gens else []
    elems = tuple(_wrap(ideal.ring, p) for p in basis)
    return GroebnerBasis(ideal, order, elems, reduced=False)


def reduce_basis(gb: GroebnerBasis) -> GroebnerBasis:
    red = _interreduce([_terms(g) for g in gb.elements], gb.order)
    elems = tuple(_wrap(gb.ideal.ring, p) for _, p in red)
    return GroebnerBasis(gb.ideal, gb.order, elems, reduced=True)


@lru_cache(maxsize=512)
def groebner_basis(ideal: Ideal, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    """The reduced Groebner basis of ``ideal`` (cached)."""
    return reduce_basis(buchberger(ideal, order))


def satisfies_buchberger_criterion(polys, order: MonomialOrder = GREVLEX) -> bool:
    """True iff every S-polynomial of ``polys`` reduces to zero modulo them."""
    polys = [p for p in polys if p]
    if not polys:
        return True
    key, neg_key = order.key, order.neg_key
    basis = []
    for g in polys:
        t = _monic(_terms(g), key)
        basis.append((_lm(t, key), t))
    for i, (li, fi) in enumerate(basis):
        for lj, fj in basis[i + 1:]:
            if _coprime(li, lj):
                continue
            s = _spoly(fi, li, fj, lj)
            if s and _normal_form(s, basis, neg_key, tail=False):
                return False
    return True


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    _same_ring([f], gb.ideal.ring)
    key = gb.order.key
    basis = []
    for g in gb.elements:
        t = _monic(_terms(g), key)
        basis.append((_lm(t, key), t))
    if not basis:
        return f
    return _wrap(f.ring, _normal_form(_terms(f), basis, gb.order.neg_key))


def ideal_member(f: Polynomial, ideal: Ideal, order: MonomialOrder = GREVLEX) -> bool:
    _same_ring([f], ideal.ring)
    if not f:
        return True
    return not normal_form(f, groebner_basis(ideal, order))


def ideal_equal(a: Ideal, b: Ideal, order: MonomialOrder = GREVLEX) -> bool:
    if a.ring != b.ring:
        raise RingMismatchError(f"ring mismatch: {a.ring} vs {b.ring}")
    return groebner_basis(a, order).elements == groebner_basis(b, order).elements


def is_unit_ideal(ideal: Ideal) -> bool:
    gb = groebner_basis(ideal, GREVLEX)
    return len(gb.elements) == 1 and gb.elements[0].is_constant()


def _fresh_name(ring, stem):
    name, k = stem, 0
    while name in ring.vars:
        k += 1
        name = f"{stem}{k}"
    return name


def is_weighted_homogeneous(ideal: Ideal, weights) -> bool:
    for g in ideal.generators:
        if len({sum(w * x for w, x in zip(weights, e)) for e in g.monomials()}) > 1:
            return False
    return True


def eliminate(ideal: Ideal, drop_vars, weights=None) -> Ideal:
    """Generators of ``ideal`` intersected with the subring of the kept variables.

    ``drop_vars`` holds variable indices or names.  The result lives in the ring
    of the remaining variables (in their original order) and its generators
    are a reduced Groebner basis there.

    When the generators are homogeneous for ``weights`` (standard degree is
    tried when none are given) the block order is refined by that weighted
    degree first, which keeps Buchberger's algorithm degree-by-degree.
    """
    ring = ideal.ring
    drop = sorted({v if isinstance(v, int) else ring.index(v) for v in drop_vars})
    if any(i < 0 or i >= ring.nvars for i in drop):
        raise ValidationError(f"variable index out of range in {drop}")
    if not drop:
        return Ideal(ring, groebner_basis(ideal, GREVLEX).elements)
    keep = [i for i in range(ring.nvars) if i not in drop]
    perm = drop + keep
    work_ring = Ring([ring.vars[i] for i in perm], ring.field)
    work = Ideal(work_ring, [embed(g, work_ring) for g in ideal.generators])
    if weights is None:
        weights = (1,) * ring.nvars
    if not is_weighted_homogeneous(ideal, weights):
        weights = None
    if weights is not None:
        weights = [weights[i] for i in perm]
    order = MonomialOrder.block(len(drop), rest="grevlex", head=ELIMINATION_HEAD, weights=weights)
    gb = groebner_basis(work, order)
    k = len(drop)
    target = Ring([ring.vars[i] for i in keep], ring.field)
    out = []
    for g in gb.elements:
        if all(not any(e[:k]) for e in g.monomials()):
            out.append(_wrap(target, {e[k:]: c for e, c in g.items()}))
    return Ideal(target, out)


def intersect(a: Ideal, b: Ideal) -> Ideal:
    """``a`` intersected with ``b`` via a tag variable t: eliminate t from t*a + (1-t)*b."""
    if a.ring != b.ring:
        raise RingMismatchError(f"ring mismatch: {a.ring} vs {b.ring}")
    ring = a.ring
    if a.is_zero() or b.is_zero():
        return Ideal(ring)
    tag = _fresh_name(ring, "tag")
    big = Ring((tag,) + ring.vars, ring.field)
    t = big.gen(0)
    gens = [t * embed(f, big) for f in a.generators]
    gens += [(1 - t) * embed(g, big) for g in b.generators]
    res = eliminate(Ideal(big, gens), [0], weights=(0,) + (1,) * ring.nvars)
    return Ideal(ring, [embed(g, ring) for g in res.generators])


def ideal_quotient(ideal: Ideal, f: Polynomial) -> Ideal:
    """``ideal : f``, computed as the intersection with ``<f>`` divided by ``f``."""
    if not f:
        raise ValidationError("quotient by the zero polynomial")
    _same_ring([f], ideal.ring)
    inter = intersect(ideal, Ideal(ideal.ring, [f]))
    out = []
    for g in inter.generators:
        q, r = divide(g, [f], GREVLEX)
        assert not r, "intersection element not divisible by f"
        out.append(q[0])
    return Ideal(ideal.ring, groebner_basis(Ideal(ideal.ring, out), GREVLEX).elements)


def saturate(ideal: Ideal, f: Polynomial) -> Ideal:
    """``ideal : f^infinity`` by iterating quotients until they stabilize."""
    lim = current_limits()
    current = Ideal(ideal.ring, groebner_basis(ideal, GREVLEX).elements)
    for _ in range(lim.max_saturation_steps):
        nxt = ideal_quotient(current, f)
        if ideal_equal(nxt, current):
            return current
        current = nxt
    raise ResourceCapExceeded(f"saturation did not stabilize within {lim.max_saturation_steps} steps")


def variable_product(ring: Ring) -> Polynomial:
    return ring.monomial((1,) * ring.nvars)


def contains_monomial(ideal: Ideal) -> bool:
    """True iff the ideal contains a monomial: 1 lies in its saturation by x_0*...*x_n."""
    if ideal.is_zero():
        return False
    return is_unit_ideal(saturate(ideal, variable_product(ideal.ring)))
