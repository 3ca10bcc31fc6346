"""Polynomial rings and sparse multivariate polynomials."""
from __future__ import annotations

import re
from fractions import Fraction

from ..errors import RingMismatchError, ValidationError
from .field import QQ, CycloElement, CyclotomicField, _join_signed, make_field
from .orders import GRLEX, MonomialOrder

IDENTIFIER = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


def sub_exp(a, b):
    return tuple(x - y for x, y in zip(a, b))


def divides(a, b):
    """True when the monomial with exponents ``a`` divides the one with ``b``."""
    return all(x <= y for x, y in zip(a, b))


def lcm_exp(a, b):
    return tuple(x if x >= y else y for x, y in zip(a, b))


class Ring:
    """``field[vars...]`` with a fixed variable order."""

    __slots__ = ("vars", "field", "_index")

    def __init__(self, variables, field=QQ):
        variables = tuple(variables)
        for v in variables:
            if not isinstance(v, str) or not IDENTIFIER.match(v):
                raise ValidationError(f"invalid variable name {v!r}")
        if len(set(variables)) != len(variables):
            raise ValidationError(f"duplicate variable names in {list(variables)}")
        field = make_field(field)
        if isinstance(field, CyclotomicField) and "zeta" in variables:
            raise ValidationError("'zeta' is reserved in cyclotomic rings")
        self.vars = variables
        self.field = field
        self._index = {v: i for i, v in enumerate(variables)}

    @property
    def nvars(self):
        return len(self.vars)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise ValidationError(f"unknown variable {name!r}") from None

    def __eq__(self, other):
        return isinstance(other, Ring) and self.vars == other.vars and self.field == other.field

    def __hash__(self):
        return hash((self.vars, self.field))

    def __repr__(self):
        return f"Ring({list(self.vars)}, {self.field!r})"

    def __str__(self):
        return f"{self.field.name}[{','.join(self.vars)}]"

    @property
    def zero(self):
        return Polynomial(self, {})

    @property
    def one(self):
        return self.constant(1)

    def constant(self, c):
        return Polynomial(self, {(0,) * self.nvars: c})

    def monomial(self, exp, coeff=1):
        return Polynomial(self, {tuple(exp): coeff})

    def gen(self, name_or_index):
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        exp = [0] * self.nvars
        exp[i] = 1
        return Polynomial._raw(self, {tuple(exp): self.field.one})

    @property
    def gens(self):
        return tuple(self.gen(i) for i in range(self.nvars))

    def parse(self, text):
        from .parse import parse_polynomial

        return parse_polynomial(text, self)

    def __call__(self, text):
        return self.parse(text)

    def with_field(self, field):
        return Ring(self.vars, field)

    def describe(self):
        return {"vars": list(self.vars), "field": self.field.describe()}


class Polynomial:
    """An immutable sparse polynomial: a map from exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: Ring, terms=None):
        conv = ring.field
        clean = {}
        n = ring.nvars
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != n or any((not isinstance(e, int)) or e < 0 for e in exp):
                raise ValidationError(f"bad exponent vector {exp} for {ring}")
            c = conv(c)
            clean[exp] = clean[exp] + c if exp in clean else c
        self.ring = ring
        self._terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms):
        # terms must already be canonical: converted, nonzero coefficients
        p = cls.__new__(cls)
        p.ring = ring
        p._terms = terms
        p._hash = None
        return p

    # -- basic accessors ------------------------------------------------------

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self):
        return self._terms.keys()

    def coefficient(self, exp):
        return self._terms.get(tuple(exp), self.ring.field.zero)

    def __len__(self):
        return len(self._terms)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self):
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def is_monomial(self):
        return len(self._terms) == 1

    def total_degree(self):
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self):
        return len({sum(e) for e in self._terms}) <= 1

    def variables_used(self):
        used = set()
        for e in self._terms:
            used.update(i for i, x in enumerate(e) if x)
        return used

    def sorted_terms(self, order: MonomialOrder = GRLEX):
        """Terms in descending order."""
        key = order.key
        return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder):
        if not self._terms:
            raise ValidationError("the zero polynomial has no leading term")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder):
        return self._terms[self.leading_monomial(order)]

    def leading_term(self, order: MonomialOrder):
        m = self.leading_monomial(order)
        return Polynomial._raw(self.ring, {m: self._terms[m]})

    def monic(self, order: MonomialOrder):
        if not self._terms:
            return self
        lc = self.leading_coefficient(order)
        if lc == 1:
            return self
        return Polynomial._raw(self.ring, {e: c / lc for e, c in self._terms.items()})

    # -- arithmetic -------------------------------------------------------------

    def _check(self, other):
        if other.ring != self.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, CycloElement)):
            return self.ring.constant(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in o._terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c):
        c = self.ring.field(c)
        if not c:
            return self.ring.zero
        return Polynomial._raw(self.ring, {e: c * v for e, v in self._terms.items()})

    def mul_term(self, exp, c):
        """Multiply by the single term ``c * X^exp``."""
        if not c:
            return self.ring.zero
        return Polynomial._raw(self.ring, {add_exp(e, exp): c * v for e, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloElement)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = add_exp(e1, e2)
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return Polynomial._raw(self.ring, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, values):
        """Exact value at a coordinate vector."""
        if len(values) != self.ring.nvars:
            raise ValidationError("wrong number of coordinates")
        field = self.ring.field
        total = field.zero
        for e, c in self._terms.items():
            t = c
            for v, k in zip(values, e):
                if k:
                    t = t * field(v) ** k
            total = total + t
        return total

    # -- comparison -------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction, CycloElement)):
            return self._terms == self.ring.constant(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # -- printing ---------------------------------------------------------------

    def _mono_text(self, exp):
        parts = []
        for v, k in zip(self.ring.vars, exp):
            if k == 1:
                parts.append(v)
            elif k > 1:
                parts.append(f"{v}^{k}")
        return "*".join(parts)

    def to_string(self, order: MonomialOrder = GRLEX):
        if not self._terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms(order):
            mono = self._mono_text(exp)
            if isinstance(c, CycloElement):
                for k, a in enumerate(c.coeffs):
                    if a:
                        z = "" if k == 0 else ("zeta" if k == 1 else f"zeta^{k}")
                        parts.append((a, "*".join(s for s in (z, mono) if s)))
            else:
                parts.append((c, mono))
        return _join_signed(parts)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        text = self.to_string()
        if len(text) > 80:
            text = text[:77] + "..."
        return f"Polynomial({text!r} in {self.ring})"


def apply_ring_map(f: Polynomial, images) -> Polynomial:
    """Image of ``f`` under the ring homomorphism sending variable i to ``images[i]``."""
    images = list(images)
    if len(images) != f.ring.nvars:
        raise ValidationError(f"expected {f.ring.nvars} images, got {len(images)}")
    if not images:
        raise ValidationError("ring map from a ring without variables needs a target ring")
    target = images[0].ring
    for g in images[1:]:
        if g.ring != target:
            raise RingMismatchError("images live in different rings")
    field = target.field
    powers = [dict() for _ in images]
    total = target.zero
    for exp, c in f.items():
        term = target.constant(field(c))
        for i, k in enumerate(exp):
            if not k:
                continue
            cache = powers[i]
            if k not in cache:
                cache[k] = images[i] ** k
            term = term * cache[k]
        total = total + term
    return total


def embed(f: Polynomial, target: Ring, mapping=None) -> Polynomial:
    """Re-express ``f`` in ``target`` by sending each variable to the same-named
    (or ``mapping``-named) variable of ``target``."""
    mapping = mapping or {}
    idx = [target.index(mapping.get(v, v)) for v in f.ring.vars]
    conv = target.field
    out = {}
    n = target.nvars
    for exp, c in f.items():
        e = [0] * n
        for i, k in enumerate(exp):
            if k:
                e[idx[i]] += k
        out[tuple(e)] = conv(c)
    return Polynomial._raw(target, out)
