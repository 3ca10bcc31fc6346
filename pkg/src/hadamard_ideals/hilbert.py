"""Hilbert functions and polynomials of R/I, read off a leading-term ideal.

``HF(d)`` counts the standard monomials of degree ``d``.  It is computed from
the numerator of the Hilbert series of the monomial ideal and, for small
degrees, recounted by brute-force enumeration as an internal check.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import comb, factorial
from typing import Optional

from .errors import AlgebraError, ResourceCapExceeded, ValidationError
from .groebner import Ideal, groebner_basis
from .limits import current_limits
from .polyring import GREVLEX, MonomialOrder, Polynomial, Ring

# degrees up to this are recounted by enumeration
CROSS_CHECK_DEGREE = 6

HILBERT_RING = Ring(["i"])


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _minimalize(exps):
    exps = sorted(set(exps), key=lambda e: (sum(e), e))
    out = []
    for e in exps:
        if not any(_divides(m, e) for m in out):
            out.append(e)
    return out


class MonomialIdeal:
    """A monomial ideal given by its minimal generators."""

    __slots__ = ("ring", "generators")

    def __init__(self, ring: Ring, generators=()):
        gens = [tuple(g) for g in generators]
        for g in gens:
            if len(g) != ring.nvars or min(g, default=0) < 0:
                raise ValidationError(f"bad exponent vector {g}")
        self.ring = ring
        self.generators = tuple(_minimalize(gens))

    def contains(self, exp):
        return any(_divides(g, exp) for g in self.generators)

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.ring == other.ring and \
            set(self.generators) == set(other.generators)

    def __hash__(self):
        return hash((self.ring, frozenset(self.generators)))

    def strings(self):
        return sorted(str(self.ring.monomial(g)) for g in self.generators)

    def __repr__(self):
        return "MonomialIdeal<" + ", ".join(self.strings()) + ">"


def leading_term_ideal(ideal: Ideal, order: MonomialOrder = GREVLEX) -> MonomialIdeal:
    gb = groebner_basis(ideal, order)
    return MonomialIdeal(ideal.ring, gb.leading_monomials())


# -- Hilbert series numerator ---------------------------------------------------------

def _pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _psub(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]


@lru_cache(maxsize=1024)
def _series_numerator(gens):
    return tuple(_numerator(gens))


def _numerator(gens):
    """Numerator N(t) with HS(R/M) = N(t) / (1 - t)^(n+1)."""
    gens = _minimalize(gens)
    if not gens:
        return [1]
    if not any(gens[0]):
        return [0]
    if all(not any(a and b for a, b in zip(g, h)) for k, g in enumerate(gens) for h in gens[k + 1:]):
        out = [1]
        for g in gens:
            d = sum(g)
            out = _pmul(out, [1] + [0] * (d - 1) + [-1])
        return out
    *rest, m = gens
    quotient = [tuple(max(x - y, 0) for x, y in zip(g, m)) for g in rest]
    shifted = [0] * sum(m) + _numerator(quotient)
    return _psub(_numerator(rest), shifted)


def _count_standard(M: MonomialIdeal, d):
    n = M.ring.nvars

    def rec(i, left, prefix):
        if i == n - 1:
            e = prefix + (left,)
            return 0 if M.contains(e) else 1
        return sum(rec(i + 1, left - k, prefix + (k,)) for k in range(left + 1))

    if n == 0:
        return 1 if d == 0 and not M.generators else 0
    return rec(0, d, ())


def hilbert_function(M: MonomialIdeal, d: int) -> int:
    """Number of degree-d monomials outside M."""
    if not isinstance(d, int) or d < 0:
        raise ValidationError(f"degree must be a non-negative integer, got {d!r}")
    cap = current_limits().max_hilbert_degree
    if d > cap:
        raise ResourceCapExceeded(f"degree {d} exceeds the Hilbert degree cap {cap}")
    n = M.ring.nvars
    num = _series_numerator(M.generators)
    if n == 0:
        value = num[d] if d < len(num) else 0
    else:
        value = sum(c * comb(d - j + n - 1, n - 1) for j, c in enumerate(num) if j <= d)
    if d <= CROSS_CHECK_DEGREE:
        counted = _count_standard(M, d)
        if counted != value:
            raise AlgebraError(f"Hilbert function mismatch at degree {d}: {value} vs {counted}")
    return value


def hilbert_values(ideal: Ideal, upto: int, order: MonomialOrder = GREVLEX):
    M = leading_term_ideal(ideal, order)
    return [hilbert_function(M, d) for d in range(upto + 1)]


# -- Hilbert polynomial ----------------------------------------------------------------

@dataclass(frozen=True)
class HilbertData:
    values: tuple
    polynomial: Optional[Polynomial]
    stabilization: Optional[int]

    def polynomial_string(self):
        return None if self.polynomial is None else str(self.polynomial)


def _differences(seq, r):
    for _ in range(r):
        seq = [b - a for a, b in zip(seq, seq[1:])]
    return seq


def _interpolate(start, ys):
    """Polynomial in i through (start + k, ys[k]) (Newton forward differences)."""
    i = HILBERT_RING.gen(0)
    out = HILBERT_RING.zero
    basis = HILBERT_RING.one
    diffs = list(ys)
    for k in range(len(ys)):
        out = out + basis.scale(Fraction(diffs[0], factorial(k)))
        basis = basis * (i - (start + k))
        diffs = _differences(diffs, 1)
    return out


def _fit(values, nvars, extra=3):
    """Least stabilization degree and the polynomial valid from there on."""
    for s in range(len(values)):
        tail = values[s:]
        for r in range(nvars + 1):
            if len(tail) < r + extra:
                break
            if any(_differences(tail, r)):
                continue
            poly = _interpolate(s, tail[:r]) if r else HILBERT_RING.zero
            if all(poly.evaluate([s + k]) == v for k, v in enumerate(tail)):
                return s, poly
            break
    return None


def hilbert_polynomial(ideal: Ideal, order: MonomialOrder = GREVLEX) -> HilbertData:
    """HF(0..D), least stabilization degree and the Hilbert polynomial.

    The window D starts at ``hilbert_window`` and grows to
    ``max_hilbert_degree``; the fitted polynomial is confirmed on at least
    three degrees beyond the ones that determine it.
    """
    if not ideal.is_homogeneous():
        raise ValidationError("the Hilbert polynomial needs a homogeneous ideal")
    lim = current_limits()
    M = leading_term_ideal(ideal, order)
    nvars = ideal.ring.nvars
    values = []
    windows = [min(lim.hilbert_window, lim.max_hilbert_degree), lim.max_hilbert_degree]
    for D in windows:
        values.extend(hilbert_function(M, d) for d in range(len(values), D + 1))
        fit = _fit(values, nvars)
        if fit is not None:
            return HilbertData(tuple(values), fit[1], fit[0])
    return HilbertData(tuple(values), None, None)


@dataclass(frozen=True)
class DegreeDimension:
    degree: int
    dimension: int


def degree_and_dimension(ideal: Ideal) -> DegreeDimension:
    """Projective dimension and degree; the empty variety has dimension -1."""
    data = hilbert_polynomial(ideal)
    if data.polynomial is None:
        raise AlgebraError("the Hilbert function did not stabilize within the degree cap")
    poly = data.polynomial
    if poly.is_zero():
        return DegreeDimension(0, -1)
    dim = poly.total_degree()
    lead = poly.coefficient((dim,)) * factorial(dim)
    if lead.denominator != 1 or lead <= 0:
        raise AlgebraError(f"non-integral degree {lead}")
    return DegreeDimension(int(lead), dim)
