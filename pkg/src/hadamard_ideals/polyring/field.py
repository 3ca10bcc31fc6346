"""Exact coefficient fields: the rationals and cyclotomic extensions Q(zeta_m).

Rationals are plain :class:`fractions.Fraction` objects.  Elements of
``Q(zeta_m)`` are :class:`CycloElement` instances holding a residue modulo the
m-th cyclotomic polynomial.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from ..errors import ValidationError

DEFAULT_MAX_CYCLOTOMIC_ORDER = 12

_ZERO = Fraction(0)
_ONE = Fraction(1)


# -- dense univariate helpers over Q; coefficient lists are ascending -------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _upoly_mul(a, b):
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def _upoly_sub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else _ZERO) - (b[i] if i < len(b) else _ZERO) for i in range(n)]
    return _trim(out)


def _upoly_divmod(a, b):
    a = list(a)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    q = [_ZERO] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, bi in enumerate(b):
            a[i + shift] -= c * bi
        _trim(a)
    return _trim(q), a


def totient(m: int) -> int:
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple:
    """Coefficients (ascending) of the m-th cyclotomic polynomial.

    Computed as ``(t^m - 1)`` divided by every ``Phi_d`` for proper divisors d.
    """
    if m < 1:
        raise ValidationError(f"cyclotomic order must be positive, got {m}")
    num = [Fraction(-1)] + [_ZERO] * (m - 1) + [_ONE]
    for d in range(1, m):
        if m % d == 0:
            num, r = _upoly_divmod(num, list(cyclotomic_polynomial(d)))
            assert not r
    return tuple(num)


class RationalField:
    """The field Q; elements are :class:`fractions.Fraction`."""

    name = "Q"
    order = None

    def __call__(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (int, str)):
            return Fraction(value)
        if isinstance(value, CycloElement):
            raise ValidationError("cyclotomic element used in a rational-field ring")
        raise TypeError(f"cannot convert {value!r} to a rational")

    @property
    def zero(self):
        return _ZERO

    @property
    def one(self):
        return _ONE

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"

    def describe(self):
        return "Q"


QQ = RationalField()


class CyclotomicField:
    """The field Q(zeta_m) presented as Q[t] / Phi_m(t)."""

    def __init__(self, m: int, max_order: int | None = DEFAULT_MAX_CYCLOTOMIC_ORDER):
        if not isinstance(m, int) or m < 1:
            raise ValidationError(f"cyclotomic order must be a positive integer, got {m!r}")
        if max_order is not None and m > max_order:
            raise ValidationError(f"cyclotomic order {m} exceeds the cap {max_order}")
        self.order = m
        self.modulus = cyclotomic_polynomial(m)
        self.degree = len(self.modulus) - 1

    @property
    def name(self):
        return f"Q(zeta_{self.order})"

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.order == self.order

    def __hash__(self):
        return hash(("cyclotomic", self.order))

    def __repr__(self):
        return f"CyclotomicField({self.order})"

    def describe(self):
        return {"cyclotomic": self.order}

    def _reduce(self, coeffs):
        coeffs = _trim(list(coeffs))
        if len(coeffs) > self.degree:
            _, coeffs = _upoly_divmod(coeffs, list(self.modulus))
        return tuple(coeffs) + (_ZERO,) * (self.degree - len(coeffs))

    def element(self, coeffs) -> CycloElement:
        return CycloElement(self, self._reduce([Fraction(c) for c in coeffs]))

    def __call__(self, value) -> CycloElement:
        if isinstance(value, CycloElement):
            if value.field != self:
                raise ValidationError(f"element of {value.field.name} used in {self.name}")
            return value
        if isinstance(value, (int, Fraction, str)):
            return CycloElement(self, (Fraction(value),) + (_ZERO,) * (self.degree - 1))
        raise TypeError(f"cannot convert {value!r} to an element of {self.name}")

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    @property
    def zeta(self) -> CycloElement:
        return self.element([0, 1])

    def root_of_unity(self, k: int) -> CycloElement:
        """zeta_m ** k, for any integer k."""
        return self.zeta ** (k % self.order)


def make_field(desc, max_cyclotomic_order=DEFAULT_MAX_CYCLOTOMIC_ORDER):
    """Build a field from ``"Q"`` or ``{"cyclotomic": m}``."""
    if isinstance(desc, (RationalField, CyclotomicField)):
        return desc
    if desc in (None, "Q", "QQ"):
        return QQ
    if isinstance(desc, dict) and set(desc) == {"cyclotomic"}:
        return CyclotomicField(desc["cyclotomic"], max_cyclotomic_order)
    raise ValidationError(f"unknown field descriptor {desc!r}")


class CycloElement:
    """An element of Q(zeta_m): coefficients on 1, zeta, ..., zeta^(phi(m)-1)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CyclotomicField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, CycloElement):
            if other.field != self.field:
                raise ValidationError("mixing elements of different cyclotomic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloElement(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloElement(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloElement(self.field, tuple(a * other for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloElement(self.field, self.field._reduce(_upoly_mul(list(self.coeffs), list(o.coeffs))))

    __rmul__ = __mul__

    def inverse(self) -> CycloElement:
        """Inverse via the extended Euclidean algorithm against Phi_m."""
        a = _trim(list(self.coeffs))
        if not a:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        # invariant: r0 = s0 * a (mod Phi), r1 = s1 * a (mod Phi)
        r0, r1 = list(self.field.modulus), a
        s0, s1 = [], [_ONE]
        while r1:
            q, r = _upoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _upoly_sub(s0, _upoly_mul(q, s1))
        # r0 is a nonzero constant since Phi_m is irreducible
        assert len(r0) == 1
        inv = r0[0]
        return CycloElement(self.field, self.field._reduce([c / inv for c in s0]))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return CycloElement(self.field, tuple(a / other for a in self.coeffs))
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, CycloElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        if not any(self.coeffs[1:]):
            return hash(self.coeffs[0])
        return hash((self.field.order, self.coeffs))

    def is_rational(self):
        return not any(self.coeffs[1:])

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("zeta" if k == 1 else f"zeta^{k}")
            parts.append((c, mono))
        if not parts:
            return "0"
        return _join_signed(parts)

    def __repr__(self):
        return f"CycloElement({self.field.order}, {self})"


def format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _join_signed(parts):
    """Render [(rational coeff, monomial text)] as a signed sum."""
    out = []
    for i, (c, mono) in enumerate(parts):
        neg = c < 0
        a = -c if neg else c
        if mono:
            body = mono if a == 1 else f"{format_rational(a)}*{mono}"
        else:
            body = format_rational(a)
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def format_element(c) -> str:
    if isinstance(c, Fraction):
        return format_rational(c)
    return str(c)
