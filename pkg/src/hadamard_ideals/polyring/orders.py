"""Monomial orders on exponent vectors.

Each order exposes ``key(exp)``, a tuple that sorts ascending exactly as the
order does, and ``neg_key(exp)`` which sorts the opposite way (used by the
max-heaps inside the reduction loops).
"""
from __future__ import annotations

from ..errors import ValidationError

KINDS = ("lex", "grlex", "grevlex")

_ALIASES = {
    "lex": "lex",
    "grlex": "grlex",
    "deglex": "grlex",
    "graded-lex": "grlex",
    "grevlex": "grevlex",
    "degrevlex": "grevlex",
    "graded-reverse-lex": "grevlex",
}


def _key_fn(kind):
    if kind == "lex":
        return lambda e: e
    if kind == "grlex":
        return lambda e: (sum(e),) + e
    if kind == "grevlex":
        return lambda e: (sum(e),) + tuple(-x for x in reversed(e))
    raise ValidationError(f"unknown monomial order {kind!r}")


def _neg_key_fn(kind):
    if kind == "lex":
        return lambda e: tuple(-x for x in e)
    if kind == "grlex":
        return lambda e: (-sum(e),) + tuple(-x for x in e)
    if kind == "grevlex":
        return lambda e: (-sum(e),) + e[::-1]
    raise ValidationError(f"unknown monomial order {kind!r}")


class MonomialOrder:
    """A monomial order: ``lex``, ``grlex``, ``grevlex`` or a block order.

    A block order ``block(k, rest, head)`` compares the first ``k`` exponents
    with ``head`` and breaks ties on the remaining ones with ``rest``; any
    monomial involving the first block is larger than every monomial free of
    it, which is what elimination needs.

    ``weights`` (non-negative) puts a weighted degree comparison in front of
    the order.  On polynomials homogeneous for those weights the leading term
    is unchanged, so a block order refined this way still eliminates on
    weighted-homogeneous ideals while behaving like a graded order inside
    Buchberger's algorithm.
    """

    __slots__ = ("kind", "block_size", "head", "rest", "weights", "key", "neg_key")

    def __init__(self, kind="grevlex", block_size=None, rest="grevlex", head="lex", weights=None):
        kind = _ALIASES.get(kind, kind)
        if kind == "block":
            if not isinstance(block_size, int) or block_size < 0:
                raise ValidationError(f"block size must be a non-negative integer, got {block_size!r}")
            head = _ALIASES.get(head, head)
            rest = _ALIASES.get(rest, rest)
            hk, rk = _key_fn(head), _key_fn(rest)
            nhk, nrk = _neg_key_fn(head), _neg_key_fn(rest)
            k = block_size
            key = lambda e: hk(e[:k]) + rk(e[k:])
            neg_key = lambda e: nhk(e[:k]) + nrk(e[k:])
        else:
            if kind not in KINDS:
                raise ValidationError(f"unknown monomial order {kind!r}")
            key, neg_key = _key_fn(kind), _neg_key_fn(kind)
            block_size = None
            head = rest = None
        if weights is not None:
            weights = tuple(int(w) for w in weights)
            if any(w < 0 for w in weights):
                raise ValidationError("weights must be non-negative")
            inner, inner_neg = key, neg_key
            key = lambda e: (sum(w * x for w, x in zip(weights, e)),) + inner(e)
            neg_key = lambda e: (-sum(w * x for w, x in zip(weights, e)),) + inner_neg(e)
        self.kind = kind
        self.block_size = block_size
        self.weights = weights
        self.head = head
        self.rest = rest
        self.key = key
        self.neg_key = neg_key

    @classmethod
    def lex(cls):
        return cls("lex")

    @classmethod
    def grlex(cls):
        return cls("grlex")

    @classmethod
    def grevlex(cls):
        return cls("grevlex")

    @classmethod
    def block(cls, block_size, rest="grevlex", head="lex", weights=None):
        return cls("block", block_size, rest=rest, head=head, weights=weights)

    @classmethod
    def parse(cls, name):
        if isinstance(name, MonomialOrder):
            return name
        return cls(name)

    def _ident(self):
        return (self.kind, self.block_size, self.head, self.rest, self.weights)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        w = "" if self.weights is None else f", weights={list(self.weights)}"
        if self.kind == "block":
            return f"MonomialOrder.block({self.block_size}, rest={self.rest!r}, head={self.head!r}{w})"
        return f"MonomialOrder({self.kind!r}{w})"

    def __str__(self):
        base = f"block({self.block_size},{self.head},{self.rest})" if self.kind == "block" else self.kind
        return base if self.weights is None else f"weighted{list(self.weights)}:{base}"


LEX = MonomialOrder("lex")
GRLEX = MonomialOrder("grlex")
GREVLEX = MonomialOrder("grevlex")


def compare_monomials(order: MonomialOrder, a, b) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise ValidationError(f"exponent vectors of different lengths: {len(a)} vs {len(b)}")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)
