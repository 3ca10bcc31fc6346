"""Resource limits for the expensive computations.

Limits are read from a context variable so that callers (the CLI, tests) can
tighten or relax them for a block of code without threading a parameter
through every function::

    with limits(max_spairs=1000):
        groebner_basis(I, order)
"""
from __future__ import annotations

import contextvars
from contextlib import contextmanager
from dataclasses import dataclass, replace

from .errors import ValidationError


@dataclass(frozen=True)
class Limits:
    max_spairs: int = 50_000
    max_terms: int = 1_000_000
    max_hilbert_degree: int = 50
    hilbert_window: int = 25
    max_walks: int = 200_000
    max_cyclotomic_order: int = 12
    max_saturation_steps: int = 200

    def __post_init__(self):
        for name, value in self.__dict__.items():
            if not isinstance(value, int) or value <= 0:
                raise ValidationError(f"limit {name} must be a positive integer, got {value!r}")


_current = contextvars.ContextVar("hadamard_ideals_limits", default=Limits())


def current_limits() -> Limits:
    return _current.get()


@contextmanager
def limits(**overrides):
    token = _current.set(replace(_current.get(), **overrides))
    try:
        yield _current.get()
    finally:
        _current.reset(token)
