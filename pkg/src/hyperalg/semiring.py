"""Scalar value domain and the eight built-in semirings.

A semiring is a bundle (domain, ⊕, ⊗, 0, 1) where ⊕ is a commutative
monoid with identity 0, ⊗ is a commutative monoid with identity 1, ⊗
distributes over ⊕, and 0 annihilates under ⊗.  The annihilator law is
what lets sparse arrays drop 0 entries entirely; ``mult`` therefore
short-circuits on 0 so no arithmetic (e.g. ``inf * 0``) can produce NaN.

Values are extended reals (int/float, never NaN) or finite string sets.
The power-set semiring's 1 would be the infinite set of all strings, so
it is represented by the symbolic ``UNIVERSE`` sentinel: absorbing under
union, identity under intersection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Union

from .errors import DomainError, SemiringNameError

INF = float("inf")


class _UniverseType:
    """Symbolic top element of the set semiring (the set of all strings)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNIVERSE"

    def __reduce__(self):
        return (_UniverseType, ())


UNIVERSE = _UniverseType()

Value = Union[int, float, str, frozenset, _UniverseType]


def _is_number(v) -> bool:
    return isinstance(v, (int, float)) and not (isinstance(v, float) and math.isnan(v))


def _is_finite(v) -> bool:
    return isinstance(v, int) or math.isfinite(v)


def _is_string_set(v) -> bool:
    return isinstance(v, frozenset) and all(isinstance(e, str) for e in v)


def set_union(a, b):
    if a is UNIVERSE or b is UNIVERSE:
        return UNIVERSE
    return a | b


def set_intersect(a, b):
    if a is UNIVERSE:
        return b
    if b is UNIVERSE:
        return a
    return a & b


@dataclass(frozen=True)
class SemiringSpec:
    """Immutable (domain, ⊕, ⊗, 0, 1) bundle; safe to share across threads."""

    name: str
    domain: str  # 'number' or 'set'
    zero: Value
    one: Value
    _add: Callable[[Value, Value], Value] = field(repr=False)
    _mult: Callable[[Value, Value], Value] = field(repr=False)
    _contains: Callable[[Value], bool] = field(repr=False)

    def contains(self, v: Value) -> bool:
        if isinstance(v, set):
            v = frozenset(v)
        return self._contains(v)

    def check(self, v: Value) -> Value:
        """Return v (sets canonicalized to frozenset) or raise DomainError."""
        if isinstance(v, set):
            v = frozenset(v)
        if not self._contains(v):
            raise DomainError(f"{v!r} is not in the domain of semiring {self.name}")
        return v

    def add(self, a: Value, b: Value) -> Value:
        return self._add(self.check(a), self.check(b))

    def mult(self, a: Value, b: Value) -> Value:
        a = self.check(a)
        b = self.check(b)
        # 0 annihilates by definition; short-circuit avoids inf*0 -> NaN.
        if a == self.zero or b == self.zero:
            return self.zero
        return self._mult(a, b)

    def is_zero(self, v: Value) -> bool:
        return self.check(v) == self.zero


def _number_domain(allow_neg=True, neg_inf=False, pos_inf=False):
    def contains(v):
        if not _is_number(v):
            return False
        if _is_finite(v):
            return allow_neg or v >= 0
        return (v > 0 and pos_inf) or (v < 0 and neg_inf)

    return contains


def _set_domain(v):
    return v is UNIVERSE or _is_string_set(v)


# The eight built-in semirings: standard arithmetic, the tropical family,
# and the power-set semiring used by relational tables.
_REGISTRY: dict[str, SemiringSpec] = {}


def _register(name, domain, zero, one, add, mult, contains):
    _REGISTRY[name] = SemiringSpec(name, domain, zero, one, add, mult, contains)


_register("plus.times", "number", 0, 1,
          lambda a, b: a + b, lambda a, b: a * b,
          _number_domain())
_register("max.plus", "number", -INF, 0,
          max, lambda a, b: a + b,
          _number_domain(neg_inf=True))
_register("min.plus", "number", INF, 0,
          min, lambda a, b: a + b,
          _number_domain(pos_inf=True))
_register("max.times", "number", 0, 1,
          max, lambda a, b: a * b,
          _number_domain(allow_neg=False))
_register("min.times", "number", INF, 1,
          min, lambda a, b: a * b,
          _number_domain(allow_neg=False, pos_inf=True))
_register("union.intersect", "set", frozenset(), UNIVERSE,
          set_union, set_intersect,
          _set_domain)
_register("max.min", "number", -INF, INF,
          max, min,
          _number_domain(neg_inf=True, pos_inf=True))
_register("min.max", "number", INF, -INF,
          min, max,
          _number_domain(neg_inf=True, pos_inf=True))

SEMIRING_NAMES = tuple(_REGISTRY)


def make_semiring(name: str) -> SemiringSpec:
    """Look up a built-in semiring by its canonical name (e.g. 'max.plus')."""
    try:
        return _REGISTRY[name]
    except KeyError:
        raise SemiringNameError(
            f"unknown semiring {name!r}; choose from {', '.join(SEMIRING_NAMES)}"
        ) from None


def add(s: SemiringSpec, a: Value, b: Value) -> Value:
    return s.add(a, b)


def mult(s: SemiringSpec, a: Value, b: Value) -> Value:
    return s.mult(a, b)


def is_zero(s: SemiringSpec, v: Value) -> bool:
    return s.is_zero(v)
