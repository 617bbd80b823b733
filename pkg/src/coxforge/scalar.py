"""Exact coefficient fields: prime fields F_p and the rationals.

Engines work on raw values (``int`` in ``[0, p)`` or ``Fraction``) through a
:class:`Field`; :class:`Scalar` is the checked value type for callers that
want mixed-field errors instead of silent garbage.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

DEFAULT_PRIME = 32003
RATIONAL_RANGE = 50


class FieldMismatchError(TypeError):
    """Operands belong to different fields."""


class FieldDivisionError(ZeroDivisionError):
    """Division by the zero element of a field."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """A prime field (``p`` set) or the rationals (``p is None``)."""

    p: int | None = DEFAULT_PRIME

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def prime(cls, p: int = DEFAULT_PRIME) -> Field:
        return cls(p)

    @classmethod
    def rational(cls) -> Field:
        return cls(None)

    @classmethod
    def parse(cls, text: str) -> Field:
        """Parse ``fp:P``, ``fp`` or ``qq``."""
        t = text.strip().lower()
        if t in ("qq", "q", "rational"):
            return cls.rational()
        if t == "fp":
            return cls.prime()
        if t.startswith("fp:"):
            try:
                return cls.prime(int(t[3:]))
            except ValueError as exc:
                raise ValueError(f"bad field spec {text!r}") from exc
        raise ValueError(f"bad field spec {text!r}")

    @property
    def is_prime(self) -> bool:
        return self.p is not None

    def __str__(self) -> str:
        return "qq" if self.p is None else f"fp:{self.p}"

    # raw-value arithmetic; values are assumed canonical
    def __call__(self, x) -> int | Fraction:
        """Canonical representative of an integer or fraction."""
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise FieldDivisionError(f"denominator of {x} vanishes mod {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def norm(self, x):
        return x % self.p if self.p is not None else x

    def inv(self, x):
        if x == 0:
            raise FieldDivisionError("inverse of zero")
        if self.p is None:
            return 1 / Fraction(x)
        return pow(x, -1, self.p)

    def neg(self, x):
        return (-x) % self.p if self.p is not None else -x

    def symmetric(self, x) -> int | Fraction:
        """Lift to an integer in (-p/2, p/2]; rationals are returned as is."""
        if self.p is None:
            return x
        return x - self.p if x > self.p // 2 else x

    def random(self, rng: random.Random):
        """Uniform on F_p; integers in [-RATIONAL_RANGE, RATIONAL_RANGE] over QQ."""
        if self.p is None:
            return Fraction(rng.randint(-RATIONAL_RANGE, RATIONAL_RANGE))
        return rng.randrange(self.p)

    def random_nonzero(self, rng: random.Random):
        while True:
            x = self.random(rng)
            if x != 0:
                return x


def random_scalar(rng: random.Random, field: Field) -> Scalar:
    return Scalar(field.random(rng), field)


@dataclass(frozen=True)
class Scalar:
    value: int | Fraction
    field: Field

    def __post_init__(self):
        object.__setattr__(self, "value", self.field(self.value))

    def _other(self, other) -> int | Fraction:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return Scalar(self.field.norm(self.value + o), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return Scalar(self.field.norm(self.value - o), self.field)

    def __rsub__(self, other):
        o = self._other(other)
        return Scalar(self.field.norm(o - self.value), self.field)

    def __mul__(self, other):
        o = self._other(other)
        return Scalar(self.field.norm(self.value * o), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return Scalar(self.field.norm(self.value * self.field.inv(o)), self.field)

    def __rtruediv__(self, other):
        o = self._other(other)
        return Scalar(self.field.norm(o * self.field.inv(self.value)), self.field)

    def __neg__(self):
        return Scalar(self.field.neg(self.value), self.field)

    def inverse(self) -> Scalar:
        return Scalar(self.field.inv(self.value), self.field)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field))

    def __repr__(self):
        return f"Scalar({self.value}, {self.field})"
