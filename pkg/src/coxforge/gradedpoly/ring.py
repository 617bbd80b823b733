"""Bigraded polynomial rings k[x0, x1, y0..yn, aux...] and their monomial bases."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

from ..scalar import Field

Bidegree = tuple[int, int]
Monomial = tuple[int, ...]


@dataclass(frozen=True)
class RingSpec:
    """Generators in the fixed order x0, x1 (if present), y0..yn, then ``aux``.

    ``x`` generators have degree (1, 0), ``y`` generators (0, 1); auxiliary
    generators carry arbitrary bidegrees with positive second coordinate so
    every bidegree piece is finite.
    """

    n: int
    field: Field = field(default_factory=Field)
    aux: tuple[tuple[str, Bidegree], ...] = ()
    has_x: bool = True

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        aux = tuple((str(name), (int(d[0]), int(d[1]))) for name, d in self.aux)
        object.__setattr__(self, "aux", aux)
        for name, (_, b) in aux:
            if b <= 0:
                raise ValueError(f"auxiliary generator {name} needs positive second degree")
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate generator names")

    @cached_property
    def names(self) -> tuple[str, ...]:
        xs = ("x0", "x1") if self.has_x else ()
        return xs + tuple(f"y{j}" for j in range(self.n + 1)) + tuple(a for a, _ in self.aux)

    @cached_property
    def degrees(self) -> tuple[Bidegree, ...]:
        xs = ((1, 0), (1, 0)) if self.has_x else ()
        return xs + ((0, 1),) * (self.n + 1) + tuple(d for _, d in self.aux)

    @cached_property
    def index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def x_slice(self) -> slice:
        return slice(0, 2 if self.has_x else 0)

    @property
    def y_slice(self) -> slice:
        s = 2 if self.has_x else 0
        return slice(s, s + self.n + 1)

    @property
    def aux_slice(self) -> slice:
        s = (2 if self.has_x else 0) + self.n + 1
        return slice(s, s + len(self.aux))

    def with_aux(self, aux, has_x: bool = True) -> RingSpec:
        return RingSpec(self.n, self.field, tuple(aux), has_x)

    def y_ring(self) -> RingSpec:
        return RingSpec(self.n, self.field, (), has_x=False)

    def degree(self, mono: Monomial) -> Bidegree:
        a = b = 0
        for e, (da, db) in zip(mono, self.degrees):
            if e:
                a += e * da
                b += e * db
        return a, b

    def one(self) -> Monomial:
        return (0,) * self.nvars

    def var(self, name: str) -> Monomial:
        m = [0] * self.nvars
        m[self.index[name]] = 1
        return tuple(m)

    def monomial_str(self, mono: Monomial) -> str:
        parts = []
        for name, e in zip(self.names, mono):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def count_y_monomials(n: int, t: int) -> int:
    """dim of degree-t forms in n+1 variables."""
    return math.comb(t + n, n) if t >= 0 else 0


def y_monomials(n: int, t: int) -> list[Monomial]:
    """Degree-t exponent vectors in n+1 variables, lexicographically decreasing."""
    if t < 0:
        return []
    out: list[Monomial] = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(prefix + (left,))
            return
        for e in range(left, -1, -1):
            rec(prefix + (e,), left - e, slots - 1)

    rec((), t, n + 1)
    return out


def _aux_exponents(aux: tuple[tuple[str, Bidegree], ...], b: int):
    """Exponent vectors on the auxiliary generators with second degree <= b."""
    out = []

    def rec(i, prefix, a_acc, b_left):
        if i == len(aux):
            out.append((prefix, a_acc, b_left))
            return
        da, db = aux[i][1]
        e = 0
        while e * db <= b_left:
            rec(i + 1, prefix + (e,), a_acc + e * da, b_left - e * db)
            e += 1

    rec(0, (), 0, b)
    return out


def monomial_basis(ring: RingSpec, deg: Bidegree) -> list[Monomial]:
    """All monomials of ``ring`` of bidegree ``deg``.

    Sorted by decreasing exponent tuple (lexicographic in the generator
    order); empty when the degree is not attained.
    """
    a, b = deg
    if b < 0:
        return []
    out: list[Monomial] = []
    for auxe, a_acc, t in _aux_exponents(ring.aux, b):
        alpha = a - a_acc
        if ring.has_x:
            if alpha < 0:
                continue
            xparts = [(alpha - i, i) for i in range(alpha + 1)]
        else:
            if alpha != 0:
                continue
            xparts = [()]
        ys = y_monomials(ring.n, t)
        for xp in xparts:
            for ym in ys:
                out.append(xp + ym + auxe)
    out.sort(reverse=True)
    return out


def count_monomials(ring: RingSpec, deg: Bidegree) -> int:
    a, b = deg
    if b < 0:
        return 0
    total = 0
    for _, a_acc, t in _aux_exponents(ring.aux, b):
        alpha = a - a_acc
        if ring.has_x:
            if alpha >= 0:
                total += (alpha + 1) * count_y_monomials(ring.n, t)
        elif alpha == 0:
            total += count_y_monomials(ring.n, t)
    return total
