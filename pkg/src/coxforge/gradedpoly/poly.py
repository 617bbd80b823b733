"""Sparse polynomials over a :class:`RingSpec`."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .ring import Bidegree, Monomial, RingSpec


class Poly:
    """Finite mapping monomial -> nonzero coefficient, treated as immutable."""

    __slots__ = ("ring", "terms", "_deg")

    def __init__(self, ring: RingSpec, terms: Mapping[Monomial, object] | None = None):
        self.ring = ring
        f = ring.field
        clean: dict[Monomial, object] = {}
        if terms:
            for m, c in terms.items():
                c = f(c)
                if c != 0:
                    if len(m) != ring.nvars:
                        raise ValueError(f"monomial {m} has wrong length for {ring.names}")
                    clean[m] = c
        self.terms = clean
        self._deg = False

    @classmethod
    def _raw(cls, ring: RingSpec, terms: dict) -> Poly:
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._deg = False
        return p

    @classmethod
    def zero(cls, ring: RingSpec) -> Poly:
        return cls._raw(ring, {})

    @classmethod
    def const(cls, ring: RingSpec, c=1) -> Poly:
        return cls(ring, {ring.one(): c})

    @classmethod
    def gen(cls, ring: RingSpec, name: str) -> Poly:
        return cls._raw(ring, {ring.var(name): ring.field(1)})

    @classmethod
    def monomial(cls, ring: RingSpec, mono: Monomial, c=1) -> Poly:
        return cls(ring, {tuple(mono): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def bidegree(self) -> Bidegree | None:
        """Common bidegree of all terms, or None if zero or inhomogeneous."""
        if self._deg is False:
            degs = {self.ring.degree(m) for m in self.terms}
            self._deg = degs.pop() if len(degs) == 1 else None
        return self._deg

    def is_homogeneous(self) -> bool:
        return not self.terms or self.bidegree is not None

    def _check(self, other: Poly):
        if other.ring != self.ring:
            raise ValueError("polynomials live in different rings")

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        norm = self.ring.field.norm
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = norm(out.get(m, 0) + c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Poly._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.field.neg
        return Poly._raw(self.ring, {m: neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        norm = self.ring.field.norm
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        out = {m: v for m, v in ((m, norm(v)) for m, v in out.items()) if v}
        return Poly._raw(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.const(self.ring, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> Poly:
        f = self.ring.field
        c = f(c)
        if c == 0:
            return Poly.zero(self.ring)
        return Poly._raw(self.ring, {m: f.norm(v * c) for m, v in self.terms.items()})

    def mul_monomial(self, mono: Monomial, c=1) -> Poly:
        f = self.ring.field
        c = f(c)
        if c == 0:
            return Poly.zero(self.ring)
        return Poly._raw(
            self.ring,
            {tuple(a + b for a, b in zip(m, mono)): f.norm(v * c) for m, v in self.terms.items()},
        )

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.ring, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def embed(self, ring: RingSpec) -> Poly:
        """Move into ``ring`` by matching generator names."""
        idx = [ring.index[name] for name in self.ring.names]
        out = {}
        for m, c in self.terms.items():
            t = [0] * ring.nvars
            for i, e in zip(idx, m):
                t[i] = e
            out[tuple(t)] = c
        return Poly._raw(ring, out)

    def coefficient(self, mono: Monomial):
        return self.terms.get(tuple(mono), 0)

    def vector(self, index: Mapping[Monomial, int], size: int) -> list:
        """Dense coefficient vector against a monomial basis index."""
        v = [0] * size
        for m, c in self.terms.items():
            v[index[m]] = c
        return v

    def variables(self) -> set[str]:
        used = set()
        for m in self.terms:
            used.update(name for name, e in zip(self.ring.names, m) if e)
        return used

    def __str__(self):
        if not self.terms:
            return "0"
        f = self.ring.field
        pieces = []
        for m in sorted(self.terms, reverse=True):
            c = f.symmetric(self.terms[m])
            neg = c < 0
            c = -c if neg else c
            mono = self.ring.monomial_str(m)
            if mono == "1":
                body = str(c)
            elif c == 1:
                body = mono
            else:
                body = f"{c}*{mono}"
            pieces.append(("-" if neg else "+", body))
        first_sign, first = pieces[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"Poly({self})"


def linear_combination(ring: RingSpec, pairs: Iterable[tuple[object, Poly]]) -> Poly:
    f = ring.field
    out: dict = {}
    for c, p in pairs:
        c = f(c)
        if c == 0:
            continue
        for m, v in p.terms.items():
            out[m] = out.get(m, 0) + v * c
    return Poly._raw(ring, {m: v for m, v in ((m, f.norm(v)) for m, v in out.items()) if v})
