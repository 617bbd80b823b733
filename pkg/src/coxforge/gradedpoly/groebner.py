"""Buchberger's algorithm with Gebauer-Moeller pair management.

Monomials are single Python integers: the low ``12 * nvars`` bits hold the
exponents (11 value bits plus one guard bit per variable), the high bits hold
an integer sort key derived from the weight matrix of the monomial order.
Both parts are affine in the exponent vector, so multiplying monomials is
integer addition and comparing them is integer comparison.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence

from .poly import Poly
from .ring import RingSpec

FIELD_BITS = 12
MAX_EXPONENT = (1 << (FIELD_BITS - 1)) - 1
DIGIT_BITS = 24
_DIGIT_OFFSET = 1 << (DIGIT_BITS - 1)


@dataclass(frozen=True)
class MonomialOrder:
    """Order given by a nonsingular integer weight matrix, compared row by row."""

    rows: tuple[tuple[int, ...], ...]
    name: str = "custom"

    @classmethod
    def degrevlex(cls, nvars: int, weights: Sequence[int] | None = None) -> MonomialOrder:
        w = tuple(weights) if weights is not None else (1,) * nvars
        if len(w) != nvars or any(x <= 0 for x in w):
            raise ValueError("degrevlex needs one positive weight per variable")
        rows = [w]
        for j in range(nvars - 1, 0, -1):
            rows.append(tuple(-1 if i == j else 0 for i in range(nvars)))
        return cls(tuple(rows), "degrevlex")

    @classmethod
    def lex(cls, nvars: int) -> MonomialOrder:
        return cls(tuple(tuple(int(i == j) for i in range(nvars)) for j in range(nvars)), "lex")

    @classmethod
    def blocks(cls, nvars: int, blocks: Sequence[tuple[Sequence[int], Sequence[int]]]) -> MonomialOrder:
        """Block order; each block is (variable indices, positive weights), degrevlex inside."""
        rows = []
        seen: list[int] = []
        for idx, w in blocks:
            idx = list(idx)
            if len(idx) != len(w) or any(x <= 0 for x in w):
                raise ValueError("each block needs one positive weight per variable")
            row = [0] * nvars
            for i, x in zip(idx, w):
                row[i] = x
            rows.append(tuple(row))
            for j in reversed(idx[1:]):
                rows.append(tuple(-1 if i == j else 0 for i in range(nvars)))
            seen += idx
        if sorted(seen) != list(range(nvars)):
            raise ValueError("blocks must partition the variables")
        return cls(tuple(rows), "block")


@dataclass
class _Elem:
    lead: int
    low: int
    tail: list[tuple[int, object]]
    sel: int


class Encoder:
    """Translation between exponent vectors and packed monomial integers."""

    def __init__(self, nvars: int, order: MonomialOrder):
        if any(len(r) != nvars for r in order.rows):
            raise ValueError("order does not match the number of variables")
        self.nvars = nvars
        self.order = order
        nrows = len(order.rows)
        self.shift = FIELD_BITS * nvars
        self.low_mask = (1 << self.shift) - 1
        self.guard = sum(1 << (FIELD_BITS * j + FIELD_BITS - 1) for j in range(nvars))
        self.value_mask = self.low_mask ^ self.guard
        key0 = sum(_DIGIT_OFFSET << (DIGIT_BITS * (nrows - 1 - r)) for r in range(nrows))
        self.one = key0 << self.shift
        self.units = []
        for j in range(nvars):
            k = sum(row[j] << (DIGIT_BITS * (nrows - 1 - r)) for r, row in enumerate(order.rows))
            self.units.append((k << self.shift) + (1 << (FIELD_BITS * j)))

    def encode(self, exps: Sequence[int]) -> int:
        k = self.one
        for e, u in zip(exps, self.units):
            if e:
                if e > MAX_EXPONENT:
                    raise OverflowError("exponent too large for packed monomials")
                k += e * u
        return k

    def exps(self, k: int) -> tuple[int, ...]:
        low = k & self.low_mask
        m = (1 << (FIELD_BITS - 1)) - 1
        return tuple((low >> (FIELD_BITS * j)) & m for j in range(self.nvars))

    def divides(self, a_low: int, b_low: int) -> bool:
        g = self.guard
        return ((b_low | g) - a_low) & g == g

    def lcm(self, a: int, b: int) -> int:
        return self.encode([max(x, y) for x, y in zip(self.exps(a), self.exps(b))])


class GroebnerEngine:
    """Groebner bases of ideals in a :class:`RingSpec` polynomial ring.

    ``select_weights`` must be a positive grading; pairs are processed by
    increasing weighted degree of their lcm. With ``b_max`` set, pairs whose
    lcm has second degree above ``b_max`` are dropped; for bihomogeneous input
    the result then agrees with a full basis in all degrees ``b <= b_max``.
    """

    def __init__(self, ring: RingSpec, order: MonomialOrder | None = None, select_weights=None):
        self.ring = ring
        self.field = ring.field
        self.order = order or MonomialOrder.degrevlex(ring.nvars)
        self.enc = Encoder(ring.nvars, self.order)
        if select_weights is None:
            big = 1 + max((abs(a) for a, _ in ring.degrees), default=0)
            select_weights = [big * b + a for a, b in ring.degrees]
            if any(w <= 0 for w in select_weights):
                select_weights = [1] * ring.nvars
        self.select_weights = tuple(select_weights)
        self.b_weights = tuple(b for _, b in ring.degrees)

    # conversion
    def encode(self, poly: Poly) -> dict[int, object]:
        if poly.ring != self.ring:
            poly = poly.embed(self.ring)
        return {self.enc.encode(m): c for m, c in poly.terms.items()}

    def decode(self, terms) -> Poly:
        items = terms.items() if isinstance(terms, dict) else terms
        return Poly._raw(self.ring, {self.enc.exps(k): c for k, c in items})

    def _weighted(self, k: int, weights) -> int:
        return sum(e * w for e, w in zip(self.enc.exps(k), weights))

    # reduction
    def _find(self, low: int, active: list[_Elem]) -> _Elem | None:
        g = self.enc.guard
        x = low | g
        for el in active:
            if (x - el.low) & g == g:
                return el
        return None

    def _reduce(self, f: dict[int, object], active: list[_Elem]) -> dict[int, object]:
        """Full reduction of ``f`` (consumed) modulo monic ``active`` elements."""
        p = self.field.p
        low_mask = self.enc.low_mask
        heap = [-k for k in f]
        heapq.heapify(heap)
        rem: dict[int, object] = {}
        cache: dict[int, _Elem | None] = {}
        while heap:
            k = -heapq.heappop(heap)
            c = f.pop(k, None)
            if c is None:
                continue
            low = k & low_mask
            if low in cache:
                el = cache[low]
            else:
                el = cache[low] = self._find(low, active)
            if el is None:
                rem[k] = c
                continue
            shift = k - el.lead
            for kt, ct in el.tail:
                kn = kt + shift
                old = f.get(kn)
                if p is not None:
                    if old is None:
                        f[kn] = (-c * ct) % p
                        heapq.heappush(heap, -kn)
                    else:
                        v = (old - c * ct) % p
                        if v:
                            f[kn] = v
                        else:
                            del f[kn]
                else:
                    if old is None:
                        f[kn] = -c * ct
                        heapq.heappush(heap, -kn)
                    else:
                        v = old - c * ct
                        if v:
                            f[kn] = v
                        else:
                            del f[kn]
        return rem

    def _make(self, f: dict[int, object]) -> _Elem:
        fld = self.field
        lead = max(f)
        inv = fld.inv(f[lead])
        tail = sorted(((k, fld.norm(c * inv)) for k, c in f.items() if k != lead), reverse=True)
        return _Elem(lead, lead & self.enc.low_mask, tail, self._weighted(lead, self.select_weights))

    def _spoly(self, a: _Elem, b: _Elem, lcm: int) -> dict[int, object]:
        p = self.field.p
        f: dict[int, object] = {}
        sa = lcm - a.lead
        for k, c in a.tail:
            f[k + sa] = c
        sb = lcm - b.lead
        for k, c in b.tail:
            kn = k + sb
            v = f.get(kn, 0) - c
            if p is not None:
                v %= p
            if v:
                f[kn] = v
            else:
                f.pop(kn, None)
        return f

    # Buchberger
    def basis(self, polys: Iterable[Poly], b_max: int | None = None) -> GroebnerBasis:
        enc = self.enc
        elems: list[_Elem] = []
        active: list[int] = []
        pairs: dict[tuple[int, int], int] = {}
        heap: list[tuple[int, int, int, int]] = []

        def within(k: int) -> bool:
            return b_max is None or self._weighted(k, self.b_weights) <= b_max

        def coprime(a: int, b: int) -> bool:
            return all(x == 0 or y == 0 for x, y in zip(enc.exps(a), enc.exps(b)))

        def update(h: int) -> None:
            eh = elems[h]
            cand = [(g, enc.lcm(eh.lead, elems[g].lead)) for g in active]
            kept = []
            for idx, (g, lg) in enumerate(cand):
                if coprime(eh.lead, elems[g].lead):
                    kept.append((g, lg, True))
                    continue
                lglow = lg & enc.low_mask
                dominated = False
                for jdx, (g2, l2) in enumerate(cand):
                    if jdx == idx:
                        continue
                    l2low = l2 & enc.low_mask
                    if enc.divides(l2low, lglow) and (l2 != lg or jdx < idx):
                        dominated = True
                        break
                if not dominated:
                    kept.append((g, lg, False))
            for (i, j), lij in list(pairs.items()):
                lowij = lij & enc.low_mask
                if not enc.divides(eh.low, lowij):
                    continue
                if enc.lcm(elems[i].lead, eh.lead) != lij and enc.lcm(elems[j].lead, eh.lead) != lij:
                    del pairs[(i, j)]
            for g, lg, cop in kept:
                if cop or not within(lg):
                    continue
                pairs[(g, h)] = lg
                heapq.heappush(heap, (self._weighted(lg, self.select_weights), lg, g, h))
            active[:] = [g for g in active if not enc.divides(eh.low, elems[g].low)]
            active.append(h)

        def add(f: dict[int, object]) -> bool:
            el = self._make(f)
            elems.append(el)
            update(len(elems) - 1)
            return el.lead & enc.low_mask == 0

        inputs = []
        for poly in polys:
            f = self.encode(poly)
            if f and (b_max is None or min(self._weighted(k, self.b_weights) for k in f) <= b_max):
                inputs.append(f)
        inputs.sort(key=lambda f: self._weighted(max(f), self.select_weights))
        unit = False
        for f in inputs:
            r = self._reduce(f, [elems[g] for g in active])
            if r and add(r):
                unit = True
                break
        while heap and not unit:
            _, lg, i, j = heapq.heappop(heap)
            if pairs.pop((i, j), None) is None:
                continue
            s = self._spoly(elems[i], elems[j], lg)
            r = self._reduce(s, [elems[g] for g in active])
            if r and add(r):
                unit = True
        if unit:
            one = {enc.one: self.field(1)}
            return GroebnerBasis(self, [self._make(one)], b_max)
        return GroebnerBasis(self, self._interreduce([elems[g] for g in active]), b_max)

    def _interreduce(self, elems: list[_Elem]) -> list[_Elem]:
        elems = sorted(elems, key=lambda e: e.lead)
        out = []
        for idx, el in enumerate(elems):
            others = elems[:idx] + elems[idx + 1:]
            tail = self._reduce(dict(el.tail), others)
            out.append(_Elem(el.lead, el.low, sorted(tail.items(), reverse=True), el.sel))
        return out


class GroebnerBasis:
    """Reduced (possibly degree-truncated) Groebner basis."""

    def __init__(self, engine: GroebnerEngine, elems: list[_Elem], b_max: int | None):
        self.engine = engine
        self.ring = engine.ring
        self._elems = elems
        self.b_max = b_max

    def __len__(self):
        return len(self._elems)

    @property
    def polys(self) -> list[Poly]:
        one = self.engine.field(1)
        return [self.engine.decode([(e.lead, one)] + e.tail) for e in self._elems]

    @property
    def leading_monomials(self) -> list[tuple[int, ...]]:
        return [self.engine.enc.exps(e.lead) for e in self._elems]

    def is_unit(self) -> bool:
        return any(e.low == 0 for e in self._elems)

    def reduce(self, poly: Poly) -> Poly:
        if poly.ring != self.ring:
            poly = poly.embed(self.ring)
        deg = poly.bidegree
        if self.b_max is not None and (deg is None or deg[1] > self.b_max):
            if poly and (deg is None or deg[1] > self.b_max):
                raise ValueError("polynomial lies beyond the truncation degree")
        return self.engine.decode(self.engine._reduce(self.engine.encode(poly), self._elems))

    def contains(self, poly: Poly) -> bool:
        return self.reduce(poly).is_zero()


def groebner_basis(
    polys: Sequence[Poly],
    order: MonomialOrder | None = None,
    b_max: int | None = None,
) -> GroebnerBasis:
    if not polys:
        raise ValueError("need at least one generator to fix the ring")
    return GroebnerEngine(polys[0].ring, order).basis(polys, b_max)
