"""Hypersurfaces r = sum_i g_i x0^(d-i) x1^i of bidegree (d, e) in P^1 x P^n."""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from dataclasses import field as dc_field

from ..gradedpoly import Poly, PolyParseError, RingSpec, parse_poly, y_monomials
from ..scalar import Field


class InvalidInstanceError(ValueError):
    """The forms do not define an admissible instance."""


class InstanceParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")


@dataclass(frozen=True)
class IndexSequence:
    indices: tuple[int, ...]

    @property
    def l(self) -> int:
        return len(self.indices) - 1

    def gaps(self) -> tuple[int, ...]:
        """Differences i_k - i_(k-1) for k = 1..l."""
        return tuple(b - a for a, b in zip(self.indices, self.indices[1:]))

    def __iter__(self):
        return iter(self.indices)

    def __len__(self):
        return len(self.indices)

    def __str__(self):
        return "{" + ",".join(map(str, self.indices)) + "}"


@dataclass(frozen=True)
class HypersurfaceInstance:
    n: int
    d: int
    e: int
    g: tuple[Poly, ...]
    field: Field = dc_field(default_factory=Field)
    assumed_smooth: bool = True
    seed: int | None = None
    name: str = "instance"
    _cache: dict = dc_field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if self.n < 3:
            raise InvalidInstanceError("n must be at least 3")
        if self.d < 1 or self.e < 1:
            raise InvalidInstanceError("d and e must be positive")
        g = tuple(self.g)
        object.__setattr__(self, "g", g)
        if len(g) != self.d + 1:
            raise InvalidInstanceError(f"expected {self.d + 1} forms g0..g{self.d}, got {len(g)}")
        ring = self.y_ring
        for i, gi in enumerate(g):
            if gi.ring != ring:
                raise InvalidInstanceError(f"g{i} does not live in k[y0..y{self.n}] over {self.field}")
            if gi and gi.bidegree != (0, self.e):
                raise InvalidInstanceError(f"g{i} is not homogeneous of degree {self.e}")
        if not g[0] or not g[-1]:
            raise InvalidInstanceError("g0 and gd must be nonzero")

    @property
    def y_ring(self) -> RingSpec:
        return RingSpec(self.n, self.field, (), has_x=False)

    @property
    def s_ring(self) -> RingSpec:
        return RingSpec(self.n, self.field)

    def equation(self) -> Poly:
        """r as a polynomial on P^1 x P^n."""
        s = self.s_ring
        x0, x1 = Poly.gen(s, "x0"), Poly.gen(s, "x1")
        r = Poly.zero(s)
        for i, gi in enumerate(self.g):
            r = r + gi.embed(s) * x0 ** (self.d - i) * x1 ** i
        return r

    def with_forms(self, g, name: str | None = None) -> HypersurfaceInstance:
        return HypersurfaceInstance(self.n, self.d, self.e, tuple(g), self.field,
                                    self.assumed_smooth, self.seed, name or self.name)


def detect_index_sequence(inst: HypersurfaceInstance) -> IndexSequence:
    if not inst.g[0] or not inst.g[-1]:
        raise InvalidInstanceError("g0 and gd must be nonzero")
    return IndexSequence(tuple(i for i, gi in enumerate(inst.g) if gi))


def random_form(rng: random.Random, ring: RingSpec, degree: int) -> Poly:
    """Form with independent random coefficients on every monomial (nonzero a.s.)."""
    f = ring.field
    while True:
        p = Poly(ring, {m: f.random(rng) for m in y_monomials(ring.n, degree)})
        if p:
            return p


def random_instance(n: int, d: int, e: int, indices, seed: int, fld: Field | None = None,
                    name: str = "random") -> HypersurfaceInstance:
    fld = fld or Field()
    rng = random.Random(seed)
    ring = RingSpec(n, fld, (), has_x=False)
    idx = set(indices)
    g = tuple(random_form(rng, ring, e) if i in idx else Poly.zero(ring) for i in range(d + 1))
    return HypersurfaceInstance(n, d, e, g, fld, True, seed, name)


_GLINE = re.compile(r"\s*g(\d+)\s*=\s*(.*)$")
_HEADER_KEYS = ("n", "d", "e", "field", "seed")


def _parse_header(text: str, lineno: int) -> dict:
    parts = [p.strip() for p in text.split(",")]
    out: dict = {}
    if all("=" in p for p in parts):
        for p in parts:
            k, v = (s.strip() for s in p.split("=", 1))
            if k not in _HEADER_KEYS:
                raise InstanceParseError(f"unknown header key {k!r}", lineno, text.find(k) + 1)
            out[k] = v
    else:
        if len(parts) not in (4, 5):
            raise InstanceParseError("header must be n,d,e,field[,seed]", lineno)
        out = dict(zip(_HEADER_KEYS, parts))
    for k in ("n", "d", "e"):
        if k not in out:
            raise InstanceParseError(f"header lacks {k}", lineno)
    try:
        hdr = {k: int(out[k]) for k in ("n", "d", "e")}
        hdr["seed"] = int(out["seed"]) if out.get("seed") not in (None, "", "-") else None
    except ValueError as exc:
        raise InstanceParseError(f"non-integer header value ({exc})", lineno) from exc
    try:
        hdr["field"] = Field.parse(out.get("field", "fp"))
    except ValueError as exc:
        raise InstanceParseError(str(exc), lineno) from exc
    return hdr


def parse_instance(text: str, name: str = "file", fld: Field | None = None) -> HypersurfaceInstance:
    """Header line ``n,d,e,field,seed`` then ``g<i> = <poly>`` lines; ``#`` starts a comment."""
    hdr = None
    forms: dict[int, Poly] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        if hdr is None:
            hdr = _parse_header(body, lineno)
            if fld is not None:
                hdr["field"] = fld
            ring = RingSpec(hdr["n"], hdr["field"], (), has_x=False)
            continue
        m = _GLINE.match(body)
        if m is None:
            raise InstanceParseError("expected 'g<i> = <polynomial>'", lineno, len(body) - len(body.lstrip()) + 1)
        i = int(m.group(1))
        if i > hdr["d"]:
            raise InstanceParseError(f"index {i} exceeds d = {hdr['d']}", lineno, m.start(1) + 1)
        if i in forms:
            raise InstanceParseError(f"g{i} given twice", lineno, m.start(1) + 1)
        offset = m.start(2)
        try:
            p = parse_poly(m.group(2), ring)
        except PolyParseError as exc:
            raise InstanceParseError(exc.message, lineno, offset + exc.column) from exc
        if p and p.bidegree != (0, hdr["e"]):
            raise InstanceParseError(f"g{i} is not homogeneous of degree {hdr['e']}", lineno, offset + 1)
        forms[i] = p
    if hdr is None:
        raise InstanceParseError("empty instance file", 1)
    g = tuple(forms.get(i, Poly.zero(ring)) for i in range(hdr["d"] + 1))
    try:
        return HypersurfaceInstance(hdr["n"], hdr["d"], hdr["e"], g, hdr["field"], True, hdr["seed"], name)
    except InvalidInstanceError as exc:
        raise InstanceParseError(str(exc), 1) from exc


def format_instance(inst: HypersurfaceInstance) -> str:
    seed = "-" if inst.seed is None else str(inst.seed)
    lines = [f"{inst.n},{inst.d},{inst.e},{inst.field},{seed}"]
    lines += [f"g{i} = {gi}" for i, gi in enumerate(inst.g) if gi]
    return "\n".join(lines) + "\n"
