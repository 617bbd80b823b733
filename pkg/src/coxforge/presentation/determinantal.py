"""The determinantal member of the d = 2, e = 4 family and its extra sections u, w.

g_0, g_1, g_2 are the signed 2x2 minors of the 2x3 matrix with rows
(a_0, a_1, a_2) in R_1 and (b_0, b_1, b_2) in R_3. The rows are kernel
elements of A_2 in degrees (-2, 5) and (-2, 7).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from ..coxoracle import DegeneracyLocus, HypersurfaceInstance, KernelElement, check_kernel, random_form
from ..gradedpoly import Poly, RingSpec
from ..operatoralg.operators import OperatorContext, add, op_x, op_z, scale
from ..scalar import Field
from .model import Presentation

CARTIER_BANNER = ("partial verification: this hypersurface has nodes, so only sections of Cartier "
                  "divisors are described; no isomorphism of Cox rings is asserted")


@dataclass(frozen=True)
class DeterminantalData:
    inst: HypersurfaceInstance
    a: tuple[Poly, Poly, Poly]
    b: tuple[Poly, Poly, Poly]


def determinantal_instance(seed: int, fld: Field | None = None) -> DeterminantalData:
    fld = fld or Field()
    rng = random.Random(seed)
    ring = RingSpec(3, fld, (), has_x=False)
    a = tuple(random_form(rng, ring, 1) for _ in range(3))
    b = tuple(random_form(rng, ring, 3) for _ in range(3))
    g = (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])
    inst = HypersurfaceInstance(3, 2, 4, g, fld, False, seed, "det")
    return DeterminantalData(inst, a, b)  # type: ignore[arg-type]


def relation_ring(data: DeterminantalData) -> RingSpec:
    e = data.inst.e
    aux = (("z1", (-1, e)), ("z2", (-1, e)), ("u", (-2, 5)), ("w", (-2, 7)))
    return RingSpec(3, data.inst.field, aux)


def relation_ideal(data: DeterminantalData) -> Presentation:
    """The ten relations among x, z, u, w."""
    T = relation_ring(data)
    x0, x1, z1, z2, u, w = (Poly.gen(T, s) for s in ("x0", "x1", "z1", "z2", "u", "w"))
    g = [gi.embed(T) for gi in data.inst.g]
    a = [ai.embed(T) for ai in data.a]
    b = [bi.embed(T) for bi in data.b]
    gens = [
        x1 * z1 + g[0], x1 * z2 + g[1] - x0 * z1, g[2] - x0 * z2,
        x0 * u - a[0] * z1 - a[1] * z2, x1 * u - a[1] * z1 - a[2] * z2,
        x0 * w - b[0] * z1 - b[1] * z2, x1 * w - b[1] * z1 - b[2] * z2,
        z1 * z1 + b[2] * u - a[2] * w, z1 * z2 - b[1] * u + a[1] * w, z2 * z2 + b[0] * u - a[0] * w,
    ]
    return Presentation(T, gens, "determinantal", data.inst)


@dataclass
class DeterminantalReport:
    codimension: int
    hilbert_polynomial: list[Fraction]
    kernel_rows: bool
    operator_relations: dict[str, bool]
    three_term_in_ideal: bool
    banner: str = CARTIER_BANNER
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (self.codimension == 2 and self.hilbert_polynomial == [-20, 13] and self.kernel_rows
                and all(self.operator_relations.values()) and self.three_term_in_ideal)

    def as_dict(self) -> dict:
        return {
            "codimension": self.codimension,
            "hilbert_polynomial": [str(c) for c in self.hilbert_polynomial],
            "kernel_rows": self.kernel_rows,
            "operator_relations": self.operator_relations,
            "three_term_in_ideal": self.three_term_in_ideal,
            "verdict": "pass" if self.passed else "fail",
            "banner": self.banner,
        }


def verify_determinantal(data: DeterminantalData) -> DeterminantalReport:
    inst = data.inst
    locus = DegeneracyLocus.of(inst)
    codim = locus.codimension()
    hp = locus.hilbert_polynomial()
    u = KernelElement(2, 1, data.a)
    w = KernelElement(2, 3, data.b)
    rows_ok = check_kernel(inst, u) and check_kernel(inst, w)
    ctx = OperatorContext(inst)
    z = [None, ctx.base(1), ctx.base(2)]
    a, b = data.a, data.b

    def comb(pairs):
        out = None
        for c, v in pairs:
            t = scale(inst, c, v)
            out = t if out is None else add(out, t)
        return out

    def vanishes(v: KernelElement) -> bool:
        return v.is_zero()

    one = Poly.const(inst.y_ring, 1)
    minus = Poly.const(inst.y_ring, -1)
    rel = {
        "x0*u = a0*z1 + a1*z2": op_x("right", u).entries == comb([(a[0], z[1]), (a[1], z[2])]).entries,
        "x1*u = a1*z1 + a2*z2": op_x("left", u).entries == comb([(a[1], z[1]), (a[2], z[2])]).entries,
        "x0*w = b0*z1 + b1*z2": op_x("right", w).entries == comb([(b[0], z[1]), (b[1], z[2])]).entries,
        "x1*w = b1*z1 + b2*z2": op_x("left", w).entries == comb([(b[1], z[1]), (b[2], z[2])]).entries,
        "z1^2 + b2*u - a2*w = 0": vanishes(comb([(one, op_z(inst, 1, z[1])), (b[2], u), (a[2] * minus, w)])),
        "z1*z2 - b1*u + a1*w = 0": vanishes(comb([(one, op_z(inst, 2, z[1])), (b[1] * minus, u), (a[1], w)])),
        "z2^2 + b0*u - a0*w = 0": vanishes(comb([(one, op_z(inst, 2, z[2])), (b[0], u), (a[0] * minus, w)])),
    }
    ideal = relation_ideal(data)
    T = ideal.ring
    z1, z2 = Poly.gen(T, "z1"), Poly.gen(T, "z2")
    g = [gi.embed(T) for gi in inst.g]
    three_term = g[0] * z2 * z2 - g[1] * z1 * z2 + g[2] * z1 * z1
    in_ideal = ideal.contains(three_term)
    return DeterminantalReport(codim, hp, rows_ok, rel, in_ideal)
