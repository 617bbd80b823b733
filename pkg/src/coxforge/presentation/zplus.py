"""The model U'/J' for full index sequences: only the z-generators, three-term relations."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..coxoracle import HypersurfaceInstance, detect_index_sequence
from ..gradedpoly import Poly, RingSpec
from .compare import Window
from .model import Presentation, PresentationError, build_main_presentation, quotient_dim


def build_zplus_model(inst: HypersurfaceInstance) -> Presentation:
    """U' = k[y, z_1..z_d], J' generated by one relation per 0 <= k < k' < k'' <= d."""
    seq = detect_index_sequence(inst)
    d, e = inst.d, inst.e
    if seq.l != d:
        raise PresentationError("the model needs the full index sequence")
    aux = tuple((f"z{k}", (-1, e)) for k in range(1, d + 1))
    ring = RingSpec(inst.n, inst.field, aux, has_x=False)
    zero = Poly.zero(ring)
    z = [zero] + [Poly.gen(ring, f"z{k}") for k in range(1, d + 1)] + [zero]
    g = [gi.embed(ring) for gi in inst.g]

    def minor(i: int, j: int) -> Poly:
        return z[i + 1] * z[j] - z[i] * z[j + 1]

    gens = []
    for k, k1, k2 in combinations(range(d + 1), 3):
        rel = g[k] * minor(k1, k2) - g[k1] * minor(k, k2) + g[k2] * minor(k, k1)
        if rel:
            gens.append(rel)
    return Presentation(ring, gens, "zplus", inst, seq)


@dataclass
class ZPlusReport:
    generator_count: int
    degrees: list[tuple[int, int]]
    membership: list[bool]
    records: list[tuple[int, int, int, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.membership) and all(x == y for _, _, x, y in self.records)

    def as_dict(self) -> dict:
        return {
            "generator_count": self.generator_count,
            "generator_degrees": [list(dg) for dg in self.degrees],
            "membership": self.membership,
            "records": [{"a": a, "b": b, "dim_model": x, "dim_presentation": y} for a, b, x, y in self.records],
            "verdict": "pass" if self.passed else "fail",
        }


def verify_zplus(inst: HypersurfaceInstance, window: Window | None = None) -> ZPlusReport:
    """J' inside J, and dim (U'/J') = dim (U/J) in every window degree with a <= -1."""
    model = build_zplus_model(inst)
    main = build_main_presentation(inst)
    window = window or Window.default(inst, main.seq)
    member = [main.contains(gen.embed(main.ring)) for gen in model.generators]
    records = []
    if window.a_min <= -1:
        w = window.restrict(a_max=-1)
        model.groebner(w.b_max)
        main.groebner(w.b_max)
        for a, b in w.degrees():
            records.append((a, b, quotient_dim(model, (a, b)), quotient_dim(main, (a, b))))
    return ZPlusReport(len(model.generators), [gen.bidegree for gen in model.generators], member, records)
