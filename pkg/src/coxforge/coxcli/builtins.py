"""Seeded generic members of the example families, and the non-regular probe recipes."""

from __future__ import annotations

import random

from ..coxoracle import HypersurfaceInstance, random_form, random_instance
from ..gradedpoly import Poly, RingSpec
from ..scalar import Field

LINEAR_DEGREES = [(1, 0), (1, 0), (-2, 1), (-1, 1), (-1, 1)]


def cy_instance(seed: int, t="generic", fld: Field | None = None) -> HypersurfaceInstance:
    """g0 x0^2 + t g1 x0 x1 + g2 x1^2 with random quartics in four variables."""
    fld = fld or Field()
    rng = random.Random(seed)
    ring = RingSpec(3, fld, (), has_x=False)
    g0, g1, g2 = (random_form(rng, ring, 4) for _ in range(3))
    tval = fld.random_nonzero(rng) if t == "generic" else fld(t)
    name = "cy" if t == "generic" else f"cy_t={t}"
    return HypersurfaceInstance(3, 2, 4, (g0, g1.scale(tval), g2), fld, True, seed, name)


def linear_instance(seed: int, fld: Field | None = None) -> tuple[HypersurfaceInstance, tuple]:
    """The (4, 1) family y0, -(l0 y0 + l1 y1 + l2 y2 + l3 y3), y1, y2, y3 with nonzero l_j."""
    fld = fld or Field()
    rng = random.Random(seed)
    ring = RingSpec(3, fld, (), has_x=False)
    lam = tuple(fld.random_nonzero(rng) for _ in range(4))
    y = [Poly.gen(ring, f"y{j}") for j in range(4)]
    mixed = -(y[0].scale(lam[0]) + y[1].scale(lam[1]) + y[2].scale(lam[2]) + y[3].scale(lam[3]))
    g = (y[0], mixed, y[1], y[2], y[3])
    return HypersurfaceInstance(3, 4, 1, g, fld, True, seed, "linear"), lam


def koszul_instance(seed: int, d: int, e: int, n: int, seq=None, fld: Field | None = None) -> HypersurfaceInstance:
    seq = list(range(d + 1)) if seq is None else list(seq)
    return random_instance(n, d, e, seq, seed, fld, "koszul")


def duplicated_probe(seed: int, fld: Field | None = None, n: int = 3, e: int = 2) -> HypersurfaceInstance:
    """g2 = g0: the constant tuple (1, 0, -1) is a kernel element in degree (-2, e)."""
    base = random_instance(n, 2, e, [0, 1, 2], seed, fld)
    return base.with_forms([base.g[0], base.g[1], base.g[0]], "probe_duplicated")


def dependent_probe(seed: int, fld: Field | None = None) -> HypersurfaceInstance:
    """Five linear forms in four variables (the (4, 1) family)."""
    inst, _ = linear_instance(seed, fld)
    return inst.with_forms(inst.g, "probe_dependent")


def common_factor_probe(seed: int, fld: Field | None = None, n: int = 3) -> HypersurfaceInstance:
    """g0 = h q0, g2 = h q2 with linear h, q0, q2 and generic quadric g1.

    (q2, 0, -q0) is a kernel element of A_2 in degree (-2, e + 1).
    """
    fld = fld or Field()
    rng = random.Random(seed)
    ring = RingSpec(n, fld, (), has_x=False)
    h, q0, q2 = (random_form(rng, ring, 1) for _ in range(3))
    g1 = random_form(rng, ring, 2)
    return HypersurfaceInstance(n, 2, 2, (h * q0, g1, h * q2), fld, True, seed, "probe_common_factor")


PROBES = {
    "duplicated": duplicated_probe,
    "dependent": dependent_probe,
    "common": common_factor_probe,
}
