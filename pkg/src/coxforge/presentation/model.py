"""Presentations U/J and their bigraded Hilbert functions.

Dimensions come from a Groebner basis of J truncated at the largest second
degree asked for. The order is a product order: degrevlex on the generators
of first degree != 0 (x and auxiliary), then degrevlex on the y-variables.
A standard monomial splits as (non-y part) * (y part), so each piece is
counted by summing Hilbert functions of monomial ideals in the y-variables.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from ..coxoracle import HypersurfaceInstance, IndexSequence, detect_index_sequence
from ..gradedpoly import (GradedMatrix, GroebnerBasis, GroebnerEngine, MonomialOrder, Poly, RingSpec,
                          monomial_basis)
from ..gradedpoly.hilbert import monomial_hilbert_function
from ..gradedpoly.linalg import rank
from ..gradedpoly.ring import _aux_exponents


class PresentationError(ValueError):
    pass


@dataclass
class Presentation:
    ring: RingSpec
    generators: list[Poly]
    kind: str = "custom"
    inst: HypersurfaceInstance | None = None
    seq: IndexSequence | None = None
    _gb: GroebnerBasis | None = field(default=None, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def __post_init__(self):
        for gen in self.generators:
            if gen.ring != self.ring:
                raise PresentationError("generator outside the presentation ring")
            if not gen or gen.bidegree is None:
                raise PresentationError(f"generator {gen} is not bihomogeneous")

    @property
    def aux_names(self) -> list[str]:
        return [name for name, _ in self.ring.aux]

    def gen(self, name: str) -> Poly:
        return Poly.gen(self.ring, name)

    def order(self) -> MonomialOrder:
        ring = self.ring
        ys = list(range(ring.y_slice.start, ring.y_slice.stop))
        other = [i for i in range(ring.nvars) if i not in ys]
        return MonomialOrder.blocks(ring.nvars, [(other, [1] * len(other)), (ys, [1] * len(ys))])

    def groebner(self, b_max: int) -> GroebnerBasis:
        with self._lock:
            if self._gb is None or self._gb.b_max < b_max:
                self._gb = GroebnerEngine(self.ring, self.order()).basis(self.generators, b_max)
            return self._gb

    def contains(self, poly: Poly) -> bool:
        if poly.ring != self.ring:
            poly = poly.embed(self.ring)
        if not poly:
            return True
        deg = poly.bidegree
        if deg is None:
            raise PresentationError("membership is tested on bihomogeneous elements")
        return self.groebner(deg[1]).contains(poly)

    def _split_leads(self, gb: GroebnerBasis):
        ys = self.ring.y_slice
        out = []
        for m in gb.leading_monomials:
            other = m[: ys.start] + m[ys.stop:]
            out.append((other, m[ys]))
        return out

    def _other_monomials(self, a: int, b: int):
        """Non-y monomials of first degree ``a`` and second degree <= b, with that degree."""
        ring = self.ring
        for auxe, a_acc, b_left in _aux_exponents(ring.aux, b):
            alpha = a - a_acc
            if ring.has_x:
                if alpha < 0:
                    continue
                for i in range(alpha + 1):
                    yield (alpha - i, i) + auxe, b - b_left
            elif alpha == 0:
                yield auxe, b - b_left


def quotient_dim(p: Presentation, deg: tuple[int, int]) -> int:
    """dim (U/J)_deg by counting standard monomials."""
    a, b = deg
    if b < 0:
        return 0
    leads = p._split_leads(p.groebner(b))
    ny = p.ring.n + 1
    total = 0
    for other, used in p._other_monomials(a, b):
        ys = []
        dead = False
        for lo, ly in leads:
            if all(x <= y for x, y in zip(lo, other)):
                if not any(ly):
                    dead = True
                    break
                ys.append(ly)
        if not dead:
            total += monomial_hilbert_function(ys, ny, b - used)
    return total


def quotient_dim_dense(p: Presentation, deg: tuple[int, int]) -> int:
    """dim U_deg minus the rank of the J-span in that degree; small degrees only."""
    basis = monomial_basis(p.ring, deg)
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    for gen in p.generators:
        ga, gb_ = gen.bidegree
        for m in monomial_basis(p.ring, (deg[0] - ga, deg[1] - gb_)):
            prod = gen.mul_monomial(m)
            rows.append({index[t]: c for t, c in prod.terms.items()})
    mat = GradedMatrix(p.ring.field, list(range(len(rows))), basis, rows)
    return len(basis) - (rank(mat.rows, len(basis), p.ring.field) if rows else 0)


def aux_name(seq: IndexSequence, k: int) -> str:
    """Auxiliary generators are named z_k for a full sequence, w_k otherwise."""
    return f"z{k}" if seq.l == seq.indices[-1] else f"w{k}"


def build_main_presentation(inst: HypersurfaceInstance, seq: IndexSequence | None = None) -> Presentation:
    """U = S[W_1..W_l] with deg W_k = (i_(k-1) - i_k, e) and the l+1 generators of J."""
    seq = seq or detect_index_sequence(inst)
    idx = seq.indices
    l, e = seq.l, inst.e
    aux = [(aux_name(seq, k), (idx[k - 1] - idx[k], e)) for k in range(1, l + 1)]
    ring = RingSpec(inst.n, inst.field, tuple(aux))
    x0, x1 = Poly.gen(ring, "x0"), Poly.gen(ring, "x1")
    w = [None] + [Poly.gen(ring, name) for name, _ in aux]
    gens = []
    for k in range(l + 1):
        gk = inst.g[idx[k]].embed(ring)
        if k < l:
            gk = gk + x1 ** (idx[k + 1] - idx[k]) * w[k + 1]
        if k > 0:
            gk = gk - x0 ** (idx[k] - idx[k - 1]) * w[k]
        if gk.bidegree != (0, e):
            raise PresentationError(f"generator {k} has degree {gk.bidegree}, expected (0, {e})")
        gens.append(gk)
    return Presentation(ring, gens, "main", inst, seq)


def hypersurface_equation(p: Presentation) -> Poly:
    """r = sum_i g_i x0^(d-i) x1^i inside U."""
    if p.inst is None:
        raise PresentationError("presentation carries no instance")
    return p.inst.equation().embed(p.ring)


def free_algebra_dim(degrees: list[tuple[int, int]], deg: tuple[int, int]) -> int:
    """Number of monomials of bidegree ``deg`` in free generators of the given degrees.

    Generators of second degree 0 must have positive first degree.
    """
    flat = [dg for dg in degrees if dg[1] == 0]
    if any(a <= 0 for a, _ in flat):
        raise ValueError("generators of degree (a, 0) need a > 0")
    lifted = [dg for dg in degrees if dg[1] != 0]
    if any(b < 0 for _, b in lifted):
        raise ValueError("second degrees must be nonnegative")
    a, b = deg

    def flat_count(target: int, i: int = 0) -> int:
        if i == len(flat):
            return int(target == 0)
        if target < 0:
            return 0
        return sum(flat_count(target - k * flat[i][0], i + 1) for k in range(target // flat[i][0] + 1))

    total = 0
    for _, a_acc, b_left in _aux_exponents(tuple((str(i), dg) for i, dg in enumerate(lifted)), b):
        if b_left == 0:
            total += flat_count(a - a_acc)
    return total
