"""Graded dimensions of R(Z) from the cohomology sequence of O(D - Z) -> O(D) -> O_Z(D).

cox_dim(a, b) = h0(a, b) - h0(a - d, b - e) + dim N_(a, b), where N is the
kernel of H^1(O(a - d, b - e)) -> H^1(O(a, b)); for a <= -2 that kernel is
ker A_(-a) in source y-degree b - e.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..gradedpoly import GradedMatrix, Poly, count_y_monomials, y_monomials
from ..gradedpoly.linalg import nullspace, rank
from .instance import HypersurfaceInstance


def h0_dim(n: int, deg: tuple[int, int]) -> int:
    a, b = deg
    return (a + 1) * math.comb(b + n, n) if a >= 0 and b >= 0 else 0


def h1_dim(n: int, deg: tuple[int, int]) -> int:
    a, b = deg
    return (-a - 1) * math.comb(b + n, n) if a <= -2 and b >= 0 else 0


def ci_hilbert(l: int, n: int, e: int, b: int) -> int:
    """Coefficient of t^b in (1 - t^e)^(l+1) / (1 - t)^(n+1)."""
    return sum((-1) ** j * math.comb(l + 1, j) * count_y_monomials(n, b - j * e) for j in range(l + 2))


@dataclass(frozen=True)
class KernelElement:
    """(f_1, ..., f_(a+d-1)) in ker A_a, all entries of y-degree ``degree``."""

    a: int
    degree: int
    entries: tuple[Poly, ...]

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __str__(self):
        return "(" + ", ".join(str(f) for f in self.entries) + ")"


def band_pattern(inst: HypersurfaceInstance, a: int) -> list[list[Poly]]:
    """(a-1) x (a+d-1) matrix with g_(t-s) in position (s, t)."""
    if a < 1:
        raise ValueError("a must be at least 1")
    zero = Poly.zero(inst.y_ring)
    return [[inst.g[t - s] if 0 <= t - s <= inst.d else zero for t in range(a + inst.d - 1)]
            for s in range(a - 1)]


def build_A(inst: HypersurfaceInstance, a: int, degree: int) -> GradedMatrix:
    """A_a from R_degree^(a+d-1) to R_(degree+e)^(a-1) on monomial bases.

    Columns are (slot, monomial) with slot-major order, rows likewise.
    """
    if a < 1:
        raise ValueError("a must be at least 1")
    n, d, e = inst.n, inst.d, inst.e
    src = y_monomials(n, degree)
    tgt = y_monomials(n, degree + e)
    tindex = {m: i for i, m in enumerate(tgt)}
    cols = [(slot, m) for slot in range(a + d - 1) for m in src]
    rows_lab = [(s, m) for s in range(a - 1) for m in tgt]
    mat = GradedMatrix(inst.field, rows_lab, cols)
    nt = len(tgt)
    for c, (slot, mu) in enumerate(cols):
        for j, gj in enumerate(inst.g):
            s = slot - j
            if not gj or s < 0 or s > a - 2:
                continue
            for nu, coef in gj.terms.items():
                r = s * nt + tindex[tuple(x + y for x, y in zip(nu, mu))]
                mat.add(r, c, coef)
    return mat


def _vector_to_element(inst: HypersurfaceInstance, a: int, degree: int, vec) -> KernelElement:
    src = y_monomials(inst.n, degree)
    ring = inst.y_ring
    ns = len(src)
    entries = tuple(
        Poly(ring, {m: vec[slot * ns + i] for i, m in enumerate(src) if vec[slot * ns + i]})
        for slot in range(a + inst.d - 1)
    )
    return KernelElement(a, degree, entries)


def element_vector(inst: HypersurfaceInstance, v: KernelElement) -> list:
    src = y_monomials(inst.n, v.degree)
    idx = {m: i for i, m in enumerate(src)}
    out = [0] * (len(src) * len(v.entries))
    for slot, f in enumerate(v.entries):
        for m, c in f.terms.items():
            out[slot * len(src) + idx[m]] = c
    return out


def kernel_basis(inst: HypersurfaceInstance, a: int, b: int) -> list[KernelElement]:
    """Basis of ker A_a in source y-degree b - e, i.e. of N_(-a, b) for a >= 2."""
    if a < 1:
        raise ValueError("a must be at least 1")
    degree = b - inst.e
    if degree < 0:
        return []
    mat = build_A(inst, a, degree)
    if a == 1:
        ncols = mat.shape[1]
        vecs = [[int(i == j) for i in range(ncols)] for j in range(ncols)]
    else:
        vecs = mat.nullspace()
    return [_vector_to_element(inst, a, degree, v) for v in vecs]


def kernel_dim(inst: HypersurfaceInstance, a: int, b: int) -> int:
    degree = b - inst.e
    if degree < 0:
        return 0
    key = ("kdim", a, degree)
    if key not in inst._cache:
        ncols = (a + inst.d - 1) * count_y_monomials(inst.n, degree)
        if a == 1:
            inst._cache[key] = ncols
        else:
            mat = build_A(inst, a, degree)
            inst._cache[key] = ncols - rank(mat.rows, ncols, inst.field)
    return inst._cache[key]


def n_dim(inst: HypersurfaceInstance, deg: tuple[int, int]) -> int:
    A, b = deg
    d, e, n = inst.d, inst.e, inst.n
    if A > d - 2:
        return 0
    if A >= -1:
        return (-A + d - 1) * count_y_monomials(n, b - e)
    return kernel_dim(inst, -A, b)


def cox_dim(inst: HypersurfaceInstance, deg: tuple[int, int]) -> int:
    a, b = deg
    return h0_dim(inst.n, deg) - h0_dim(inst.n, (a - inst.d, b - inst.e)) + n_dim(inst, deg)


def check_kernel(inst: HypersurfaceInstance, v: KernelElement) -> bool:
    """True iff A_a annihilates the tuple."""
    d = inst.d
    for s in range(v.a - 1):
        acc = Poly.zero(inst.y_ring)
        for j, gj in enumerate(inst.g):
            if gj and v.entries[s + j]:
                acc = acc + gj * v.entries[s + j]
        if acc:
            return False
    return len(v.entries) == v.a + d - 1
