"""Operators on K = (+)_a ker A_a and the evaluation map psi.

Tuples are stored 0-based; slot j of a tuple in K_a holds f_(j+1).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from ..coxoracle import HypersurfaceInstance, IndexSequence, KernelElement, detect_index_sequence
from ..gradedpoly import Poly


class OperatorDomainError(ValueError):
    """Operator applied outside its domain (e.g. truncating an element of K_1)."""


class ConsistencyFault(RuntimeError):
    """Two formulas for the same entry disagree; the input was not in the kernel."""


def _zero(inst: HypersurfaceInstance) -> Poly:
    return Poly.zero(inst.y_ring)


def op_x(side: str, v: KernelElement) -> KernelElement:
    """``right`` (x0) drops the last entry, ``left`` (x1) the first."""
    if v.a < 2:
        raise OperatorDomainError("truncation needs a >= 2")
    if side == "right":
        return KernelElement(v.a - 1, v.degree, v.entries[:-1])
    if side == "left":
        return KernelElement(v.a - 1, v.degree, v.entries[1:])
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def op_z(inst: HypersurfaceInstance, k: int, v: KernelElement) -> KernelElement:
    """The multiplication-by-z_k operator K_a -> K_(a+1), k in 1..d."""
    d, a = inst.d, v.a
    if not 1 <= k <= d:
        raise ValueError(f"k must lie in 1..{d}")
    f = v.entries
    g = inst.g
    out: list[Poly | None] = [None] * (a + d)
    # m is 1-based below, f[i] holds f_(i+1)
    for m in range(1, a + k):
        acc = _zero(inst)
        for j in range(k, d + 1):
            if g[j] and f[m + j - k - 1]:
                acc = acc + f[m + j - k - 1] * g[j]
        out[m - 1] = acc
    for m in range(k + 1, a + d + 1):
        acc = _zero(inst)
        for j in range(k):
            if g[j] and f[m - k + j - 1]:
                acc = acc - f[m - k + j - 1] * g[j]
        if out[m - 1] is not None:
            if out[m - 1] != acc:
                raise ConsistencyFault(f"z{k}: entry {m} disagrees between the two formulas")
        else:
            out[m - 1] = acc
    return KernelElement(a + 1, v.degree + inst.e, tuple(out))


def op_w(inst: HypersurfaceInstance, seq: IndexSequence, k: int, v: KernelElement) -> KernelElement:
    """w_k: K_a -> K_(a+delta), delta = i_k - i_(k-1), fixed by its truncation windows.

    The window x0^(m-1) x1^(delta-m) w_k equals z_(i_(k-1)+m) and covers
    positions delta-m+1 .. delta-m+a+d (1-based); together the windows cover
    every entry, so no entry is left free.
    """
    if not 1 <= k <= seq.l:
        raise ValueError(f"k must lie in 1..{seq.l}")
    lo = seq.indices[k - 1]
    delta = seq.indices[k] - lo
    a, d = v.a, inst.d
    out: list[Poly | None] = [None] * (a + delta + d - 1)
    for m in range(1, delta + 1):
        z = op_z(inst, lo + m, v)
        start = delta - m
        for j, f in enumerate(z.entries):
            pos = start + j
            if out[pos] is None:
                out[pos] = f
            elif out[pos] != f:
                raise ConsistencyFault(f"w{k}: windows disagree at entry {pos + 1}")
    return KernelElement(a + delta, v.degree + inst.e, tuple(out))


def scale(inst: HypersurfaceInstance, c: Poly, v: KernelElement) -> KernelElement:
    """Multiply every entry by a y-form."""
    deg = c.bidegree[1] if c else 0
    return KernelElement(v.a, v.degree + deg, tuple(f * c for f in v.entries))


def add(v: KernelElement, w: KernelElement) -> KernelElement:
    if v.a != w.a:
        raise ValueError("elements live in different K_a")
    if v.degree != w.degree and not (v.is_zero() or w.is_zero()):
        raise ValueError("elements have different degrees")
    deg = w.degree if v.is_zero() else v.degree
    return KernelElement(v.a, deg, tuple(x + y for x, y in zip(v.entries, w.entries)))


def neg(v: KernelElement) -> KernelElement:
    return KernelElement(v.a, v.degree, tuple(-f for f in v.entries))


@dataclass(frozen=True)
class UMonomial:
    """X0^x0 X1^x1 W1^w[0] ... Wl^w[l-1]; the y-part is handled by S-linearity."""

    x0: int
    x1: int
    w: tuple[int, ...]

    def degree(self, seq: IndexSequence, e: int) -> tuple[int, int]:
        gaps = seq.gaps()
        return self.x0 + self.x1 - sum(b * g for b, g in zip(self.w, gaps)), e * sum(self.w)

    def __str__(self):
        parts = [f"x0^{self.x0}" if self.x0 else "", f"x1^{self.x1}" if self.x1 else ""]
        parts += [f"w{k + 1}^{b}" for k, b in enumerate(self.w) if b]
        return "*".join(p for p in parts if p) or "1"


@dataclass
class OperatorContext:
    inst: HypersurfaceInstance
    seq: IndexSequence = None  # type: ignore[assignment]
    memo: dict = field(default_factory=dict)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def __post_init__(self):
        if self.seq is None:
            self.seq = detect_index_sequence(self.inst)
        elif self.seq != detect_index_sequence(self.inst):
            raise ValueError("index sequence does not match the instance")

    def base(self, k: int) -> KernelElement:
        """psi(W_k): indicator of slot i_k in K_(i_k - i_(k-1))."""
        delta = self.seq.gaps()[k - 1]
        ik = self.seq.indices[k]
        one = Poly.const(self.inst.y_ring, 1)
        zero = _zero(self.inst)
        entries = tuple(one if j == ik - 1 else zero for j in range(delta + self.inst.d - 1))
        return KernelElement(delta, 0, entries)

    def psi(self, m: UMonomial, base: int | None = None, w_order=None) -> KernelElement:
        """Evaluate psi(m) by operator composition.

        ``base`` picks which W_k seeds the composition and ``w_order`` the
        order of the remaining w-operators; both default to canonical choices
        and only the canonical evaluation is memoized.
        """
        if len(m.w) != self.seq.l:
            raise ValueError("monomial has the wrong number of W exponents")
        a_deg, _ = m.degree(self.seq, self.inst.e)
        if a_deg > -1:
            raise OperatorDomainError("psi is defined on first degree <= -1 only")
        canonical = base is None and w_order is None
        if canonical and m in self.memo:
            return self.memo[m]
        if base is None:
            base = next(k + 1 for k, b in enumerate(m.w) if b)
        if m.w[base - 1] == 0:
            raise ValueError("base generator does not divide the monomial")
        rest = list(m.w)
        rest[base - 1] -= 1
        if w_order is None:
            w_order = [k + 1 for k, b in enumerate(rest) for _ in range(b)]
        elif sorted(w_order) != sorted(k + 1 for k, b in enumerate(rest) for _ in range(b)):
            raise ValueError("w_order does not match the monomial")
        if canonical and sum(rest) > 0:
            # reuse the memoized value of the monomial with the last w removed
            last = w_order[-1]
            smaller = list(m.w)
            smaller[last - 1] -= 1
            v = self.psi(UMonomial(0, 0, tuple(smaller)))
            v = op_w(self.inst, self.seq, last, v)
        else:
            v = self.base(base)
            for k in w_order:
                v = op_w(self.inst, self.seq, k, v)
        for _ in range(m.x0):
            v = op_x("right", v)
        for _ in range(m.x1):
            v = op_x("left", v)
        if canonical:
            with self._lock:
                self.memo.setdefault(m, v)
        return v
