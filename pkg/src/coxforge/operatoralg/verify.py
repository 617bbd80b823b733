"""Windowed checks of psi and a randomized battery of operator identities."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..coxoracle import KernelElement, is_regular_sequence, kernel_basis, kernel_dim
from ..gradedpoly import Poly, y_monomials
from ..gradedpoly.linalg import rank
from ..presentation import Presentation, Window, build_main_presentation, quotient_dim
from .operators import ConsistencyFault, OperatorContext, OperatorDomainError, UMonomial, add, neg, op_w, op_x, op_z, scale


@dataclass(frozen=True)
class PsiRecord:
    a: int
    b: int
    dim_u: int
    span: int
    kernel: int
    quotient: int

    @property
    def surjective(self) -> bool:
        return self.span == self.kernel

    @property
    def kernel_ok(self) -> bool:
        return self.span == self.quotient

    @property
    def contains_ok(self) -> bool:
        # ker psi contains J  <=>  span <= dim U - dim J
        return self.span <= self.quotient

    def as_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "dim_u": self.dim_u, "span": self.span,
                "kernel": self.kernel, "quotient": self.quotient}


@dataclass(frozen=True)
class PropertyCase:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    mode: str
    window: Window
    psi_records: list[PsiRecord] = field(default_factory=list)
    cases: list[PropertyCase] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def psi_failures(self) -> list[PsiRecord]:
        return [r for r in self.psi_records if not (r.surjective and r.kernel_ok)]

    def containment_violations(self) -> list[PsiRecord]:
        return [r for r in self.psi_records if not r.contains_ok]

    def case_failures(self) -> list[PropertyCase]:
        return [c for c in self.cases if not c.passed]

    @property
    def passed(self) -> bool:
        return not self.psi_failures() and not self.case_failures()

    def as_dict(self) -> dict:
        counts: dict[str, list[int]] = {}
        for c in self.cases:
            ok, total = counts.setdefault(c.name, [0, 0])
            counts[c.name] = [ok + int(c.passed), total + 1]
        return {
            "mode": self.mode,
            "window": self.window.as_dict(),
            "psi_records": [r.as_dict() for r in sorted(self.psi_records, key=lambda r: (r.a, r.b))],
            "psi_failures": [{"a": r.a, "b": r.b} for r in self.psi_failures()],
            "containment_violations": [{"a": r.a, "b": r.b} for r in self.containment_violations()],
            "property_cases": {k: {"passed": v[0], "total": v[1]} for k, v in sorted(counts.items())},
            "property_failures": [{"name": c.name, "detail": c.detail} for c in self.case_failures()],
            "warnings": self.warnings,
            "verdict": "pass" if self.passed else "fail",
        }


def _shift_vector(ctx: OperatorContext, v: KernelElement, nu: tuple[int, ...], degree: int) -> dict[int, object]:
    """Sparse coordinates of y^nu * v against the slot-major monomial basis in ``degree``."""
    basis = _basis_index(ctx, degree)
    size = len(basis)
    row: dict[int, object] = {}
    for slot, f in enumerate(v.entries):
        for m, c in f.terms.items():
            row[slot * size + basis[tuple(x + y for x, y in zip(m, nu))]] = c
    return row


def _basis_index(ctx: OperatorContext, degree: int) -> dict:
    key = ("ybasis", degree)
    if key not in ctx.memo:
        ctx.memo[key] = {m: i for i, m in enumerate(y_monomials(ctx.inst.n, degree))}
    return ctx.memo[key]


def xw_monomials(ctx: OperatorContext, a: int, b: int):
    """UMonomials of first degree ``a`` and second degree <= b, with their second degree."""
    gaps = ctx.seq.gaps()
    e = ctx.inst.e
    l = ctx.seq.l

    def rec(k, beta, a_acc, b_acc):
        if k == l:
            alpha = a - a_acc
            if alpha >= 0:
                for i in range(alpha + 1):
                    yield UMonomial(alpha - i, i, tuple(beta)), b_acc
            return
        c = 0
        while b_acc + c * e <= b:
            yield from rec(k + 1, beta + [c], a_acc - c * gaps[k], b_acc + c * e)
            c += 1

    yield from rec(0, [], 0, 0)


def psi_span(ctx: OperatorContext, a: int, b: int) -> tuple[int, int]:
    """(dim U_(-a, b), rank of psi on that piece)."""
    inst = ctx.inst
    degree = b - inst.e
    rows = []
    dim_u = 0
    for m, bm in xw_monomials(ctx, -a, b):
        ys = y_monomials(inst.n, b - bm)
        dim_u += len(ys)
        if not any(m.w):
            continue
        v = ctx.psi(m)
        for nu in ys:
            rows.append(_shift_vector(ctx, v, nu, degree))
    if degree < 0 or not rows:
        return dim_u, 0
    ncols = (a + inst.d - 1) * len(_basis_index(ctx, degree))
    return dim_u, rank(rows, ncols, inst.field)


def verify_psi(ctx: OperatorContext, window: Window | None = None, presentation: Presentation | None = None,
               regular: bool | None = None) -> VerificationReport:
    """Compare span psi(U_(-a,b)) with ker A_a and with dim (U/J)_(-a,b) for a >= 1 in the window."""
    inst = ctx.inst
    p = presentation or build_main_presentation(inst, ctx.seq)
    window = window or Window.default(inst, ctx.seq)
    if regular is None:
        regular = is_regular_sequence(inst, ctx.seq).regular
    mode = "full" if regular else "containment"
    report = VerificationReport(mode, window)
    if not regular:
        report.warnings.append("sequence is not regular: only containment of J in ker psi is checked")
    p.groebner(window.b_max)
    for A, b in window.degrees():
        if A > -1:
            continue
        dim_u, span = psi_span(ctx, -A, b)
        report.psi_records.append(PsiRecord(A, b, dim_u, span, kernel_dim(inst, -A, b), quotient_dim(p, (A, b))))
    return report


class Battery:
    """Randomized property cases drawn from exact kernel bases."""

    def __init__(self, ctx: OperatorContext, seed: int = 0, a_cap: int | None = None, t_cap: int | None = None):
        self.ctx = ctx
        self.inst = ctx.inst
        self.rng = random.Random(seed)
        d, e = self.inst.d, self.inst.e
        self.a_cap = a_cap or d + 2
        self.t_cap = t_cap if t_cap is not None else e + 1
        self._bases: dict[tuple[int, int], list[KernelElement]] = {}
        self.slots = [(a, t) for a in range(1, self.a_cap + 1) for t in range(self.t_cap + 1)
                      if self.basis(a, t)]
        if not self.slots:
            raise ValueError("no nonzero kernel pieces in the sampling range")

    def basis(self, a: int, t: int) -> list[KernelElement]:
        if (a, t) not in self._bases:
            self._bases[(a, t)] = kernel_basis(self.inst, a, t + self.inst.e)
        return self._bases[(a, t)]

    def element(self, a_min: int = 1) -> KernelElement:
        """Random element of a sampled piece, pushed up by z-operators until a >= a_min."""
        choices = [s for s in self.slots if s[0] >= a_min] or self.slots
        a, t = self.rng.choice(choices)
        f = self.inst.field
        out = None
        for v in self.basis(a, t):
            c = Poly.const(self.inst.y_ring, f.random(self.rng))
            term = scale(self.inst, c, v)
            out = term if out is None else add(out, term)
        v = KernelElement(a, t, out.entries)
        while v.a < a_min:
            v = op_z(self.inst, self.rng.randint(1, self.inst.d), v)
        return v

    def ops(self):
        seq = self.ctx.seq
        names = [("x0",), ("x1",)] + [("z", k) for k in range(1, self.inst.d + 1)]
        return names + [("w", k) for k in range(1, seq.l + 1)]

    def apply(self, op, v: KernelElement) -> KernelElement:
        if op[0] == "x0":
            return op_x("right", v)
        if op[0] == "x1":
            return op_x("left", v)
        if op[0] == "z":
            return op_z(self.inst, op[1], v)
        return op_w(self.inst, self.ctx.seq, op[1], v)

    def case_coxz(self) -> PropertyCase:
        inst = self.inst
        d = inst.d
        v = self.element()
        k = self.rng.randrange(d + 1)
        g = [Poly.const(inst.y_ring, 0) if not gi else gi for gi in inst.g]
        if k == 0:
            lhs = add(op_x("left", op_z(inst, 1, v)), scale(inst, g[0], v))
        elif k < d:
            lhs = add(add(op_x("left", op_z(inst, k + 1, v)), scale(inst, g[k], v)),
                      neg(op_x("right", op_z(inst, k, v))))
        else:
            lhs = add(scale(inst, g[d], v), neg(op_x("right", op_z(inst, d, v))))
        return PropertyCase("coxz_identity", lhs.is_zero(), f"k={k} a={v.a}")

    def case_commute(self) -> PropertyCase:
        ops = self.ops()
        o1, o2 = self.rng.choice(ops), self.rng.choice(ops)
        drops = sum(o[0] in ("x0", "x1") for o in (o1, o2))
        v = self.element(a_min=1 + drops)
        r1 = self.apply(o1, self.apply(o2, v))
        r2 = self.apply(o2, self.apply(o1, v))
        return PropertyCase("commutation", r1.entries == r2.entries, f"{o1} {o2} a={v.a}")

    def random_monomial(self, max_w: int = 3) -> UMonomial:
        seq = self.ctx.seq
        while True:
            w = [0] * seq.l
            for _ in range(self.rng.randint(1, max_w)):
                w[self.rng.randrange(seq.l)] += 1
            m = UMonomial(0, 0, tuple(w))
            depth = -m.degree(seq, self.inst.e)[0] - 1
            x0 = self.rng.randint(0, depth)
            x1 = self.rng.randint(0, depth - x0)
            return UMonomial(x0, x1, tuple(w))

    def case_psi_order(self) -> PropertyCase:
        m = self.random_monomial()
        ref = self.ctx.psi(m)
        bases = [k + 1 for k, b in enumerate(m.w) if b]
        base = self.rng.choice(bases)
        rest = list(m.w)
        rest[base - 1] -= 1
        order = [k + 1 for k, b in enumerate(rest) for _ in range(b)]
        self.rng.shuffle(order)
        alt = self.ctx.psi(m, base=base, w_order=order)
        return PropertyCase("psi_order", alt.entries == ref.entries, f"{m} base={base} order={order}")

    def case_injective(self) -> PropertyCase:
        seq = self.ctx.seq
        gap = seq.gaps()[-1]
        choices = [s for s in self.slots if s[0] > gap]
        if not choices:
            return PropertyCase("w_last_injective", True, "no sampled piece beyond the last gap")
        a, t = self.rng.choice(choices)
        basis = self.basis(a, t)
        images = [op_w(self.inst, seq, seq.l, v) for v in basis]
        deg = t + self.inst.e
        idx = _basis_index(self.ctx, deg)
        rows = [_shift_vector(self.ctx, im, (0,) * (self.inst.n + 1), deg) for im in images]
        r = rank(rows, (a + gap + self.inst.d - 1) * len(idx), self.inst.field)
        return PropertyCase("w_last_injective", r == len(basis), f"a={a} t={t} dim={len(basis)} rank={r}")

    def case_ideal(self) -> PropertyCase:
        """psi(m * G_k) = 0 for a J generator G_k and a monomial m of first degree <= -1."""
        seq, inst = self.ctx.seq, self.inst
        l = seq.l
        gaps = seq.gaps()
        k = self.rng.randrange(l + 1)
        m = self.random_monomial()
        terms = []
        if k < l:
            w = list(m.w)
            w[k] += 1
            terms.append((Poly.const(inst.y_ring, 1), UMonomial(m.x0, m.x1 + gaps[k], tuple(w))))
        if k > 0:
            w = list(m.w)
            w[k - 1] += 1
            terms.append((Poly.const(inst.y_ring, -1), UMonomial(m.x0 + gaps[k - 1], m.x1, tuple(w))))
        acc = scale(inst, inst.g[seq.indices[k]], self.ctx.psi(m))
        for c, mono in terms:
            acc = add(acc, scale(inst, c, self.ctx.psi(mono)))
        return PropertyCase("ideal_in_kernel", acc.is_zero(), f"k={k} m={m}")

    def run(self, cases: int = 200) -> list[PropertyCase]:
        makers = [self.case_coxz, self.case_commute, self.case_psi_order, self.case_injective, self.case_ideal]
        out = []
        for i in range(cases):
            maker = makers[i % len(makers)]
            try:
                out.append(maker())
            except (ConsistencyFault, OperatorDomainError) as exc:
                out.append(PropertyCase(maker.__name__.removeprefix("case_"), False, str(exc)))
        return out


def run_operator_suite(ctx: OperatorContext, window: Window | None = None, cases: int = 200, seed: int = 0,
                       regular: bool | None = None) -> VerificationReport:
    report = verify_psi(ctx, window, regular=regular)
    report.cases = Battery(ctx, seed).run(cases)
    return report
