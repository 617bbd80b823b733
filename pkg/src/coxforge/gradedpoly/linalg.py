"""Exact rank and nullspace over F_p and QQ.

Small matrices go through the elimination routines here (plain Gaussian over
F_p, fraction-free Bareiss over QQ); larger ones are handed to FLINT's
``nmod_mat`` and ``fmpz_mat`` after clearing denominators row by row.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Hashable, Sequence

import flint

from ..scalar import Field

# entries (rows * cols) above which work is delegated to FLINT
FLINT_THRESHOLD = 4000

SparseRow = dict[int, object]


@dataclass
class GradedMatrix:
    """Sparse matrix with labelled rows and columns (monomial bases of two pieces)."""

    field: Field
    row_labels: list[Hashable]
    col_labels: list[Hashable]
    rows: list[SparseRow] = field(default_factory=list)

    def __post_init__(self):
        if not self.rows:
            self.rows = [{} for _ in self.row_labels]
        if len(self.rows) != len(self.row_labels):
            raise ValueError("row count does not match the row basis")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_labels), len(self.col_labels)

    def add(self, i: int, j: int, value) -> None:
        f = self.field
        row = self.rows[i]
        v = f.norm(row.get(j, 0) + value)
        if v:
            row[j] = v
        else:
            row.pop(j, None)

    def dense(self) -> list[list]:
        out = [[0] * len(self.col_labels) for _ in self.row_labels]
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                out[i][j] = v
        return out

    def apply(self, vector: Sequence) -> list:
        f = self.field
        return [f.norm(sum(v * vector[j] for j, v in row.items())) for row in self.rows]

    def rank(self) -> int:
        return rank(self.rows, len(self.col_labels), self.field)

    def nullspace(self) -> list[list]:
        return nullspace(self.rows, len(self.col_labels), self.field)


def _echelon_fp(rows: Sequence[SparseRow], p: int) -> dict[int, SparseRow]:
    """Pivot column -> monic pivot row, each row reduced against earlier pivots."""
    pivots: dict[int, SparseRow] = {}
    for src in rows:
        row = {j: v % p for j, v in src.items() if v % p}
        while row:
            hits = [j for j in row if j in pivots]
            if not hits:
                break
            for j in sorted(hits):
                c = row.get(j)
                if not c:
                    continue
                for k, v in pivots[j].items():
                    w = (row.get(k, 0) - c * v) % p
                    if w:
                        row[k] = w
                    else:
                        row.pop(k, None)
        if not row:
            continue
        lead = min(row)
        inv = pow(row[lead], -1, p)
        pivots[lead] = {k: v * inv % p for k, v in row.items()}
    return pivots


def _rref_fp(rows: Sequence[SparseRow], p: int) -> dict[int, SparseRow]:
    piv = _echelon_fp(rows, p)
    for j in sorted(piv, reverse=True):
        row = piv[j]
        for k in [k for k in row if k != j and k in piv]:
            c = row.get(k)
            if not c:
                continue
            for kk, v in piv[k].items():
                w = (row.get(kk, 0) - c * v) % p
                if w:
                    row[kk] = w
                else:
                    row.pop(kk, None)
    return piv


def _to_flint(rows: Sequence[SparseRow], ncols: int, p: int) -> flint.nmod_mat:
    m = flint.nmod_mat(len(rows), ncols, p)
    for i, row in enumerate(rows):
        for j, v in row.items():
            m[i, j] = int(v)
    return m


def _integer_rows(rows: Sequence[SparseRow], ncols: int) -> list[list[int]]:
    out = []
    for row in rows:
        den = 1
        for v in row.values():
            den = lcm(den, Fraction(v).denominator)
        dense = [0] * ncols
        for j, v in row.items():
            dense[j] = int(Fraction(v) * den)
        out.append(dense)
    return out


def _bareiss(mat: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free forward elimination; returns echelon rows and pivot columns."""
    a = [r[:] for r in mat if any(r)]
    pivcols: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r >= len(a):
            break
        k = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if k is None:
            continue
        a[r], a[k] = a[k], a[r]
        pr = a[r]
        for i in range(r + 1, len(a)):
            ai = a[i]
            f = ai[c]
            piv = pr[c]
            a[i] = [(piv * ai[j] - f * pr[j]) // prev for j in range(ncols)]
        prev = pr[c]
        pivcols.append(c)
        r += 1
    return a[:r], pivcols


def rank(rows: Sequence[SparseRow], ncols: int, fld: Field) -> int:
    if not rows or ncols == 0:
        return 0
    if fld.p is not None:
        if len(rows) * ncols > FLINT_THRESHOLD:
            return _to_flint(rows, ncols, fld.p).rank()
        return len(_echelon_fp(rows, fld.p))
    ints = _integer_rows(rows, ncols)
    if len(rows) * ncols > FLINT_THRESHOLD:
        return flint.fmpz_mat(ints).rank()
    _, piv = _bareiss(ints, ncols)
    return len(piv)


def nullspace(rows: Sequence[SparseRow], ncols: int, fld: Field) -> list[list]:
    """Basis of {x : M x = 0}; one vector per free column, in column order."""
    if ncols == 0:
        return []
    if fld.p is not None:
        p = fld.p
        if len(rows) * ncols > FLINT_THRESHOLD:
            x, nullity = _to_flint(rows, ncols, p).nullspace()
            return [[int(x[i, k]) for i in range(ncols)] for k in range(nullity)]
        piv = _rref_fp(rows, p)
        basis = []
        for free in range(ncols):
            if free in piv:
                continue
            v = [0] * ncols
            v[free] = 1
            for j, row in piv.items():
                c = row.get(free)
                if c:
                    v[j] = (-c) % p
            basis.append(v)
        return basis
    ints = _integer_rows(rows, ncols)
    if len(rows) * ncols > FLINT_THRESHOLD:
        x, nullity = flint.fmpz_mat(ints).nullspace()
        return [[Fraction(int(x[i, k])) for i in range(ncols)] for k in range(nullity)]
    ech, pivcols = _bareiss(ints, ncols)
    basis = []
    pivset = set(pivcols)
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for r in range(len(pivcols) - 1, -1, -1):
            c = pivcols[r]
            row = ech[r]
            s = sum(row[j] * v[j] for j in range(c + 1, ncols) if row[j])
            v[c] = Fraction(-s, row[c])
        basis.append(v)
    return basis


def rank_of_vectors(vectors: Sequence[Sequence], fld: Field) -> int:
    rows = [{j: v for j, v in enumerate(vec) if v} for vec in vectors]
    ncols = max((len(v) for v in vectors), default=0)
    return rank(rows, ncols, fld)
