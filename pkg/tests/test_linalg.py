from __future__ import annotations

import random
from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from coxforge.gradedpoly import GradedMatrix, nullspace, rank
from coxforge.gradedpoly import linalg
from coxforge.scalar import Field

FP = Field()
QQ = Field.rational()


def sparse(dense):
    return [{j: v for j, v in enumerate(row) if v} for row in dense]


def matrices(max_rows=6, max_cols=7, lo=-3, hi=3):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r)))


def test_zero_matrix_kernel():
    m = GradedMatrix(FP, ["r0", "r1"], ["c0", "c1", "c2"])
    assert len(m.nullspace()) == 3
    assert m.rank() == 0


def test_identity_kernel():
    m = GradedMatrix(FP, [0, 1, 2], [0, 1, 2], [{0: 1}, {1: 1}, {2: 1}])
    assert m.nullspace() == []


def test_generic_row_kernel():
    row = [{0: 17, 1: 23001, 2: 5}]
    basis = nullspace(row, 3, FP)
    # oracle: rank of the 1x3 row is 1
    assert rank(row, 3, FP) == 1
    assert len(basis) == 2
    for v in basis:
        assert (17 * v[0] + 23001 * v[1] + 5 * v[2]) % FP.p == 0


@given(matrices())
def test_rank_nullity_fp(dense):
    ncols = len(dense[0])
    rows = sparse([[x % FP.p for x in r] for r in dense])
    basis = nullspace(rows, ncols, FP)
    assert rank(rows, ncols, FP) + len(basis) == ncols
    for v in basis:
        assert all(sum(r.get(j, 0) * v[j] for j in range(ncols)) % FP.p == 0 for r in rows)
    assert rank(sparse(basis), ncols, FP) == len(basis)


@given(matrices())
def test_rank_nullity_qq_against_sympy(dense):
    ncols = len(dense[0])
    rows = sparse([[Fraction(x, 2) for x in r] for r in dense])
    basis = nullspace(rows, ncols, QQ)
    assert rank(rows, ncols, QQ) == sympy.Matrix(dense).rank()
    assert len(basis) + rank(rows, ncols, QQ) == ncols
    for v in basis:
        assert all(sum(r.get(j, 0) * v[j] for j in range(ncols)) == 0 for r in rows)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6))
def test_flint_path_agrees_with_elimination(seed):
    rng = random.Random(seed)
    nr, nc = rng.randint(50, 70), rng.randint(81, 100)
    # low-rank product so the kernel is large and nontrivial
    k = rng.randint(5, 30)
    left = [[rng.randrange(FP.p) for _ in range(k)] for _ in range(nr)]
    right = [[rng.randrange(FP.p) if rng.random() < 0.5 else 0 for _ in range(nc)] for _ in range(k)]
    dense = [[sum(a * b for a, b in zip(lrow, col)) % FP.p for col in zip(*right)] for lrow in left]
    rows = sparse(dense)
    assert nr * nc > linalg.FLINT_THRESHOLD
    r_flint = rank(rows, nc, FP)
    r_own = len(linalg._echelon_fp(rows, FP.p))
    assert r_flint == r_own
    basis = nullspace(rows, nc, FP)
    assert len(basis) == nc - r_own
    for v in basis[:5]:
        assert all(sum(r.get(j, 0) * v[j] for j in range(nc)) % FP.p == 0 for r in rows)


def test_flint_rational_path_agrees_with_bareiss():
    rng = random.Random(5)
    dense = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(80)] for _ in range(60)]
    dense += [[a + b for a, b in zip(dense[0], dense[1])]]
    rows = sparse(dense)
    ints = linalg._integer_rows(rows, 80)
    _, piv = linalg._bareiss(ints, 80)
    assert rank(rows, 80, QQ) == len(piv) == 60
    basis = nullspace(rows, 80, QQ)
    assert len(basis) == 20
    assert all(sum(r.get(j, 0) * basis[3][j] for j in range(80)) == 0 for r in rows)


def test_apply_and_dense():
    m = GradedMatrix(QQ, [0, 1], [0, 1, 2], [{0: 1, 2: 2}, {1: Fraction(1, 3)}])
    assert m.dense() == [[1, 0, 2], [0, Fraction(1, 3), 0]]
    assert m.apply([1, 3, 1]) == [3, 1]
