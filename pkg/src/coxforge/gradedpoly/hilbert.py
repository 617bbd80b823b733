"""Hilbert functions of standard-graded monomial ideals."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

Exps = tuple[int, ...]


def _divides(a: Exps, b: Exps) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimalize(gens: Iterable[Exps]) -> tuple[Exps, ...]:
    gs = sorted(set(tuple(g) for g in gens), key=sum)
    out: list[Exps] = []
    for g in gs:
        if not any(_divides(h, g) for h in out):
            out.append(g)
    return tuple(sorted(out))


def _polymul(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=200_000)
def _numerator(gens: tuple[Exps, ...]) -> tuple[tuple[int, int], ...]:
    if not gens:
        return ((0, 1),)
    if any(sum(g) == 0 for g in gens):
        return ()
    nv = len(gens[0])
    supports = [frozenset(i for i in range(nv) if g[i]) for g in gens]
    if all(not (supports[i] & supports[j]) for i, j in combinations(range(len(gens)), 2)):
        num = {0: 1}
        for g in gens:
            num = _polymul(num, {0: 1, sum(g): -1})
        return tuple(sorted(num.items()))
    # pivot x^e on a variable of some mixed generator, e its least exponent there;
    # no pure power x^f with f <= e survives minimalization, so x^e is not in I
    mixed = [g for s, g in zip(supports, gens) if len(s) > 1]
    counts = [sum(1 for g in mixed if g[i]) for i in range(nv)]
    var = max(range(nv), key=lambda i: counts[i])
    e = min(g[var] for g in mixed if g[var])
    pivot = tuple(e if i == var else 0 for i in range(nv))
    colon = minimalize(tuple(max(x - y, 0) for x, y in zip(g, pivot)) for g in gens)
    plus = minimalize(gens + (pivot,))
    num = dict(_numerator(plus))
    for k, v in _numerator(colon):
        num[k + e] = num.get(k + e, 0) + v
    return tuple(sorted((k, v) for k, v in num.items() if v))


def hilbert_numerator(gens: Iterable[Exps], nvars: int) -> dict[int, int]:
    """Numerator N(t) with HS(k[x]/I) = N(t) / (1 - t)^nvars."""
    g = minimalize(gens)
    if g and len(g[0]) != nvars:
        raise ValueError("exponent vectors do not match nvars")
    return dict(_numerator(g))


def hilbert_function_from_numerator(num: dict[int, int], nvars: int, t: int) -> int:
    return sum(c * math.comb(t - k + nvars - 1, nvars - 1) for k, c in num.items() if t - k >= 0)


def monomial_hilbert_function(gens: Iterable[Exps], nvars: int, t: int) -> int:
    """Number of degree-``t`` monomials in ``nvars`` variables outside the ideal."""
    if t < 0:
        return 0
    return hilbert_function_from_numerator(hilbert_numerator(gens, nvars), nvars, t)


def krull_dimension(gens: Sequence[Exps], nvars: int) -> int:
    """Largest set of variables containing the support of no generator; -1 for the unit ideal.

    ``gens`` may also be a Groebner basis, whose leading monomials are used.
    """
    gens = minimalize(getattr(gens, "leading_monomials", gens))
    if any(sum(g) == 0 for g in gens):
        return -1
    supports = [frozenset(i for i in range(nvars) if g[i]) for g in gens]
    for size in range(nvars, -1, -1):
        for sub in combinations(range(nvars), size):
            s = set(sub)
            if not any(sup <= s for sup in supports):
                return size
    return 0


def hilbert_polynomial(gens: Iterable[Exps], nvars: int) -> list[Fraction]:
    """Coefficients (constant term first) of the Hilbert polynomial of k[x]/I."""
    num = hilbert_numerator(gens, nvars)
    if not num:
        return []
    # dividing out (1 - t) factors leaves the degree of the polynomial
    q = dict(num)
    dim = nvars
    while dim > 0 and sum(q.values()) == 0:
        # synthetic division by (1 - t)
        top = max(q)
        out: dict[int, int] = {}
        acc = 0
        for k in range(top):
            acc += q.get(k, 0)
            if acc:
                out[k] = acc
        q = out
        dim -= 1
    if dim == 0:
        return []
    # sum_k q_k C(t - k + dim - 1, dim - 1), expanded in powers of t
    coeffs = [Fraction(0)] * dim
    for k, c in q.items():
        poly = [Fraction(1)]
        for i in range(1, dim):
            # multiply by (t - k + i) / i
            shift = Fraction(i - k, i)
            new = [Fraction(0)] * (len(poly) + 1)
            for j, a in enumerate(poly):
                new[j] += a * shift
                new[j + 1] += a / i
            poly = new
        for j, a in enumerate(poly):
            coeffs[j] += c * a
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs
