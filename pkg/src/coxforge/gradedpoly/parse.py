"""Text format for polynomials: ``3*y0^2*y1 - y2*y3^2``, ``1/2*x0*w1``."""

from __future__ import annotations

import re
from fractions import Fraction

from .poly import Poly
from .ring import RingSpec

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class PolyParseError(ValueError):
    def __init__(self, message: str, column: int, line: int | None = None):
        self.column = column
        self.line = line
        where = f"line {line}, column {column}" if line is not None else f"column {column}"
        super().__init__(f"{where}: {message}")
        self.message = message


def _tokens(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        col = m.start(m.lastindex) + 1
        if m.group(1) is not None:
            out.append(("num", int(m.group(1)), col))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), col))
        else:
            out.append(("op", m.group(3), col))
        pos = m.end()
    out.append(("end", None, len(text) + 1))
    return out


def parse_poly(text: str, ring: RingSpec, line: int | None = None) -> Poly:
    """Parse ``text`` into a polynomial of ``ring``; unknown symbols are rejected."""
    toks = _tokens(text)
    i = 0

    def fail(msg, col):
        raise PolyParseError(msg, col, line)

    def peek():
        return toks[i]

    def take():
        nonlocal i
        t = toks[i]
        i += 1
        return t

    def number():
        kind, val, col = take()
        if kind != "num":
            fail("expected a number", col)
        return val

    def term():
        coef = Fraction(1)
        mono = [0] * ring.nvars
        while True:
            kind, val, col = peek()
            if kind == "num":
                take()
                c = Fraction(val)
                if peek()[:2] == ("op", "/"):
                    take()
                    den = number()
                    if den == 0:
                        fail("zero denominator", col)
                    c /= den
                coef *= c
            elif kind == "name":
                take()
                if val not in ring.index:
                    fail(f"unknown symbol {val!r}", col)
                e = 1
                if peek()[:2] == ("op", "^"):
                    take()
                    e = number()
                mono[ring.index[val]] += e
            else:
                fail("expected a coefficient or variable", col)
            if peek()[:2] == ("op", "*"):
                take()
                continue
            return coef, tuple(mono)

    if peek()[0] == "end":
        fail("empty polynomial", 1)
    acc: dict = {}
    sign = 1
    if peek()[:2] in (("op", "-"), ("op", "+")):
        sign = -1 if take()[1] == "-" else 1
    while True:
        coef, mono = term()
        acc[mono] = acc.get(mono, 0) + sign * coef
        kind, val, col = peek()
        if kind == "end":
            break
        if kind == "op" and val in "+-":
            take()
            sign = -1 if val == "-" else 1
            continue
        fail(f"unexpected {val!r}", col)
    try:
        return Poly(ring, acc)
    except ZeroDivisionError as exc:
        raise PolyParseError(str(exc), 1, line) from exc
