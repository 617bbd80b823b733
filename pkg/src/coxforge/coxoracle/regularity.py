"""Regular-sequence test for the nonzero forms via the codimension of I_Y."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from ..gradedpoly import GroebnerBasis, Poly, RingSpec, groebner_basis
from ..gradedpoly.hilbert import hilbert_polynomial, krull_dimension, monomial_hilbert_function
from ..scalar import Field
from .instance import HypersurfaceInstance, IndexSequence, detect_index_sequence


class DegeneracyLocus:
    """The ideal generated by the nonzero g_i, with a lazily computed Groebner basis."""

    def __init__(self, forms: list[Poly]):
        if not forms:
            raise ValueError("need at least one form")
        self.forms = list(forms)
        self.ring: RingSpec = forms[0].ring
        self._gb: GroebnerBasis | None = None
        self._lock = threading.Lock()

    @classmethod
    def of(cls, inst: HypersurfaceInstance) -> DegeneracyLocus:
        key = "locus"
        if key not in inst._cache:
            inst._cache[key] = cls([g for g in inst.g if g])
        return inst._cache[key]

    @property
    def groebner(self) -> GroebnerBasis:
        with self._lock:
            if self._gb is None:
                self._gb = groebner_basis(self.forms)
            return self._gb

    @property
    def nvars(self) -> int:
        return self.ring.n + 1

    def krull_dimension(self) -> int:
        return krull_dimension(self.groebner.leading_monomials, self.nvars)

    def codimension(self) -> int:
        k = self.krull_dimension()
        return self.nvars if k < 0 else self.nvars - k

    def hilbert_function(self, b: int) -> int:
        return monomial_hilbert_function(self.groebner.leading_monomials, self.nvars, b)

    def hilbert_polynomial(self) -> list[Fraction]:
        return hilbert_polynomial(self.groebner.leading_monomials, self.nvars)


@dataclass(frozen=True)
class RegularityReport:
    regular: bool
    codimension: int
    krull_dimension: int
    expected_codimension: int
    field: str
    certified: bool | None = None

    def __bool__(self):
        return self.regular


def lift_to_rationals(poly: Poly) -> Poly:
    """Integer lift with symmetric representatives, as a polynomial over QQ."""
    fld = poly.ring.field
    ring = RingSpec(poly.ring.n, Field.rational(), poly.ring.aux, poly.ring.has_x)
    return Poly(ring, {m: fld.symmetric(c) for m, c in poly.terms.items()})


def is_regular_sequence(inst: HypersurfaceInstance, seq: IndexSequence | None = None,
                        certify: bool = False) -> RegularityReport:
    """Regular iff codim I_Y = l + 1 (homogeneous forms in a Cohen-Macaulay ring).

    With ``certify`` the computation is repeated over QQ on the integer lift;
    for a prime-field instance a positive mod-p answer already implies the
    lift is regular, the rerun confirms it independently.
    """
    seq = seq or detect_index_sequence(inst)
    expected = seq.l + 1
    nv = inst.n + 1
    if expected > nv:
        return RegularityReport(False, -1, -1, expected, str(inst.field), False if certify else None)
    locus = DegeneracyLocus.of(inst)
    kd = locus.krull_dimension()
    codim = locus.codimension()
    certified = None
    if certify:
        if inst.field.p is None:
            certified = codim == expected
        else:
            lifted = DegeneracyLocus([lift_to_rationals(g) for g in locus.forms])
            certified = lifted.codimension() == expected
    return RegularityReport(codim == expected, codim, kd, expected, str(inst.field), certified)
