"""Acceptance criteria; each test prints one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py`` or directly as a script.
"""

from __future__ import annotations

import math
import sys
import time

import pytest

from coxforge.coxcli.builtins import LINEAR_DEGREES, PROBES, cy_instance, koszul_instance, linear_instance
from coxforge.coxoracle import (DegeneracyLocus, ci_hilbert, cox_dim, detect_index_sequence, is_regular_sequence,
                                kernel_basis, kernel_dim)
from coxforge.gradedpoly import count_y_monomials
from coxforge.operatoralg import OperatorContext, run_operator_suite
from coxforge.presentation import (Window, compare_dims, compare_with_oracle, converse_probe, free_algebra_dim,
                                   verify_zplus)
from coxforge.presentation.determinantal import determinantal_instance, verify_determinantal

CRITERION_2 = [
    (2, 2, 3, (0, 1, 2)),
    (2, 3, 3, (0, 1, 2)),
    (2, 2, 3, (0, 2)),
    (5, 2, 4, (0, 3, 5)),
    (3, 2, 3, (0, 1, 2, 3)),
]
SEED = 11


def _instances():
    return [koszul_instance(SEED, d, e, n, seq) for d, e, n, seq in CRITERION_2]


@pytest.fixture
def announce(request):
    """Print one verdict line straight to the terminal, bypassing capture."""
    capman = request.config.pluginmanager.getplugin("capturemanager")

    def emit(number: int, ok: bool, detail: str) -> None:
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
        if capman is not None:
            with capman.global_and_fixture_disabled():
                print("\n" + line)
        else:
            print(line)
    return emit


def criterion_1() -> tuple[bool, str]:
    start = time.perf_counter()
    window = Window(-4, 4, 0, 16)
    generic, zero = cy_instance(7, "generic"), cy_instance(7, 0)
    jump = (cox_dim(generic, (-2, 4)), cox_dim(zero, (-2, 4)))
    reports = [compare_with_oracle(inst, window=window) for inst in (generic, zero)]
    elapsed = time.perf_counter() - start
    ok = jump == (0, 1) and all(r.passed for r in reports) and elapsed < 120
    return ok, f"cox_dim(-2,4) generic/t=0 = {jump}, windows {[r.verdict for r in reports]}, {elapsed:.1f}s"


def criterion_2() -> tuple[bool, str]:
    start = time.perf_counter()
    parts = []
    ok = True
    for inst in _instances():
        reg = is_regular_sequence(inst).regular
        rep = compare_with_oracle(inst)
        ok = ok and reg and rep.passed
        parts.append(f"{detect_index_sequence(inst)}:{'ok' if reg and rep.passed else 'bad'}")
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 600
    return ok, f"{' '.join(parts)}, {elapsed:.1f}s"


def criterion_3() -> tuple[bool, str]:
    parts = []
    ok = True
    for name, make in sorted(PROBES.items()):
        pr = converse_probe(make(3))
        good = (not pr.regular) and bool(pr.low_mismatches) and pr.high_slice_match
        ok = ok and good
        first = min((r.a, r.b) for r in pr.low_mismatches) if pr.low_mismatches else None
        parts.append(f"{name}: regular={pr.regular} lowest mismatch {first} high slice={pr.high_slice_match}")
    return ok, "; ".join(parts)


def criterion_4() -> tuple[bool, str]:
    start = time.perf_counter()
    parts = []
    ok = True
    for inst in _instances():
        rep = run_operator_suite(OperatorContext(inst), cases=200, seed=SEED)
        cases = len(rep.cases)
        good = rep.passed and cases >= 200 and bool(rep.psi_records)
        ok = ok and good
        parts.append(f"{detect_index_sequence(inst)}:{cases - len(rep.case_failures())}/{cases}"
                     f" psi {len(rep.psi_records) - len(rep.psi_failures())}/{len(rep.psi_records)}")
    return ok, f"{'; '.join(parts)}, {time.perf_counter() - start:.1f}s"


def criterion_5() -> tuple[bool, str]:
    ok = True
    parts = []
    for inst in _instances():
        seq = detect_index_sequence(inst)
        if seq.l != inst.d:
            continue
        d, e, n = inst.d, inst.e, inst.n
        low = len(kernel_basis(inst, 2, e))
        high = len(kernel_basis(inst, 2, 2 * e))
        # complete-intersection bookkeeping: second Koszul term in degree b
        book = sum((-1) ** j * math.comb(d + 1, j) * count_y_monomials(n, 2 * e - j * e) for j in range(2, d + 2))
        k1 = all(kernel_dim(inst, 1, t + e) == d * count_y_monomials(n, t) for t in range(0, 6))
        good = low == 0 and high == math.comb(d + 1, 2) == book and k1
        ok = ok and good
        parts.append(f"d={d},e={e}: ker A2 {low}/{high} (C(d+1,2)={math.comb(d + 1, 2)}), K1 {'ok' if k1 else 'bad'}")
    return ok, "; ".join(parts)


def criterion_6() -> tuple[bool, str]:
    ok = True
    parts = []
    for inst in _instances():
        seq = detect_index_sequence(inst)
        locus = DegeneracyLocus.of(inst)
        top = inst.e * (seq.l + 1) + 2
        good = all(locus.hilbert_function(b) == ci_hilbert(seq.l, inst.n, inst.e, b) for b in range(top + 1))
        ok = ok and good
        parts.append(f"{seq}: b<={top} {'ok' if good else 'bad'}")
    return ok, "; ".join(parts)


def criterion_7() -> tuple[bool, str]:
    start = time.perf_counter()
    rep = verify_determinantal(determinantal_instance(5))
    elapsed = time.perf_counter() - start
    hp = rep.hilbert_polynomial
    degree, genus = (hp[1], 1 - hp[0]) if len(hp) == 2 else (None, None)
    ok = rep.passed and rep.codimension == 2 and degree == 13 and genus == 21 and elapsed < 300
    return ok, (f"codim {rep.codimension}, HP {hp[1] if hp else '?'}t{hp[0] if hp else '?'} (degree {degree}, "
                f"genus {genus}), relations {sum(rep.operator_relations.values())}/7, "
                f"three-term in I {rep.three_term_in_ideal}, {elapsed:.1f}s")


def criterion_8() -> tuple[bool, str]:
    ok = True
    parts = []
    for d in (2, 3):
        inst = koszul_instance(SEED, d, 2, 3)
        rep = verify_zplus(inst)
        ok = ok and rep.passed and bool(rep.records)
        parts.append(f"d={d}: {rep.generator_count} relations of degree {sorted(set(rep.degrees))}, "
                     f"membership {sum(rep.membership)}/{len(rep.membership)}, "
                     f"{sum(x == y for _, _, x, y in rep.records)}/{len(rep.records)} degrees agree")
    return ok, "; ".join(parts)


def criterion_9() -> tuple[bool, str]:
    inst, _ = linear_instance(7)
    rep = compare_dims(inst, Window(-4, 4, 0, 4), lambda deg: free_algebra_dim(LINEAR_DEGREES, deg), label="free")
    return rep.passed, f"{len(rep.records) - len(rep.mismatches())}/{len(rep.records)} degrees match"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
            criterion_8, criterion_9]


@pytest.mark.parametrize("number", range(1, len(CRITERIA) + 1))
def test_criterion(number, announce):
    ok, detail = CRITERIA[number - 1]()
    announce(number, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    failures = 0
    for i, check in enumerate(CRITERIA, start=1):
        ok, detail = check()
        failures += not ok
        print(f"criterion {i}: {'PASS' if ok else 'FAIL'} - {detail}", flush=True)
    sys.exit(1 if failures else 0)
