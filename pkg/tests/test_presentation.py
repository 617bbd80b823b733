from __future__ import annotations

import json
import math

import pytest
from hypothesis import given, settings, strategies as st

from coxforge.coxcli.builtins import LINEAR_DEGREES, PROBES, koszul_instance, linear_instance
from coxforge.coxoracle import cox_dim, is_regular_sequence
from coxforge.gradedpoly import Poly, count_monomials, monomial_basis
from coxforge.gradedpoly.linalg import rank
from coxforge.presentation import (PresentationError, Window, build_main_presentation, build_zplus_model,
                                   compare_with_oracle, converse_probe, free_algebra_dim, hypersurface_equation,
                                   quotient_dim, quotient_dim_dense, verify_zplus)
from coxforge.presentation.determinantal import CARTIER_BANNER, determinantal_instance, relation_ideal

from conftest import REGULAR_FAMILIES


def test_cy_generic_presentation(cy_generic):
    p = build_main_presentation(cy_generic)
    assert p.ring.aux == (("z1", (-1, 4)), ("z2", (-1, 4)))
    x0, x1, z1, z2 = (p.gen(s) for s in ("x0", "x1", "z1", "z2"))
    g = [gi.embed(p.ring) for gi in cy_generic.g]
    assert p.generators == [x1 * z1 + g[0], x1 * z2 + g[1] - x0 * z1, g[2] - x0 * z2]


def test_cy_zero_presentation(cy_zero):
    p = build_main_presentation(cy_zero)
    assert p.ring.aux == (("w1", (-2, 4)),)
    x0, x1, w = (p.gen(s) for s in ("x0", "x1", "w1"))
    g = [gi.embed(p.ring) for gi in cy_zero.g]
    assert p.generators == [x1 ** 2 * w + g[0], g[2] - x0 ** 2 * w]


@pytest.mark.parametrize("family", REGULAR_FAMILIES)
def test_generators_have_degree_zero_e(family):
    d, e, n, seq = family
    p = build_main_presentation(koszul_instance(11, d, e, n, seq))
    assert len(p.generators) == len(seq)
    assert all(gen.bidegree == (0, e) for gen in p.generators)


def test_quotient_dim_examples(cy_zero, cy_generic):
    p0 = build_main_presentation(cy_zero)
    assert quotient_dim(p0, (-2, 4)) == 1
    for inst in (cy_zero, cy_generic):
        p = build_main_presentation(inst)
        assert quotient_dim(p, (1, 0)) == 2
        assert quotient_dim(p, (2, 4)) == count_monomials(inst.s_ring, (2, 4)) - 1


@pytest.mark.parametrize("family", REGULAR_FAMILIES[:3] + REGULAR_FAMILIES[4:])
def test_only_r_survives_elimination(family):
    """In degree (d, e) the J-span meets S exactly in the line spanned by r."""
    d, e, n, seq = family
    inst = koszul_instance(11, d, e, n, seq)
    p = build_main_presentation(inst)
    deg = (d, e)
    basis = monomial_basis(p.ring, deg)
    index = {m: i for i, m in enumerate(basis)}
    aux = p.ring.aux_slice
    w_cols = {i for m, i in index.items() if any(m[aux])}
    rows = []
    for gen in p.generators:
        ga, gb = gen.bidegree
        for m in monomial_basis(p.ring, (deg[0] - ga, deg[1] - gb)):
            rows.append({index[t]: c for t, c in gen.mul_monomial(m).terms.items()})
    full = rank(rows, len(basis), inst.field)
    projected = rank([{j: c for j, c in r.items() if j in w_cols} for r in rows], len(basis), inst.field)
    assert full - projected == 1
    assert quotient_dim_dense(p, deg) == count_monomials(inst.s_ring, deg) - 1
    assert p.contains(hypersurface_equation(p))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 4), st.integers(-5, 3), st.integers(0, 5))
def test_groebner_count_matches_dense_rank(which, a, b):
    d, e, n, seq = REGULAR_FAMILIES[which]
    p = build_main_presentation(koszul_instance(11, d, e, n, seq))
    if count_monomials(p.ring, (a, b)) <= 1500:
        assert quotient_dim(p, (a, b)) == quotient_dim_dense(p, (a, b))


def test_dense_rank_on_probe():
    p = build_main_presentation(PROBES["duplicated"](3))
    for deg in ((-2, 2), (-2, 3), (-3, 4), (0, 2)):
        assert quotient_dim(p, deg) == quotient_dim_dense(p, deg)


@pytest.mark.parametrize("name", sorted(PROBES))
def test_high_slice_matches_for_any_instance(name):
    inst = PROBES[name](3)
    p = build_main_presentation(inst)
    for a in range(-1, 4):
        for b in range(0, 6):
            assert quotient_dim(p, (a, b)) == cox_dim(inst, (a, b))


def test_regular_instance_passes(small_full):
    rep = compare_with_oracle(small_full)
    assert rep.passed and rep.verdict == "pass"
    assert rep.window == Window(-4, 4, 0, 8)


def test_regular_probe_report(small_full):
    pr = converse_probe(small_full)
    assert pr.regular and pr.match and not pr.warnings


@pytest.mark.parametrize("name", sorted(PROBES))
def test_probes_fail_low(name):
    pr = converse_probe(PROBES[name](3))
    assert not pr.regular and not pr.match
    assert pr.high_slice_match and pr.low_mismatches
    assert all(r.a <= -2 for r in pr.comparison.mismatches())


def test_duplicated_probe_first_failure():
    pr = converse_probe(PROBES["duplicated"](3))
    first = min((r.a, r.b) for r in pr.low_mismatches if r.a == -2)
    assert first == (-2, 2)


def test_restricted_window_passes_without_regularity():
    inst = PROBES["common"](3)
    rep = compare_with_oracle(inst, window=Window(-1, 3, 0, 6))
    assert rep.passed


def test_linear_free_algebra():
    inst, _ = linear_instance(7)
    for a in range(-4, 5):
        for b in range(0, 5):
            assert cox_dim(inst, (a, b)) == free_algebra_dim(LINEAR_DEGREES, (a, b))


def test_free_algebra_counts():
    assert [free_algebra_dim([(1, 0), (1, 0)], (a, 0)) for a in range(4)] == [1, 2, 3, 4]
    assert free_algebra_dim([(1, 0), (-1, 1)], (0, 2)) == 1
    assert free_algebra_dim([(1, 0), (-1, 1)], (-3, 2)) == 0
    with pytest.raises(ValueError):
        free_algebra_dim([(-1, 0)], (0, 0))


def test_report_json_deterministic(small_full):
    a = json.loads(compare_with_oracle(small_full).to_json())
    b = json.loads(compare_with_oracle(small_full).to_json())
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b
    assert a["window"] == {"a_min": -4, "a_max": 4, "b_min": 0, "b_max": 8}
    assert a["instance"]["index_sequence"] == [0, 1, 2]


def test_report_csv(small_full):
    rep = compare_with_oracle(small_full, window=Window(-1, 0, 0, 1))
    lines = rep.to_csv().strip().splitlines()
    assert len(lines) == 1 + 4
    assert lines[0].split(",")[:2] == ["a", "b"]


def test_zplus_single_relation_for_d2(small_full):
    model = build_zplus_model(small_full)
    assert len(model.generators) == math.comb(3, 3)
    z1, z2 = model.gen("z1"), model.gen("z2")
    g = [gi.embed(model.ring) for gi in small_full.g]
    # (0,1,2): g0 (z2 z2 - z1*0) - g1 (z1 z2 - 0) + g2 (z1 z1 - 0)
    assert model.generators[0] == g[0] * z2 * z2 - g[1] * z1 * z2 + g[2] * z1 * z1
    assert model.generators[0].bidegree == (-2, 3 * small_full.e)


def test_zplus_needs_full_sequence(gap_instance):
    with pytest.raises(PresentationError):
        build_zplus_model(gap_instance)


def test_zplus_d3():
    inst = koszul_instance(11, 3, 2, 3)
    rep = verify_zplus(inst, Window(-5, 0, 0, 8))
    assert rep.generator_count == 4 and all(rep.membership)
    assert rep.records and all(a <= -1 for a, _, _, _ in rep.records)
    assert rep.passed


def test_determinantal_relations_shape():
    data = determinantal_instance(5)
    ideal = relation_ideal(data)
    assert len(ideal.generators) == 10
    assert all(gen.is_homogeneous() for gen in ideal.generators)
    assert not is_regular_sequence(data.inst).regular
    assert "Cartier" in CARTIER_BANNER
