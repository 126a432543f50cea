from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cuspidal.errors import DegenerateProjection, DomainError, InvariantViolation, TooFewCusps
from cuspidal.family import FamilyParams, enumerate_degree
from cuspidal.invariants import (
    CurveSingularityData, blowup_kinds, canonical_degree_recursive, chi_theta, chi_theta_stepwise,
    curve_numerics, family_data, genus_identity_check, invariant_report, last_singular_sum,
    projection_bound, rigidity_report, self_intersection_direct, truncated_sum, unobstructed_check,
)
from cuspidal.multiplicity import canonicalize, enumerate_valid, invariants_of


def data(d, *cusps):
    return CurveSingularityData.of(d, *cusps)


@pytest.mark.parametrize("d,cusps,chi", [
    (4, ["(2)", "(2)", "(2)"], 0),
    (5, ["(3)", "(2_2)", "(2)"], 0),
    (3, ["(2)"], 1),
])
def test_chi_table(d, cusps, chi):
    value, parts = chi_theta(data(d, *cusps))
    assert value == chi
    assert len(parts) == len(cusps)


def test_chi_breakdown():
    _, parts = chi_theta(data(5, "(3)", "(2_2)", "(2)"))
    assert [p.contribution for p in parts] == [3, 2, 1]


def test_quartic_numerics():
    n = curve_numerics(data(4, "(2)", "(2)", "(2)"))
    assert (n.c_tilde_sq, n.k_dot_c) == (-2, 0)
    assert n.e_p_sq == (-2, -2, -2)
    # D = C~ + sum E_P with C~.E_P = 1: -2 + 2*3 - 6
    assert n.d_sq == -2


def test_quintic_numerics():
    n = curve_numerics(data(5, "(3)", "(2_2)", "(2)"))
    assert (n.c_tilde_sq, n.k_dot_c) == (-3, 1)
    assert n.d_sq == -3 + 6 + (-3 - 2 - 2)


def test_sums_use_the_right_convention():
    dd = data(5, "(3)", "(2_2)", "(2)")
    assert truncated_sum(dd) == 3 + 4 + 2
    assert last_singular_sum(dd) == 3 + 2 + 2


@pytest.mark.parametrize("d,cusps,want", [
    (4, ["(2)", "(2)", "(2)"], True),
    (5, ["(3)", "(2_2)", "(2)"], True),
    (5, ["(3)", "(2)", "(2)"], False),
])
def test_genus_table(d, cusps, want):
    assert genus_identity_check(data(d, *cusps)) is want


def test_nonrational_input_skips_direct_check():
    # the closed forms assume the genus formula; d^2 - sum m^2 disagrees here
    dd = data(5, "(3)", "(2)", "(2)")
    n = curve_numerics(dd)
    assert n.c_tilde_sq != self_intersection_direct(dd)


def test_adjunction_enforced_for_rational_input(monkeypatch):
    import cuspidal.invariants as inv
    monkeypatch.setattr(inv, "canonical_degree_recursive", lambda d: 99)
    with pytest.raises(InvariantViolation):
        inv.curve_numerics(data(4, "(2)", "(2)", "(2)"))


@pytest.mark.parametrize("d,src,others,lhs,rhs,holds", [
    (6, "(4,1,1,1,1,1)", ["(2_2)", "(2_2)"], 2, 2, True),
    (4, "(2,1,1,1)", ["(2)", "(2)"], 2, 2, True),
    (5, "(3)", ["(2)", "(2)", "(2)"], 3, 2, False),
])
def test_projection_bound_table(d, src, others, lhs, rhs, holds):
    b = projection_bound(d, canonicalize(src), others)
    assert (b.lhs, b.rhs, b.holds) == (lhs, rhs, holds)


def test_projection_from_too_deep_a_point():
    with pytest.raises(DegenerateProjection):
        projection_bound(4, "(4)", [])


def test_unobstructed_examples():
    u = unobstructed_check(data(3, "(2)"))
    assert u.truncated_sum == 2 and u.cond_4_2
    for d in range(4, 13):
        for p in enumerate_degree(d):
            u = unobstructed_check(family_data(p))
            assert u.truncated_sum == 3 * (d - 2) and u.cond_4_2
            assert u.k_dot_c == d - 4 and u.last_singular_sum == d + 2 and u.cond_4_1b


def test_rigidity_examples():
    r = rigidity_report(data(4, "(2)", "(2)", "(2)"))
    assert r.identity_holds and r.kappa == 3 and r.kappa_below_bound
    r = rigidity_report(data(6, "(4)", "(2_2)", "(2_2)"))
    assert r.contribution_sum == 9 and r.identity_holds
    r = rigidity_report(data(30, *["(2)"] * 10))
    assert not r.kappa_below_bound
    assert "not projectively rigid if realizable" in r.note
    with pytest.raises(TooFewCusps):
        rigidity_report(data(3, "(2)"))


def test_report_without_rigidity_section():
    rep = invariant_report(data(3, "(2)"))
    assert rep.rigidity_identity_ok is None
    assert "at least 3" in rep.kappa_bound_note
    assert rep.chi == 1


def test_data_validation():
    with pytest.raises(DomainError):
        data(2, "(2)")
    with pytest.raises(DomainError):
        data(4, "(1)")


@pytest.mark.parametrize("params", [p for d in range(4, 13) for p in enumerate_degree(d)], ids=str)
def test_family_identities(params):
    rep = invariant_report(family_data(params))
    d = params.d
    assert rep.chi == 0
    assert rep.rigidity_identity_ok
    assert rep.c_tilde_sq == -(d - 2)
    assert rep.k_dot_c == d - 4
    assert rep.d_sq == 6 - 2 * d
    assert rep.e_p_sq == (-(d - 2), -2, -2)
    assert rep.genus_ok and rep.unobstructed_hint


def test_blowup_kinds_count_inner_blowups():
    for seq in enumerate_valid(12):
        kinds = blowup_kinds(seq)
        inv = invariants_of(seq)
        assert kinds[0] == "first"
        if len(kinds) > 1:
            assert kinds[1] == "outer"
        assert kinds.count("inner") == inv.omega
        assert kinds.count("outer") == inv.rho


seqs = st.sampled_from(list(enumerate_valid(10)))


@settings(max_examples=60)
@given(st.integers(3, 15), st.lists(seqs, min_size=1, max_size=5))
def test_closed_form_matches_stepwise(d, cusps):
    dd = CurveSingularityData(d, tuple(cusps))
    assert chi_theta(dd)[0] == chi_theta_stepwise(dd)
    n = curve_numerics(dd, rational=False)
    if genus_identity_check(dd):
        assert n.k_dot_c == canonical_degree_recursive(dd)
    assert n.d_sq == n.c_tilde_sq + 2 * dd.s + sum(n.e_p_sq)


def rational_data(max_d, max_cusps=3):
    pool = list(enumerate_valid((max_d - 1) * (max_d - 2) // 2))
    for d in range(3, max_d + 1):
        target = (d - 1) * (d - 2)
        fits = [s for s in pool if invariants_of(s).milnor <= target and s.multiplicity < d]
        for n in range(1, max_cusps + 1):
            for combo in combinations_with_replacement(fits, n):
                if sum(invariants_of(s).milnor for s in combo) == target:
                    yield CurveSingularityData(d, combo)


def test_rational_data_cross_checks():
    count = 0
    for dd in rational_data(7):
        n = curve_numerics(dd)
        assert n.c_tilde_sq == self_intersection_direct(dd)
        assert n.k_dot_c == canonical_degree_recursive(dd)
        assert n.k_dot_c + n.c_tilde_sq == -2
        count += 1
    assert count > 50


def test_report_json_keys():
    rep = invariant_report(family_data(FamilyParams(6, 2)))
    js = rep.to_json()
    for key in ("chi", "per_cusp", "c_tilde_sq", "k_dot_c", "d_sq", "e_p_sq", "genus_ok",
                "rigidity_identity_ok", "unobstructed_hint", "kappa_bound_note"):
        assert key in js
