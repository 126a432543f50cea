from itertools import combinations_with_replacement, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cuspidal.errors import EmptyInput, IndexOutOfRange, InvalidNotation, PaddingAmbiguous
from cuspidal.multiplicity import (
    SMOOTH, MultiplicitySequence, canonicalize, compact_sequence, contact_orders,
    enumerate_valid, exceptional_intersection, invariants_of, validate_sequence,
)


def test_validation_table():
    assert validate_sequence((2, 1, 1, 1)).ok
    assert validate_sequence((4, 2, 2, 1, 1, 1)).ok
    bad = validate_sequence((3, 1, 1))
    assert not bad.ok
    assert "(ii)" in {v.condition for v in bad.violations}
    with pytest.raises(EmptyInput):
        validate_sequence(())


def test_validation_names_condition_and_index():
    rep = validate_sequence((3, 2, 1, 1))
    # 3 = 2 + 1 holds; 2 = 1 + 1 holds; trailing run of 2 ones after 2 needs 3
    assert [(v.condition, v.index) for v in rep.violations] == [("(ii)", 1)]
    rep = validate_sequence((5, 2, 1, 1, 1))
    assert ("(i)", 1) in [(v.condition, v.index) for v in rep.violations]


@pytest.mark.parametrize("spec,want", [
    ("(2_3)", (2, 2, 2, 1, 1, 1)),
    ([3, 3], (3, 3, 1, 1, 1, 1)),
    ("(5)", (5, 1, 1, 1, 1, 1, 1)),
    ("3,2", (3, 2, 1, 1, 1)),
    ("(1)", (1,)),
])
def test_canonicalize_table(spec, want):
    assert canonicalize(spec).entries == want


def test_canonicalize_errors():
    with pytest.raises(PaddingAmbiguous):
        canonicalize([3, 1, 1])
    with pytest.raises(InvalidNotation):
        canonicalize("(2_x)")
    with pytest.raises(EmptyInput):
        canonicalize("  ")


def test_str_and_json():
    s = canonicalize("(2_3)")
    assert str(s) == "(2_3) = (2,2,2,1,1,1)"
    assert MultiplicitySequence.from_json(s.to_json()) == s
    assert s.to_json()["compact"] == "(2_3)"


@pytest.mark.parametrize("spec,mu,eta,omega,k,rho", [
    ("(2_2)", 4, 2, 1, 4, 2),
    ("(4)", 12, 3, 3, 5, 1),
    ("(1)", 0, 0, 0, 0, 0),
])
def test_invariants_table(spec, mu, eta, omega, k, rho):
    inv = invariants_of(canonicalize(spec))
    assert (inv.milnor, inv.delta, inv.eta, inv.omega, inv.k, inv.rho) == (mu, mu // 2, eta, omega, k, rho)


def test_lemma_closed_forms():
    for m in range(2, 12):
        inv = invariants_of(compact_sequence(m))
        assert inv.eta + inv.omega - 1 == 2 * m - 3
        assert inv.omega == m - 1
    for a in range(1, 12):
        inv = invariants_of(compact_sequence(2, a))
        assert inv.eta + inv.omega - 1 == a
        assert inv.omega == 1
    for m, a in product(range(2, 7), range(1, 5)):
        assert invariants_of(compact_sequence(m, a)).eta == a * (m - 1)


@pytest.mark.parametrize("spec,want", [
    ("(2_2)", {2, 4, 5}),
    ("(3)", {3, 4}),
])
def test_contact_orders_table(spec, want):
    assert contact_orders(canonicalize(spec)) == want


def test_contact_orders_smooth_is_capped():
    assert contact_orders(SMOOTH, cap=10) == set(range(1, 11))


def test_contact_orders_puiseux_max():
    for a in range(1, 10):
        seq = compact_sequence(2, a)
        assert max(contact_orders(seq)) == 2 * a + 1


@pytest.mark.parametrize("i,k,want", [(1, 0, 2), (1, 1, 1), (1, 2, 0)])
def test_exceptional_intersection_table(i, k, want):
    assert exceptional_intersection(canonicalize("(2)"), i, k) == want


def test_exceptional_intersection_range():
    with pytest.raises(IndexOutOfRange):
        exceptional_intersection(canonicalize("(2)"), 0, 0)
    with pytest.raises(IndexOutOfRange):
        exceptional_intersection(canonicalize("(2)"), 3, 2)


def test_enumerate_small():
    assert [s.entries for s in enumerate_valid(1)] == [(2, 1, 1, 1)]
    assert [s.entries for s in enumerate_valid(2)] == [(2, 1, 1, 1), (2, 2, 1, 1, 1)]
    three = {s.entries for s in enumerate_valid(3)}
    assert (3, 1, 1, 1, 1) in three and (2, 2, 2, 1, 1, 1) in three


def _brute_force(max_delta):
    """All multisets of entries >= 2 with small delta, sorted descending,
    padded and filtered by the validity conditions."""
    out = set()
    top = 2 * max_delta
    for length in range(1, max_delta + 1):
        for combo in combinations_with_replacement(range(2, top + 1), length):
            if sum(m * (m - 1) for m in combo) > 2 * max_delta:
                continue
            prefix = tuple(sorted(combo, reverse=True))
            e = prefix + (1,) * (prefix[-1] + 1)
            if validate_sequence(e).ok:
                out.add(e)
    return out


def test_enumerate_matches_brute_force():
    for delta in range(1, 9):
        got = [s.entries for s in enumerate_valid(delta)]
        assert len(got) == len(set(got))
        assert set(got) == _brute_force(delta)


def test_enumerated_properties():
    for seq in enumerate_valid(15):
        inv = invariants_of(seq)
        assert inv.milnor % 2 == 0
        assert inv.omega + inv.rho == inv.k - 1
        if inv.k >= 2:
            assert inv.rho >= 1
        assert canonicalize(seq.format()) == seq
        orders = contact_orders(seq)
        assert seq[0] in orders and seq[0] + seq[1] in orders
        for i in range(1, len(seq)):
            vals = [exceptional_intersection(seq, i, k) for k in range(0, len(seq) - i + 1)]
            assert vals == sorted(vals, reverse=True)
            assert vals[-1] == 0


@given(st.integers(2, 9), st.integers(1, 6))
def test_compact_round_trip(m, a):
    seq = compact_sequence(m, a)
    assert canonicalize(seq.compact_notation()) == seq
    assert seq.compact() == (m, a)
