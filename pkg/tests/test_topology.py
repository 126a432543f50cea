from math import gcd

import networkx as nx
import pytest

from cuspidal.algebra import UniPoly
from cuspidal.branches import BranchGerm, resolve_sequence, trace_blowups
from cuspidal.errors import UnsupportedFamily
from cuspidal.family import FamilyParams, enumerate_degree
from cuspidal.invariants import curve_numerics, family_data
from cuspidal.multiplicity import canonicalize, compact_sequence, invariants_of
from cuspidal.topology import (
    DualGraph, cusp_dual_graph, cusp_subgraphs, curve_dual_graph, free_reduce, graph_from_trace,
    invert, pi1_presentation,
)

ALL = [p for d in range(4, 13) for p in enumerate_degree(d)]


def as_nx(graph):
    g = nx.Graph()
    for n in graph.nodes:
        g.add_node(n.id, weight=n.weight, arrow=n.id == graph.curve_arrow)
    g.add_edges_from(graph.edges)
    return g


def simulated(seq):
    """Graph recorded while blowing up a germ with this sequence."""
    m, a = seq.compact()
    if m == 2:
        x, y = UniPoly.monomial(2), UniPoly.monomial(2 * a + 1)
    else:
        x, y = UniPoly.monomial(m), UniPoly.monomial(m + 1)
    g = BranchGerm.from_polys(x, y, 64)
    assert resolve_sequence(g) == seq
    return graph_from_trace(trace_blowups(g, seq.k).steps[-1])


@pytest.mark.parametrize("spec", ["(2)", "(2_2)", "(2_5)", "(3)", "(4)", "(7)", "(10)"])
def test_template_matches_blowup_simulation(spec):
    seq = canonicalize(spec)
    ours = cusp_dual_graph(seq)
    sim = simulated(seq)
    match = lambda u, v: u["weight"] == v["weight"] and u["arrow"] == v["arrow"]
    assert nx.is_isomorphic(as_nx(ours), as_nx(sim), node_match=match)
    assert ours == sim


def test_graph_of_three():
    g = cusp_dual_graph("(3)")
    assert {n.label: n.weight for n in g.nodes} == {"E_1": -4, "E_2": -2, "E_3": -2, "E_4": -1}
    assert g.curve_arrow == "E4"
    assert len(g.nodes) == 3 + 1


def test_ordinary_cusp_uses_the_a1_picture():
    g = cusp_dual_graph("(2)")
    assert {n.label: n.weight for n in g.nodes} == {"E_1": -3, "E_2": -2, "E_3": -1}
    assert sorted(g.edges) == [("E1", "E3"), ("E2", "E3")]
    assert g.curve_arrow == "E3"


def test_unsupported_sequences():
    with pytest.raises(UnsupportedFamily):
        cusp_dual_graph("(4,2,2,1,1,1)")
    with pytest.raises(UnsupportedFamily):
        cusp_dual_graph("(3_2)")


@pytest.mark.parametrize("spec", ["(2)", "(2_3)", "(3)", "(6)"])
def test_cusp_graph_invariants(spec):
    seq = canonicalize(spec)
    g = cusp_dual_graph(seq)
    assert g.is_connected()
    assert [n.weight for n in g.nodes].count(-1) == 1
    assert g.node(g.curve_arrow).weight == -1
    assert all(n.weight < 0 for n in g.nodes)
    assert nx.is_tree(as_nx(g))
    assert g.reduced_square() == -invariants_of(seq).omega - 1


@pytest.mark.parametrize("params", ALL, ids=str)
def test_curve_graph(params):
    g = curve_dual_graph(params)
    assert g.is_connected()
    assert g.node("C").weight == curve_numerics(family_data(params)).c_tilde_sq
    parts = cusp_subgraphs(g)
    seqs = [compact_sequence(params.d - 2), compact_sequence(2, params.a), compact_sequence(2, params.b)]
    assert len(g.nodes) == 1 + sum(len(cusp_dual_graph(s).nodes) for s in seqs)
    for ids, seq in zip(parts.values(), seqs):
        weights = [g.node(i).weight for i in ids]
        assert weights.count(-1) == 1
        assert g.reduced_square(ids) == -invariants_of(seq).omega - 1
    # D^2 from the graph equals the numeric value
    assert g.reduced_square() == curve_numerics(family_data(params)).d_sq


def test_quartic_graph_size():
    assert len(curve_dual_graph(FamilyParams(4, 1)).nodes) == 10
    assert curve_dual_graph(FamilyParams(5, 2)).node("C").weight == -3


def test_graph_json_round_trip():
    g = cusp_dual_graph("(2_3)")
    assert DualGraph.from_json(g.to_json()) == g


def test_pi1_examples():
    q = pi1_presentation(FamilyParams(4, 1))
    assert q.meta["n"] == 1 and not q.meta["abelian"] and q.meta["finite"] is True
    q = pi1_presentation(FamilyParams(5, 2))
    assert q.meta["n"] == 0 and q.meta["abelian"] and q.meta["finite"] is None
    a, b = pi1_presentation(FamilyParams(13, 7)), pi1_presentation(FamilyParams(13, 10))
    assert a == b and a.meta["name"] == "G_{13,1}" and a.meta["finite"] is False
    assert pi1_presentation(FamilyParams(7, 4)).meta["finite"] is True


def test_pi1_relators_are_reduced_and_correct():
    for p in ALL:
        pr = pi1_presentation(p)
        n = pr.meta["n"]
        for r in pr.relators:
            assert free_reduce(r) == r
        vu = "vu" * n
        assert pr.relators[0] == free_reduce("u" + vu + invert(vu + "v"))
        assert pr.relators[1] == "vu" * (p.d - 1) + "V" * (p.d - 2)


def test_pi1_symmetric_in_a_and_b():
    # parameters are stored with a >= b; the group only sees gcd(2a+1, 2b+1)
    for d in range(4, 20):
        for p in enumerate_degree(d):
            swapped = (gcd(2 * p.b + 1, 2 * p.a + 1) - 1) // 2
            assert pi1_presentation(p).meta["n"] == swapped
            same_n = [q for q in enumerate_degree(d)
                      if gcd(2 * q.a + 1, 2 * q.b + 1) == gcd(2 * p.a + 1, 2 * p.b + 1)]
            for q in same_n:
                assert pi1_presentation(q) == pi1_presentation(p)


def test_free_reduce():
    assert free_reduce("uUvVu") == "u"
    assert invert("uvV") == "vVU"
