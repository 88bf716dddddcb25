from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cdgraph.classifier import (
    CUT_OUTCOMES,
    DescriptorError,
    GroupDescriptor,
    Verdict,
    classify,
    descriptor_sweep,
    format_descriptor,
    format_verdict,
    graph_outcome,
    group_vertex_set,
    p_is_complete_where_required,
    parse_descriptor,
    predict_graph,
)
from cdgraph.degree_graphs import SimpleFamily, UnknownFamilyError, sporadic_graph
from cdgraph.graph import PrimeGraph, complete_graph, components, cut_vertices, delete


def D(tag: str, *params: int, **kw) -> GroupDescriptor:
    if tag == "Sz":
        fam = SimpleFamily("Sz", 2, params[0])
    else:
        fam = SimpleFamily(tag, *params)
    kw.setdefault("candidate_p", 2)
    return GroupDescriptor(socle=fam, **kw)


# -- examples with hand-derived or quoted graphs ---------------------------------


def test_suzuki_a3():
    v = classify(D("Sz", 3, candidate_p=7, quotient_vertices={7}))
    assert (v.outcome, v.matched_clause, v.cut_vertex) == ("connected_cut_vertex", "A(a)", 7)
    assert v.predicted_graph == PrimeGraph({2, 5, 7, 13}, [(2, 7), (5, 7), (5, 13), (7, 13)])


def test_suzuki_needs_mersenne_prime():
    v = classify(D("Sz", 11, candidate_p=23))
    assert v.outcome == "not_covered"
    assert ("A(a)", "2^a - 1 = 2047 is prime") in v.violations


def test_m11():
    v = classify(D("M11", candidate_p=5, direct_product_with_R=True))
    assert (v.outcome, v.matched_clause, v.cut_vertex) == ("connected_cut_vertex", "A(c)", 5)
    assert v.predicted_graph == sporadic_graph("M11")


def test_m11_needs_direct_product():
    v = classify(D("M11", candidate_p=5))
    assert v.outcome == "not_covered"
    assert ("A(c)", "G = K x R") in v.violations


def test_j1_dashed_edge():
    plain = classify(D("J1", candidate_p=2, direct_product_with_R=True))
    dashed = classify(
        D("J1", candidate_p=2, direct_product_with_R=True, radical_vertices={2}, quotient_vertices={2})
    )
    assert plain.predicted_graph == sporadic_graph("J1")
    assert dashed.predicted_graph.edges == sporadic_graph("J1").edges | {(2, 11)}
    assert cut_vertices(plain.predicted_graph) == cut_vertices(dashed.predicted_graph) == {2}


def test_psl34():
    v = classify(D("PSL3_4", candidate_p=5, outer_index=3))
    assert v.matched_clause == "A(b)"
    assert classify(D("PSL3_4", candidate_p=5, outer_index=2)).outcome == "not_covered"


def test_c_a_psl2_11():
    v = classify(D("PSL2", 11, 1, outer_index=2))
    assert (v.outcome, v.matched_clause, v.cut_vertex) == ("disconnected_cut_vertex", "C(a)", 2)
    assert v.predicted_graph == PrimeGraph({2, 3, 5, 11}, [(2, 3), (2, 5)])
    assert components(v.predicted_graph) == [{2, 3, 5}, {11}]


@pytest.mark.parametrize(
    "q, t, a, text",
    [
        (7, 7, 1, "t^a is a Mersenne prime"),
        (9, 3, 2, "t^a != 9"),
        (17, 17, 1, "t^a is a Fermat prime"),
        (31, 31, 1, "t^a is a Mersenne prime"),
        (257, 257, 1, "t^a is a Fermat prime"),
    ],
)
def test_c_a_exclusions(q, t, a, text):
    v = classify(D("PSL2", t, a))
    assert v.outcome == "not_covered"
    assert ("C(a)", text) in v.violations


def test_c_a_needs_p_power_index():
    v = classify(D("PSL2", 3, 3, outer_index=3))
    assert ("C(a)", "|G:KR| = p^b (|G:KR| = 3, p = 2)") in v.violations


def test_e_iii():
    v = classify(D("PSL2", 13, 1, residual_shape="extension_special"))
    assert v.matched_clause == "A(e)(iii)"
    assert v.predicted_graph == PrimeGraph({2, 3, 7, 13}, [(2, 3), (2, 7), (2, 13), (7, 13)])
    assert cut_vertices(v.predicted_graph) == {2}


def test_e_iii_only_for_13():
    v = classify(D("PSL2", 11, 1, residual_shape="extension_special"))
    assert ("A(e)(iii)", "t^a = 13 (3^6 module for SL2(13))") in v.violations


def test_e_i_join_construction():
    # Gamma1 = {2}, Gamma2 = {3} and {5}, 11 isolated, then 7 joined to all
    v = classify(D("PSL2", 11, 1, candidate_p=7, quotient_vertices={7}))
    assert v.matched_clause == "A(e)(i)"
    expected = PrimeGraph({2, 3, 5, 7, 11}, [(2, 3), (2, 5), (2, 7), (3, 7), (5, 7), (7, 11)])
    assert v.predicted_graph == expected


def test_e_i_outer_part_enters_gamma1():
    # S = PSL2(5^3), |G:KR| = 3: Gamma1 = {2, 3}, Gamma2 = {31} and {7}, 5 isolated, 7 = p
    v = classify(D("PSL2", 5, 3, candidate_p=7, quotient_vertices={7}, outer_index=3))
    assert v.matched_clause == "A(e)(i)"
    g = v.predicted_graph
    assert g.vertices == {2, 3, 5, 7, 31}
    assert g.neighbours(5) == {7}
    assert g.neighbours(2) == {3, 7, 31}
    assert g.neighbours(3) == {2, 7, 31}
    assert cut_vertices(g) == {7}


def test_e_i_rejects_t_dividing_index():
    v = classify(D("PSL2", 3, 3, candidate_p=7, quotient_vertices={7}, outer_index=3))
    assert ("A(e)(i)", "t does not divide |G/KR|") in v.violations


def test_e_ii_pendant():
    v = classify(D("PSL2", 11, 1, candidate_p=7, quotient_vertices={7}, residual_shape="extension_natural"))
    assert v.matched_clause == "A(e)(ii)"
    g = v.predicted_graph
    assert g.neighbours(11) == {7}
    assert g == PrimeGraph(g.vertices, [*complete_graph({2, 3, 5, 7}).edges, (7, 11)])


def test_f_i_p_two():
    v = classify(D("PSL2", 2, 3, outer_index=1, quotient_vertices={2}))
    assert v.matched_clause == "A(f)(i)"
    assert v.predicted_graph == PrimeGraph({2, 3, 7}, [(2, 7), (2, 3)])
    assert any("union" in n for n in v.notes)


def test_f_i_union_with_empty_quotient():
    # V(G/K) empty but pi(G/KR) = {2}: the union reading accepts it
    v = classify(D("PSL2", 2, 4, outer_index=2))
    assert v.matched_clause == "A(f)(i)"
    assert "V(G/K) = {}" in v.notes[0]
    v = classify(D("PSL2", 2, 4, outer_index=2, quotient_vertices={2}))
    assert v.matched_clause == "A(f)(i)"
    v = classify(D("PSL2", 2, 4, outer_index=4, candidate_p=3))
    assert any(c == "A(f)(i)" and t.startswith("first alternative") for c, t in v.violations)


def test_f_i_odd_p():
    v = classify(D("PSL2", 2, 3, candidate_p=3, outer_index=3, quotient_vertices={3}))
    assert v.matched_clause == "A(f)(i)"
    g = v.predicted_graph
    # Gamma1 = {3}, Gamma2 = {7} (pi(9) - {3} is empty); 2 isolated then joined to 3
    assert g == PrimeGraph({2, 3, 7}, [(3, 7), (2, 3)])


def test_f_ii_needs_sylow_condition():
    base = dict(candidate_p=3, quotient_vertices={3}, residual_shape="extension_natural", outer_index=1)
    assert classify(D("PSL2", 2, 3, sylow2_condition=True, **base)).matched_clause == "A(f)(ii)"
    v = classify(D("PSL2", 2, 3, **base))
    assert ("A(f)(ii)", "T' = (T cap K)' for a Sylow 2-subgroup T") in v.violations


def test_b_a_star_for_direct_product():
    v = classify(D("PSL2", 2, 2, candidate_p=7, quotient_vertices={7}, radical_vertices={7}, direct_product_with_R=True))
    assert v.matched_clause == "B(a)"
    assert v.predicted_graph == PrimeGraph({2, 3, 5, 7}, [(2, 7), (3, 7), (5, 7)])


def test_b_a_triangle_otherwise():
    v = classify(D("PSL2", 2, 2, candidate_p=7, quotient_vertices={7}))
    assert v.predicted_graph == PrimeGraph({2, 3, 5, 7}, [(2, 3), (2, 7), (3, 7), (5, 7)])


def test_b_a_double_cover():
    v = classify(D("PSL2", 5, 1, candidate_p=7, quotient_vertices={7}, residual_shape="sl2_cover"))
    assert v.matched_clause == "B(a)"
    assert v.predicted_graph == PrimeGraph({2, 3, 5, 7}, [(2, 3), (2, 7), (3, 7), (5, 7)])


def test_b_b_i_triangle():
    v = classify(D("PSL2", 2, 2, candidate_p=7, quotient_vertices={7}, residual_shape="extension_natural"))
    assert v.matched_clause == "B(b)(i)"
    assert v.predicted_graph == PrimeGraph({2, 3, 5, 7}, [(3, 5), (3, 7), (5, 7), (2, 7)])


@pytest.mark.parametrize(
    "socle, kw, clause, path",
    [
        (("PSL2", 2, 2), dict(candidate_p=5, residual_shape="extension_special", direct_product_with_R=True), "B(b)(ii)", [(2, 5), (3, 5)]),
        (("PSL2", 5, 1), dict(candidate_p=2, residual_shape="extension_special"), "B(c)(ii)", [(2, 3), (2, 5)]),
        (("PSL2", 2, 2), dict(candidate_p=3, quotient_vertices={3}), "B(a)", [(2, 3), (3, 5)]),
    ],
)
def test_b_paths(socle, kw, clause, path):
    v = classify(D(*socle, **kw))
    assert v.matched_clause == clause
    assert v.predicted_graph == PrimeGraph({2, 3, 5}, path)


def test_b_b_ii_requires_both_flags():
    v = classify(D("PSL2", 2, 2, candidate_p=5, residual_shape="extension_special"))
    assert ("B(b)(ii)", "G = K x R0 with R0 = C_G(K)") in v.violations


def test_c_b():
    v = classify(D("PSL2", 2, 5, candidate_p=5, outer_index=5))
    assert (v.matched_clause, v.cut_vertex) == ("C(b)", 5)
    # pi(31) = {31}, pi(33) = {3, 11}
    assert v.predicted_graph == PrimeGraph({2, 3, 5, 11, 31}, [(5, 31), (3, 5), (5, 11), (3, 11)])


def test_c_b_degenerate_side():
    v = classify(D("PSL2", 2, 3, candidate_p=3, outer_index=3))
    assert (v.outcome, v.matched_clause) == ("disconnected_no_cut_vertex", "C(b)")
    assert v.predicted_graph == PrimeGraph({2, 3, 7}, [(3, 7)])
    assert v.notes


def test_three_components():
    v = classify(D("PSL2", 2, 4))
    assert (v.outcome, v.matched_clause) == ("disconnected_no_cut_vertex", "C(three-components)")
    assert components(v.predicted_graph) == [{2}, {3, 5}, {17}]


def test_a5_without_cut_vertex():
    v = classify(D("PSL2", 2, 2))
    assert (v.outcome, v.matched_clause) == ("disconnected_no_cut_vertex", "C(t^a=4)")
    assert v.predicted_graph == PrimeGraph({2, 3, 5})
    s5 = classify(D("PSL2", 5, 1, outer_index=2))
    assert (s5.outcome, s5.predicted_graph) == ("disconnected_no_cut_vertex", None)


# -- validation ------------------------------------------------------------------


@pytest.mark.parametrize(
    "kw, field",
    [
        (dict(socle=SimpleFamily("PSL2", 7, 1), candidate_p=2, outer_index=3), "outer_index"),
        (dict(socle=SimpleFamily("Sz", 2, 5), candidate_p=2, outer_index=3), "outer_index"),
        (dict(socle=SimpleFamily("M11"), candidate_p=4), "p"),
        (dict(socle=SimpleFamily("M11"), candidate_p=5, radical_vertices={5, 7}), "radical_vertices"),
        (dict(socle=SimpleFamily("M11"), candidate_p=5, quotient_vertices={9}), "quotient_vertices"),
        (dict(socle=SimpleFamily("M11"), candidate_p=5, direct_product_with_R=True, radical_vertices={5}), "quotient_vertices"),
        (dict(socle=SimpleFamily("PSL2", 7, 1), candidate_p=2, outer_index=2, outer_part_odd=True), "outer_part_odd"),
        (dict(socle=SimpleFamily("SL2", 7, 1), candidate_p=2), "socle"),
        (dict(socle=SimpleFamily("M11"), candidate_p=5, residual_shape="perfect"), "residual_shape"),
        (dict(socle=SimpleFamily("M11"), candidate_p=5, outer_index=0), "outer_index"),
    ],
)
def test_descriptor_errors(kw, field):
    with pytest.raises(DescriptorError) as info:
        GroupDescriptor(**kw)
    assert info.value.field == field


def test_sl2_even_socle_canonicalised():
    d = GroupDescriptor(socle=SimpleFamily("SL2", 2, 3), candidate_p=2)
    assert d.socle == SimpleFamily("PSL2", 2, 3)


def test_verdict_invariants():
    with pytest.raises(ValueError):
        Verdict("connected_cut_vertex", "A(c)", 3, sporadic_graph("M11"))
    with pytest.raises(ValueError):
        Verdict("connected_cut_vertex", "A(c)", 5, None)
    with pytest.raises(ValueError):
        Verdict("sometimes")


def test_predict_graph_rejects_mismatch():
    d = D("M11", candidate_p=5, direct_product_with_R=True)
    assert predict_graph(d, "A(c)") == sporadic_graph("M11")
    with pytest.raises(ValueError):
        predict_graph(D("M11", candidate_p=2), "A(c)")
    with pytest.raises(ValueError):
        predict_graph(d, "A(a)")


def test_graph_outcome():
    assert graph_outcome(sporadic_graph("M11")) == "connected_cut_vertex"
    assert graph_outcome(complete_graph([2, 3, 5])) == "two_connected"
    assert graph_outcome(PrimeGraph({2, 3, 5}, [(3, 5)])) == "disconnected_no_cut_vertex"
    assert graph_outcome(PrimeGraph({2, 3, 5, 7}, [(3, 5), (5, 7)])) == "disconnected_cut_vertex"


# -- sweep properties --------------------------------------------------------------

SINGLE_VERTEX_CLAUSES = {"A(a)", "A(b)", "A(c)", "A(e)(ii)", "A(f)(ii)"}


def test_sweep_properties_small():
    seen = set()
    for d in descriptor_sweep(max_q=512):
        v = classify(d)
        if not v.covered:
            continue
        seen.add(v.matched_clause)
        g = v.predicted_graph
        if g is None:
            continue
        assert graph_outcome(g) == v.outcome
        assert g.vertices == group_vertex_set(d, v.outcome != "disconnected_no_cut_vertex")
        if v.outcome in CUT_OUTCOMES:
            assert cut_vertices(g) == {d.p}
            assert p_is_complete_where_required(d, v)
        if v.matched_clause in SINGLE_VERTEX_CLAUSES:
            assert any(len(c) == 1 for c in components(delete(g, d.p)))
    assert len(seen) == 18


def test_j1_abelian_radical_p_not_complete():
    v = classify(D("J1", candidate_p=2, direct_product_with_R=True))
    assert not v.predicted_graph.neighbours(2) >= {11}
    assert p_is_complete_where_required(D("J1", candidate_p=2, direct_product_with_R=True), v)


def test_clause_order_first_match():
    # no descriptor satisfies two clauses, so evaluation order never hides a match
    from cdgraph import classifier as c

    for d in descriptor_sweep(max_q=64):
        matches = [chk.clause for fn in c._CLAUSES if (chk := fn(d)) is not None and not chk.failures]
        assert len(matches) <= 1, (d, matches)


# -- text format ---------------------------------------------------------------------

_SAMPLE = list(descriptor_sweep(max_q=32))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(_SAMPLE))
def test_descriptor_round_trip(d):
    assert parse_descriptor(format_descriptor(d)) == d


def test_parse_descriptor():
    d = parse_descriptor(
        """
        # PSL2(13) with the exceptional module
        socle = psl2
        t = 13
        a = 1
        residual_shape = extension_special
        quotient_vertices = {2}
        p = 2
        """
    )
    assert classify(d).matched_clause == "A(e)(iii)"


@pytest.mark.parametrize(
    "text, field",
    [
        ("socle = M11\n", "p"),
        ("p = 5\n", "socle"),
        ("socle = M11\np = five\n", "p"),
        ("socle = M11\np = 5\np = 5\n", "p"),
        ("socle = M11\np = 5\ncolour = red\n", "colour"),
        ("socle = M11\np = 5\ndirect_product_with_R = maybe\n", "direct_product_with_R"),
        ("socle = PSL2\nt = 6\na = 1\np = 5\n", "socle"),
        ("socle = M11\np 5\n", "p 5"),
    ],
)
def test_parse_errors(text, field):
    with pytest.raises(DescriptorError) as info:
        parse_descriptor(text)
    assert info.value.field == field


def test_parse_unknown_family():
    with pytest.raises(UnknownFamilyError):
        parse_descriptor("socle = A6\np = 2\n")


def test_format_verdict():
    text = format_verdict(classify(D("PSL2", 7, 1)))
    assert text.startswith("outcome: not_covered\nclause: -\ncut_vertex: -\n# graph: -\n")
    assert "violation: C(a): t^a is a Mersenne prime\n" in text
