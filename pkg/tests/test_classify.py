"""Churn and classification tests."""

import pytest

from hfree import catalogue as C
from hfree import classify as CL
from hfree import enumeration as E
from hfree import graphs as G
from hfree import membership as M


def test_churn_regular_returns_input():
    c5 = G.cycle_graph(5)
    out = CL.churn(c5)
    assert out.result == c5 and out.trace == ()


def test_churn_star_stops_at_step_four():
    star = G.star_graph(5)
    out = CL.churn(star)
    assert out.result == star and out.trace == ()
    # both peels are easy: a single vertex and an empty graph
    assert M.in_y_d(G.peel_low(star)) and M.in_y_d(G.peel_high(star))


def _churn_reference(g):
    """Independent straight-line reimplementation used as an oracle."""
    if G.is_regular(g):
        return g
    low = G.peel_low(g)
    if not M.in_y_d(low):
        return _churn_reference(low)
    high = G.peel_high(g)
    if not M.in_y_d(high):
        return _churn_reference(high)
    return g


def test_churn_matches_reference_exhaustively():
    for n in range(1, 8):
        for g in E.graphs_on(n):
            assert CL.churn(g).result == _churn_reference(g)


def test_churn_trace_soundness():
    for n in range(5, 8):
        for g in E.graphs_on(n):
            out = CL.churn(g)
            current = g
            for side, stage in out.trace:
                dp = G.degree_partition(current)
                removed = dp.v_low if side == "low" else dp.v_high
                expect = G.delete_vertices(current, removed)
                assert stage == expect
                current = stage
            assert current == out.result
            final = out.result
            if not G.is_regular(final):
                assert M.in_y_d(G.peel_low(final))
                assert M.in_y_d(G.peel_high(final))


def test_classify_easy_cases():
    assert CL.classify(G.path_graph(4), "editing").status == "PolyKernel"
    assert CL.classify(G.complete_graph(6), "deletion").status == "PolyKernel"
    assert CL.classify(G.empty_graph(5), "completion").status == "PolyKernel"
    v = CL.classify(G.from_edges(6, [(0, 1)]), "deletion")
    assert v.status == "PolyKernel" and v.reason == "at-most-one-edge"
    assert CL.classify(G.star_graph(3), "editing").status == "ClawExcluded"
    assert CL.classify(
        G.complement(G.star_graph(3)), "deletion"
    ).status == "ClawExcluded"


def test_classify_hard_cases():
    assert CL.classify(G.cycle_graph(4), "deletion").status == "Incompressible"
    two_k2 = G.from_edges(4, [(0, 1), (2, 3)])
    assert CL.classify(two_k2, "editing").status == "Incompressible"
    v = CL.classify(G.from_edges(6, [(0, 1)]), "editing")
    assert v.status == "Incompressible"
    assert v.reason == "one-edge>=5-vertices"


def test_classify_k26_chain():
    v = CL.classify(G.complete_bipartite(2, 6), "editing")
    assert v.status == "OpenCatalogue" and v.member == "H5"
    # chain passes through the star family on the way to the 4-star
    targets = [s.target_h.n for s in v.chain]
    assert targets == [7, 6, 5]


def test_classify_catalogue_verdicts():
    for i in range(1, 10):
        v = CL.classify(C.lookup(f"H{i}").graph, "editing")
        assert v.status == "OpenCatalogue" and v.member == f"H{i}"
    for gid in ("D1", "D2"):
        assert CL.classify(C.lookup(gid).graph, "deletion").member == gid
        assert (
            CL.classify(C.lookup(gid).graph, "editing").status
            == "Incompressible"
        )
    for i in range(1, 10):
        v = CL.classify(C.lookup(f"A{i}").graph, "deletion")
        assert v.status == "Incompressible", f"A{i}"
    for gid in ("B1", "B2", "B3"):
        assert (
            CL.classify(C.lookup(gid).graph, "deletion").status
            == "Incompressible"
        )
        assert (
            CL.classify(C.lookup(gid).graph, "editing").status
            == "Incompressible"
        )


def test_classify_whole_catalogue_terminates():
    for name in C.all_ids():
        g = C.lookup(name).graph
        for problem in CL.PROBLEMS:
            v = CL.classify(g, problem)
            assert v.status != "Unclassified", (name, problem)


def test_classify_families_terminate():
    for fam, tmin in C.FAMILY_CONSTRAINTS.items():
        for t in range(tmin, 9):
            g = C.generate_family(C.FamilyId(fam, t))
            for problem in ("editing", "deletion"):
                v = CL.classify(g, problem)
                assert v.status in ("OpenCatalogue", "Incompressible"), (
                    fam, t, problem, v.status)


def test_editing_complement_invariance_small():
    for n in range(1, 7):
        for g in E.graphs_on(n):
            a = CL.classify(g, "editing").status
            b = CL.classify(G.complement(g), "editing").status
            assert a == b, G.to_graph6(g)


def test_deletion_completion_duality_small():
    for n in range(1, 7):
        for g in E.graphs_on(n):
            a = CL.classify(g, "deletion").status
            b = CL.classify(G.complement(g), "completion").status
            assert a == b, G.to_graph6(g)


def test_verify_case_lemma_cells():
    rep = CL.verify_case_lemma(("empty", "complete"), 7)
    assert rep["graphs"] == 0 and rep["ok"]
    rep = CL.verify_case_lemma(("Y'", "Y'"), 7)
    assert rep["ok"]
    rep = CL.verify_case_lemma(("complete", "complete"), 7)
    assert rep["ok"] and rep["graphs"] > 0
    with pytest.raises(ValueError):
        CL.verify_case_lemma(("weird", "complete"), 6)


def test_chain_steps_name_low_or_high_peels():
    v = CL.classify(C.lookup("D1").graph, "editing")
    assert [s.rule for s in v.chain] == ["peel-high"]
    assert v.chain[0].target_h.edge_count() == 1
    assert v.chain[0].target_h.n == 5
