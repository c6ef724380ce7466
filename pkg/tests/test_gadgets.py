"""Gadget table verification and mutation controls."""

import pytest

from hfree import gadgets as GD
from hfree import graphs as G


def test_table_shape():
    assert len(GD.table_rows()) == 13
    # deletion satisfaction components exist exactly for these rows
    sd_rows = [
        r for r in GD.table_rows()
        if GD.table_gadget(r, "delete", "SComponent") is not None
    ]
    assert sorted(sd_rows) == [
        "A3", "A4", "A5", "co-A1", "co-A2", "co-A3", "co-A7", "co-A9"]
    enf_d = [
        r for r in GD.table_rows()
        if GD.table_gadget(r, "delete", "Enforcer") is not None
    ]
    assert sorted(enf_d) == ["A3", "A4", "A5", "co-A1", "co-A2", "co-A3"]
    enf_c = [
        r for r in GD.table_rows()
        if GD.table_gadget(r, "complete", "Enforcer") is not None
    ]
    assert len(enf_c) == 12 and "co-A3" not in enf_c
    # rows with no deletion enforcer but a bespoke reduction instead
    assert GD.table_gadget("co-A7", "delete", "Enforcer") is None
    assert GD.table_gadget("co-A9", "delete", "Enforcer") is None


def test_check_propagational():
    def tab(**kw):
        vals = [True] * 8
        for key, val in kw.items():
            x, y, z = (int(c) for c in key[1:])
            vals[x * 4 + y * 2 + z] = val
        return GD.PropTable(tuple(vals))

    assert GD.check_propagational(tab(f100=False))
    assert not GD.check_propagational(tab())  # f(1,0,0) must be 0
    assert not GD.check_propagational(tab(f100=False, f000=False))
    assert not GD.check_propagational(tab(f100=False, f111=False))


def test_all_s_components_pass():
    for row in GD.table_rows():
        for mode in ("delete", "complete"):
            g = GD.table_gadget(row, mode, "SComponent")
            if g is None:
                continue
            table = GD.verify_s_component(g)
            assert GD.check_propagational(table), (row, mode)


def test_s_component_sabotage_fails():
    g = GD.table_gadget("co-A1", "delete", "SComponent")
    # adding the first allowed pair back into the host breaks host-freeness
    bad = GD.Gadget(
        GD.host_graph("co-A1"), "SComponent", "delete",
        tuple(sorted(GD.host_graph("co-A1").edges())[:3]), "co-A1",
    )
    with pytest.raises(GD.GadgetError):
        GD.verify_s_component(bad)
    # flipping a forbidden edge of the real gadget breaks the table
    graph = g.graph
    flip = next(
        (u, v)
        for u, v in graph.edges()
        if (u, v) not in g.allowed
    )
    mutated = GD.Gadget(
        G.delete_edge(graph, *flip), "SComponent", "delete", g.allowed, g.h
    )
    with pytest.raises(GD.GadgetError):
        GD.verify_s_component(mutated)


def test_generic_s_component_construction():
    paw = G.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
    gadget = GD.generic_s_component(paw, "paw")
    assert gadget is not None
    table = GD.verify_s_component(gadget)
    assert not table.value(1, 0, 0)


def test_generic_construction_first_entry_always_zero():
    """Deleting only the added pair restores the host, so f(1,0,0)=0 for
    every choice (connected non-complete hosts on 4..6 vertices, sampled)."""
    import itertools

    from hfree import enumeration as E

    for n in (4, 5):
        for h in E.graphs_on(n):
            if G.is_complete(h) or not G.is_connected(h):
                continue
            nonedges = [
                (u, v)
                for u in range(h.n)
                for v in range(u + 1, h.n)
                if not h.has_edge(u, v)
            ]
            edges = list(h.edges())
            for x in nonedges[:2]:
                y, z = edges[0], edges[1]
                gx = G.add_edge(h, *x)
                # the f(1,0,0) entry of the toggle table
                assert not G.is_free_of(G.delete_edge(gx, *x), h)


def test_gadget_role_validation():
    host = GD.host_graph("co-A1")
    with pytest.raises(GD.GadgetError):
        GD.Gadget(host, "SComponent", "delete",
                  (sorted(host.edges())[0],), "co-A1")
    with pytest.raises(GD.GadgetError):
        GD.Gadget(host, "Enforcer", "complete",
                  (sorted(host.edges())[0],), "co-A1")  # edge, not nonedge


def test_build_truth_setting_counts():
    unit = GD.table_gadget("co-A1", "delete", "BasicUnit")
    tc = GD.build_truth_setting(unit)
    assert tc.graph.n == 15 * 5 - 15 * 2
    assert len(tc.allowed) == 15
    assert len(tc.variable_pairs) == 3
    assert set(tc.variable_pairs) <= set(tc.allowed)
    a3 = GD.table_gadget("A3", "delete", "BasicUnit")
    tc3 = GD.build_truth_setting(a3)
    assert len(tc3.allowed) == 18
    assert tc3.graph.n == 18 * 6 - 18 * 2
    with pytest.raises(GD.GadgetError):
        GD.build_truth_setting(unit, p=1)


def test_truth_setting_exhaustive_short_chains():
    """Shorter cyclic chains already admit exactly the two designated
    deletion sets for the smallest host."""
    unit = GD.table_gadget("co-A1", "delete", "BasicUnit")
    h = GD.host_graph("co-A1")
    for p in (2, 3):
        tc = GD.build_truth_setting(unit, p=p)
        assert GD.verify_truth_setting(tc, h, "delete")


def test_truth_setting_weak_property():
    for row, mode in (("co-A1", "delete"), ("co-A2", "complete"),
                      ("A3", "delete")):
        unit = GD.table_gadget(row, mode, "BasicUnit")
        tc = GD.build_truth_setting(unit)
        assert GD.verify_truth_setting_weak(tc, GD.host_graph(row)), (row, mode)


def test_truth_setting_sabotage():
    unit = GD.table_gadget("co-A1", "delete", "BasicUnit")
    graph = unit.graph
    flip = next(
        (u, v) for u, v in graph.edges() if (u, v) not in unit.allowed
    )
    bad_unit = GD.Gadget(
        G.delete_edge(graph, *flip), "BasicUnit", "delete", unit.allowed,
        unit.h,
    )
    tc = GD.build_truth_setting(bad_unit, p=2)
    assert not GD.verify_truth_setting(tc, GD.host_graph("co-A1"), "delete")


def test_enforcer_layers_small_host_bound():
    for row in GD.table_rows():
        for mode in ("delete", "complete"):
            enf = GD.table_gadget(row, mode, "Enforcer")
            if enf is None:
                continue
            rep = GD.verify_enforcer(enf, n_host=4)
            assert rep["ok"], (row, mode, rep)


def test_enforcer_self_copy_fails_exact_layer():
    host = GD.host_graph("co-A1")
    bad = GD.Gadget(host, "Enforcer", "delete",
                    (sorted(host.edges())[0],), "co-A1")
    rep = GD.verify_enforcer(bad, n_host=2)
    assert not rep["layers"]["exact"]["host_free"]
    assert not rep["ok"]


def test_broken_enforcer_caught_by_falsification():
    """Some wrong distinguished pair passes the exact layer but leaks
    crossing copies on small hosts."""
    host = GD.host_graph("co-A1")
    caught = 0
    for u in range(host.n):
        for v in range(u + 1, host.n):
            if not host.has_edge(u, v):
                continue
            cand = GD.Gadget(
                G.delete_edge(host, u, v), "Enforcer", "complete",
                ((u, v),), "co-A1",
            )
            rep = GD.verify_enforcer(cand, n_host=5)
            if rep["layers"]["exact"]["ok"] and not rep["layers"]["falsification"]["ok"]:
                caught += 1
    assert caught > 0
