"""Solver tests: examples, oracle agreement, monotonicity, duality."""

import itertools

import pytest

from hfree import enumeration as E
from hfree import graphs as G
from hfree import solver as S


def test_cycle_deletion_examples():
    c4 = G.cycle_graph(4)
    assert S.solve(S.EditInstance(c4, 1, "delete"), c4).feasible
    assert not S.solve(S.EditInstance(c4, 0, "delete"), c4).feasible


def test_star_path_deletion():
    claw = G.star_graph(3)
    p3 = G.path_graph(3)
    assert not S.solve(S.EditInstance(claw, 1, "delete"), p3).feasible
    assert S.solve(S.EditInstance(claw, 2, "delete"), p3).feasible


def test_k23_single_deletion_insufficient():
    k23 = G.complete_bipartite(2, 3)
    c4 = G.cycle_graph(4)
    assert not S.solve(S.EditInstance(k23, 1, "delete"), c4).feasible


def test_vacuous_and_saturated_instances():
    small = G.path_graph(2)
    big_h = G.path_graph(3)
    assert S.solve(S.EditInstance(small, 0, "edit"), big_h).feasible
    g = G.cycle_graph(5)
    k = g.n * (g.n - 1) // 2
    sol = S.solve_exhaustive(S.EditInstance(g, k, "edit"), G.path_graph(3))
    assert sol.feasible


def test_forbidden_pairs_respected():
    c4 = G.cycle_graph(4)
    edges = sorted(c4.edges())
    # forbid all but one edge: deletion still feasible through the free one
    inst = S.EditInstance(c4, 1, "delete", frozenset(edges[:-1]))
    sol = S.solve(inst, c4)
    assert sol.feasible and sol.witness == {edges[-1]}
    inst_all = S.EditInstance(c4, 2, "delete", frozenset(edges))
    assert not S.solve(inst_all, c4).feasible


def test_instance_validation():
    c4 = G.cycle_graph(4)
    with pytest.raises(ValueError):
        S.EditInstance(c4, -1, "delete")
    with pytest.raises(ValueError):
        S.EditInstance(c4, 1, "delete", frozenset([(0, 2)]))  # nonedge
    with pytest.raises(ValueError):
        S.EditInstance(c4, 1, "complete", frozenset([(0, 1)]))  # edge
    with pytest.raises(ValueError):
        S.EditInstance(c4, 1, "edit", frozenset([(0, 1)]))


def test_guardrails():
    big = G.cycle_graph(25)
    with pytest.raises(S.GuardrailError):
        S.solve(S.EditInstance(big, 1, "delete"), G.cycle_graph(4))
    with pytest.raises(S.GuardrailError):
        S.solve(S.EditInstance(G.cycle_graph(5), 5, "delete"), G.cycle_graph(4))


def _grid(n_max=4, k_max=2, h_max=4):
    hs = [g for n in range(3, h_max + 1) for g in E.graphs_on(n)]
    for n in range(1, n_max + 1):
        for g in E.graphs_on(n):
            for h in hs:
                for k in range(k_max + 1):
                    for mode in S.MODES:
                        yield g, h, k, mode


def test_solver_oracle_agreement_small_grid():
    for g, h, k, mode in _grid(n_max=4, k_max=2):
        inst = S.EditInstance(g, k, mode)
        assert (
            S.solve(inst, h).feasible
            == S.solve_exhaustive(inst, h).feasible
        ), (G.to_graph6(g), G.to_graph6(h), k, mode)


def test_monotonicity_in_budget():
    for g, h, k, mode in _grid(n_max=4, k_max=1):
        inst = S.EditInstance(g, k, mode)
        if S.solve(inst, h).feasible:
            inst2 = S.EditInstance(g, k + 1, mode)
            assert S.solve(inst2, h).feasible


def test_complement_duality():
    for n in range(1, 5):
        for g in E.graphs_on(n):
            for h in E.graphs_on(4):
                for k in (0, 1):
                    a = S.solve(S.EditInstance(g, k, "delete"), h).feasible
                    b = S.solve(
                        S.EditInstance(G.complement(g), k, "complete"),
                        G.complement(h),
                    ).feasible
                    assert a == b
