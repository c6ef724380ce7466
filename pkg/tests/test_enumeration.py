"""Enumeration counts, closure, campaigns, checkpointing."""

import os

import pytest

from hfree import enumeration as E
from hfree import graphs as G


def test_counts_match_labeled_oracle():
    for n in range(1, 6):
        assert len(E.graphs_on(n)) == E.count_labeled_dedup(n)


def test_counts_match_reference_sequence():
    for n in range(1, 8):
        assert len(E.graphs_on(n)) == E.KNOWN_COUNTS[n - 1]


def test_stream_is_complement_closed():
    for n in range(1, 8):
        certs = {G.canonical_cert(g) for g in E.graphs_on(n)}
        co = {G.canonical_cert(G.complement(g)) for g in E.graphs_on(n)}
        assert certs == co


def test_guardrail():
    with pytest.raises(E.ResourceGuard):
        E.EnumConfig(n_max=11)
    E.EnumConfig(n_max=11, force=True)
    with pytest.raises(E.ResourceGuard):
        E.graphs_on(12)


def test_campaign_regular_tail():
    rep = E.run_search_campaign(E.EnumConfig(n_max=6), "regular_tail")
    # at six vertices the only leftovers are the four- and five-vertex ones
    decoded = sorted(
        sorted(G.from_graph6(s).degrees()) for s in rep["exceptions"]
    )
    assert decoded == [[1, 1, 1, 1], [2, 2, 2, 2], [2, 2, 2, 2, 2]]
    assert rep["ok"]


def test_campaign_case_lemmas_small():
    rep = E.run_search_campaign(E.EnumConfig(n_max=6), "case_lemmas")
    assert rep["ok"] and not rep["counterexamples"]
    assert "empty|complete" not in rep["cells"]
    assert "near-empty|complete" not in rep["cells"]


def test_campaign_w_closure():
    rep = E.run_search_campaign(E.EnumConfig(n_max=6), "W_closure")
    assert rep["ok"] and rep["checked"] > 100


def test_campaign_churn_totality_small():
    rep = E.run_search_campaign(E.EnumConfig(n_max=6), "churn_totality")
    assert rep["ok"], rep["counterexamples"][:3]


def test_campaign_unknown():
    with pytest.raises(ValueError):
        E.run_search_campaign(E.EnumConfig(n_max=5), "nope")


def test_campaign_worker_determinism():
    a = E.run_search_campaign(E.EnumConfig(n_max=6, workers=1), "case_lemmas")
    b = E.run_search_campaign(E.EnumConfig(n_max=6, workers=2), "case_lemmas")
    for key in ("cells", "counterexamples", "checked", "per_n"):
        assert a[key] == b[key]


def test_checkpoint_roundtrip(tmp_path):
    cp = str(tmp_path / "ckpt")
    os.makedirs(cp, exist_ok=True)
    first = E._extend_parallel(E.graphs_on(4), 1, cp, 5)
    assert len(first) == 34
    assert os.path.exists(os.path.join(cp, "level-05.shard-0000.txt"))
    # a second run reuses the shard files
    second = E._extend_parallel(E.graphs_on(4), 1, cp, 5)
    assert [G.to_graph6(g) for g in first] == [G.to_graph6(g) for g in second]


def test_filters():
    level = E.graphs_on(4)
    conn = E._filtered(level, {"connected": True})
    assert len(conn) == 6
    degs = E._filtered(level, {"degree_sequence": [1, 1, 2, 2]})
    assert len(degs) == 1  # the four-vertex path
