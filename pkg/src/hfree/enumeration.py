"""Exhaustive enumeration of small graphs and the verification campaigns.

Graphs on n vertices are generated by extending every (n-1)-vertex
representative with one new vertex over all 2^(n-1) neighborhoods and
keeping each canonical certificate once. Campaigns stream every level up
to a bound through a per-graph check, optionally sharded across worker
processes; shard outputs are checkpointed as newline-delimited graph6.
"""

from __future__ import annotations

import multiprocessing as mp
import os
import time
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from . import graphs as G
from .graphs import SmallGraph

DEFAULT_GUARD = 10
_SHARD_PARENTS = 384
_CACHE_MAX = 8

_levels: dict[int, list[SmallGraph]] = {}

# reference counts for cross-checks: isomorphism classes on 1..8 vertices
KNOWN_COUNTS = (1, 2, 4, 11, 34, 156, 1044, 12346)


class ResourceGuard(RuntimeError):
    pass


@dataclass
class EnumConfig:
    n_max: int = 9
    workers: int = 1
    filters: Optional[dict] = None
    checkpoint_path: Optional[str] = None
    force: bool = False  # lift the n_max guardrail

    def __post_init__(self):
        if self.n_max > DEFAULT_GUARD and not self.force:
            raise ResourceGuard(
                f"n_max={self.n_max} above guardrail {DEFAULT_GUARD}; "
                "set force=True for ambitious runs"
            )


def _children(parent: SmallGraph) -> Iterator[SmallGraph]:
    n = parent.n
    for mask in range(1 << n):
        rows = [r | ((mask >> v & 1) << n) for v, r in enumerate(parent.rows)]
        rows.append(mask)
        yield SmallGraph(n + 1, rows)


def _extend_serial(parents: list[SmallGraph]) -> list[SmallGraph]:
    seen: set[bytes] = set()
    out: list[SmallGraph] = []
    for p in parents:
        for child in _children(p):
            cert = G.canonical_cert(child)
            if cert not in seen:
                seen.add(cert)
                out.append(child)
    return out


def _extend_shard(task: tuple[int, list[str]]) -> tuple[int, list[tuple[str, str]]]:
    idx, parents = task
    seen: set[bytes] = set()
    out: list[tuple[str, str]] = []
    for g6 in parents:
        for child in _children(G.from_graph6(g6)):
            cert = G.canonical_cert(child)
            if cert not in seen:
                seen.add(cert)
                out.append((cert.hex(), G.to_graph6(child)))
    return idx, out


def _extend_parallel(
    parents: list[SmallGraph],
    workers: int,
    checkpoint_dir: Optional[str],
    level: int,
) -> list[SmallGraph]:
    shards = [
        parents[i : i + _SHARD_PARENTS]
        for i in range(0, len(parents), _SHARD_PARENTS)
    ]
    results: dict[int, list[tuple[str, str]]] = {}
    pending = []
    for i, shard in enumerate(shards):
        path = _shard_path(checkpoint_dir, level, i)
        if path and os.path.exists(path):
            with open(path) as f:
                results[i] = [tuple(line.split()) for line in f if line.strip()]
        else:
            pending.append((i, [G.to_graph6(p) for p in shard]))
    if pending:
        if workers > 1 and len(pending) > 1:
            with mp.Pool(workers) as pool:
                for idx, out in pool.imap_unordered(_extend_shard, pending):
                    results[idx] = out
                    _write_shard(checkpoint_dir, level, idx, out)
        else:
            for task in pending:
                idx, out = _extend_shard(task)
                results[idx] = out
                _write_shard(checkpoint_dir, level, idx, out)
    seen: set[str] = set()
    merged: list[SmallGraph] = []
    for i in range(len(shards)):
        for cert_hex, g6 in results[i]:
            if cert_hex not in seen:
                seen.add(cert_hex)
                merged.append(G.from_graph6(g6))
    return merged


def _shard_path(cp: Optional[str], level: int, idx: int) -> Optional[str]:
    if cp is None:
        return None
    return os.path.join(cp, f"level-{level:02d}.shard-{idx:04d}.txt")


def _write_shard(cp: Optional[str], level: int, idx: int, out) -> None:
    path = _shard_path(cp, level, idx)
    if path is None:
        return
    os.makedirs(os.path.dirname(path), exist_ok=True)
    tmp = path + ".tmp"
    with open(tmp, "w") as f:
        for cert_hex, g6 in out:
            f.write(f"{cert_hex} {g6}\n")
    os.replace(tmp, path)


def _level_file(cp: Optional[str], level: int) -> Optional[str]:
    if cp is None:
        return None
    return os.path.join(cp, f"level-{level:02d}.g6")


def graphs_on(
    n: int,
    workers: int = 1,
    checkpoint_path: Optional[str] = None,
    guard: int = DEFAULT_GUARD,
) -> list[SmallGraph]:
    """All non-isomorphic graphs on exactly n vertices."""
    if not 1 <= n <= guard:
        raise ResourceGuard(f"n={n} outside 1..{guard}")
    if n in _levels:
        return _levels[n]
    lf = _level_file(checkpoint_path, n)
    if lf and os.path.exists(lf):
        with open(lf) as f:
            level = [G.from_graph6(line) for line in f if line.strip()]
    elif n == 1:
        level = [G.empty_graph(1)]
    else:
        parents = graphs_on(n - 1, workers, checkpoint_path, guard)
        if workers > 1 or checkpoint_path is not None:
            level = _extend_parallel(parents, workers, checkpoint_path, n)
        else:
            level = _extend_serial(parents)
        if lf:
            tmp = lf + ".tmp"
            with open(tmp, "w") as f:
                for g in level:
                    f.write(G.to_graph6(g) + "\n")
            os.replace(tmp, lf)
    if n <= _CACHE_MAX:
        _levels[n] = level
    return level


def enumerate_graphs(n: int, guard: int = DEFAULT_GUARD) -> Iterator[SmallGraph]:
    """Stream one representative per isomorphism class on n vertices."""
    yield from graphs_on(n, guard=guard)


def count_labeled_dedup(n: int) -> int:
    """Independent oracle: canonicalize every labeled graph on n vertices."""
    import itertools

    pairs = list(itertools.combinations(range(n), 2))
    seen: set[bytes] = set()
    for sel in range(1 << len(pairs)):
        rows = [0] * n
        for i, (u, v) in enumerate(pairs):
            if sel >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        seen.add(G.canonical_cert(SmallGraph(n, rows)))
    return len(seen)


# -- campaigns ----------------------------------------------------------------

CAMPAIGNS = ("case_lemmas", "regular_tail", "churn_totality", "W_closure")


def _check_case_lemmas(g6: str) -> Optional[dict]:
    from . import classify as CL
    from . import membership as M

    g = G.from_graph6(g6)
    if M.in_y_d(g) or M.x_witness_for(g, "deletion") is not None:
        return None
    if G.is_regular(g):
        return None  # regular graphs outside Y are in X; unreachable here
    low = G.peel_low(g)
    high = G.peel_high(g)
    tl = CL.peel_types(low)
    th = CL.peel_types(high)
    if not tl or not th:
        return None  # churn recurses; not a case-table graph
    member = CL.w_member(g)
    return {
        "g6": g6,
        "cells": [(a, b) for a in tl for b in th],
        "in_W": member is not None,
        "member": str(member) if member else None,
    }


def _check_regular_tail(g6: str) -> Optional[dict]:
    from . import membership as M

    g = G.from_graph6(g6)
    if not G.is_regular(g) or G.is_complete(g) or G.is_empty(g):
        return None
    r = g.degree(0)
    if r <= g.n - 5:
        return None
    ok = M.is_3_connected(g) or M.is_3_connected(G.complement(g))
    return {"g6": g6, "r": r, "three_connected_side": ok}


def _check_churn_totality(g6: str) -> Optional[dict]:
    from . import classify as CL
    from . import membership as M

    g = G.from_graph6(g6)
    out = {}
    if not M.in_y_d(g):
        v = CL.classify(g, "deletion")
        if v.status not in ("Incompressible", "OpenCatalogue"):
            out["deletion"] = v.status
    if not M.in_y_e(g):
        v = CL.classify(g, "editing")
        if v.status not in ("Incompressible", "OpenCatalogue"):
            out["editing"] = v.status
    return {"g6": g6, **out} if out else None


_CHECKS: dict[str, Callable[[str], Optional[dict]]] = {
    "case_lemmas": _check_case_lemmas,
    "regular_tail": _check_regular_tail,
    "churn_totality": _check_churn_totality,
}


def _check_shard(task: tuple[str, list[str]]) -> list[dict]:
    name, g6s = task
    check = _CHECKS[name]
    out = []
    for g6 in g6s:
        r = check(g6)
        if r is not None:
            out.append(r)
    return out


def _campaign_w_closure(cfg: EnumConfig) -> dict:
    from . import catalogue as C

    t_hi = 9
    failures = []
    checked = 0
    for name in C.all_ids():
        entry = C.lookup(name)
        if entry.source == "small":
            continue
        checked += 1
        if C.membership_W(G.complement(entry.graph)) is None:
            failures.append({"id": name})
    for fam, tmin in C.FAMILY_CONSTRAINTS.items():
        for t in range(tmin, t_hi):
            g = C.generate_family(C.FamilyId(fam, t))
            checked += 1
            if C.membership_W(G.complement(g)) is None:
                failures.append({"id": f"{fam}(t={t})"})
    return {"checked": checked, "counterexamples": failures}


def run_search_campaign(cfg: EnumConfig, campaign: str) -> dict:
    """Execute one named verification campaign; see CAMPAIGNS."""
    if campaign not in CAMPAIGNS:
        raise ValueError(f"unknown campaign {campaign}; pick from {CAMPAIGNS}")
    t0 = time.time()
    report: dict = {
        "campaign": campaign,
        "n_max": cfg.n_max,
        "workers": cfg.workers,
        "per_n": {},
        "counterexamples": [],
    }
    if campaign == "W_closure":
        sub = _campaign_w_closure(cfg)
        report["checked"] = sub["checked"]
        report["counterexamples"] = sub["counterexamples"]
        report["ok"] = not sub["counterexamples"]
        report["runtime_sec"] = round(time.time() - t0, 3)
        return report

    lo = 4 if campaign == "regular_tail" else 5
    exceptions: list[dict] = []
    findings: list[dict] = []
    cells: dict[str, dict] = {}
    checked = 0
    for n in range(lo, cfg.n_max + 1):
        level = graphs_on(n, cfg.workers, cfg.checkpoint_path)
        g6s = [G.to_graph6(g) for g in _filtered(level, cfg.filters)]
        checked += len(g6s)
        chunk = 2000
        tasks = [
            (campaign, g6s[i : i + chunk]) for i in range(0, len(g6s), chunk)
        ]
        hits: list[dict] = []
        if cfg.workers > 1 and len(tasks) > 1:
            with mp.Pool(cfg.workers) as pool:
                for out in pool.imap_unordered(_check_shard, tasks):
                    hits.extend(out)
        else:
            for task in tasks:
                hits.extend(_check_shard(task))
        report["per_n"][n] = {"graphs": len(g6s), "hits": len(hits)}
        for h in hits:
            if campaign == "case_lemmas":
                for cell in h.pop("cells"):
                    key = f"{cell[0]}|{cell[1]}"
                    c = cells.setdefault(key, {"graphs": 0, "counterexamples": 0})
                    c["graphs"] += 1
                    if not h["in_W"]:
                        c["counterexamples"] += 1
                if not h["in_W"]:
                    findings.append(h)
            elif campaign == "regular_tail":
                if not h["three_connected_side"]:
                    exceptions.append(h)
            else:
                findings.append(h)
    if campaign == "case_lemmas":
        report["cells"] = {k: cells[k] for k in sorted(cells)}
        report["counterexamples"] = sorted(findings, key=lambda d: d["g6"])
        report["ok"] = not findings
    elif campaign == "regular_tail":
        report["exceptions"] = sorted(
            {e["g6"] for e in exceptions}
        )
        report["ok"] = True
    else:
        report["counterexamples"] = sorted(findings, key=lambda d: d["g6"])
        report["ok"] = not findings
    report["checked"] = checked
    report["runtime_sec"] = round(time.time() - t0, 3)
    return report


def _filtered(level: list[SmallGraph], filters: Optional[dict]):
    if not filters:
        return level
    out = level
    if filters.get("connected"):
        out = [g for g in out if G.is_connected(g)]
    if "min_edges" in filters:
        out = [g for g in out if g.edge_count() >= filters["min_edges"]]
    if "degree_sequence" in filters:
        want = sorted(filters["degree_sequence"])
        out = [g for g in out if sorted(g.degrees()) == want]
    return out
