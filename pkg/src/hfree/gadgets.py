"""Satisfaction-testing components, truth-setting components, enforcers.

Everything here is definitional verification: the gadget table rows are
checked against their role's definition rather than trusted. An S-component
must induce a propagational function through (non)edge toggles; a basic
unit must chain into a truth-setting component whose only modification
sets are the empty set and the set of all allowed pairs; an enforcer must
pin its distinguished pair without leaking induced copies across the
attachment boundary.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from . import graphs as G
from ._gadget_table import GADGET_TABLE
from .graphs import SmallGraph

ROLES = ("SComponent", "BasicUnit", "Enforcer")
_ROLE_KEY = {"SComponent": "s_component", "BasicUnit": "basic_unit",
             "Enforcer": "enforcer"}


class GadgetError(ValueError):
    pass


@dataclass(frozen=True)
class Gadget:
    graph: SmallGraph
    role: str
    mode: str  # "delete" or "complete"
    allowed: tuple[tuple[int, int], ...]  # ordered distinguished pairs
    h: str  # catalogue id of the target graph

    def __post_init__(self):
        if self.role not in ROLES:
            raise GadgetError(f"unknown role {self.role}")
        if self.mode not in ("delete", "complete"):
            raise GadgetError(f"unknown mode {self.mode}")
        want = {"SComponent": 3, "BasicUnit": 2, "Enforcer": 1}[self.role]
        if len(self.allowed) != want:
            raise GadgetError(f"{self.role} needs {want} allowed pairs")
        for u, v in self.allowed:
            edge = self.graph.has_edge(u, v)
            if self.mode == "delete" and not edge:
                raise GadgetError("allowed pair must be an edge in delete mode")
            if self.mode == "complete" and edge:
                raise GadgetError("allowed pair must be a nonedge in complete mode")


def host_graph(h_id: str) -> SmallGraph:
    from . import catalogue

    return catalogue.lookup(h_id).graph


def table_rows() -> list[str]:
    return sorted(GADGET_TABLE)


def table_gadget(h_id: str, mode: str, role: str) -> Optional[Gadget]:
    """The gadget stored for (host, mode, role), or None for an empty cell."""
    cell = GADGET_TABLE.get(h_id, {}).get(mode, {}).get(_ROLE_KEY[role])
    if cell is None:
        return None
    g = G.from_edges(cell["n"], cell["edges"])
    allowed = cell["marked"]
    if role == "SComponent":
        allowed = _order_s_allowed(g, allowed, mode, host_graph(h_id))
    elif role == "BasicUnit":
        allowed = _order_unit_allowed(g, allowed, mode, host_graph(h_id))
    return Gadget(g, role, mode, tuple(tuple(p) for p in allowed), h_id)


def _toggled(g: SmallGraph, pairs, mode: str) -> SmallGraph:
    """Delete (delete mode) or add (complete mode) the given pairs."""
    return G.apply_flips(g, pairs)


def _order_s_allowed(g, marked, mode, h):
    """Put the pair recovering the host graph first: that pair is x."""
    xs = [p for p in marked if G.are_isomorphic(_toggled(g, [p], mode), h)]
    if not xs:
        raise GadgetError("no marked pair recovers the host graph")
    x = xs[0]
    rest = [p for p in marked if p != x]
    return [x] + rest


def _order_unit_allowed(g, marked, mode, h):
    """Pair recovering the host first (the glue-in side of a chain)."""
    return _order_s_allowed(g, marked, mode, h)


# -- propagational tables ----------------------------------------------------


@dataclass(frozen=True)
class PropTable:
    """f(x,y,z) for all eight assignments, indexed x*4 + y*2 + z."""

    values: tuple[bool, ...]

    def __post_init__(self):
        if len(self.values) != 8:
            raise GadgetError("PropTable needs exactly eight entries")

    def value(self, x: int, y: int, z: int) -> bool:
        return self.values[x * 4 + y * 2 + z]


def check_propagational(t: PropTable) -> bool:
    """f(1,0,0)=0 and f(0,0,0)=f(1,0,1)=f(1,1,0)=f(1,1,1)=1."""
    return (
        not t.value(1, 0, 0)
        and t.value(0, 0, 0)
        and t.value(1, 0, 1)
        and t.value(1, 1, 0)
        and t.value(1, 1, 1)
    )


def verify_s_component(gadget: Gadget) -> PropTable:
    """Check the S-component definition; return the induced table.

    Raises GadgetError if the gadget graph contains the host or the table
    of toggle outcomes is not propagational.
    """
    if gadget.role != "SComponent":
        raise GadgetError("gadget role must be SComponent")
    h = host_graph(gadget.h)
    if G.contains_induced(gadget.graph, h):
        raise GadgetError("S-component is not host-free")
    x, y, z = gadget.allowed
    vals = []
    for bx, by, bz in itertools.product((0, 1), repeat=3):
        toggled = [p for p, b in ((x, bx), (y, by), (z, bz)) if b]
        vals.append(G.is_free_of(_toggled(gadget.graph, toggled, gadget.mode), h))
    table = PropTable(tuple(vals))
    if not check_propagational(table):
        raise GadgetError(f"table not propagational: {table.values}")
    return table


def generic_s_component(h: SmallGraph, h_id: str = "?") -> Optional[Gadget]:
    """The always-available deletion S-component H+x, if some x works.

    x ranges over nonedges, y and z over edge pairs; returns the first
    choice whose toggle table is propagational.
    """
    nonedges = [
        (u, v)
        for u in range(h.n)
        for v in range(u + 1, h.n)
        if not h.has_edge(u, v)
    ]
    edges = list(h.edges())
    for x in nonedges:
        gx = G.add_edge(h, *x)
        for y, z in itertools.combinations(edges, 2):
            gadget = Gadget(gx, "SComponent", "delete", (x, y, z), h_id)
            try:
                verify_s_component(gadget)
            except GadgetError:
                continue
            return gadget
    return None


# -- truth-setting components -------------------------------------------------


@dataclass(frozen=True)
class TruthSetting:
    """Cyclically chained basic units with three variable pairs."""

    graph: SmallGraph
    mode: str
    allowed: tuple[tuple[int, int], ...]  # all 3p allowed pairs
    variable_pairs: tuple[tuple[int, int], ...]  # the three chain joints
    h: str


def build_truth_setting(unit: Gadget, p: Optional[int] = None) -> TruthSetting:
    """Three chains of p units each, attached in a cycle.

    Each unit is glued to the next by identifying its second allowed pair
    with the next unit's first allowed pair; the three chain-to-chain
    joints are the variable pairs. p defaults to the host's vertex count.
    """
    if unit.role != "BasicUnit":
        raise GadgetError("gadget role must be BasicUnit")
    if p is None:
        p = host_graph(unit.h).n
    if p < 2:
        raise GadgetError("chains need at least two units")
    u = unit.graph
    glue_in, glue_out = unit.allowed  # e' (recovers host), e
    total_units = 3 * p

    n = 0
    edges: list[tuple[int, int]] = []
    allowed: list[tuple[int, int]] = []
    variable_pairs: list[tuple[int, int]] = []
    first_in: tuple[int, int] | None = None
    prev_out: tuple[int, int] | None = None
    for i in range(total_units):
        if prev_out is None:
            mapping = {}
        else:
            mapping = {glue_in[0]: prev_out[0], glue_in[1]: prev_out[1]}
        for v in range(u.n):
            if v not in mapping:
                mapping[v] = n
                n += 1
        for a, b in u.edges():
            edges.append((mapping[a], mapping[b]))
        pair_in = (mapping[glue_in[0]], mapping[glue_in[1]])
        pair_out = (mapping[glue_out[0]], mapping[glue_out[1]])
        if prev_out is None:
            first_in = pair_in
        allowed.append(pair_in)
        if i % p == p - 1:
            variable_pairs.append(pair_out)
        if i == total_units - 1:
            # close the cycle: glue the last out-pair onto the very first in-pair
            pass
        prev_out = pair_out
    # identify the final out pair with the first in pair
    assert first_in is not None and prev_out is not None
    merge = {prev_out[0]: first_in[0], prev_out[1]: first_in[1]}
    variable_pairs[-1] = first_in

    def m(v):
        return merge.get(v, v)

    edges = [(m(a), m(b)) for a, b in edges]
    allowed = [tuple(sorted((m(a), m(b)))) for a, b in allowed]
    variable_pairs = [tuple(sorted((m(a), m(b)))) for a, b in variable_pairs]
    # compact vertex labels
    used = sorted({v for e in edges for v in e})
    relab = {v: i for i, v in enumerate(used)}
    edges = [(relab[a], relab[b]) for a, b in edges]
    allowed = sorted({(relab[a], relab[b]) for a, b in allowed})
    variable_pairs = [(relab[a], relab[b]) for a, b in variable_pairs]
    graph = G.from_edges(len(used), set(edges))
    if unit.mode == "complete":
        # allowed pairs are nonedges: drop any accidental edge duplicates
        for a, b in allowed:
            if graph.has_edge(a, b):
                raise GadgetError("allowed nonedge became an edge while gluing")
    if len(allowed) != 3 * p:
        raise GadgetError(f"expected {3 * p} allowed pairs, got {len(allowed)}")
    return TruthSetting(graph, unit.mode, tuple(allowed), tuple(variable_pairs), unit.h)


def modification_sets(
    tc: TruthSetting, h: SmallGraph, max_pairs: int = 21
) -> list[int]:
    """All subsets of allowed pairs whose toggle leaves the complex h-free.

    Returned as bitmasks over tc.allowed. Exhaustive; guarded at
    2**max_pairs subsets.
    """
    pairs = list(tc.allowed)
    np_ = len(pairs)
    if np_ > max_pairs:
        raise GadgetError(f"{np_} allowed pairs exceed exhaustive guard {max_pairs}")
    pair_index = {p: i for i, p in enumerate(pairs)}
    base = tc.graph
    hn = h.n
    hm = h.edge_count()
    hcert = G.canonical_cert(h)
    # Constraints: for each |V(h)|-subset T, which local toggle patterns make
    # T induce h. A global mask is bad iff its projection hits a bad pattern.
    constraints: dict[int, set[int]] = {}
    allowed_rows = [0] * base.n
    for a, b in pairs:
        allowed_rows[a] |= 1 << b
        allowed_rows[b] |= 1 << a
    for T in itertools.combinations(range(base.n), hn):
        var = [
            (a, b)
            for a, b in itertools.combinations(T, 2)
            if allowed_rows[a] >> b & 1
        ]
        fixed = sum(
            1
            for a, b in itertools.combinations(T, 2)
            if base.has_edge(a, b) and (a, b) not in pair_index
        )
        if not fixed <= hm <= fixed + len(var):
            continue
        varmask = 0
        for p in var:
            varmask |= 1 << pair_index[p]
        sub = G.induced_subgraph(base, T)
        pos = {v: i for i, v in enumerate(sorted(T))}
        bad: set[int] = set()
        for sel in range(1 << len(var)):
            toggled = [
                (pos[var[i][0]], pos[var[i][1]])
                for i in range(len(var))
                if sel >> i & 1
            ]
            cand = G.apply_flips(sub, toggled)
            if cand.edge_count() != hm:
                continue
            if G.canonical_cert(cand) == hcert:
                # the copy appears exactly when the global mask projects
                # onto these toggled pairs
                patt = 0
                for i in range(len(var)):
                    if sel >> i & 1:
                        patt |= 1 << pair_index[var[i]]
                bad.add(patt)
        if bad:
            constraints.setdefault(varmask, set()).update(bad)
    cons = list(constraints.items())
    good = []
    for mask in range(1 << np_):
        ok = True
        for varmask, bad in cons:
            if mask & varmask in bad:
                ok = False
                break
        if ok:
            good.append(mask)
    return good


def verify_truth_setting(
    tc: TruthSetting, h: SmallGraph, mode: str, max_pairs: int = 21
) -> bool:
    """Exactly two modification sets: empty and all allowed pairs."""
    if mode != tc.mode:
        raise GadgetError("mode mismatch")
    good = modification_sets(tc, h, max_pairs=max_pairs)
    full = (1 << len(tc.allowed)) - 1
    return sorted(good) == [0, full]


def verify_truth_setting_weak(tc: TruthSetting, h: SmallGraph) -> bool:
    """Weaker property for large complexes: the two designated sets leave
    the complex h-free, and toggling any single allowed pair creates an
    induced copy that contains a further allowed pair (forcing the chain).
    """
    if G.contains_induced(tc.graph, h):
        return False
    all_toggled = G.apply_flips(tc.graph, tc.allowed)
    if G.contains_induced(all_toggled, h):
        return False
    allowed = set(tc.allowed)
    for p in tc.allowed:
        created = G.apply_flips(tc.graph, [p])
        hit = G.first_induced(created, h)
        if hit is None:
            return False
        inside = {
            q
            for q in itertools.combinations(sorted(hit), 2)
            if q in allowed and q != p
        }
        if not inside:
            return False
    return True


# -- enforcers ----------------------------------------------------------------


def _two_separators(g: SmallGraph) -> list[tuple[int, int]]:
    """All pairs whose removal disconnects g (g connected, n >= 4)."""
    out = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not G._connected_after_removal(g, (1 << u) | (1 << v)):
                out.append((u, v))
    return out


def attach_enforcer(
    g: SmallGraph, pair: tuple[int, int], enf: Gadget, copies: int
) -> SmallGraph:
    """Identify the enforcer's distinguished pair with ``pair``, k+1 times."""
    (ex, ey) = enf.allowed[0]
    x, y = pair
    rows = list(g.rows)
    n = g.n
    for _ in range(copies):
        mapping = {ex: x, ey: y}
        for v in range(enf.graph.n):
            if v not in mapping:
                mapping[v] = n
                n += 1
        rows.extend([0] * (n - len(rows)))
        for a, b in enf.graph.edges():
            ma, mb = mapping[a], mapping[b]
            rows[ma] |= 1 << mb
            rows[mb] |= 1 << ma
    return SmallGraph(n, rows)


def verify_enforcer(enf: Gadget, n_host: int = 6) -> dict:
    """Three-layer evidence report for an enforcer gadget.

    (a) exact: the gadget is host-free and toggling the distinguished pair
        creates an induced host copy;
    (b) structural: the sufficient separator condition behind the gadget's
        correctness argument, checked exactly on the host graph;
    (c) falsification: attach to every host graph with at most n_host
        vertices at every (non)edge and look for a crossing induced copy.

    The result is evidence, not proof: (b) and (c) bound, but do not
    decide, the universally quantified attachment condition.
    """
    if enf.role != "Enforcer":
        raise GadgetError("gadget role must be Enforcer")
    h = host_graph(enf.h)
    report: dict = {"h": enf.h, "mode": enf.mode, "layers": {}}

    # layer (a)
    free = not G.contains_induced(enf.graph, h)
    toggled = _toggled(enf.graph, [enf.allowed[0]], enf.mode)
    creates = G.contains_induced(toggled, h)
    report["layers"]["exact"] = {"host_free": free, "toggle_creates": creates,
                                 "ok": free and creates}

    # layer (b): separators of the host of the relevant induced type
    want_edge = enf.mode == "delete"
    seps = [
        (u, v)
        for u, v in _two_separators(h)
        if h.has_edge(u, v) == want_edge
    ]
    if not seps:
        cond = "no-matching-2-separator"
        ok_b = True
    else:
        all_have_common = True
        for u, v in seps:
            rest = G.delete_vertices(h, [u, v])
            keep = [w for w in range(h.n) if w not in (u, v)]
            common = h.rows[u] & h.rows[v]
            for comp in G.components(rest):
                comp_orig = {keep[i] for i in comp}
                if not any(common >> w & 1 for w in comp_orig):
                    all_have_common = False
        ex, ey = enf.allowed[0]
        pair_common = enf.graph.rows[ex] & enf.graph.rows[ey]
        if all_have_common and pair_common == 0:
            cond = "separator-common-neighbors"
            ok_b = True
        else:
            cond, ok_b = _special_structural(h, enf)
    report["layers"]["structural"] = {"condition": cond, "ok": ok_b}

    # layer (c): bounded falsification over all small hosts
    from . import enumeration

    violations = []
    for n in range(2, n_host + 1):
        for host in enumeration.enumerate_graphs(n):
            pairs = (
                list(host.edges())
                if enf.mode == "delete"
                else [
                    (u, v)
                    for u in range(host.n)
                    for v in range(u + 1, host.n)
                    if not host.has_edge(u, v)
                ]
            )
            for pair in pairs:
                joined = attach_enforcer(host, pair, enf, 1)
                for hit in G.find_induced(joined, h):
                    if any(v >= host.n for v in hit):
                        violations.append(
                            {"host": G.to_graph6(host), "pair": pair,
                             "copy": sorted(hit)}
                        )
                        break
                else:
                    continue
                break
            if violations:
                break
        if violations:
            break
    report["layers"]["falsification"] = {
        "n_host": n_host,
        "violations": violations,
        "ok": not violations,
    }
    report["ok"] = all(layer["ok"] for layer in report["layers"].values())
    return report


def _special_structural(h: SmallGraph, enf: Gadget) -> tuple[str, bool]:
    """Fallback structural conditions for hosts whose separators lack
    common neighbors in every component: path/cycle freeness arguments."""
    if enf.mode == "delete":
        ok = not G.contains_induced(h, G.cycle_graph(4))
        return "no-induced-C4", ok
    want = [
        (u, v)
        for u, v in _two_separators(h)
        if not h.has_edge(u, v)
    ]
    p5 = G.path_graph(5)
    for u, v in want:
        for hit in G.find_induced(h, p5):
            sub = G.induced_subgraph(h, hit)
            ends = [i for i in range(5) if sub.degree(i) == 1]
            orig = sorted(hit)
            endpoints = {orig[ends[0]], orig[ends[1]]}
            if endpoints == {u, v}:
                return "no-induced-P5-between-separator", False
    return "no-induced-P5-between-separator", True
