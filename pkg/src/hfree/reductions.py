"""Executable polynomial parameter transformations.

Every reduction here maps a concrete instance of one H'-free modification
problem to an instance of an H-free problem with the same answer, with the
budget growing at most polynomially. The generic constructions (satellite
copies over injections, per-subset cliques, near-universal independent
sets) power the simulation chains; the formula reduction and the per-host
attachment gadgets power the restricted-problem hardness routes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from . import gadgets as GD
from . import graphs as G
from .graphs import VERTEX_CAP, SmallGraph
from .solver import EditInstance


class CapExceeded(RuntimeError):
    """Construction output would exceed the working vertex cap."""


class PreconditionError(ValueError):
    """Input does not satisfy the reduction's side conditions."""


# -- generic constructions ----------------------------------------------------


def con_main(
    gprime: SmallGraph,
    k: int,
    h: SmallGraph,
    vprime: Sequence[int],
    cap: int = VERTEX_CAP,
) -> SmallGraph:
    """Satellite construction over all injective placements of h[vprime].

    For every injective map f of vprime into V(gprime), add k+1 fresh
    copies of h - vprime, wiring each copy so that f(vprime) plus the copy
    induces h. The original graph is untouched on its own labels.
    """
    vp = sorted(set(vprime))
    if any(v < 0 or v >= h.n for v in vp):
        raise ValueError("vprime must be a subset of V(h)")
    rest = [v for v in range(h.n) if v not in vp]
    n_inj = 1
    for i in range(len(vp)):
        n_inj *= max(gprime.n - i, 0)
    total = gprime.n + n_inj * (k + 1) * len(rest)
    if total > cap:
        raise CapExceeded(f"{total} vertices exceed cap {cap}")
    rows = list(gprime.rows)
    n = gprime.n

    def add_satellite(image: dict[int, int]) -> None:
        nonlocal n, rows
        local = dict(image)
        for v in rest:
            local[v] = n
            rows.append(0)
            n += 1
        for v in rest:
            for u in G._bits(h.rows[v]):
                a, b = local[u], local[v]
                rows[a] |= 1 << b
                rows[b] |= 1 << a

    for perm in itertools.permutations(range(gprime.n), len(vp)):
        image = dict(zip(vp, perm))
        for _ in range(k + 1):
            add_satellite(image)
    return SmallGraph(n, rows)


def con_mod(
    gprime: SmallGraph, k: int, ell: int, cap: int = VERTEX_CAP
) -> SmallGraph:
    """A fresh (k+1)-clique fully joined to every ell-subset of vertices.

    Sources with fewer than ell vertices have no such subsets and come
    back unchanged.
    """
    if ell < 1:
        raise ValueError("ell must be positive")
    from math import comb

    total = gprime.n + comb(gprime.n, ell) * (k + 1)
    if total > cap:
        raise CapExceeded(f"{total} vertices exceed cap {cap}")
    rows = list(gprime.rows)
    n = gprime.n
    for sub in itertools.combinations(range(gprime.n), ell):
        clique = list(range(n, n + k + 1))
        rows.extend([0] * (k + 1))
        n += k + 1
        for a, b in itertools.combinations(clique, 2):
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        for c in clique:
            for s in sub:
                rows[c] |= 1 << s
                rows[s] |= 1 << c
    return SmallGraph(n, rows)


def con_near_uni(
    gprime: SmallGraph, k: int, t: int, cap: int = VERTEX_CAP
) -> SmallGraph:
    """A fresh independent (k+2)-set joined to everything except each
    t-subset. Sources with fewer than t vertices come back unchanged."""
    if t < 1:
        raise ValueError("t must be positive")
    from math import comb

    total = gprime.n + comb(gprime.n, t) * (k + 2)
    if total > cap:
        raise CapExceeded(f"{total} vertices exceed cap {cap}")
    rows = list(gprime.rows)
    n = gprime.n
    base = (1 << gprime.n) - 1
    for sub in itertools.combinations(range(gprime.n), t):
        submask = 0
        for s in sub:
            submask |= 1 << s
        members = list(range(n, n + k + 2))
        rows.extend([0] * (k + 2))
        n += k + 2
        for m in members:
            rows[m] |= base & ~submask
            for v in G._bits(base & ~submask):
                rows[v] |= 1 << m
    return SmallGraph(n, rows)


def union_clique(gprime: SmallGraph, k: int, cap: int = VERTEX_CAP) -> SmallGraph:
    """Disjoint union with a (k+1)-clique (isolated-vertex removal step)."""
    if gprime.n + k + 1 > cap:
        raise CapExceeded("clique union exceeds cap")
    return G.disjoint_union(gprime, G.complete_graph(k + 1))


def largest_component_reduction(
    gprime: SmallGraph, k: int, h: SmallGraph, mode: str = "edit",
    cap: int = VERTEX_CAP,
) -> EditInstance:
    """Composition reducing (largest component of h)-free to h-free.

    First the input gains the join of k+1 copies of the largest component
    (only needed when h has several copies of it), then satellites are
    attached over all placements of the copies.
    """
    comps = G.components(h)
    if len(comps) < 2:
        raise PreconditionError("h must be disconnected")
    sizes = [len(c) for c in comps]
    big = max(sizes)
    largest = [c for c in comps if len(c) == big]
    hprime = G.induced_subgraph(h, largest[0])
    iso_comps = [
        c
        for c in comps
        if len(c) == big and G.are_isomorphic(G.induced_subgraph(h, c), hprime)
    ]
    g1 = gprime
    if len(iso_comps) > 1:
        joined = hprime
        for _ in range(k):
            joined = G.join(joined, hprime)
        if gprime.n + joined.n > cap:
            raise CapExceeded("component join exceeds cap")
        g1 = G.disjoint_union(gprime, joined)
    vprime = sorted(v for c in iso_comps for v in c)
    out = con_main(g1, k, h, vprime, cap=cap)
    return EditInstance(out, k, mode)


# -- formula reduction ---------------------------------------------------------


@dataclass(frozen=True)
class PropFormula:
    """3-regular conjunctive formula of a propagational ternary function."""

    vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        counts = [0] * self.vars
        for cl in self.clauses:
            if len(set(cl)) != 3:
                raise ValueError("clause variables must be distinct")
            for v in cl:
                if not 0 <= v < self.vars:
                    raise ValueError("variable out of range")
                counts[v] += 1
        if self.vars and any(c != 3 for c in counts):
            raise ValueError("formula must be 3-regular")


def con_cai(
    phi: PropFormula,
    k: int,
    h: SmallGraph,
    s_comp: GD.Gadget,
    basic_unit: GD.Gadget,
    mode: str,
) -> EditInstance:
    """Clause components plus cyclic truth-setting components, restricted.

    Every clause gets one satisfaction-testing component; every variable a
    truth-setting component whose three variable pairs are identified with
    the clause pairs of its three occurrences. All pairs except the unit
    pairs are forbidden; the budget becomes 3*|V(h)|*k.
    """
    inst, _ = con_cai_detailed(phi, k, h, s_comp, basic_unit, mode)
    return inst


def con_cai_detailed(
    phi: PropFormula,
    k: int,
    h: SmallGraph,
    s_comp: GD.Gadget,
    basic_unit: GD.Gadget,
    mode: str,
) -> tuple[EditInstance, list[list[tuple[int, int]]]]:
    """con_cai plus the per-variable lists of allowed pairs."""
    if mode not in ("delete", "complete"):
        raise ValueError("mode must be delete or complete")
    if s_comp.role != "SComponent" or basic_unit.role != "BasicUnit":
        raise GD.GadgetError("gadget role mismatch")
    if s_comp.mode != mode or basic_unit.mode != mode:
        raise GD.GadgetError("gadget mode mismatch")

    # occurrence table: variable -> list of (clause index, position)
    occ: dict[int, list[tuple[int, int]]] = {v: [] for v in range(phi.vars)}
    for ci, cl in enumerate(phi.clauses):
        for pos, v in enumerate(cl):
            occ[v].append((ci, pos))

    edges: list[tuple[int, int]] = []
    allowed: list[tuple[int, int]] = []
    n = 0
    clause_pairs: dict[tuple[int, int], tuple[int, int]] = {}

    for ci in range(len(phi.clauses)):
        mapping = {}
        for v in range(s_comp.graph.n):
            mapping[v] = n
            n += 1
        for a, b in s_comp.graph.edges():
            edges.append((mapping[a], mapping[b]))
        for pos, (a, b) in enumerate(s_comp.allowed):
            clause_pairs[(ci, pos)] = (mapping[a], mapping[b])

    union: dict[int, int] = {}

    def find(x: int) -> int:
        while union.get(x, x) != x:
            union[x] = union.get(union[x], union[x])
            x = union[x]
        return x

    def merge(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            union[rb] = ra

    per_var_raw: list[list[tuple[int, int]]] = []
    for v in range(phi.vars):
        tc = GD.build_truth_setting(basic_unit)
        offset = n
        n += tc.graph.n
        for a, b in tc.graph.edges():
            edges.append((a + offset, b + offset))
        var_pairs = [(a + offset, b + offset) for a, b in tc.variable_pairs]
        for (ci, pos), (pa, pb) in zip(occ[v], var_pairs):
            ca, cb = clause_pairs[(ci, pos)]
            merge(ca, pa)
            merge(cb, pb)
        mine = [(a + offset, b + offset) for a, b in tc.allowed]
        per_var_raw.append(mine)
        allowed.extend(mine)

    # apply identifications and compact labels
    edges2 = [(find(a), find(b)) for a, b in edges]
    allowed2 = [tuple(sorted((find(a), find(b)))) for a, b in allowed]
    used = sorted({v for e in edges2 for v in e} | {v for e in allowed2 for v in e})
    relab = {v: i for i, v in enumerate(used)}
    edges3 = {(relab[a], relab[b]) for a, b in edges2 if a != b}
    allowed3 = sorted({tuple(sorted((relab[a], relab[b]))) for a, b in allowed2})
    per_var = [
        sorted({tuple(sorted((relab[find(a)], relab[find(b)]))) for a, b in mine})
        for mine in per_var_raw
    ]
    if not used:
        # degenerate empty formula: a single-vertex instance, trivially free
        graph = G.empty_graph(1)
    else:
        graph = G.from_edges(len(used), edges3)

    kprime = 3 * h.n * k
    if mode == "delete":
        forbidden = frozenset(
            tuple(sorted(e)) for e in graph.edges()
        ) - frozenset(allowed3)
        inst_mode = "delete"
    else:
        all_non = frozenset(
            (u, v)
            for u in range(graph.n)
            for v in range(u + 1, graph.n)
            if not graph.has_edge(u, v)
        )
        forbidden = all_non - frozenset(allowed3)
        inst_mode = "complete"
    return EditInstance(graph, kprime, inst_mode, forbidden), per_var


def enforcer_attach(inst: EditInstance, enforcer: GD.Gadget) -> EditInstance:
    """Drop the forbidden set by pinning each forbidden pair with k+1
    enforcer copies."""
    if enforcer.role != "Enforcer":
        raise GD.GadgetError("gadget role mismatch")
    if enforcer.mode != inst.mode:
        raise GD.GadgetError("enforcer mode does not match instance mode")
    h = GD.host_graph(enforcer.h)
    if G.contains_induced(enforcer.graph, h):
        raise GD.GadgetError("unverified enforcer: gadget not host-free")
    toggled = GD._toggled(enforcer.graph, [enforcer.allowed[0]], enforcer.mode)
    if not G.contains_induced(toggled, h):
        raise GD.GadgetError("unverified enforcer: toggle creates no copy")
    g = inst.g
    for pair in sorted(inst.forbidden):
        g = GD.attach_enforcer(g, pair, enforcer, inst.k + 1)
    return EditInstance(g, inst.k, inst.mode)


# -- tricky per-host reductions ------------------------------------------------

TRICKY_IDS = (
    "TrickyA6c",
    "TrickyA7c",
    "TrickyA8c",
    "TrickyA9c",
    "TrickyA1cCom",
    "TrickyA6cCom",
)


def _ordered_forbidden(inst: EditInstance) -> list[tuple[int, int]]:
    return sorted(inst.forbidden)


def _has_all_allowed_c4_subgraph(inst: EditInstance) -> bool:
    """A 4-cycle subgraph (not necessarily induced) avoiding forbidden
    edges entirely."""
    g = inst.g
    allowed_rows = list(g.rows)
    for u, v in inst.forbidden:
        allowed_rows[u] &= ~(1 << v)
        allowed_rows[v] &= ~(1 << u)
    n = g.n
    for a in range(n):
        for b in G._bits(allowed_rows[a]):
            if b <= a:
                continue
            for c in G._bits(allowed_rows[b]):
                if c == a:
                    continue
                for d in G._bits(allowed_rows[c] & allowed_rows[a]):
                    if d not in (a, b):
                        return True
    return False


def tricky_a7c(inst: EditInstance, cap: int = VERTEX_CAP) -> EditInstance:
    """Restricted deletion for the co-A7 host to unrestricted deletion."""
    if inst.mode != "delete":
        raise PreconditionError("source must be a restricted deletion instance")
    k = inst.k
    gp = inst.g
    R = _ordered_forbidden(inst)
    total = gp.n + k + 3 * k * len(R)
    if total > cap:
        raise CapExceeded(f"{total} vertices exceed cap {cap}")
    rows = list(gp.rows)
    n = gp.n

    def fresh(count):
        nonlocal n, rows
        out = list(range(n, n + count))
        rows.extend([0] * count)
        n += count
        return out

    def connect(a, b):
        rows[a] |= 1 << b
        rows[b] |= 1 << a

    W = fresh(k)
    for w in W:
        for v in range(gp.n):
            connect(w, v)
    C: list[int] = []
    for (u, v) in R:
        X = fresh(k)
        Y = fresh(k)
        Z = fresh(k)
        for x in X:
            connect(u, x)
            for w in W:
                connect(w, x)
        for y in Y:
            connect(v, y)
            for w in W:
                connect(w, y)
        for i in range(k):
            connect(X[i], Z[i])
            connect(Y[i], Z[i])
        C.extend(X)
        C.extend(Y)
    for a, b in itertools.combinations(C, 2):
        connect(a, b)
    return EditInstance(SmallGraph(n, rows), k, "delete")


def tricky_a9c(inst: EditInstance, cap: int = VERTEX_CAP) -> EditInstance:
    """Restricted deletion for the co-A9 host to unrestricted deletion."""
    if inst.mode != "delete":
        raise PreconditionError("source must be a restricted deletion instance")
    k = inst.k
    gp = inst.g
    R = _ordered_forbidden(inst)
    total = gp.n + k + 4 * k * len(R)
    if total > cap:
        raise CapExceeded(f"{total} vertices exceed cap {cap}")
    rows = list(gp.rows)
    n = gp.n

    def fresh(count):
        nonlocal n, rows
        out = list(range(n, n + count))
        rows.extend([0] * count)
        n += count
        return out

    def connect(a, b):
        rows[a] |= 1 << b
        rows[b] |= 1 << a

    W = fresh(k)
    for w in W:
        for v in range(gp.n):
            connect(w, v)
    C: list[int] = []
    for (u, v) in R:
        Q = fresh(k)
        X = fresh(k)
        Y = fresh(k)
        Z = fresh(k)
        for x in X:
            connect(u, x)
        for y in Y:
            connect(v, y)
        for w in W:
            for t in Q + X + Y:
                connect(w, t)
        for i in range(k):
            connect(X[i], Z[i])
            connect(Y[i], Z[i])
            connect(X[i], Q[i])
            connect(Y[i], Q[i])
        C.extend(X)
        C.extend(Y)
    for a, b in itertools.combinations(C, 2):
        connect(a, b)
    return EditInstance(SmallGraph(n, rows), k, "delete")


def tricky_a6c(inst: EditInstance, cap: int = VERTEX_CAP) -> EditInstance:
    """Restricted co-A1 deletion (no all-allowed 4-cycle subgraph) to
    unrestricted co-A6 deletion."""
    if inst.mode != "delete":
        raise PreconditionError("source must be a restricted deletion instance")
    if _has_all_allowed_c4_subgraph(inst):
        raise PreconditionError("input contains an all-allowed 4-cycle subgraph")
    k = inst.k
    gp = inst.g
    R = _ordered_forbidden(inst)
    total = gp.n + 3 * (k + 1) * len(R)
    if total > cap:
        raise CapExceeded(f"{total} vertices exceed cap {cap}")
    rows = list(gp.rows)
    n = gp.n

    def fresh(count):
        nonlocal n, rows
        out = list(range(n, n + count))
        rows.extend([0] * count)
        n += count
        return out

    def connect(a, b):
        rows[a] |= 1 << b
        rows[b] |= 1 << a

    for (u, v) in R:
        X = fresh(k + 1)
        Y = fresh(k + 1)
        Z = fresh(k + 1)
        for t in X + Y + Z:
            connect(u, t)
        for t in Y + Z:
            connect(v, t)
        for i in range(k + 1):
            connect(X[i], Y[i])
            connect(Y[i], Z[i])
    return EditInstance(SmallGraph(n, rows), k, "delete")


def tricky_a8c(inst: EditInstance, cap: int = VERTEX_CAP) -> EditInstance:
    """Restricted C4 deletion (no all-allowed 4-cycle subgraph) to
    unrestricted co-A8 deletion."""
    if inst.mode != "delete":
        raise PreconditionError("source must be a restricted deletion instance")
    if _has_all_allowed_c4_subgraph(inst):
        raise PreconditionError("input contains an all-allowed 4-cycle subgraph")
    k = inst.k
    gp = inst.g
    R = _ordered_forbidden(inst)
    total = gp.n + 3 * (k + 2) * len(R)
    if total > cap:
        raise CapExceeded(f"{total} vertices exceed cap {cap}")
    rows = list(gp.rows)
    n = gp.n

    def fresh(count):
        nonlocal n, rows
        out = list(range(n, n + count))
        rows.extend([0] * count)
        n += count
        return out

    def connect(a, b):
        rows[a] |= 1 << b
        rows[b] |= 1 << a

    for (u, v) in R:
        X = fresh(k + 2)
        Y = fresh(k + 2)
        Z = fresh(k + 2)
        for x in X:
            connect(u, x)
        for t in Y + Z:
            connect(v, t)
        for i in range(k + 2):
            connect(X[i], Y[i])
            connect(X[i], Z[i])
    return EditInstance(SmallGraph(n, rows), k, "delete")


def _completion_pre(inst: EditInstance, max_allowed: int = 18) -> None:
    """Check the structured-completion conditions on a restricted C4
    completion instance (common-neighbor bound and the per-subset
    4-cycle conditions), exhaustively over allowed subsets."""
    if inst.mode != "complete":
        raise PreconditionError("source must be a restricted completion instance")
    g = inst.g
    allowed = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v) and (u, v) not in inst.forbidden
    ]
    gall = G.apply_flips(g, allowed)
    for u, v in inst.forbidden:
        if (gall.rows[u] & gall.rows[v]).bit_count() > 2:
            raise PreconditionError(
                "forbidden nonedge with more than two common neighbors"
            )
    if len(allowed) > max_allowed:
        raise PreconditionError("too many allowed nonedges to certify")
    c4 = G.cycle_graph(4)
    allowed_set = set(allowed)
    for bits in range(1 << len(allowed)):
        sel = [allowed[i] for i in range(len(allowed)) if bits >> i & 1]
        gs = G.apply_flips(g, sel)
        sel_set = set(sel)
        witnesses = []
        for hit in G.find_induced(gs, c4):
            vs = sorted(hit)
            cyc_edges = [
                (a, b)
                for a, b in itertools.combinations(vs, 2)
                if gs.has_edge(a, b)
            ]
            non = [
                (a, b)
                for a, b in itertools.combinations(vs, 2)
                if not gs.has_edge(a, b)
            ]
            added = [e for e in cyc_edges if e in sel_set]
            # adjacent added pairs are banned
            for e1, e2 in itertools.combinations(added, 2):
                if set(e1) & set(e2):
                    raise PreconditionError(
                        "4-cycle with two adjacent added edges"
                    )
            n_allowed_edges = sum(1 for e in cyc_edges if e in allowed_set or e in sel_set)
            witnesses.append((n_allowed_edges, non))
        for n_allowed_edges, non in witnesses:
            if n_allowed_edges <= 1:
                if not any(e in inst.forbidden for e in non):
                    raise PreconditionError(
                        "4-cycle with at most one allowed edge but no "
                        "forbidden diagonal"
                    )
        if witnesses and all(w[0] >= 2 for w in witnesses):
            raise PreconditionError(
                "every 4-cycle uses two allowed nonedges"
            )


def tricky_a1c_com(inst: EditInstance, cap: int = VERTEX_CAP) -> EditInstance:
    """Restricted C4 completion to restricted co-A1 completion."""
    _completion_pre(inst)
    g = inst.g
    forbidden = set(inst.forbidden)
    new_vertices = []
    rows = list(g.rows)
    n = g.n
    p3 = G.path_graph(3)
    for (x, y) in sorted(inst.forbidden):
        mids = sorted(G._bits(g.rows[x] & g.rows[y]))
        mids = [z for z in mids if not g.has_edge(x, y)]
        mid = None
        for z in mids:
            sub = G.induced_subgraph(g, [x, y, z])
            if G.are_isomorphic(sub, p3):
                mid = z
                break
        if mid is None:
            continue
        v = n
        rows.append(0)
        n += 1
        for t in (x, y, mid):
            rows[v] |= 1 << t
            rows[t] |= 1 << v
        new_vertices.append(v)
    out = SmallGraph(n, rows)
    for v in new_vertices:
        for u in range(n):
            if u != v and not out.has_edge(u, v):
                forbidden.add(tuple(sorted((u, v))))
    if out.n > cap:
        raise CapExceeded("completion gadget exceeds cap")
    return EditInstance(out, inst.k, "complete", frozenset(forbidden))


def tricky_a6c_com(inst: EditInstance, cap: int = VERTEX_CAP) -> EditInstance:
    """Restricted C4 completion to restricted co-A6 completion."""
    _completion_pre(inst)
    g = inst.g
    forbidden = set(inst.forbidden)
    new_vertices = []
    rows = list(g.rows)
    n = g.n
    p3 = G.path_graph(3)
    for (x, y) in sorted(inst.forbidden):
        mid = None
        for z in sorted(G._bits(g.rows[x] & g.rows[y])):
            sub = G.induced_subgraph(g, [x, y, z])
            if G.are_isomorphic(sub, p3):
                mid = z
                break
        if mid is None:
            continue
        v, u = n, n + 1
        rows.extend([0, 0])
        n += 2
        for t in (x, y, mid):
            rows[v] |= 1 << t
            rows[t] |= 1 << v
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        rows[u] |= 1 << y
        rows[y] |= 1 << u
        new_vertices.extend([v, u])
    out = SmallGraph(n, rows)
    for v in new_vertices:
        for t in range(n):
            if t != v and not out.has_edge(t, v):
                forbidden.add(tuple(sorted((t, v))))
    if out.n > cap:
        raise CapExceeded("completion gadget exceeds cap")
    return EditInstance(out, inst.k, "complete", frozenset(forbidden))


_TRICKY_FUNCS = {
    "TrickyA6c": tricky_a6c,
    "TrickyA7c": tricky_a7c,
    "TrickyA8c": tricky_a8c,
    "TrickyA9c": tricky_a9c,
    "TrickyA1cCom": tricky_a1c_com,
    "TrickyA6cCom": tricky_a6c_com,
}

# tricky id -> (source host id, target host id)
TRICKY_PROBLEMS = {
    "TrickyA6c": ("co-A1", "co-A6"),
    "TrickyA7c": ("co-A7", "co-A7"),
    "TrickyA8c": ("C4", "co-A8"),
    "TrickyA9c": ("co-A9", "co-A9"),
    "TrickyA1cCom": ("C4", "co-A1"),
    "TrickyA6cCom": ("C4", "co-A6"),
}


def tricky_reduction(tid: str, inst: EditInstance, cap: int = VERTEX_CAP) -> EditInstance:
    if tid not in _TRICKY_FUNCS:
        raise KeyError(f"unknown tricky reduction {tid}; pick from {TRICKY_IDS}")
    return _TRICKY_FUNCS[tid](inst, cap=cap)


# -- simulation chain machinery -------------------------------------------------


@dataclass(frozen=True)
class ReductionStep:
    """One executable simulation step: source_h simulates target_h."""

    construction: str
    rule: str
    source_h: SmallGraph
    target_h: SmallGraph
    params: dict = field(default_factory=dict)
    k_map: str = "k'=k"
    complemented: bool = False

    def describe(self) -> dict:
        return {
            "construction": self.construction,
            "rule": self.rule,
            "from": G.to_graph6(self.source_h),
            "to": G.to_graph6(self.target_h),
            "k_map": self.k_map,
            "complemented": self.complemented,
        }


def execute_step(step: ReductionStep, inst: EditInstance, cap: int = VERTEX_CAP) -> EditInstance:
    """Map an instance of the target_h-free problem to one of the
    source_h-free problem (hardness flows from target to source)."""
    if inst.forbidden:
        raise PreconditionError("chain steps execute on unrestricted instances")
    g = G.complement(inst.g) if step.complemented else inst.g
    c = step.construction
    p = step.params
    if c == "ConMain":
        out = con_main(g, inst.k, p["h"], p["vprime"], cap=cap)
    elif c == "ConMod":
        out = con_mod(g, inst.k, p["ell"], cap=cap)
    elif c == "ConNearUni":
        out = con_near_uni(g, inst.k, p["t"], cap=cap)
    elif c == "UnionClique":
        out = union_clique(g, inst.k, cap=cap)
    elif c == "LargestComponent":
        out = largest_component_reduction(g, inst.k, p["h"], mode=inst.mode, cap=cap).g
    elif c == "Complement":
        out = g
    else:
        raise KeyError(f"step construction {c} is not executable here")
    if step.complemented or c == "Complement":
        out = G.complement(out)
    return EditInstance(out, inst.k, inst.mode)


# -- per-rule target computations ------------------------------------------------


def mod_reduce(h: SmallGraph) -> tuple[SmallGraph, dict]:
    """Remove one vertex from each module inside the low-degree class.

    Checks the module-shrink preconditions: low degree 1 or 2 on an
    independent class, a connected remainder every high vertex sees, and
    the middle-class degree condition.
    """
    dp = G.DegreePartition(h)
    if not (1 <= dp.ell <= 2 and h.n >= 5):
        raise PreconditionError("module-shrink needs ell in {1,2} and n >= 5")
    vl = sorted(dp.v_low)
    for u, v in itertools.combinations(vl, 2):
        if h.has_edge(u, v):
            raise PreconditionError("low-degree class must be independent")
    rest = sorted(set(range(h.n)) - dp.v_low)
    if not G.is_connected(G.induced_subgraph(h, rest)):
        raise PreconditionError("high+middle classes must induce a connected graph")
    lowmask = 0
    for v in vl:
        lowmask |= 1 << v
    for v in sorted(dp.v_high):
        if not h.rows[v] & lowmask:
            raise PreconditionError("every high vertex needs a low neighbor")
    vm = sorted(dp.v_mid)
    cond_a = all(
        (h.rows[v] & ~_maskset(vm)).bit_count() >= dp.ell + 1 for v in vm
    )
    cond_b = True
    for u, v in itertools.combinations(vm, 2):
        if h.has_edge(u, v):
            nu = h.rows[u] & ~(1 << v) & ~(1 << u)
            nv = h.rows[v] & ~(1 << u) & ~(1 << v)
            if nu == nv:
                cond_b = False
    if not (cond_a or cond_b):
        raise PreconditionError("middle class fails the module condition")
    # modules inside an independent class are exactly its equal-neighborhood
    # groups; drop one representative from each
    groups: dict[int, int] = {}
    for v in vl:
        groups.setdefault(h.rows[v], v)
    target = G.delete_vertices(h, sorted(groups.values()))
    return target, {"ell": dp.ell}


def _maskset(vs) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def near_uni_reduce(h: SmallGraph) -> tuple[SmallGraph, dict]:
    """Remove one highest-degree vertex (near-universal class shrink)."""
    dp = G.DegreePartition(h)
    vh = sorted(dp.v_high)
    for u, v in itertools.combinations(vh, 2):
        if not h.has_edge(u, v):
            raise PreconditionError("high-degree class must be a clique")
    certs = {G.canonical_cert(G.delete_vertices(h, [u])) for u in vh}
    if len(certs) > 1:
        raise PreconditionError("high-vertex deletions must all be isomorphic")
    degs = h.degrees()
    for size in range(2, h.n + 1):
        for sub in itertools.combinations(range(h.n), size):
            if all(degs[v] >= dp.h - size + 1 for v in sub) and all(
                not h.has_edge(a, b) for a, b in itertools.combinations(sub, 2)
            ):
                raise PreconditionError(
                    "independent set with too-high degrees exists"
                )
    return G.delete_vertices(h, [vh[0]]), {"t": dp.h_star}


def unique_degree2_path(h: SmallGraph) -> tuple[int, frozenset[int]]:
    """Internal vertices of the unique longest degree-two chain of h.

    A chain is a nonempty set of degree-2 vertices inducing a path, whose
    two outside attachment vertices are distinct; it is the set of internal
    vertices of a path of length chain-size + 1 (whose endpoints may or may
    not be adjacent). The longest chain must be unique.
    """
    if min(h.degrees()) < 2:
        raise PreconditionError("path contraction needs minimum degree two")
    deg2 = [v for v in range(h.n) if h.degree(v) == 2]
    by_len: dict[int, set[frozenset[int]]] = {}
    for size in range(1, len(deg2) + 1):
        for sub in itertools.combinations(deg2, size):
            chain = frozenset(sub)
            if size == 1:
                (v,) = sub
                a, b = G._bits(h.rows[v])
                ends = {a, b}
            else:
                induced = G.induced_subgraph(h, sub)
                if not G.is_path(induced):
                    continue
                ends = set()
                mask = 0
                for v in sub:
                    mask |= 1 << v
                tips = [
                    v for v in sub if (h.rows[v] & mask).bit_count() == 1
                ]
                if len(tips) != 2:
                    continue
                for v in tips:
                    out = h.rows[v] & ~mask
                    ends |= set(G._bits(out))
            if len(ends) != 2 or ends & chain:
                continue
            by_len.setdefault(size, set()).add(chain)
    if not by_len:
        raise PreconditionError("no internal-degree-two chain")
    best = max(by_len)
    if len(by_len[best]) != 1:
        raise PreconditionError(
            f"longest internal-degree-two chain not unique (p={best + 1})"
        )
    return best + 1, next(iter(by_len[best]))


def path_reduce(h: SmallGraph) -> tuple[SmallGraph, dict]:
    _, internals = unique_degree2_path(h)
    vprime = [v for v in range(h.n) if v not in internals]
    return G.induced_subgraph(h, vprime), {"h": h, "vprime": vprime}


def _blocks(h: SmallGraph) -> list[frozenset[int]]:
    """Maximal vertex sets (size >= 3) inducing 2-connected subgraphs."""
    twos = []
    for size in range(3, h.n + 1):
        for sub in itertools.combinations(range(h.n), size):
            if G.vertex_connectivity(G.induced_subgraph(h, sub)) >= 2:
                twos.append(frozenset(sub))
    return [b for b in twos if not any(b < other for other in twos)]


def cut_reduce(h: SmallGraph) -> tuple[SmallGraph, dict]:
    """Drop the unique smallest leaf block, keeping its cut vertex."""
    if G.vertex_connectivity(h) != 1:
        raise PreconditionError("leaf-block drop needs connectivity exactly 1")
    cuts = {
        v for v in range(h.n) if not G._connected_after_removal(h, 1 << v)
    }
    leaf_blocks = [b for b in _blocks(h) if len(b & cuts) == 1]
    if not leaf_blocks:
        raise PreconditionError("no leaf block with exactly one cut vertex")
    smallest = min(len(b) for b in leaf_blocks)
    cands = [b for b in leaf_blocks if len(b) == smallest]
    if len(cands) != 1:
        raise PreconditionError("smallest leaf block not unique")
    block = cands[0]
    (v,) = block & cuts
    vprime = [u for u in range(h.n) if u not in block or u == v]
    return G.induced_subgraph(h, vprime), {"h": h, "vprime": vprime}


def deg3_pair_reduce(h: SmallGraph) -> tuple[SmallGraph, dict]:
    """Drop the unique adjacent pair of degree-3 vertices."""
    degs = h.degrees()
    pairs = [
        (u, v)
        for u in range(h.n)
        for v in range(u + 1, h.n)
        if degs[u] == 3 and degs[v] == 3 and h.has_edge(u, v)
    ]
    if len(pairs) != 1:
        raise PreconditionError("adjacent degree-3 pair not unique")
    u, v = pairs[0]
    vprime = [w for w in range(h.n) if w not in (u, v)]
    return G.induced_subgraph(h, vprime), {"h": h, "vprime": vprime}


def jukt_reduce(h: SmallGraph) -> tuple[SmallGraph, dict]:
    """Drop one vertex of the low-degree clique component."""
    dp = G.DegreePartition(h)
    vl = sorted(dp.v_low)
    lowmask = _maskset(vl)
    for v in vl:
        if h.rows[v] & ~lowmask:
            raise PreconditionError("low class must be a separate component")
        if h.rows[v] & lowmask != lowmask ^ (1 << v):
            raise PreconditionError("low class must induce a clique")
    drop = vl[0]
    vprime = [w for w in range(h.n) if w != drop]
    return G.induced_subgraph(h, vprime), {"h": h, "vprime": vprime}


def jutk1_reduce(h: SmallGraph) -> tuple[SmallGraph, dict]:
    """Drop one isolated vertex (the rest must avoid clique components)."""
    isolated = [v for v in range(h.n) if h.rows[v] == 0]
    if len(isolated) < 2:
        raise PreconditionError("need at least two isolated vertices")
    comps = G.components(h)
    for comp in comps:
        if len(comp) > 1:
            sub = G.induced_subgraph(h, comp)
            if G.is_complete(sub):
                raise PreconditionError("non-trivial clique component present")
    return G.delete_vertices(h, [isolated[0]]), {}


def largest_component_target(h: SmallGraph) -> tuple[SmallGraph, dict]:
    comps = G.components(h)
    if len(comps) < 2:
        raise PreconditionError("h must be disconnected")
    big = max(comps, key=len)
    return G.induced_subgraph(h, big), {"h": h}


def biclique_reduce(h: SmallGraph) -> tuple[SmallGraph, dict]:
    """The bespoke K_{2,3}-to-C4 shrink."""
    if not G.are_isomorphic(h, G.complete_bipartite(2, 3)):
        raise PreconditionError("rule applies to K_{2,3} only")
    dp = G.DegreePartition(h)
    drop = min(dp.v_low)
    return G.delete_vertices(h, [drop]), {"ell": 2}


def near_kt_euk1_reduce(h: SmallGraph) -> tuple[SmallGraph, dict]:
    """(K_t - e) u K_1 drops its two sub-maximum-degree vertices."""
    degs = h.degrees()
    t = h.n - 1
    low = [v for v in range(h.n) if degs[v] == t - 2]
    iso = [v for v in range(h.n) if degs[v] == 0]
    if len(low) != 2 or len(iso) != 1 or h.has_edge(*low):
        raise PreconditionError("shape is not (K_t - e) u K_1")
    return G.delete_vertices(h, low), {"t": 1}


def peel_reduce(h: SmallGraph, side: str) -> tuple[SmallGraph, dict]:
    dp = G.DegreePartition(h)
    keep = sorted(
        set(range(h.n)) - (dp.v_low if side == "low" else dp.v_high)
    )
    return G.induced_subgraph(h, keep), {"h": h, "vprime": keep}


_RULES = {
    # rule -> (construction, target function)
    "module-shrink": ("ConMod", mod_reduce),
    "near-universal-shrink": ("ConNearUni", near_uni_reduce),
    "degree2-path-contract": ("ConMain", path_reduce),
    "leaf-block-drop": ("ConMain", cut_reduce),
    "unique-deg3-pair-drop": ("ConMain", deg3_pair_reduce),
    "clique-tail-drop": ("ConMain", jukt_reduce),
    "isolated-drop": ("UnionClique", jutk1_reduce),
    "largest-component": ("LargestComponent", largest_component_target),
    "biclique-shrink": ("ConMod", biclique_reduce),
    "near-clique-pair-drop": ("ConNearUni", near_kt_euk1_reduce),
    "peel-low": ("ConMain", lambda h: peel_reduce(h, "low")),
    "peel-high": ("ConMain", lambda h: peel_reduce(h, "high")),
}

# chain table: catalogue id -> ordered rule list; each entry is
# (rule name, apply to the complement of the stored orientation)
CHAIN_TABLE: dict[str, list[tuple[str, bool]]] = {
    "S1": [("biclique-shrink", False)],
    "S2": [("near-universal-shrink", False)],
    "S3": [("near-universal-shrink", False)],
    "S4": [("isolated-drop", False)],
    "S5": [("degree2-path-contract", False)],
    "S6": [("isolated-drop", False)],
    "S7": [("module-shrink", False)],
    "S8": [("module-shrink", False)],
    "S9": [("degree2-path-contract", False)],
    "S10": [("module-shrink", False)],
    "S11": [("module-shrink", False)],
    "S12": [("module-shrink", False)],
    "S13": [("module-shrink", False)],
    "S14": [("module-shrink", True)],
    "S15": [("degree2-path-contract", False), ("peel-high", False)],
    "S16": [("near-universal-shrink", False), ("peel-low", False)],
    "S17": [("near-universal-shrink", False), ("peel-low", False)],
    "S18": [("module-shrink", False)],
    "S19": [("module-shrink", False)],
    "S20": [("leaf-block-drop", False)],
    "S21": [("module-shrink", False)],
    "S22": [("degree2-path-contract", False)],
    "S23": [("module-shrink", False)],
    "S24": [("module-shrink", False)],
    "S25": [("module-shrink", False)],
    "S26": [("module-shrink", False)],
    "S27": [("leaf-block-drop", False)],
    "S28": [("module-shrink", False)],
    "S29": [("module-shrink", False)],
    "S30": [("module-shrink", False)],
    "S31": [
        ("near-universal-shrink", False),
        ("peel-low", False),
        ("peel-high", False),
    ],
    "S32": [("module-shrink", True)],
    "S33": [("module-shrink", True)],
    "S34": [("module-shrink", True)],
    "S35": [("unique-deg3-pair-drop", False)],
    "S36": [("module-shrink", True)],
    "F1": [("clique-tail-drop", True)],
    "F2": [("module-shrink", False)],
    "F3": [("module-shrink", False)],
    "F4": [("module-shrink", False)],
    "F5": [("isolated-drop", True)],
    "F6": [("clique-tail-drop", True)],
    "F7": [("largest-component", False)],
    "F8": [("near-clique-pair-drop", True)],
    "F9": [("degree2-path-contract", False)],
    "F10": [("degree2-path-contract", False)],
    # complements of the deletion-side 2-connected entries peel down to
    # 3-connected graphs
    "co-B1": [("peel-low", False)],
    "co-B2": [("peel-low", False)],
    "co-B3": [("peel-low", False)],
    "co-D1": [("peel-low", False)],
    "co-D2": [("peel-low", False)],
}


def make_step(rule: str, h: SmallGraph, complemented: bool) -> ReductionStep:
    """Build one executable step for h (given in its stored orientation)."""
    construction, fn = _RULES[rule]
    raw = G.complement(h) if complemented else h
    target_raw, params = fn(raw)
    target = G.complement(target_raw) if complemented else target_raw
    k_map = "k'=k"
    return ReductionStep(
        construction=construction,
        rule=rule,
        source_h=h,
        target_h=target,
        params=params,
        k_map=k_map,
        complemented=complemented,
    )


def steps_for(entry_id: str, h: SmallGraph, entry_complemented: bool) -> list[ReductionStep]:
    """The chain-table steps for a W member (conjugated if the graph is
    the complement of the stored entry)."""
    key = entry_id
    if key not in CHAIN_TABLE:
        raise KeyError(f"no chain rule for {entry_id}")
    steps = []
    current = h
    for rule, flip in CHAIN_TABLE[key]:
        step = make_step(rule, current, flip ^ entry_complemented)
        steps.append(step)
        current = step.target_h
    return steps


def derive_chain(h: SmallGraph, problem: str = "deletion") -> list[ReductionStep]:
    """Full simulation chain from h down to the finite core or a known-hard
    anchor, following the chain table."""
    from . import catalogue as C
    from . import membership as M

    steps: list[ReductionStep] = []
    current = h
    seen = {G.canonical_cert(current)}
    while True:
        if M.x_witness_for(current, problem) is not None:
            return steps
        wr = C.membership_W(current)
        if wr is None:
            raise PreconditionError(
                "graph left the catalogue without reaching a hard anchor"
            )
        if wr.kind == "named":
            base = wr.id
            if base[0] in ("H", "A") or (
                base[0] in ("B", "D") and not wr.complemented
            ):
                return steps
            key = f"co-{base}" if wr.complemented else base
            new = steps_for(key if key in CHAIN_TABLE else base, current,
                            wr.complemented and key not in CHAIN_TABLE)
        else:
            new = steps_for(wr.id, current, wr.complemented)
        steps.extend(new)
        current = steps[-1].target_h
        cert = G.canonical_cert(current)
        if cert in seen:
            raise RuntimeError("cycle detected in reduction chain")
        seen.add(cert)
