"""Membership in the hard (X) and easy (Y) sets driving classification.

X_D collects the graphs with known kernel lower bounds for deletion
(long cycles/paths and their complements, nontrivial regular graphs,
3-connected graphs and complements thereof); X_E adds the one-edge
graphs on at least five vertices, which are hard for editing but
polynomial for deletion. Y_E holds the known polynomial kernels plus
the claw, which is deliberately excluded from any hardness conjecture;
Y_D adds the one-edge graphs. Y' is the finite 3/4-vertex core.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import graphs as G
from .graphs import SmallGraph

# names of the nine Y' graphs, keyed by canonical cert (computed lazily)
_YPRIME: dict[bytes, str] | None = None


def _yprime_index() -> dict[bytes, str]:
    global _YPRIME
    if _YPRIME is None:
        from . import catalogue

        _YPRIME = {}
        for name in ("P3", "co-P3", "P4", "claw", "co-claw", "paw",
                     "co-paw", "diamond", "co-diamond"):
            _YPRIME[G.canonical_cert(catalogue.lookup(name).graph)] = name
    return _YPRIME


def yprime_name(g: SmallGraph) -> str | None:
    """Name of g within Y' = {P3, P4, claw, paw, diamond, complements}."""
    if g.n not in (3, 4):
        return None
    return _yprime_index().get(G.canonical_cert(g))


def is_3_connected(g: SmallGraph) -> bool:
    """Vertex connectivity >= 3, with cheap degree short-circuits."""
    n = g.n
    if n < 4:
        return False
    if all(r.bit_count() == n - 1 for r in g.rows):
        return True
    if min(r.bit_count() for r in g.rows) < 3:
        # the neighbors of a low-degree vertex disconnect it
        return False
    full = (1 << n) - 1
    if G._reach(g.rows, 1, full) != full:
        return False
    for v in range(n):
        if not G._connected_after_removal(g, 1 << v):
            return False
    for u in range(n):
        for v in range(u + 1, n):
            if not G._connected_after_removal(g, (1 << u) | (1 << v)):
                return False
    return True


@dataclass(frozen=True)
class SetMembership:
    in_XD: bool
    in_XE: bool
    in_YE: bool
    in_YD: bool
    in_Yprime: bool
    witness: str


def _x_witness(g: SmallGraph, co: SmallGraph) -> str | None:
    """Reason g lies in X_D, or None."""
    if G.is_cycle(g) and g.n >= 4:
        return "cycle>=4"
    if G.is_cycle(co) and g.n >= 4:
        return "co-cycle>=4"
    if g.n >= 5 and G.is_path(g):
        return "path>=5"
    if g.n >= 5 and G.is_path(co):
        return "co-path>=5"
    if G.is_regular(g) and not G.is_complete(g) and not G.is_empty(g):
        return "regular-nontrivial"
    if not G.is_complete(g) and is_3_connected(g):
        return "3-connected"
    if g.edge_count() >= 2 and is_3_connected(co):
        return "co-3-connected"
    return None


def set_membership(g: SmallGraph) -> SetMembership:
    """All five set flags with a witness for the strongest applicable one."""
    co = G.complement(g)
    yname = yprime_name(g)
    complete = G.is_complete(g)
    empty = G.is_empty(g)
    near_big = g.edge_count() == 1 and g.n >= 5

    in_yprime = yname is not None
    in_ye = complete or empty or in_yprime
    in_yd = in_ye or near_big

    xw = _x_witness(g, co)
    in_xd = xw is not None
    in_xe = in_xd or near_big

    if complete:
        witness = "complete"
    elif empty:
        witness = "empty"
    elif in_yprime:
        witness = yname
    elif near_big:
        witness = "one-edge>=5-vertices"
    elif xw:
        witness = xw
    else:
        witness = "none"
    return SetMembership(in_xd, in_xe, in_ye, in_yd, in_yprime, witness)


def in_y_d(g: SmallGraph) -> bool:
    return (
        G.is_complete(g)
        or G.is_empty(g)
        or yprime_name(g) is not None
        or (g.edge_count() == 1 and g.n >= 5)
    )


def in_y_e(g: SmallGraph) -> bool:
    return G.is_complete(g) or G.is_empty(g) or yprime_name(g) is not None


def x_witness_for(g: SmallGraph, problem: str) -> str | None:
    """Reason g is in X for the given problem, or None.

    The complement route through a 3-connected graph needs the complement
    to be non-complete for editing (at least one edge in g) but at least
    two nonedges for deletion (at least two edges in g). One-edge graphs
    on five or more vertices are hard for editing only.
    """
    co = G.complement(g)
    if G.is_cycle(g) and g.n >= 4:
        return "cycle>=4"
    if G.is_cycle(co) and g.n >= 4:
        return "co-cycle>=4"
    if g.n >= 5 and G.is_path(g):
        return "path>=5"
    if g.n >= 5 and G.is_path(co):
        return "co-path>=5"
    if G.is_regular(g) and not G.is_complete(g) and not G.is_empty(g):
        return "regular-nontrivial"
    if problem == "editing" and g.edge_count() == 1 and g.n >= 5:
        return "one-edge>=5-vertices"
    if not G.is_complete(g) and is_3_connected(g):
        return "3-connected"
    min_edges = 1 if problem == "editing" else 2
    if g.edge_count() >= min_edges and is_3_connected(co):
        return "co-3-connected"
    return None
