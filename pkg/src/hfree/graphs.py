"""Compact undirected graphs with exact structural predicates.

Vertices are 0..n-1 and adjacency is kept as one int bitmask per vertex,
which makes neighborhood operations, isomorphism certificates and the
exhaustive searches in the rest of the package cheap. Everything here is
immutable and safe to share between worker processes.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

# Soft bound enforced by the reduction constructions (they refuse to emit
# bigger instances instead of silently truncating). Plain graph values may
# exceed it: gadget assemblies legitimately do.
VERTEX_CAP = 64


class SmallGraph:
    """Immutable undirected graph on vertices 0..n-1, bitmask adjacency."""

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        if len(rows) != n:
            raise ValueError("row count must equal n")
        full = (1 << n) - 1
        for v, r in enumerate(rows):
            if r & ~full:
                raise ValueError(f"row {v} has bits outside 0..{n - 1}")
            if r >> v & 1:
                raise ValueError(f"self-loop at {v}")
        for v in range(n):
            for u in _bits(rows[v]):
                if not rows[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v},{u})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "_hash", hash((n, tuple(rows))))

    def __setattr__(self, *a):
        raise AttributeError("SmallGraph is immutable")

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return (
            isinstance(other, SmallGraph)
            and self.n == other.n
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"SmallGraph({self.n}, edges={sorted(self.edges())})"

    # -- basic accessors ---------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in _bits(self.rows[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))


def _bits(mask: int) -> Iterator[int]:
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def _mask(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


# -- constructors ----------------------------------------------------------


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> SmallGraph:
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError("self-loop")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return SmallGraph(n, rows)


def empty_graph(n: int) -> SmallGraph:
    return SmallGraph(n, [0] * n)


def complete_graph(n: int) -> SmallGraph:
    full = (1 << n) - 1
    return SmallGraph(n, [full ^ (1 << v) for v in range(n)])


def path_graph(n: int) -> SmallGraph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> SmallGraph:
    if n < 3:
        raise ValueError("cycle needs >= 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> SmallGraph:
    return from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(t: int) -> SmallGraph:
    """K_{1,t}: vertex 0 is the center."""
    return from_edges(t + 1, [(0, i) for i in range(1, t + 1)])


# -- elementary operations -------------------------------------------------


def complement(g: SmallGraph) -> SmallGraph:
    full = (1 << g.n) - 1
    return SmallGraph(g.n, [full ^ r ^ (1 << v) for v, r in enumerate(g.rows)])


def add_edge(g: SmallGraph, u: int, v: int) -> SmallGraph:
    rows = list(g.rows)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return SmallGraph(g.n, rows)


def delete_edge(g: SmallGraph, u: int, v: int) -> SmallGraph:
    rows = list(g.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return SmallGraph(g.n, rows)


def flip_pair(g: SmallGraph, u: int, v: int) -> SmallGraph:
    rows = list(g.rows)
    rows[u] ^= 1 << v
    rows[v] ^= 1 << u
    return SmallGraph(g.n, rows)


def apply_flips(g: SmallGraph, pairs: Iterable[tuple[int, int]]) -> SmallGraph:
    rows = list(g.rows)
    for u, v in pairs:
        rows[u] ^= 1 << v
        rows[v] ^= 1 << u
    return SmallGraph(g.n, rows)


def induced_subgraph(g: SmallGraph, vs: Iterable[int]) -> SmallGraph:
    """Subgraph induced by ``vs``; vertices are relabeled in sorted order."""
    keep = sorted(set(vs))
    if not keep:
        raise ValueError("induced subgraph needs at least one vertex")
    if keep[-1] >= g.n or keep[0] < 0:
        raise ValueError("vertex set not within V(g)")
    pos = {v: i for i, v in enumerate(keep)}
    rows = [0] * len(keep)
    for i, v in enumerate(keep):
        r = g.rows[v]
        for u in keep:
            if r >> u & 1:
                rows[i] |= 1 << pos[u]
    return SmallGraph(len(keep), rows)


def delete_vertices(g: SmallGraph, vs: Iterable[int]) -> SmallGraph:
    drop = set(vs)
    keep = [v for v in range(g.n) if v not in drop]
    return induced_subgraph(g, keep)


def disjoint_union(g1: SmallGraph, g2: SmallGraph) -> SmallGraph:
    rows = list(g1.rows) + [r << g1.n for r in g2.rows]
    return SmallGraph(g1.n + g2.n, rows)


def join(g1: SmallGraph, g2: SmallGraph) -> SmallGraph:
    n1, n2 = g1.n, g2.n
    left = (1 << n1) - 1
    right = ((1 << n2) - 1) << n1
    rows = [r | right for r in g1.rows]
    rows += [(r << n1) | left for r in g2.rows]
    return SmallGraph(n1 + n2, rows)


def relabel(g: SmallGraph, perm: Sequence[int]) -> SmallGraph:
    """Relabel so that old vertex perm[i] becomes new vertex i."""
    inv = [0] * g.n
    for i, v in enumerate(perm):
        inv[v] = i
    rows = [0] * g.n
    for i, v in enumerate(perm):
        for u in _bits(g.rows[v]):
            rows[i] |= 1 << inv[u]
    return SmallGraph(g.n, rows)


# -- predicates ------------------------------------------------------------


def is_empty(g: SmallGraph) -> bool:
    return all(r == 0 for r in g.rows)


def is_complete(g: SmallGraph) -> bool:
    return all(r.bit_count() == g.n - 1 for r in g.rows)


def is_near_empty(g: SmallGraph) -> bool:
    """Exactly one edge."""
    return g.edge_count() == 1


def is_regular(g: SmallGraph) -> bool:
    d = g.rows[0].bit_count()
    return all(r.bit_count() == d for r in g.rows)


def is_connected(g: SmallGraph) -> bool:
    return _reach(g.rows, 1, (1 << g.n) - 1) == (1 << g.n) - 1


def _reach(rows: Sequence[int], seed: int, alive: int) -> int:
    """Bitmask of vertices reachable from ``seed`` inside ``alive``."""
    seen = seed & alive
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= rows[v]
        nxt &= alive & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components(g: SmallGraph) -> list[list[int]]:
    alive = (1 << g.n) - 1
    rest = alive
    out = []
    while rest:
        seed = rest & -rest
        comp = _reach(g.rows, seed, alive)
        out.append(list(_bits(comp)))
        rest &= ~comp
    return out


def _connected_after_removal(g: SmallGraph, removed: int) -> bool:
    alive = ((1 << g.n) - 1) & ~removed
    if alive == 0:
        return True
    seed = alive & -alive
    return _reach(g.rows, seed, alive) == alive


def is_3_connected(g: SmallGraph) -> bool:
    """Vertex connectivity >= 3 (complete graphs K_n qualify iff n >= 4)."""
    return vertex_connectivity(g) >= 3


def vertex_connectivity(g: SmallGraph) -> int:
    n = g.n
    if is_complete(g):
        return n - 1
    if not is_connected(g):
        return 0
    for size in range(1, n - 1):
        for sub in itertools.combinations(range(n), size):
            if not _connected_after_removal(g, _mask(sub)):
                return size
    return n - 1  # unreachable for non-complete graphs


def is_path(g: SmallGraph) -> bool:
    """Path P_n (n >= 1): connected, two endpoints, inner degree two."""
    if g.n == 1:
        return True
    degs = sorted(g.degrees())
    if g.n == 2:
        return degs == [1, 1]
    return (
        degs[:2] == [1, 1]
        and degs[2:] == [2] * (g.n - 2)
        and is_connected(g)
    )


def is_cycle(g: SmallGraph) -> bool:
    return g.n >= 3 and all(r.bit_count() == 2 for r in g.rows) and is_connected(g)


# -- isomorphism and canonical forms ---------------------------------------


def _refine(
    n: int, adj: Sequence[Sequence[int]], colors: list[int]
) -> list[int]:
    """1-dimensional color refinement to a stable partition."""
    ncls = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            nb = sorted(colors[u] for u in adj[v])
            sigs.append((colors[v], tuple(nb)))
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [order[s] for s in sigs]
        k = len(order)
        if k == ncls or k == n:
            return colors
        ncls = k


def _cells(n: int, colors: list[int]) -> list[list[int]]:
    by = {}
    for v in range(n):
        by.setdefault(colors[v], []).append(v)
    return [by[c] for c in sorted(by)]


def _is_twin_cell(rows: Sequence[int], cell: list[int]) -> bool:
    """True if all cell vertices are pairwise interchangeable twins."""
    m = _mask(cell)
    inner0 = rows[cell[0]] & m
    out0 = rows[cell[0]] & ~m
    empty_in = inner0 == 0
    for v in cell:
        if rows[v] & ~m != out0:
            return False
        inner = rows[v] & m
        if empty_in:
            if inner:
                return False
        elif inner != m ^ (1 << v):
            return False
    return True


def _pack(n: int, rows: Sequence[int], perm: Sequence[int]) -> bytes:
    """Upper-triangle adjacency bits of the relabeled graph, as bytes."""
    acc = 0
    k = 0
    for j in range(1, n):
        rj = rows[perm[j]]
        for i in range(j):
            acc = acc << 1 | (rj >> perm[i] & 1)
            k += 1
    nbytes = (k + 7) // 8
    return bytes([n]) + (acc << (nbytes * 8 - k)).to_bytes(nbytes, "big")


def canonical_cert(g: SmallGraph) -> bytes:
    """Permutation-invariant certificate: equal certs iff isomorphic."""
    n, rows = g.n, g.rows
    if n == 1:
        return b"\x01"
    adj = [tuple(_bits(r)) for r in rows]
    degs = [len(a) for a in adj]
    order = {d: i for i, d in enumerate(sorted(set(degs)))}
    colors = _refine(n, adj, [order[d] for d in degs])
    best: bytes | None = None
    stack = [colors]
    while stack:
        cols = stack.pop()
        cells = _cells(n, cols)
        target = None
        for cell in cells:
            if len(cell) > 1:
                target = cell
                break
        if target is None:
            perm = [c[0] for c in cells]
            cert = _pack(n, rows, perm)
            if best is None or cert < best:
                best = cert
            continue
        branch = [target[0]] if _is_twin_cell(rows, target) else target
        for v in branch:
            nxt = [2 * c + 1 for c in cols]
            nxt[v] = 0
            stack.append(_refine(n, adj, nxt))
    assert best is not None
    return best


def canonical_form(g: SmallGraph) -> bytes:
    """Interface alias for :func:`canonical_cert`."""
    return canonical_cert(g)


def are_isomorphic(g1: SmallGraph, g2: SmallGraph) -> bool:
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    return canonical_cert(g1) == canonical_cert(g2)


def brute_force_isomorphic(g1: SmallGraph, g2: SmallGraph) -> bool:
    """Independent oracle: backtracking search over vertex bijections."""
    if g1.n != g2.n:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    n = g1.n
    d1, d2 = g1.degrees(), g2.degrees()

    def extend(mapping: list[int], used: int) -> bool:
        v = len(mapping)
        if v == n:
            return True
        for w in range(n):
            if used >> w & 1 or d1[v] != d2[w]:
                continue
            ok = True
            for u in range(v):
                if (g1.rows[v] >> u & 1) != (g2.rows[w] >> mapping[u] & 1):
                    ok = False
                    break
            if ok and extend(mapping + [w], used | 1 << w):
                return True
        return False

    return extend([], 0)


# -- induced subgraph search ------------------------------------------------


def _induced_search(g: SmallGraph, h: SmallGraph, first_only: bool):
    """Backtracking enumeration of vertex sets of g inducing h.

    Maps h's vertices one at a time in a fixed order, keeping adjacency to
    all previously mapped vertices consistent; each set is reported once.
    """
    n, hn = g.n, h.n
    if hn > n:
        return []
    gdeg = g.degrees()
    # map h's vertices by descending degree: fail early on high-degree ones
    horder = sorted(range(hn), key=lambda v: -h.degree(v))
    hdeg = [h.degree(v) for v in horder]
    hadj = [[j for j in range(i) if h.has_edge(horder[i], horder[j])] for i in range(hn)]
    hnon = [[j for j in range(i) if not h.has_edge(horder[i], horder[j])] for i in range(hn)]
    found = []
    seen_sets = set()
    assign = [0] * hn

    def rec(i: int, used: int) -> bool:
        if i == hn:
            key = used
            if key not in seen_sets:
                seen_sets.add(key)
                found.append(frozenset(assign))
            return first_only
        for w in range(n):
            bit = 1 << w
            if used & bit or gdeg[w] < hdeg[i]:
                continue
            rw = g.rows[w]
            ok = True
            for j in hadj[i]:
                if not rw >> assign[j] & 1:
                    ok = False
                    break
            if ok:
                for j in hnon[i]:
                    if rw >> assign[j] & 1:
                        ok = False
                        break
            if ok:
                assign[i] = w
                if rec(i + 1, used | bit):
                    return True
        return False

    rec(0, 0)
    return found


def find_induced(g: SmallGraph, h: SmallGraph) -> list[frozenset[int]]:
    """All vertex sets of g that induce a graph isomorphic to h."""
    return _induced_search(g, h, first_only=False)


def contains_induced(g: SmallGraph, h: SmallGraph) -> bool:
    return bool(_induced_search(g, h, first_only=True))


def first_induced(g: SmallGraph, h: SmallGraph) -> frozenset[int] | None:
    hits = _induced_search(g, h, first_only=True)
    return hits[0] if hits else None


def is_free_of(g: SmallGraph, h: SmallGraph) -> bool:
    """No induced copy of h in g."""
    return not contains_induced(g, h)


# -- degree partition --------------------------------------------------------


class DegreePartition:
    """Lowest/middle/highest degree vertex classes of a non-regular graph."""

    __slots__ = ("ell", "h", "h_star", "v_low", "v_mid", "v_high")

    def __init__(self, g: SmallGraph):
        degs = g.degrees()
        lo, hi = min(degs), max(degs)
        if lo == hi:
            raise ValueError("degree partition undefined for regular graphs")
        self.ell = lo
        self.h = hi
        self.h_star = g.n - hi - 1
        self.v_low = frozenset(v for v, d in enumerate(degs) if d == lo)
        self.v_high = frozenset(v for v, d in enumerate(degs) if d == hi)
        self.v_mid = frozenset(range(g.n)) - self.v_low - self.v_high


def degree_partition(g: SmallGraph) -> DegreePartition | int:
    """DegreePartition for non-regular g, otherwise the common degree r."""
    degs = g.degrees()
    if min(degs) == max(degs):
        return degs[0]
    return DegreePartition(g)


def peel_low(g: SmallGraph) -> SmallGraph:
    """Remove all lowest-degree vertices (non-regular g only)."""
    dp = DegreePartition(g)
    return delete_vertices(g, dp.v_low)


def peel_high(g: SmallGraph) -> SmallGraph:
    dp = DegreePartition(g)
    return delete_vertices(g, dp.v_high)


# -- modular partition -------------------------------------------------------


def modular_partition(g: SmallGraph) -> list[frozenset[int]]:
    """Flat partition into maximal proper modules, by iterated class merging.

    Two classes merge while their union is a proper module (identical
    neighborhoods outside the union). Merging never reaches the trivial
    module V, so for complete and empty graphs, where maximal proper
    modules are not unique, the result is one deterministic choice; callers
    relying on uniqueness must avoid those inputs.
    """
    classes = [frozenset([v]) for v in range(g.n)]

    def is_module(vs: frozenset[int]) -> bool:
        m = _mask(vs)
        sample = None
        for v in vs:
            out = g.rows[v] & ~m
            if sample is None:
                sample = out
            elif out != sample:
                return False
        return True

    changed = True
    while changed:
        changed = False
        for i in range(len(classes)):
            for j in range(i + 1, len(classes)):
                union = classes[i] | classes[j]
                if len(union) < g.n and is_module(union):
                    classes[i] = union
                    del classes[j]
                    changed = True
                    break
            if changed:
                break
    return sorted(classes, key=min)


# -- graph6 ------------------------------------------------------------------


def to_graph6(g: SmallGraph) -> str:
    """Header-less graph6 encoding (standard >=6-bit ASCII format)."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = chr(126) + "".join(
            chr(((n >> s) & 63) + 63) for s in (12, 6, 0)
        )
    else:
        raise ValueError("graph too large for graph6")
    bits = []
    for j in range(1, n):
        rj = g.rows[j]
        for i in range(j):
            bits.append(rj >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i : i + 6]:
            x = x << 1 | b
        chars.append(chr(x + 63))
    return head + "".join(chars)


def from_graph6(s: str) -> SmallGraph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise ValueError("empty graph6 string")
    vals = [ord(c) - 63 for c in s]
    if any(v < 0 or v > 63 for v in vals):
        raise ValueError("invalid graph6 character")
    if vals[0] == 63:
        if len(vals) < 4:
            raise ValueError("truncated graph6 header")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    if n < 1:
        raise ValueError("graph6 with no vertices")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 body length {len(body)}, expected {need}")
    bits = []
    for v in body:
        bits.extend((v >> s0 & 1) for s0 in (5, 4, 3, 2, 1, 0))
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return SmallGraph(n, rows)
