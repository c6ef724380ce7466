"""Exact decision procedures for (restricted) H-free edge modification.

Two independent routes to the same answer: a bounded-depth branching
search (``solve``) and brute-force enumeration of all small modification
sets (``solve_exhaustive``). The test suite keeps them in agreement; the
reduction equivalence checks lean on them as oracles.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Optional

from . import graphs as G
from .graphs import SmallGraph

MODES = ("edit", "delete", "complete")


def _norm_pair(p) -> tuple[int, int]:
    u, v = p
    if u == v:
        raise ValueError("pair with equal endpoints")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class EditInstance:
    """A graph, a budget, a modification mode, and forbidden pairs."""

    g: SmallGraph
    k: int
    mode: str
    forbidden: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.k < 0:
            raise ValueError("budget must be nonnegative")
        pairs = frozenset(_norm_pair(p) for p in self.forbidden)
        object.__setattr__(self, "forbidden", pairs)
        for u, v in pairs:
            if self.mode == "delete" and not self.g.has_edge(u, v):
                raise ValueError("forbidden pair is not an edge")
            if self.mode == "complete" and self.g.has_edge(u, v):
                raise ValueError("forbidden pair is not a nonedge")
            if self.mode == "edit":
                raise ValueError("edit instances are unrestricted")

    def permissible_pairs(self) -> list[tuple[int, int]]:
        """All pairs a solution may touch, in fixed lexicographic order."""
        n = self.g.n
        out = []
        for u in range(n):
            for v in range(u + 1, n):
                if (u, v) in self.forbidden:
                    continue
                e = self.g.has_edge(u, v)
                if (self.mode == "delete" and not e) or (
                    self.mode == "complete" and e
                ):
                    continue
                out.append((u, v))
        return out


@dataclass(frozen=True)
class Solution:
    feasible: bool
    witness: frozenset[tuple[int, int]] = frozenset()


class GuardrailError(RuntimeError):
    """Raised when an exact search would exceed its configured budget."""


def _check_witness(inst: EditInstance, h: SmallGraph, pairs) -> None:
    assert all(p in set(inst.permissible_pairs()) for p in pairs)
    assert G.is_free_of(G.apply_flips(inst.g, pairs), h)


def solve(
    inst: EditInstance,
    h: SmallGraph,
    max_n: int = 20,
    max_k: int = 4,
) -> Solution:
    """Bounded-depth branching search, deterministic branch order.

    Finds one induced copy of h, branches over every permissible pair
    inside it (any solution must touch such a pair), and recurses with a
    decremented budget.
    """
    if inst.g.n > max_n:
        raise GuardrailError(f"solve guardrail: n={inst.g.n} > {max_n}")
    if inst.k > max_k:
        raise GuardrailError(f"solve guardrail: k={inst.k} > {max_k}")
    forbidden = inst.forbidden
    mode = inst.mode

    def rec(g: SmallGraph, k: int) -> Optional[list[tuple[int, int]]]:
        hit = G.first_induced(g, h)
        if hit is None:
            return []
        if k == 0:
            return None
        vs = sorted(hit)
        for u, v in itertools.combinations(vs, 2):
            if (u, v) in forbidden:
                continue
            e = g.has_edge(u, v)
            if (mode == "delete" and not e) or (mode == "complete" and e):
                continue
            sub = rec(G.flip_pair(g, u, v), k - 1)
            if sub is not None:
                return [(u, v)] + sub
        return None

    picked = rec(inst.g, inst.k)
    if picked is None:
        return Solution(False)
    witness = frozenset(picked)
    _check_witness(inst, h, witness)
    return Solution(True, witness)


def solve_exhaustive(
    inst: EditInstance, h: SmallGraph, max_work: int = 10_000_000
) -> Solution:
    """Brute force over all permissible pair sets of size at most k."""
    pairs = inst.permissible_pairs()
    total = sum(comb(len(pairs), i) for i in range(min(inst.k, len(pairs)) + 1))
    if total > max_work:
        raise GuardrailError(f"exhaustive guardrail: {total} > {max_work}")
    for size in range(min(inst.k, len(pairs)) + 1):
        for sel in itertools.combinations(pairs, size):
            if G.is_free_of(G.apply_flips(inst.g, sel), h):
                witness = frozenset(sel)
                _check_witness(inst, h, witness)
                return Solution(True, witness)
    return Solution(False)
