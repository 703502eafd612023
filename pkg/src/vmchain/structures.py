"""Quads, triplets, fully closed sets and maximum sequential sets."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .connectivity import is_prime, subset_table
from .cutrank import cross_rank, cut_rank, gf2_rank
from .errors import ArgumentError, PreconditionError, ResourceLimitError
from .graph import Graph, _pivot_rows, bits

DEFAULT_TRIPLET_CAP = 10**6


@dataclass(frozen=True)
class Quad:
    """4-set P with rho(P) = 2 and rho(P - x) = 3 for every x in P."""

    vertices: int
    host: Graph

    def members(self) -> list[int]:
        return list(bits(self.vertices))


@dataclass(frozen=True)
class Triplet:
    """3-set T with rho_G(T) = 2 and rho_{G\\x}(T - x) = 2 for every x in T."""

    vertices: int
    host: Graph

    def members(self) -> list[int]:
        return list(bits(self.vertices))


def is_quad(g: Graph, p: int) -> bool:
    g.check_mask(p)
    if p.bit_count() != 4:
        raise ArgumentError(f"a quad has 4 vertices, got {p.bit_count()}")
    if cut_rank(g, p) != 2:
        return False
    return all(cut_rank(g, p ^ (1 << x)) == 3 for x in bits(p))


def find_quads(g: Graph) -> list[Quad]:
    """All quads of ``g``, in ascending mask order."""
    t = subset_table(g)
    cand = np.flatnonzero((t.sizes == 4) & (t.ranks == 2))
    out = []
    for m in cand.tolist():
        if all(t.ranks[m ^ (1 << x)] == 3 for x in bits(m)):
            out.append(Quad(m, g))
    return out


def _triplet_ok(rows: tuple[int, ...], n: int, t: int) -> bool:
    outside = ((1 << n) - 1) ^ t
    if gf2_rank([rows[i] & outside for i in bits(t)]) != 2:
        return False
    # in G\x the complement of T-x is exactly V-T
    for x in bits(t):
        if gf2_rank([rows[i] & outside for i in bits(t ^ (1 << x))]) != 2:
            return False
    return True


def is_triplet(g: Graph, t: int) -> bool:
    g.check_mask(t)
    if t.bit_count() != 3:
        raise ArgumentError(f"a triplet has 3 vertices, got {t.bit_count()}")
    if cut_rank(g, t) != 2:
        return False
    outside = g.vertex_mask ^ t
    return all(cross_rank(g, t ^ (1 << x), outside) == 2 for x in bits(t))


def make_triplet(
    g: Graph, a: int, cap: int = DEFAULT_TRIPLET_CAP
) -> tuple[Graph, list[tuple[int, int]]]:
    """Pivot ``g`` until the 3-set ``a`` becomes a triplet.

    Breadth-first over the pivot-equivalence class, so the returned pivot
    sequence is a shortest one.  ``cap`` bounds the number of distinct graphs
    visited; hitting it raises :class:`ResourceLimitError` (a triplet is known
    to exist, so this only means the cap was too small).
    """
    g.check_mask(a)
    if a.bit_count() != 3:
        raise ArgumentError(f"need a 3-set, got {a.bit_count()} vertices")
    if cut_rank(g, a) != 2:
        raise PreconditionError("the 3-set must have cut-rank 2", witness=a)
    verdict = is_prime(g)
    if not verdict:
        raise PreconditionError("graph is not prime", witness=verdict.witness)
    n = g.n
    if _triplet_ok(g.rows, n, a):
        return g, []
    parent: dict[tuple[int, ...], tuple[tuple[int, ...], tuple[int, int]] | None] = {g.rows: None}
    queue = deque([g.rows])
    while queue:
        cur = queue.popleft()
        for u in range(n):
            for v in bits(cur[u] >> (u + 1) << (u + 1)):
                nxt = _pivot_rows(cur, u, v)
                if nxt in parent:
                    continue
                parent[nxt] = (cur, (u, v))
                if _triplet_ok(nxt, n, a):
                    seq = []
                    node = nxt
                    while parent[node] is not None:
                        prev, edge = parent[node]
                        seq.append(edge)
                        node = prev
                    seq.reverse()
                    return Graph(n, nxt), seq
                if len(parent) > cap:
                    raise ResourceLimitError(
                        f"pivot search exceeded cap {cap} without a triplet", explored=len(parent)
                    )
                queue.append(nxt)
    raise ResourceLimitError("pivot class exhausted without a triplet", explored=len(parent))


def replay_pivots(g: Graph, seq: list[tuple[int, int]]) -> Graph:
    rows = g.rows
    for u, v in seq:
        if not (rows[u] >> v) & 1:
            raise PreconditionError(f"{u}{v} is not an edge at this point of the sequence")
        rows = _pivot_rows(rows, u, v)
    return Graph(g.n, rows)


def is_fully_closed(g: Graph, x: int) -> bool:
    """Every vertex outside ``x`` strictly raises the cut-rank when added."""
    g.check_mask(x)
    base = cut_rank(g, x)
    return all(cut_rank(g, x | (1 << v)) > base for v in bits(g.vertex_mask ^ x))


def maximal_sequential_set(g: Graph) -> int:
    """A sequential set of maximum size; among those, the least mask."""
    verdict = is_prime(g)
    if not verdict:
        raise PreconditionError("graph is not prime", witness=verdict.witness)
    t = subset_table(g)
    seq = t.sequential
    best = int(t.sizes[seq].max())
    return int(np.flatnonzero(seq & (t.sizes == best))[0])


def rank_two_triples(g: Graph) -> list[int]:
    """All 3-sets with cut-rank exactly 2, ascending mask order."""
    t = subset_table(g)
    return np.flatnonzero((t.sizes == 3) & (t.ranks == 2)).tolist()
