"""Slow, deliberately independent reference implementations.

Nothing in here shares code with the production rank or DP paths: matrices
are lists of 0/1 lists, eliminated column by column, and sequential sets are
decided by walking orderings.
"""

from __future__ import annotations

from itertools import combinations

from ..graph import Graph


def naive_rank(matrix: list[list[int]]) -> int:
    m = [list(row) for row in matrix]
    if not m or not m[0]:
        return 0
    rows, cols = len(m), len(m[0])
    rank = 0
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if m[r][c]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(rows):
            if r != rank and m[r][c]:
                m[r] = [a ^ b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def adjacency_lists(g: Graph) -> list[list[int]]:
    return [[(g.rows[i] >> j) & 1 for j in range(g.n)] for i in range(g.n)]


def naive_cross_rank(g: Graph, xs, ys) -> int:
    a = adjacency_lists(g)
    return naive_rank([[a[i][j] for j in ys] for i in xs])


def naive_cut_rank(g: Graph, xs) -> int:
    xs = sorted(xs)
    ys = [v for v in range(g.n) if v not in set(xs)]
    return naive_cross_rank(g, xs, ys)


def naive_lc(g: Graph, v: int) -> Graph:
    """Local complementation from the textbook definition: toggle every pair in N(v)."""
    nb = [u for u in range(g.n) if (g.rows[v] >> u) & 1]
    edges = set(g.edges())
    for x, y in combinations(nb, 2):
        edges ^= {(x, y)}
    return Graph.from_edges(g.n, edges)


def sequential_by_orderings(g: Graph, a: int) -> bool:
    """Search orderings of ``a`` depth-first, abandoning a prefix once its cut-rank exceeds 2."""
    members = [v for v in range(g.n) if (a >> v) & 1]
    rank_cache: dict[frozenset, int] = {}

    def rank(prefix: frozenset) -> int:
        if prefix not in rank_cache:
            rank_cache[prefix] = naive_cut_rank(g, prefix)
        return rank_cache[prefix]

    def extend(prefix: list[int]) -> bool:
        if len(prefix) == len(members):
            return True
        for v in members:
            if v in prefix:
                continue
            nxt = prefix + [v]
            if rank(frozenset(nxt)) <= 2 and extend(nxt):
                return True
        return False

    return extend([])


def naive_k_rank_connected(g: Graph, k: int) -> bool:
    n = g.n
    for size in range(n + 1):
        for xs in combinations(range(n), size):
            r = naive_cut_rank(g, xs)
            if r < k and size > r and n - size > r:
                return False
    return True


def naive_prime(g: Graph) -> bool:
    return naive_k_rank_connected(g, 2)


def _connected_without(g: Graph, removed: set[int]) -> bool:
    alive = [v for v in range(g.n) if v not in removed]
    if not alive:
        return True
    seen = {alive[0]}
    stack = [alive[0]]
    while stack:
        v = stack.pop()
        for u in range(g.n):
            if (g.rows[v] >> u) & 1 and u not in removed and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(alive)


def naive_k_connected(g: Graph, k: int) -> bool:
    """More than k vertices and no separator of fewer than k vertices."""
    if g.n <= k:
        return False
    for size in range(k):
        for cut in combinations(range(g.n), size):
            if not _connected_without(g, set(cut)):
                return False
    return True


def naive_sequential_3rc(g: Graph) -> bool:
    if not naive_prime(g):
        return False
    full = (1 << g.n) - 1
    for m in range(1 << g.n):
        xs = [v for v in range(g.n) if (m >> v) & 1]
        if naive_cut_rank(g, xs) <= 2:
            if not sequential_by_orderings(g, m) and not sequential_by_orderings(g, full ^ m):
                return False
    return True
