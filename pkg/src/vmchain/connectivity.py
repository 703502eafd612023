"""Rank-connectivity predicates with re-checkable witnesses.

Every predicate sweeps the table of all ``2**n`` cut-ranks (see
:func:`vmchain.cutrank.all_cut_ranks`).  A failing verdict carries the
numerically smallest violating mask, so reports are reproducible.

``prime`` means 2-rank-connected: there is no partition ``(A, B)`` with
``|A|, |B| > rho(A)`` and ``rho(A) < 2``.  This differs from the "no split"
phrasing (only sets with both sides of size >= 2) on disconnected graphs:
a graph with an isolated vertex is never prime here.  Small connected graphs
(K1, K2, P3, K3) are prime under both readings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .cutrank import MAX_TABLE_N, all_cut_ranks, cut_rank
from .errors import ArgumentError, ResourceLimitError
from .graph import Graph, bits, mask_of


@dataclass(frozen=True)
class ConnectivityVerdict:
    holds: bool
    witness: int | None = None  # violating vertex mask when holds is False
    witness_order: tuple[int, ...] | None = None
    violation: str | None = None  # which defining condition the witness breaks

    def __bool__(self) -> bool:
        return self.holds

    def witness_vertices(self) -> list[int] | None:
        return None if self.witness is None else list(bits(self.witness))

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "witness": self.witness_vertices(),
            "witness_order": None if self.witness_order is None else list(self.witness_order),
            "violation": self.violation,
        }


@lru_cache(maxsize=None)
def _popcounts(n: int) -> np.ndarray:
    pc = np.zeros(1 << n, dtype=np.uint8)
    for i in range(n):
        pc[1 << i: 1 << (i + 1)] = pc[: 1 << i] + 1
    return pc


@lru_cache(maxsize=None)
def _layers(n: int) -> tuple[np.ndarray, ...]:
    pc = _popcounts(n)
    order = np.argsort(pc, kind="stable").astype(np.int64)
    edges = np.searchsorted(pc[order], np.arange(n + 2))
    return tuple(order[edges[k]: edges[k + 1]] for k in range(n + 1))


class SubsetTable:
    """Cut-ranks of all subsets of one graph plus the sequential-set reachability table."""

    def __init__(self, g: Graph):
        if g.n > MAX_TABLE_N:
            raise ResourceLimitError(
                f"exhaustive subset sweep refused for n={g.n} > {MAX_TABLE_N}"
            )
        self.graph = g
        self.n = g.n
        self.full = (1 << g.n) - 1
        self.ranks = all_cut_ranks(g)
        self.sizes = _popcounts(g.n)

    @cached_property
    def sequential(self) -> np.ndarray:
        """``sequential[S]`` is True iff S has an ordering with every prefix of cut-rank <= 2.

        S qualifies iff ``rho(S) <= 2`` and some ``S - v`` qualifies.  Layers
        are processed by size; indexing ``S ^ bit`` for a bit outside S lands
        in a later, still-False layer, so no membership test is needed.
        """
        low = self.ranks <= 2
        reach = np.zeros(1 << self.n, dtype=bool)
        reach[0] = True
        layers = _layers(self.n)
        for k in range(1, self.n + 1):
            L = layers[k]
            acc = np.zeros(L.size, dtype=bool)
            for i in range(self.n):
                acc |= reach[L ^ (1 << i)]
            reach[L] = acc & low[L]
        return reach


@lru_cache(maxsize=256)
def subset_table(g: Graph) -> SubsetTable:
    return SubsetTable(g)


def _first(flags: np.ndarray) -> int | None:
    idx = np.flatnonzero(flags)
    return int(idx[0]) if idx.size else None


def _rank_violations(t: SubsetTable, k: int) -> np.ndarray:
    r = t.ranks
    return (r < k) & (t.sizes > r) & ((t.n - t.sizes) > r)


def is_k_rank_connected(g: Graph, k: int) -> ConnectivityVerdict:
    """No partition (A, B) with ``|A|, |B| > rho(A)`` and ``rho(A) < k``."""
    if k < 1:
        raise ArgumentError("k must be at least 1")
    t = subset_table(g)
    w = _first(_rank_violations(t, k))
    if w is None:
        return ConnectivityVerdict(True)
    return ConnectivityVerdict(False, w, violation=f"rank<{k} with both sides larger than rank")


def is_prime(g: Graph) -> ConnectivityVerdict:
    """2-rank-connectivity."""
    return is_k_rank_connected(g, 2)


def _sequential_order(g: Graph, a: int) -> tuple[int, ...] | None:
    # DP over subsets of a, layer by layer, keeping one parent per reachable set
    if g.n <= 16:
        ranks = subset_table(g).ranks
        rank = lambda m: int(ranks[m])  # noqa: E731
    else:
        memo: dict[int, int] = {}

        def rank(m: int) -> int:
            if m not in memo:
                memo[m] = cut_rank(g, m)
            return memo[m]

    parent = {0: None}
    frontier = [0]
    for _ in range(a.bit_count()):
        nxt = []
        for s in frontier:
            for v in bits(a & ~s):
                t = s | (1 << v)
                if t not in parent and rank(t) <= 2:
                    parent[t] = s
                    nxt.append(t)
        if not nxt:
            return None
        frontier = nxt
    order = []
    cur = a
    while cur:
        prev = parent[cur]
        order.append((cur ^ prev).bit_length() - 1)
        cur = prev
    return tuple(reversed(order))


def is_sequential(g: Graph, a: int) -> ConnectivityVerdict:
    """Whether ``a`` admits an ordering whose every prefix has cut-rank at most 2.

    On success ``witness_order`` is one such ordering.  On failure the
    witness is ``a`` itself.
    """
    g.check_mask(a)
    order = _sequential_order(g, a)
    if order is None:
        return ConnectivityVerdict(False, a, violation="no ordering with all prefixes of rank<=2")
    return ConnectivityVerdict(True, witness_order=order)


def _with_prime(g: Graph):
    t = subset_table(g)
    w = _first(_rank_violations(t, 2))
    if w is not None:
        return t, ConnectivityVerdict(False, w, violation="not prime")
    return t, None


def is_sequentially_3rc(g: Graph) -> ConnectivityVerdict:
    """Prime, and every X with ``rho(X) <= 2`` has X or V-X sequential."""
    t, bad = _with_prime(g)
    if bad is not None:
        return bad
    seq = t.sequential
    idx = np.arange(1 << t.n, dtype=np.int64)
    viol = (t.ranks <= 2) & ~seq & ~seq[t.full ^ idx]
    w = _first(viol)
    if w is None:
        return ConnectivityVerdict(True)
    return ConnectivityVerdict(False, w, violation="rank<=2 with neither side sequential")


def is_weakly_3rc(g: Graph) -> ConnectivityVerdict:
    """Prime, and no X with ``|X| >= 5``, ``|V-X| >= 5`` and ``rho(X) <= 2``."""
    t, bad = _with_prime(g)
    if bad is not None:
        return bad
    viol = (t.ranks <= 2) & (t.sizes >= 5) & ((t.n - t.sizes) >= 5)
    w = _first(viol)
    if w is None:
        return ConnectivityVerdict(True)
    return ConnectivityVerdict(False, w, violation="rank<=2 with both sides of size>=5")


def is_internally_3rc(g: Graph) -> ConnectivityVerdict:
    """Prime, and every X with ``rho(X) <= 2`` has a side of size at most 3."""
    t, bad = _with_prime(g)
    if bad is not None:
        return bad
    viol = (t.ranks <= 2) & (t.sizes > 3) & ((t.n - t.sizes) > 3)
    w = _first(viol)
    if w is None:
        return ConnectivityVerdict(True)
    return ConnectivityVerdict(False, w, violation="rank<=2 with both sides of size>=4")


def is_3_rank_connected(g: Graph) -> ConnectivityVerdict:
    return is_k_rank_connected(g, 3)


CLASSES = {
    "prime": is_prime,
    "weak3rc": is_weakly_3rc,
    "internal3rc": is_internally_3rc,
    "seq3rc": is_sequentially_3rc,
    "3rc": is_3_rank_connected,
}


def class_predicate(name: str):
    """Look up a predicate by CLI class name (``prime``, ``krank:K``, ``weak3rc``, ...)."""
    if name.startswith("krank:"):
        try:
            k = int(name.split(":", 1)[1])
        except ValueError:
            raise ArgumentError(f"bad class {name!r}") from None
        if k < 1:
            raise ArgumentError(f"bad class {name!r}")
        return lambda g: is_k_rank_connected(g, k)
    try:
        return CLASSES[name]
    except KeyError:
        raise ArgumentError(f"unknown connectivity class {name!r}") from None


def recheck_witness(g: Graph, cls: str, verdict: ConnectivityVerdict) -> bool:
    """Re-derive, from scalar cut-ranks only, that a failing verdict's witness really violates ``cls``."""
    if verdict.holds:
        return True
    w = verdict.witness
    if w is None:
        return False
    n = g.n
    r = cut_rank(g, w)
    size = w.bit_count()
    other = n - size
    split = r < 2 and size > r and other > r
    if cls.startswith("krank:"):
        k = int(cls.split(":")[1])
        return r < k and size > r and other > r
    if cls == "3rc":
        return r < 3 and size > r and other > r
    if cls == "prime" or verdict.violation == "not prime":
        return split
    if cls == "weak3rc":
        return r <= 2 and size >= 5 and other >= 5
    if cls == "internal3rc":
        return r <= 2 and size > 3 and other > 3
    if cls == "seq3rc":
        from .verify.oracles import sequential_by_orderings

        comp = g.vertex_mask ^ w
        return r <= 2 and not sequential_by_orderings(g, w) and not sequential_by_orderings(g, comp)
    raise ArgumentError(f"unknown connectivity class {cls!r}")


__all__ = [
    "ConnectivityVerdict",
    "SubsetTable",
    "subset_table",
    "is_k_rank_connected",
    "is_prime",
    "is_sequential",
    "is_sequentially_3rc",
    "is_weakly_3rc",
    "is_internally_3rc",
    "is_3_rank_connected",
    "class_predicate",
    "recheck_witness",
    "mask_of",
]
