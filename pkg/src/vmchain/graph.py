"""Labeled simple graphs and the vertex-minor operations on them.

A graph on ``n`` vertices is stored as ``n`` adjacency rows, each an ``int``
bitmask (bit ``j`` of row ``i`` is set iff ``ij`` is an edge).  Vertex sets are
plain ``int`` masks over ``0..n-1`` as well; :func:`mask_of` and :func:`bits`
convert between masks and vertex lists.

Equality is labeled and bit-exact.  Nothing here ever tests isomorphism.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ArgumentError, PreconditionError, ResourceLimitError, UnsupportedError

DEFAULT_ORBIT_CAP = 10**6


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        if v < 0:
            raise ArgumentError(f"negative vertex {v}")
        m |= 1 << v
    return m


def full_mask(n: int) -> int:
    return (1 << n) - 1


def _drop_bit(row: int, v: int) -> int:
    # order-preserving compaction: bit i > v moves to i-1
    low = row & ((1 << v) - 1)
    return low | ((row >> (v + 1)) << v)


@dataclass(frozen=True)
class Graph:
    """Immutable labeled simple graph on vertices ``0..n-1``."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise ArgumentError(f"expected {self.n} rows, got {len(self.rows)}")
        limit = 1 << self.n
        for i, row in enumerate(self.rows):
            if row < 0 or row >= limit:
                raise ArgumentError(f"row {i} addresses bits outside 0..{self.n - 1}")
            if (row >> i) & 1:
                raise ArgumentError(f"loop at vertex {i}")
            for j in bits(row):
                if not (self.rows[j] >> i) & 1:
                    raise ArgumentError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ArgumentError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ArgumentError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = full_mask(n)
        return cls(n, tuple(full ^ (1 << i) for i in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @property
    def vertex_mask(self) -> int:
        return full_mask(self.n)

    def neighbors(self, v: int) -> int:
        self._check_vertex(v)
        return self.rows[v]

    def degree(self, v: int) -> int:
        return self.neighbors(v).bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self.rows[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in bits(self.rows[i]) if j > i]

    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise ArgumentError(f"vertex {v!r} out of range for n={self.n}")

    def check_mask(self, mask: int) -> None:
        if mask < 0 or mask >> self.n:
            raise ArgumentError(f"vertex set {mask:#x} not contained in 0..{self.n - 1}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


class ReductionKind(str, enum.Enum):
    DELETE = "delete"  # G \ v
    LC_DELETE = "lc_delete"  # G * v \ v
    PIVOT_DELETE = "pivot_delete"  # G / v


# Raw tuple-level operations.  The orbit searches call these in tight loops,
# so they skip Graph validation.

def _lc_rows(rows: tuple[int, ...], v: int) -> tuple[int, ...]:
    nb = rows[v]
    if nb & (nb - 1) == 0:  # deg <= 1
        return rows
    out = list(rows)
    m = nb
    while m:
        low = m & -m
        i = low.bit_length() - 1
        out[i] ^= nb ^ low
        m ^= low
    return tuple(out)


def _pivot_rows(rows: tuple[int, ...], u: int, v: int) -> tuple[int, ...]:
    return _lc_rows(_lc_rows(_lc_rows(rows, u), v), u)


def _delete_rows(rows: tuple[int, ...], v: int) -> tuple[int, ...]:
    return tuple(_drop_bit(r, v) for i, r in enumerate(rows) if i != v)


def local_complement(g: Graph, v: int) -> Graph:
    """Return ``G*v``: complement the subgraph induced on the neighbourhood of ``v``."""
    g._check_vertex(v)
    return Graph(g.n, _lc_rows(g.rows, v))


def pivot(g: Graph, u: int, v: int) -> Graph:
    """Return ``G ∧ uv = G*u*v*u``.  Only defined when ``uv`` is an edge."""
    if not g.has_edge(u, v):
        raise PreconditionError(f"pivot needs an edge, {u}{v} is not one")
    return Graph(g.n, _pivot_rows(g.rows, u, v))


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove ``v``; vertices above ``v`` shift down by one."""
    g._check_vertex(v)
    return Graph(g.n - 1, _delete_rows(g.rows, v))


def contract_vertex(g: Graph, v: int) -> Graph:
    """Return ``G/v``, represented as ``(G ∧ uv) \\ v`` with ``u`` the least neighbour of ``v``.

    Any other neighbour gives a locally equivalent graph; the least one is
    used so results are reproducible.
    """
    g._check_vertex(v)
    nb = g.rows[v]
    if not nb:
        raise UnsupportedError(f"G/v is undefined: vertex {v} is isolated")
    u = (nb & -nb).bit_length() - 1
    return Graph(g.n - 1, _delete_rows(_pivot_rows(g.rows, u, v), v))


def reduce(g: Graph, v: int, kind: ReductionKind) -> Graph:
    """Apply one elementary reduction of the given kind at ``v``."""
    kind = ReductionKind(kind)
    if kind is ReductionKind.DELETE:
        return delete_vertex(g, v)
    if kind is ReductionKind.LC_DELETE:
        return delete_vertex(local_complement(g, v), v)
    return contract_vertex(g, v)


def elementary_reductions(g: Graph, v: int) -> list[tuple[ReductionKind, Graph]]:
    """The canonical one-vertex-smaller vertex-minors of ``g`` at ``v``.

    Three entries (delete, lc-delete, pivot-delete) when ``v`` has a
    neighbour.  For isolated ``v`` only the first two, which coincide.
    """
    g._check_vertex(v)
    out = [
        (ReductionKind.DELETE, delete_vertex(g, v)),
        (ReductionKind.LC_DELETE, delete_vertex(local_complement(g, v), v)),
    ]
    if g.rows[v]:
        out.append((ReductionKind.PIVOT_DELETE, contract_vertex(g, v)))
    return out


def apply_lc_sequence(g: Graph, seq: Iterable[int]) -> Graph:
    rows = g.rows
    for v in seq:
        g._check_vertex(v)
        rows = _lc_rows(rows, v)
    return Graph(g.n, rows)


def _orbit_bfs(rows: tuple[int, ...], cap: int, target: tuple[int, ...] | None = None):
    n = len(rows)
    seen = {rows}
    if target is not None and rows == target:
        return seen, True
    queue = deque([rows])
    while queue:
        cur = queue.popleft()
        for v in range(n):
            nxt = _lc_rows(cur, v)
            if nxt in seen:
                continue
            if target is not None and nxt == target:
                return seen, True
            seen.add(nxt)
            if len(seen) > cap:
                raise ResourceLimitError(
                    f"local-equivalence orbit exceeds cap {cap}", explored=len(seen)
                )
            queue.append(nxt)
    return seen, False


def local_equivalence_orbit(g: Graph, cap: int = DEFAULT_ORBIT_CAP) -> set[Graph]:
    """Every labeled graph reachable from ``g`` by local complementations (``g`` included)."""
    seen, _ = _orbit_bfs(g.rows, cap)
    return {Graph(g.n, r) for r in seen}


def locally_equivalent(g: Graph, h: Graph, cap: int = DEFAULT_ORBIT_CAP) -> bool:
    """Decide whether ``h`` is in the local-complementation orbit of ``g``.

    Breadth-first search from ``g``; stops as soon as ``h`` turns up.  Raises
    :class:`ResourceLimitError` when the orbit grows past ``cap`` before a
    decision is reached.
    """
    if g.n != h.n:
        raise ArgumentError(f"vertex counts differ: {g.n} vs {h.n}")
    _, found = _orbit_bfs(g.rows, cap, target=h.rows)
    return found
