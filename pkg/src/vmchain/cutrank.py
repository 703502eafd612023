"""GF(2) rank, cut-rank and the bordered-matrix formulas for reduced graphs.

Matrices are lists of ``int`` row bitmasks.  Elimination pivots on the lowest
set bit and XORs it out of every other row.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ArgumentError, ResourceLimitError, UnsupportedError
from .graph import Graph, ReductionKind, bits

# 2^24 subsets is the largest table the sweep-based predicates will build.
MAX_TABLE_N = 24
_CHUNK = 1 << 15


def gf2_rank(rows: Sequence[int]) -> int:
    """Rank over GF(2) of the matrix whose rows are the given bitmasks."""
    work = [r for r in rows if r]
    rank = 0
    while work:
        p = work.pop()
        rank += 1
        low = p & -p
        work = [r ^ p if r & low else r for r in work]
        work = [r for r in work if r]
    return rank


@dataclass(frozen=True)
class Gf2Matrix:
    """Dense ``nrows x ncols`` binary matrix; row ``i`` is ``rows[i]``, column ``j`` is bit ``j``."""

    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.nrows:
            raise ArgumentError(f"expected {self.nrows} rows, got {len(self.rows)}")
        for r in self.rows:
            if r < 0 or r >> self.ncols:
                raise ArgumentError(f"row {r:#x} wider than {self.ncols} columns")

    @classmethod
    def from_lists(cls, data: Sequence[Sequence[int]]) -> "Gf2Matrix":
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        rows = []
        for line in data:
            if len(line) != ncols:
                raise ArgumentError("ragged matrix")
            rows.append(sum(1 << j for j, x in enumerate(line) if x & 1))
        return cls(nrows, ncols, tuple(rows))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Gf2Matrix":
        return cls(nrows, ncols, (0,) * nrows)

    @classmethod
    def identity(cls, k: int) -> "Gf2Matrix":
        return cls(k, k, tuple(1 << i for i in range(k)))

    @classmethod
    def ones(cls, nrows: int, ncols: int) -> "Gf2Matrix":
        return cls(nrows, ncols, ((1 << ncols) - 1,) * nrows)

    def submatrix(self, row_mask: int, col_mask: int) -> list[int]:
        """Rows of ``A[I, J]`` kept in the original column positions."""
        return [self.rows[i] & col_mask for i in bits(row_mask)]

    def rank(self) -> int:
        return gf2_rank(self.rows)

    def transpose(self) -> "Gf2Matrix":
        cols = [sum(((r >> j) & 1) << i for i, r in enumerate(self.rows)) for j in range(self.ncols)]
        return Gf2Matrix(self.ncols, self.nrows, tuple(cols))


def adjacency_matrix(g: Graph) -> Gf2Matrix:
    return Gf2Matrix(g.n, g.n, g.rows)


def gf2_matrix_rank(m: Gf2Matrix) -> int:
    return m.rank()


def cut_rank(g: Graph, x: int) -> int:
    """``rank A_G[X, V-X]`` for the vertex mask ``x``."""
    g.check_mask(x)
    outside = g.vertex_mask ^ x
    return gf2_rank([g.rows[i] & outside for i in bits(x)])


def cross_rank(g: Graph, x: int, y: int) -> int:
    """``rank A_G[X, Y]`` for disjoint masks ``x`` and ``y``."""
    g.check_mask(x)
    g.check_mask(y)
    if x & y:
        raise ArgumentError(f"sets overlap on {list(bits(x & y))}")
    return gf2_rank([g.rows[i] & y for i in bits(x)])


def reduced_cut_rank(g: Graph, x: int, s: int, kind: ReductionKind) -> int:
    """Cut-rank of ``s`` in ``G*x\\x`` or ``G/x`` without building the reduced graph.

    Borders ``A_G[S, D]`` (``D = V - S - x``) with the row and column of ``x``;
    the corner entry is 1 for the lc-delete reduction and 0 for pivot-delete.
    The answer is the rank of the bordered matrix minus one.
    """
    kind = ReductionKind(kind)
    g._check_vertex(x)
    g.check_mask(s)
    xbit = 1 << x
    if s & xbit:
        raise ArgumentError(f"vertex {x} must not lie in the set")
    if kind is ReductionKind.DELETE:
        raise ArgumentError("no formula for plain deletion; use cut_rank on G\\x")
    if kind is ReductionKind.PIVOT_DELETE and not g.rows[x]:
        raise UnsupportedError(f"G/x is undefined: vertex {x} is isolated")
    d = g.vertex_mask ^ s ^ xbit
    corner = xbit if kind is ReductionKind.LC_DELETE else 0
    rows = [corner | (g.rows[x] & d)]
    rows.extend(g.rows[i] & (d | xbit) for i in bits(s))
    return gf2_rank(rows) - 1


def all_cut_ranks(g: Graph) -> np.ndarray:
    """Cut-rank of every vertex subset, indexed by mask (``uint8``, length ``2**n``).

    Vectorised elimination over chunks of masks.  Only masks avoiding vertex
    ``n-1`` are eliminated; the rest follow from ``rho(X) = rho(V-X)``.
    """
    n = g.n
    if n > MAX_TABLE_N:
        raise ResourceLimitError(f"2^{n} subsets exceeds the table limit 2^{MAX_TABLE_N}")
    if n == 0:
        return np.zeros(1, dtype=np.uint8)
    full = (1 << n) - 1
    half = 1 << (n - 1)
    out = np.zeros(1 << n, dtype=np.uint8)
    adj = [np.int64(r) for r in g.rows]
    for start in range(0, half, _CHUNK):
        masks = np.arange(start, min(half, start + _CHUNK), dtype=np.int64)
        comp = full ^ masks
        basis = np.zeros((n, masks.size), dtype=np.int64)
        for i in range(n - 1):
            inside = ((masks >> i) & 1).astype(bool)
            if not inside.any():
                continue
            v = np.where(inside, adj[i] & comp, 0)
            for b in range(n):
                hasb = ((v >> b) & 1).astype(bool)
                if not hasb.any():
                    continue
                bb = basis[b]
                empty = bb == 0
                ins = hasb & empty
                red = hasb & ~empty
                basis[b] = np.where(ins, v, bb)
                v = np.where(ins, 0, np.where(red, v ^ bb, v))
        r = np.count_nonzero(basis, axis=0).astype(np.uint8)
        out[masks] = r
        out[comp] = r
    return out
