"""Vectorised primality and prime-reduction search over whole batches of small graphs.

Used for the exhaustive labeled sweeps (all 2^21 graphs on 7 vertices), where
calling the scalar predicates once per graph would take far too long.  A
batch is an ``(B, n)`` int64 array of adjacency rows.

Primality uses the rank <= 1 shortcut: a matrix has GF(2) rank at most one
iff every nonzero row equals the OR of all rows.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ..errors import ResourceLimitError
from ..graph import ReductionKind
from .generate import MAX_ENUM_N, pairs

CHUNK = 1 << 17
KINDS = (ReductionKind.DELETE, ReductionKind.LC_DELETE, ReductionKind.PIVOT_DELETE)


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("VMCHAIN_THREADS", "1")))
    except ValueError:
        return 1


def codes_to_rows(codes: np.ndarray, n: int) -> np.ndarray:
    rows = np.zeros((codes.size, n), dtype=np.int64)
    for k, (i, j) in enumerate(pairs(n)):
        on = (codes >> k) & 1
        rows[:, i] |= on << j
        rows[:, j] |= on << i
    return rows


def batch_is_prime(rows: np.ndarray) -> np.ndarray:
    b, n = rows.shape
    ok = np.ones(b, dtype=bool)
    if n <= 1:
        return ok
    full = (1 << n) - 1
    for x in range(1, 1 << (n - 1)):
        size = x.bit_count()
        other = n - size
        comp = full ^ x
        members = [i for i in range(n) if (x >> i) & 1]
        sl = [rows[:, i] & comp for i in members]
        union = sl[0].copy()
        for r in sl[1:]:
            union |= r
        zero = union == 0
        bad = zero.copy()  # rank 0, both sides nonempty
        if size >= 2 and other >= 2:
            le1 = np.ones(b, dtype=bool)
            for r in sl:
                le1 &= (r == 0) | (r == union)
            bad |= le1
        ok &= ~bad
    return ok


def batch_lc(rows: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Local complementation at a per-graph vertex ``v``."""
    out = rows.copy()
    nb = rows[np.arange(rows.shape[0]), v]
    for i in range(rows.shape[1]):
        inside = (nb >> i) & 1
        out[:, i] ^= np.where(inside == 1, nb & ~np.int64(1 << i), 0)
    return out


def batch_delete(rows: np.ndarray, v: int) -> np.ndarray:
    keep = [i for i in range(rows.shape[1]) if i != v]
    r = rows[:, keep]
    low = r & ((1 << v) - 1)
    return low | ((r >> (v + 1)) << v)


def batch_first_prime_reduction(rows: np.ndarray) -> np.ndarray:
    """Index ``3*v + kind`` of the first prime elementary reduction per graph, or -1.

    Same trial order as :func:`vmchain.reducer.reduce_prime`.  The pivot
    representative uses the least neighbour, as :func:`contract_vertex` does.
    """
    b, n = rows.shape
    found = np.full(b, -1, dtype=np.int64)
    idx = np.arange(b)
    for v in range(n):
        vv = np.full(b, v)
        nb = rows[:, v]
        isolated = nb == 0
        lowest = np.zeros(b, dtype=np.int64)
        for i in reversed(range(n)):
            lowest = np.where((nb >> i) & 1 == 1, i, lowest)
        cands = [
            (batch_delete(rows, v), np.ones(b, dtype=bool)),
            (batch_delete(batch_lc(rows, vv), v), np.ones(b, dtype=bool)),
        ]
        piv = batch_lc(batch_lc(batch_lc(rows, lowest), vv), lowest)
        cands.append((batch_delete(piv, v), ~isolated))
        for k, (red, valid) in enumerate(cands):
            todo = (found < 0) & valid
            if not todo.any():
                continue
            sel = idx[todo]
            hit = batch_is_prime(red[sel])
            found[sel[hit]] = 3 * v + k
    return found


@dataclass
class SweepResult:
    n: int
    graphs: int = 0
    primes: int = 0
    failures: list[int] = field(default_factory=list)  # edge codes
    first_hits: dict[int, int] = field(default_factory=dict)  # step index -> count


def _sweep_chunk(args):
    n, start, stop = args
    codes = np.arange(start, stop, dtype=np.int64)
    rows = codes_to_rows(codes, n)
    prime = batch_is_prime(rows)
    prows = rows[prime]
    pcodes = codes[prime]
    hits = batch_first_prime_reduction(prows) if prows.size else np.zeros(0, dtype=np.int64)
    fails = pcodes[hits < 0].tolist()
    vals, counts = np.unique(hits[hits >= 0], return_counts=True)
    return stop - start, int(prime.sum()), fails, dict(zip(vals.tolist(), counts.tolist()))


def sweep_prime_reductions(n: int, workers: int | None = None) -> SweepResult:
    """Check every prime labeled graph on ``n`` vertices for a prime elementary reduction."""
    if n > MAX_ENUM_N:
        raise ResourceLimitError(f"exhaustive sweep capped at n={MAX_ENUM_N}")
    total = 1 << (n * (n - 1) // 2)
    jobs = [(n, s, min(total, s + CHUNK)) for s in range(0, total, CHUNK)]
    workers = workers or worker_count()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_sweep_chunk, jobs))
    else:
        parts = [_sweep_chunk(j) for j in jobs]
    res = SweepResult(n)
    for count, primes, fails, hits in parts:
        res.graphs += count
        res.primes += primes
        res.failures.extend(fails)
        for k, c in hits.items():
            res.first_hits[k] = res.first_hits.get(k, 0) + c
    return res


def count_primes(n: int) -> int:
    total = 1 << (n * (n - 1) // 2)
    out = 0
    for s in range(0, total, CHUNK):
        codes = np.arange(s, min(total, s + CHUNK), dtype=np.int64)
        out += int(batch_is_prime(codes_to_rows(codes, n)).sum())
    return out
