"""The lemma and theorem catalog as seeded property suites.

Each suite draws an instance satisfying its hypotheses (rejection sampling,
a bounded number of attempts per trial), evaluates the conclusion and
records any counterexample.  Trial ``i`` of suite ``s`` under seed ``k``
uses its own PCG64 stream keyed ``(k, crc32(s), i)``, so a report does not
depend on how trials are scheduled.

Suites that need an elementary reduction ``G/x`` only sample non-isolated
``x``; the statements presuppose a neighbour.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..connectivity import (
    is_internally_3rc,
    is_k_rank_connected,
    is_prime,
    is_sequential,
    is_sequentially_3rc,
    is_weakly_3rc,
    subset_table,
)
from ..cutrank import cut_rank, gf2_rank, reduced_cut_rank
from ..errors import ArgumentError, ResourceLimitError, TheoremViolation
from ..formats import to_graph6
from ..graph import (
    Graph,
    ReductionKind,
    _drop_bit,
    bits,
    contract_vertex,
    delete_vertex,
    elementary_reductions,
    local_complement,
    locally_equivalent,
    pivot,
    reduce,
)
from ..reducer import reduce_internal_triplet, reduce_prime, reduce_seq3rc
from ..structures import (
    is_fully_closed,
    is_quad,
    is_triplet,
    make_triplet,
    rank_two_triples,
    replay_pivots,
)
from .generate import make_rng, random_graph, random_subset, stable_key
from .oracles import naive_k_connected
from .report import VerifyReport
from .sweep import KINDS, sweep_prime_reductions

ORBIT_CAP = 10**6
TRIPLET_CAP = 10**5




@dataclass(frozen=True)
class Suite:
    id: str
    statement: str
    default_trials: int
    trial: Callable
    attempts: int = 50
    sizes: tuple[int, ...] | None = None  # allowed overrides for n


def _v(mask: int) -> list[int]:
    return list(bits(mask))


def _n(rng, lo: int, hi: int) -> int:
    return int(rng.integers(lo, hi + 1))


def _graph(rng, lo: int, hi: int, n: int | None = None) -> Graph:
    return random_graph(rng, n if n is not None else _n(rng, lo, hi))


def _pick(rng, mask: int) -> int:
    members = _v(mask)
    return members[int(rng.integers(0, len(members)))]


def _without(mask: int, *vs: int) -> int:
    # relabel a mask into the graph with vs deleted (vs distinct, any order)
    for v in sorted(vs, reverse=True):
        mask = _drop_bit(mask & ~(1 << v), v)
    return mask


def _minus(g: Graph, *vs: int) -> Graph:
    for v in sorted(vs, reverse=True):
        g = delete_vertex(g, v)
    return g


def _non_isolated(rng, g: Graph) -> int | None:
    cand = [v for v in range(g.n) if g.rows[v]]
    if not cand:
        return None
    return cand[int(rng.integers(0, len(cand)))]


def _sample_class(rng, pred, lo: int, hi: int, n: int | None = None, p=None) -> Graph | None:
    g = random_graph(rng, n if n is not None else _n(rng, lo, hi)) if p is None else random_graph(
        rng, n if n is not None else _n(rng, lo, hi), p
    )
    return g if pred(g) else None


# -- vertex-minor algebra --------------------------------------------------

def t_pivot_eq(rng, n=None):
    g = _graph(rng, 3, 8, n)
    cand = [v for v in range(g.n) if g.rows[v].bit_count() >= 2]
    if not cand:
        return None
    v = cand[int(rng.integers(0, len(cand)))]
    nb = _v(g.rows[v])
    i, j = rng.choice(len(nb), size=2, replace=False).tolist()
    x, y = nb[i], nb[j]
    a = delete_vertex(pivot(g, v, x), v)
    b = delete_vertex(pivot(g, v, y), v)
    return locally_equivalent(a, b, ORBIT_CAP), g, {"v": v, "x": x, "y": y}


def t_onetoone(rng, n=None):
    g = _graph(rng, 2, 8, n)
    v = _non_isolated(rng, g)
    if v is None:
        return None
    w = int(rng.integers(0, g.n))
    gw = local_complement(g, w)
    left = [delete_vertex(gw, v), delete_vertex(local_complement(gw, v), v), contract_vertex(gw, v)]
    base = {
        ReductionKind.DELETE: delete_vertex(g, v),
        ReductionKind.LC_DELETE: delete_vertex(local_complement(g, v), v),
        ReductionKind.PIVOT_DELETE: contract_vertex(g, v),
    }
    D, L, P = ReductionKind.DELETE, ReductionKind.LC_DELETE, ReductionKind.PIVOT_DELETE
    if v == w:
        right = [L, D, P]
        case = 3
    elif (g.rows[v] >> w) & 1:
        right = [D, P, L]
        case = 2
    else:
        right = [D, L, P]
        case = 1
    ok = all(locally_equivalent(a, base[k], ORBIT_CAP) for a, k in zip(left, right))
    return ok, g, {"v": v, "w": w, "case": case}


def t_elt_minor(rng, n=None):
    g = _graph(rng, 2, 8, n)
    seq = rng.integers(0, g.n, size=_n(rng, 0, 2 * g.n)).tolist()
    v = int(rng.integers(0, g.n))
    h = g
    for u in seq:
        h = local_complement(h, u)
    # interleave: a few more local complementations after the deletion
    h = delete_vertex(h, v)
    post = rng.integers(0, max(h.n, 1), size=_n(rng, 0, 3)).tolist() if h.n else []
    for u in post:
        h = local_complement(h, u)
    ok = any(locally_equivalent(c, h, ORBIT_CAP) for _, c in elementary_reductions(g, v))
    return ok, g, {"lc_sequence": seq, "v": v, "after": post}


# -- cut-rank inequalities ---------------------------------------------------

def t_local_invariance(rng, n=None):
    g = _graph(rng, 1, 10, n)
    seq = rng.integers(0, g.n, size=_n(rng, 1, 4)).tolist()
    h = g
    for u in seq:
        h = local_complement(h, u)
    x = random_subset(rng, g.vertex_mask)
    return cut_rank(g, x) == cut_rank(h, x), g, {"lc_sequence": seq, "X": _v(x)}


def t_delrank(rng, n=None):
    g = _graph(rng, 1, 10, n)
    v = int(rng.integers(0, g.n))
    x = random_subset(rng, g.vertex_mask & ~(1 << v))
    h = delete_vertex(g, v)
    r = cut_rank(h, _without(x, v))
    ok = r + 1 >= cut_rank(g, x) >= r and r + 1 >= cut_rank(g, x | (1 << v)) >= r
    return ok, g, {"v": v, "X": _v(x)}


def t_truemper(rng, n=None):
    r = _n(rng, 1, 8)
    c = _n(rng, 1, 8)
    rows = rng.integers(0, 1 << c, size=r).tolist()
    rmask, cmask = (1 << r) - 1, (1 << c) - 1
    x1, x2 = random_subset(rng, rmask), random_subset(rng, rmask)
    y1, y2 = random_subset(rng, cmask), random_subset(rng, cmask)

    def rk(xs, ys):
        return gf2_rank([rows[i] & ys for i in bits(xs)])

    ok = rk(x1, y1) + rk(x2, y2) >= rk(x1 & x2, y1 | y2) + rk(x1 | x2, y1 & y2)
    params = {"rows": rows, "ncols": c, "X1": _v(x1), "X2": _v(x2), "Y1": _v(y1), "Y2": _v(y2)}
    return ok, None, params


def t_submodular(rng, n=None):
    g = _graph(rng, 1, 10, n)
    x, y = random_subset(rng, g.vertex_mask), random_subset(rng, g.vertex_mask)
    ok = cut_rank(g, x) + cut_rank(g, y) >= cut_rank(g, x & y) + cut_rank(g, x | y)
    return ok, g, {"X": _v(x), "Y": _v(y)}


def t_submodular_minus(rng, n=None):
    g = _graph(rng, 1, 10, n)
    x, y = random_subset(rng, g.vertex_mask), random_subset(rng, g.vertex_mask)
    ok = cut_rank(g, x) + cut_rank(g, y) >= cut_rank(g, y & ~x) + cut_rank(g, x & ~y)
    return ok, g, {"X": _v(x), "Y": _v(y)}


def _vertex_and_sets(rng, n, count=2):
    g = _graph(rng, 1, 10, n)
    v = int(rng.integers(0, g.n))
    rest = g.vertex_mask & ~(1 << v)
    return g, v, [random_subset(rng, rest) for _ in range(count)]


def t_subtool(rng, n=None):
    g, v, (x, y) = _vertex_and_sets(rng, n)
    h = delete_vertex(g, v)
    rh = lambda m: cut_rank(h, _without(m, v))  # noqa: E731
    vb = 1 << v
    s1 = rh(x) + cut_rank(g, y | vb) >= rh(x & y) + cut_rank(g, x | y | vb)
    s2 = rh(x) + cut_rank(g, y) >= cut_rank(g, x & y) + rh(x | y)
    return s1 and s2, g, {"v": v, "X": _v(x), "Y": _v(y), "S1": s1, "S2": s2}


def t_cor_s2(rng, n=None):
    g, v, (y,) = _vertex_and_sets(rng, n, 1)
    h = delete_vertex(g, v)
    if cut_rank(h, _without(y, v)) < cut_rank(g, y):
        return None
    x = random_subset(rng, y)
    ok = cut_rank(h, _without(x, v)) == cut_rank(g, x)
    return ok, g, {"v": v, "X": _v(x), "Y": _v(y)}


def t_cor_s1(rng, n=None):
    g, v, (y0,) = _vertex_and_sets(rng, n, 1)
    y = y0 | (1 << v)
    h = delete_vertex(g, v)
    if cut_rank(h, _without(y, v)) < cut_rank(g, y):
        return None
    x = y | random_subset(rng, g.vertex_mask & ~y)
    ok = cut_rank(h, _without(x, v)) == cut_rank(g, x)
    return ok, g, {"v": v, "X": _v(x), "Y": _v(y)}


def t_subtool_minus(rng, n=None):
    g, v, (x, y) = _vertex_and_sets(rng, n)
    h = delete_vertex(g, v)
    rh = lambda m: cut_rank(h, _without(m, v))  # noqa: E731
    ok = rh(x) + cut_rank(g, y | (1 << v)) >= rh(y & ~x) + cut_rank(g, x & ~y)
    return ok, g, {"v": v, "X": _v(x), "Y": _v(y)}


def t_sub_eq_ab(rng, n=None):
    g = _graph(rng, 2, 10, n)
    a, b = rng.choice(g.n, size=2, replace=False).tolist()
    A = random_subset(rng, g.vertex_mask & ~(1 << a))
    B = random_subset(rng, g.vertex_mask & ~(1 << b))
    if (A >> b) & 1 == 0 and (B >> a) & 1 == 1:
        a, b, A, B = b, a, B, A  # mirror image of (A2)
    ga, gb, gab = _minus(g, a), _minus(g, b), _minus(g, a, b)
    rhs = cut_rank(ga, _without(A, a)) + cut_rank(gb, _without(B, b))
    b_in_A, a_in_B = bool((A >> b) & 1), bool((B >> a) & 1)
    if not b_in_A and not a_in_B:
        case = "A1"
        lhs = cut_rank(g, A & B) + cut_rank(gab, _without(A | B, a, b))
    elif b_in_A and not a_in_B:
        case = "A2"
        lhs = cut_rank(gb, _without(A & B, b)) + cut_rank(ga, _without(A | B, a))
    else:
        case = "A3"
        lhs = cut_rank(gab, _without(A & B, a, b)) + cut_rank(g, A | B)
    return lhs <= rhs, g, {"a": a, "b": b, "A": _v(A), "B": _v(B), "case": case}


def t_matrix_local(rng, n=None):
    g = _graph(rng, 1, 10, n)
    x = _non_isolated(rng, g)
    if x is None:
        return None
    s = random_subset(rng, g.vertex_mask & ~(1 << x))
    sx = _without(s, x)
    lc = cut_rank(delete_vertex(local_complement(g, x), x), sx)
    pv = cut_rank(contract_vertex(g, x), sx)
    ok = (
        reduced_cut_rank(g, x, s, ReductionKind.LC_DELETE) == lc
        and reduced_cut_rank(g, x, s, ReductionKind.PIVOT_DELETE) == pv
    )
    return ok, g, {"x": x, "S": _v(s)}


def t_local_or_pivot(rng, n=None):
    g = _graph(rng, 2, 10, n)
    x = _non_isolated(rng, g)
    if x is None:
        return None
    c = random_subset(rng, g.vertex_mask & ~(1 << x))
    cx = _without(c, x)
    if cut_rank(delete_vertex(g, x), cx) != cut_rank(g, c):
        return None
    target = cut_rank(g, c | (1 << x)) - 1
    ok = (
        cut_rank(delete_vertex(local_complement(g, x), x), cx) == target
        or cut_rank(contract_vertex(g, x), cx) == target
    )
    return ok, g, {"x": x, "C": _v(c)}


def _two_partitions(rng, g, x):
    rest = g.vertex_mask & ~(1 << x)
    x1, x2 = random_subset(rng, rest), random_subset(rng, rest)
    return rest, x1, rest & ~x1, x2, rest & ~x2


def t_pivot_subeq(rng, n=None):
    g = _graph(rng, 2, 10, n)
    x = _non_isolated(rng, g)
    if x is None:
        return None
    rest, x1, y1, x2, y2 = _two_partitions(rng, g, x)
    bound = cut_rank(g, x1 & x2) + cut_rank(g, y1 & y2) - 1
    base = cut_rank(delete_vertex(g, x), _without(x1, x))
    p1 = base + cut_rank(delete_vertex(local_complement(g, x), x), _without(x2, x)) >= bound
    p2 = base + cut_rank(contract_vertex(g, x), _without(x2, x)) >= bound
    return p1 and p2, g, {"x": x, "X1": _v(x1), "X2": _v(x2), "P1": p1, "P2": p2}


def t_pivot_subeq2(rng, n=None):
    g = _graph(rng, 2, 10, n)
    x = _non_isolated(rng, g)
    if x is None:
        return None
    rest, x1, y1, x2, y2 = _two_partitions(rng, g, x)
    bound = cut_rank(g, x1 & x2) + cut_rank(g, y1 & y2) - 1
    lhs = cut_rank(delete_vertex(local_complement(g, x), x), _without(x1, x)) + cut_rank(
        contract_vertex(g, x), _without(x2, x)
    )
    return lhs >= bound, g, {"x": x, "X1": _v(x1), "X2": _v(x2)}


# -- rank-connectivity -------------------------------------------------------

def t_basic_sequential(rng, n=None):
    g = _graph(rng, 3, 10, n)
    a = random_subset(rng, g.vertex_mask)
    ra = cut_rank(g, a)
    ts = [t for t in bits(g.vertex_mask & ~a) if cut_rank(g, a | (1 << t)) == ra]
    if not ts:
        return None
    t = ts[int(rng.integers(0, len(ts)))]
    ok = is_sequential(g, a | (1 << t)).holds == is_sequential(g, a).holds
    return ok, g, {"A": _v(a), "t": t}


def t_contain_triple(rng, n=None):
    g = _graph(rng, 8, 11, n)
    if not is_prime(g) or is_sequentially_3rc(g):
        return None
    triples = rank_two_triples(g)
    order = rng.permutation(len(triples)).tolist()
    chosen, used = [], 0
    for k in order:
        if not triples[k] & used and rng.integers(0, 4):
            chosen.append(triples[k])
            used |= triples[k]
    t = subset_table(g)
    idx = np.arange(1 << g.n, dtype=np.int64)
    seq = t.sequential
    ok_sets = (t.ranks <= 2) & ~seq & ~seq[t.full ^ idx]
    for tm in chosen:
        inter = idx & tm
        ok_sets &= (inter == 0) | (inter == tm)
    return bool(ok_sets.any()), g, {"triples": [_v(m) for m in chosen]}


def t_deg3(rng, n=None):
    g = _sample_class(rng, lambda h: is_k_rank_connected(h, 3), 9, 12, n)
    if g is None:
        return None
    return min(g.degree(v) for v in range(g.n)) >= 3, g, {}


def t_kconn(rng, n=None):
    k = _n(rng, 2, 3)
    lo = 4 if k == 2 else 9
    g = _sample_class(rng, lambda h: h.n >= 2 * k and is_k_rank_connected(h, k), lo, 10, n)
    if g is None:
        return None
    return naive_k_connected(g, k), g, {"k": k}


def t_krank(rng, n=None):
    k = _n(rng, 2, 3)
    lo = 4 if k == 2 else 9
    g = _sample_class(rng, lambda h: h.n >= 2 * k and is_k_rank_connected(h, k), lo, 11, n)
    if g is None:
        return None
    bad = [v for v in range(g.n) if not is_k_rank_connected(delete_vertex(g, v), k - 1)]
    return not bad, g, {"k": k, "bad_vertices": bad}


def t_3_to_prime(rng, n=None):
    g = _sample_class(rng, lambda h: is_k_rank_connected(h, 3), 9, 12, n)
    if g is None:
        return None
    x = int(rng.integers(0, g.n))
    ok = all(is_prime(h) for _, h in elementary_reductions(g, x))
    return ok, g, {"x": x}


def t_weakly(rng, n=None):
    g = _sample_class(rng, lambda h: is_k_rank_connected(h, 3), 10, 12, n)
    if g is None:
        return None
    x = int(rng.integers(0, g.n))
    good = [k.value for k, h in elementary_reductions(g, x) if is_weakly_3rc(h)]
    return len(good) >= 2, g, {"x": x, "weak3rc": good}


def t_quad(rng, n=None):
    g = _sample_class(rng, is_prime, 5, 10, n)
    if g is None:
        return None
    t = subset_table(g)
    cand = np.flatnonzero((t.ranks == 2) & (t.sizes <= 4) & (t.sizes >= 1))
    if not cand.size:
        return None
    a = int(cand[int(rng.integers(0, cand.size))])
    quad = a.bit_count() == 4 and is_quad(g, a)
    return quad or is_sequential(g, a).holds, g, {"A": _v(a), "quad": quad}


# -- triplets, fully closed sets ----------------------------------------------

def _rank_two_triple(rng, g):
    triples = rank_two_triples(g)
    if not triples:
        return None
    return triples[int(rng.integers(0, len(triples)))]


def t_triplet(rng, n=None):
    g = _sample_class(rng, is_prime, 5, 9, n)
    if g is None:
        return None
    a = _rank_two_triple(rng, g)
    if a is None:
        return None
    try:
        h, seq = make_triplet(g, a, TRIPLET_CAP)
    except ResourceLimitError as e:
        return False, g, {"A": _v(a), "error": str(e)}
    ok = is_triplet(h, a) and replay_pivots(g, seq) == h
    return ok, g, {"A": _v(a), "pivots": [list(e) for e in seq]}


def _with_triplet(rng, g):
    """A triplet of ``g`` or of a pivot-equivalent graph, as ``(graph, mask)``."""
    a = _rank_two_triple(rng, g)
    if a is None:
        return None
    if is_triplet(g, a):
        return g, a
    h, _ = make_triplet(g, a, TRIPLET_CAP)
    return h, a


def t_triplet_prime_n8(rng, n=None):
    # below 8 vertices internal 3-rank-connectivity adds nothing to primality
    return t_triplet_prime(rng, n if n is not None else _n(rng, 8, 11))


def t_triplet_prime(rng, n=None):
    g = _sample_class(rng, is_internally_3rc, 6, 11, n)
    if g is None:
        return None
    found = _with_triplet(rng, g)
    if found is None:
        return None
    h, a = found
    bad = [x for x in bits(a) if not is_prime(delete_vertex(h, x))]
    return not bad, h, {"T": _v(a), "not_prime": bad}


def _fully_closed_masks(g: Graph) -> np.ndarray:
    t = subset_table(g)
    idx = np.arange(1 << g.n, dtype=np.int64)
    ok = np.ones(idx.size, dtype=bool)
    for v in range(g.n):
        ok &= ((idx >> v) & 1 == 1) | (t.ranks[idx | (1 << v)] > t.ranks)
    return ok


def _getprime_trial(rng, g, want):
    t = subset_table(g)
    cand = np.flatnonzero(_fully_closed_masks(g) & want(t))
    if not cand.size:
        return None
    a = int(cand[int(rng.integers(0, cand.size))])
    good = [
        v for v in bits(a)
        if is_prime(delete_vertex(g, v)) or (g.rows[v] and is_prime(contract_vertex(g, v)))
    ]
    return bool(good), g, {"A": _v(a), "rank": int(t.ranks[a])}


def t_getprime(rng, n=None):
    g = _sample_class(rng, is_prime, 8, 11, n)
    if g is None:
        return None
    return _getprime_trial(rng, g, lambda t: t.ranks >= 2)


def t_getprime_seq(rng, n=None):
    # the regime the main argument needs: a fully closed set of rank 2, 4 <= |A| <= n-2
    g = _sample_class(rng, is_prime, 8, 11, n)
    if g is None:
        return None
    return _getprime_trial(rng, g, lambda t: (t.ranks == 2) & (t.sizes >= 4) & (t.sizes <= g.n - 2))


# -- chain theorems -------------------------------------------------------------

def _checked_step(g, reducer, pred):
    try:
        step = reducer(g)
    except TheoremViolation as e:
        return False, {"violation": e.to_dict()}
    if step is None:
        return True, {"step": None}
    h = reduce(g, step.vertex, step.kind)
    ok = h.n == g.n - 1 and bool(pred(h))
    return ok, {"step": step.to_dict()["vertex"], "kind": step.kind.value}


def t_bouchet(rng, n=None):
    g = _sample_class(rng, is_prime, 6, 9, n)
    if g is None:
        return None
    ok, params = _checked_step(g, reduce_prime, is_prime)
    return ok and params.get("step") is not None, g, params


def t_main(rng, n=None):
    g = _sample_class(rng, is_sequentially_3rc, 13, 15, n)
    if g is None:
        return None
    ok, params = _checked_step(g, reduce_seq3rc, is_sequentially_3rc)
    return ok and params.get("step") is not None, g, params


def t_internal(rng, n=None):
    g = _sample_class(rng, is_internally_3rc, 12, 13, n)
    if g is None:
        return None
    found = _with_triplet(rng, g)
    if found is None:
        return None
    h, a = found
    try:
        x = reduce_internal_triplet(h, a)
    except TheoremViolation as e:
        return False, h, {"T": _v(a), "violation": e.to_dict()}
    return bool(is_sequentially_3rc(delete_vertex(h, x))), h, {"T": _v(a), "x": x}


CATALOG: dict[str, Suite] = {
    s.id: s
    for s in [
        Suite("L2.1", "(G^vx)\\v and (G^vy)\\v are locally equivalent", 1000, t_pivot_eq),
        Suite("onetoone", "local complementation permutes the three reductions", 1000, t_onetoone),
        Suite("L2.3", "a one-smaller vertex-minor is locally equivalent to a canonical reduction", 1000, t_elt_minor),
        Suite("L2.4", "cut-rank is invariant under local complementation", 10_000, t_local_invariance),
        Suite("L2.5", "deleting a vertex changes cut-rank by at most one", 10_000, t_delrank),
        Suite("L2.6", "Truemper rank inequality", 10_000, t_truemper),
        Suite("L2.7", "cut-rank is submodular", 10_000, t_submodular),
        Suite("L2.8", "rho(X)+rho(Y) >= rho(Y-X)+rho(X-Y)", 10_000, t_submodular_minus),
        Suite("L2.9", "(S1) and (S2) mixed submodularity with a deleted vertex", 10_000, t_subtool),
        Suite("cor_s2", "X in Y, rho_{G\\v}(Y) >= rho_G(Y) gives equality on X", 10_000, t_cor_s2),
        Suite("cor_s1", "v in Y in X, rho_{G\\v}(Y-v) >= rho_G(Y) gives equality on X", 10_000, t_cor_s1),
        Suite("subtool_minus", "difference form of (S1)", 10_000, t_subtool_minus),
        Suite("L2.9A", "(A1)-(A3) two deleted vertices", 10_000, t_sub_eq_ab),
        Suite("L2.10", "bordered-matrix formulas for G*x\\x and G/x", 10_000, t_matrix_local),
        Suite("L2.11", "lc-delete or pivot-delete drops rho(C+x) by one", 10_000, t_local_or_pivot),
        Suite("L2.12", "(P1) and (P2)", 10_000, t_pivot_subeq),
        Suite("L2.13", "G*x\\x and G/x combined inequality", 10_000, t_pivot_subeq2),
        Suite("L3.1", "adding t with rho(A+t)=rho(A) preserves sequentiality", 10_000, t_basic_sequential),
        Suite("L3.2", "violating set avoiding splitting disjoint rank-2 triples", 100, t_contain_triple, attempts=500),
        Suite("deg3", "3-rank-connected, n>=6: minimum degree >= 3", 300, t_deg3, attempts=200),
        Suite("kconn", "k-rank-connected, n>=2k: k-connected (k=2,3)", 300, t_kconn, attempts=200),
        Suite("krank", "k-rank-connected, n>=2k: every G\\v is (k-1)-rank-connected", 300, t_krank, attempts=200),
        Suite("L4.1", "3-rank-connected, n>=6: all three reductions are prime", 300, t_3_to_prime, attempts=200),
        Suite("L4.2", "3-rank-connected: at least two reductions are weakly 3rc", 300, t_weakly, attempts=200),
        Suite("L4.4", "prime, rho(A)=2, |A|<=4: quad or sequential", 1000, t_quad),
        Suite("L5.1", "a rank-2 triple becomes a triplet after pivoting", 300, t_triplet, attempts=100),
        Suite("L5.2", "internally 3rc with triplet T: each G\\t is prime", 300, t_triplet_prime, attempts=100),
        Suite("L5.2_n8", "L5.2 restricted to n >= 8", 300, t_triplet_prime_n8, attempts=100, sizes=(8, 9, 10, 11)),
        Suite("L6.1", "fully closed A with rho>=2: some G\\v or G/v prime", 300, t_getprime, attempts=100),
        Suite("L6.1_seq", "L6.1 for fully closed A with rho(A)=2, 4<=|A|<=n-2", 300, t_getprime_seq, attempts=200),
        Suite("T3.2", "every prime graph on >=6 vertices has a prime elementary reduction", 1000, t_bouchet, sizes=(6, 7, 8, 9)),
        Suite("T1.2", "every seq-3rc graph on >=13 vertices has a seq-3rc elementary reduction", 100, t_main, sizes=(13, 14, 15)),
        Suite("P5.8", "internally 3rc, n>=12, triplet T: some G\\t is seq-3rc", 50, t_internal, sizes=(12, 13)),
    ]
}

EXHAUSTIVE = {"T3.2"}


def _run_exhaustive(suite: str, n: int) -> VerifyReport:
    res = sweep_prime_reductions(n)
    from .generate import graph_from_code

    rep = VerifyReport(suite, res.graphs, None, mode=f"exhaustive:{n}")
    rep.effective_trials = res.primes
    for code in res.failures:
        rep.counterexamples.append(
            {"trial": code, "graph6": to_graph6(graph_from_code(n, code)), "params": {"edge_code": code}}
        )
    return rep


def parse_trials(spec) -> tuple[str, int]:
    """``10000`` -> ("sampled", 10000); ``exhaustive:6`` -> ("exhaustive", 6)."""
    if isinstance(spec, int):
        return "sampled", spec
    text = str(spec)
    if text.startswith("exhaustive:"):
        return "exhaustive", int(text.split(":", 1)[1])
    return "sampled", int(text)


def run_suite(
    suite: str,
    trials=None,
    seed: int = 0,
    n: int | None = None,
    timing: bool = False,
) -> VerifyReport:
    """Run one catalog suite.  ``trials`` may be a count or ``"exhaustive:N"`` (T3.2 only)."""
    if suite not in CATALOG:
        raise ArgumentError(f"unknown suite {suite!r}")
    spec = CATALOG[suite]
    t0 = time.perf_counter()
    mode, count = parse_trials(trials if trials is not None else spec.default_trials)
    if mode == "exhaustive":
        if suite not in EXHAUSTIVE:
            raise ArgumentError(f"suite {suite} has no exhaustive mode")
        if count < 6:
            raise ArgumentError("the exhaustive prime sweep starts at n=6")
        rep = _run_exhaustive(suite, count)
    else:
        if count < 0:
            raise ArgumentError("trial count must be non-negative")
        if n is not None and spec.sizes is not None and n not in spec.sizes:
            raise ArgumentError(f"suite {suite} supports n in {spec.sizes}")
        rep = VerifyReport(suite, count, seed)
        key = stable_key(suite)
        for i in range(count):
            rng = make_rng(seed, key, i)
            out = None
            for _ in range(spec.attempts):
                out = spec.trial(rng, n)
                if out is not None:
                    break
            if out is None:
                continue
            rep.effective_trials += 1
            ok, g, params = out
            if not ok:
                rep.counterexamples.append(
                    {"trial": i, "graph6": None if g is None else to_graph6(g), "params": params}
                )
    if timing:
        rep.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return rep


def suite_ids() -> list[str]:
    return list(CATALOG)
