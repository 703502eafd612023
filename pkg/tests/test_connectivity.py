from __future__ import annotations

import pytest
from hypothesis import given, settings

from conftest import graph_and_set, graphs
from vmchain.connectivity import (
    class_predicate,
    is_3_rank_connected,
    is_internally_3rc,
    is_k_rank_connected,
    is_prime,
    is_sequential,
    is_sequentially_3rc,
    is_weakly_3rc,
    recheck_witness,
)
from vmchain.cutrank import cut_rank
from vmchain.errors import ArgumentError
from vmchain.graph import Graph, mask_of
from vmchain.verify.generate import GenSpec, enumerate_graphs, make_rng, random_graph, sample
from vmchain.verify.oracles import (
    naive_k_rank_connected,
    naive_prime,
    naive_sequential_3rc,
    sequential_by_orderings,
)

C5 = Graph.cycle(5)
P4 = Graph.path(4)


def test_prime_examples():
    assert is_prime(C5)
    v = is_prime(P4)
    assert not v and v.witness == mask_of([0, 1])
    assert v.witness_vertices() == [0, 1]
    assert is_k_rank_connected(C5, 2)


def test_k1_examples():
    assert is_k_rank_connected(Graph.complete(5), 1)
    two_edges = Graph.from_edges(4, [(0, 1), (2, 3)])
    v = is_k_rank_connected(two_edges, 1)
    assert not v and v.witness == mask_of([0, 1])
    with pytest.raises(ArgumentError):
        is_k_rank_connected(C5, 0)


def test_tiny_connected_graphs_are_prime():
    # the definition only forbids partitions with both sides larger than rho;
    # on <= 3 vertices a connected graph has none
    assert is_prime(Graph.empty(1))
    assert is_prime(Graph.complete(2))
    assert is_prime(Graph.path(3))
    assert is_prime(Graph.complete(3))
    assert not is_prime(Graph.empty(2))


# exhaustive labeled prime counts, each cross-checked against the naive oracle below
PRIME_COUNTS = {0: 1, 1: 1, 2: 1, 3: 4, 4: 0, 5: 132}


@pytest.mark.parametrize("n", sorted(PRIME_COUNTS))
def test_prime_counts_agree_with_oracle(n):
    fast = sum(bool(is_prime(g)) for g in enumerate_graphs(n))
    slow = sum(naive_prime(g) for g in enumerate_graphs(n))
    assert fast == slow == PRIME_COUNTS[n]


def test_sequential_examples():
    assert is_sequential(C5, 0)
    for v in range(5):
        assert is_sequential(C5, 1 << v)
    v = is_sequential(C5, C5.vertex_mask)
    assert v and len(v.witness_order) == 5
    g = random_graph(make_rng(3), 9)
    high = next(m for m in range(1 << 9) if cut_rank(g, m) > 2)
    assert not is_sequential(g, high)


@given(graph_and_set(0, 9))
def test_sequential_matches_orderings(gx):
    g, a = gx
    v = is_sequential(g, a)
    assert v.holds == sequential_by_orderings(g, a)
    if v.holds:
        order = v.witness_order
        assert sorted(order) == [u for u in range(g.n) if (a >> u) & 1]
        prefix = 0
        for u in order:
            prefix |= 1 << u
            assert cut_rank(g, prefix) <= 2
    else:
        assert v.witness == a


def test_seq3rc_examples():
    assert is_sequentially_3rc(C5)
    assert not is_sequentially_3rc(P4)
    assert is_sequentially_3rc(P4).violation == "not prime"


@pytest.mark.slow
def test_seq3rc_13_vertex_sample_rechecked():
    g, _ = sample(GenSpec(13, filter="seq3rc", seed=2))
    assert is_sequentially_3rc(g)
    # every rank<=2 side pair re-decided by walking orderings, on a subsample
    full = g.vertex_mask
    rng = make_rng(2, 1)
    for m in rng.integers(0, 1 << 13, size=150).tolist():
        if cut_rank(g, m) <= 2:
            assert sequential_by_orderings(g, m) or sequential_by_orderings(g, full ^ m)


@settings(max_examples=60)
@given(graphs(0, 7))
def test_seq3rc_matches_naive(g):
    assert is_sequentially_3rc(g).holds == naive_sequential_3rc(g)


@given(graphs(0, 8))
def test_k_rank_connected_matches_naive(g):
    for k in (1, 2, 3):
        assert is_k_rank_connected(g, k).holds == naive_k_rank_connected(g, k)


def test_n6_sweep_prime_count_and_small_classes():
    primes = 0
    for g in enumerate_graphs(6):
        p = bool(is_prime(g))
        primes += p
        assert bool(is_weakly_3rc(g)) == p  # both sides >= 5 impossible below 10 vertices
        assert bool(is_internally_3rc(g)) == p  # both sides >= 4 impossible below 8 vertices
    assert primes == 5712


@given(graphs(6, 11))
def test_hierarchy(g):
    three = bool(is_3_rank_connected(g))
    internal = bool(is_internally_3rc(g))
    seq = bool(is_sequentially_3rc(g))
    weak = bool(is_weakly_3rc(g))
    prime = bool(is_prime(g))
    assert not three or internal
    assert not internal or seq  # sides of size <= 3 are always sequential
    assert not (internal or seq or weak) or prime


@given(graphs(0, 10))
def test_witnesses_recheck(g):
    for cls in ("prime", "krank:3", "weak3rc", "internal3rc", "seq3rc", "3rc"):
        v = class_predicate(cls)(g)
        assert recheck_witness(g, cls, v)


def test_class_predicate_lookup():
    assert class_predicate("krank:2")(C5)
    for bad in ("nope", "krank:x", "krank:0"):
        with pytest.raises(ArgumentError):
            class_predicate(bad)


def test_witness_is_smallest_mask():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)])
    v = is_prime(g)
    bad = [m for m in range(64) if not naive_prime_mask_ok(g, m)]
    assert v.witness == min(bad)


def naive_prime_mask_ok(g, m):
    r = cut_rank(g, m)
    size = bin(m).count("1")
    return not (r < 2 and size > r and g.n - size > r)
