from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings

from conftest import graph_and_set, graphs
from vmchain.connectivity import is_internally_3rc, is_prime, is_sequential, is_sequentially_3rc
from vmchain.errors import ArgumentError, PreconditionError, ResourceLimitError
from vmchain.formats import from_graph6
from vmchain.graph import Graph, bits, delete_vertex, mask_of
from vmchain.structures import (
    find_quads,
    is_fully_closed,
    is_quad,
    is_triplet,
    make_triplet,
    maximal_sequential_set,
    rank_two_triples,
    replay_pivots,
)
from vmchain.verify.oracles import naive_cut_rank, sequential_by_orderings

C5 = Graph.cycle(5)

# found by seeded random search (see scripts/sampling_rates.py for the generator)
QUAD_HOST = "H|IWmWj"  # prime, 9 vertices, quads {0,1,2,7} and {3,5,6,8}
TRIPLET_HOST = "HmfGTLM"  # internally 3rc; {1,2,7} has rank 2 but is not a triplet
SEQ3RC_NOT_INTERNAL = "HMth^sm"
SMALL_MAX_SEQ = "I{RUDkR}w"  # prime, 10 vertices, no sequential 4-set


def test_quad_found_and_rechecked_independently():
    g = from_graph6(QUAD_HOST)
    quads = find_quads(g)
    assert [q.members() for q in quads] == [[0, 1, 2, 7], [3, 5, 6, 8]]
    for q in quads:
        p = q.members()
        assert naive_cut_rank(g, p) == 2
        assert all(naive_cut_rank(g, [v for v in p if v != x]) == 3 for x in p)
        assert is_quad(g, q.vertices)
        # every ordering's third prefix has rank 3
        assert not is_sequential(g, q.vertices)
        assert not sequential_by_orderings(g, q.vertices)


def test_quad_negative_examples():
    assert find_quads(Graph.complete(7)) == []
    assert find_quads(C5) == []
    assert not is_quad(Graph.complete(6), 0b1111)
    with pytest.raises(ArgumentError):
        is_quad(C5, 0b111)


@given(graphs(5, 9))
def test_quads_or_sequential(g):
    if not is_prime(g):
        return
    from vmchain.connectivity import subset_table

    t = subset_table(g)
    for m in range(1 << g.n):
        if t.ranks[m] == 2 and 1 <= m.bit_count() <= 4:
            assert (m.bit_count() == 4 and is_quad(g, m)) or is_sequential(g, m)


def test_triplet_examples():
    assert not is_triplet(Graph.complete(6), 0b111)
    with pytest.raises(ArgumentError):
        is_triplet(C5, 0b11)
    g = from_graph6(TRIPLET_HOST)
    a = mask_of([1, 2, 7])
    assert is_internally_3rc(g)
    assert not is_triplet(g, a)
    h, seq = make_triplet(g, a)
    assert seq == [(0, 1), (3, 7)]
    assert is_triplet(h, a)
    assert replay_pivots(g, seq) == h
    # independent recomputation of the triplet conditions
    t = [1, 2, 7]
    assert naive_cut_rank(h, t) == 2
    for x in t:
        hx = delete_vertex(h, x)
        rest = [v - (v > x) for v in t if v != x]
        assert naive_cut_rank(hx, rest) == 2


def test_make_triplet_noop_and_errors():
    g = from_graph6(TRIPLET_HOST)
    done = next(a for a in rank_two_triples(g) if is_triplet(g, a))
    assert make_triplet(g, done) == (g, [])
    with pytest.raises(PreconditionError):
        make_triplet(Graph.path(6), 0b111)
    with pytest.raises(ArgumentError):
        make_triplet(g, 0b11)
    high = next(m for m in range(1 << 9) if m.bit_count() == 3 and naive_cut_rank(g, list(bits(m))) == 3)
    with pytest.raises(PreconditionError):
        make_triplet(g, high)
    with pytest.raises(ResourceLimitError):
        make_triplet(g, mask_of([1, 2, 7]), cap=2)


@settings(max_examples=40)
@given(graphs(5, 8))
def test_make_triplet_on_random_prime_graphs(g):
    if not is_prime(g):
        return
    for a in rank_two_triples(g)[:3]:
        h, seq = make_triplet(g, a)
        assert is_triplet(h, a)
        assert replay_pivots(g, seq) == h


def test_fully_closed_examples():
    assert is_fully_closed(C5, C5.vertex_mask)
    assert not is_fully_closed(Graph.from_edges(3, [(0, 1)]), 0)
    assert is_fully_closed(C5, 0)  # every singleton has rank 2


@given(graph_and_set(1, 8))
def test_fully_closed_matches_definition(gx):
    g, x = gx
    base = naive_cut_rank(g, list(bits(x)))
    expect = all(naive_cut_rank(g, list(bits(x | (1 << v)))) > base for v in bits(g.vertex_mask ^ x))
    assert is_fully_closed(g, x) == expect


def test_maximal_sequential_set_examples():
    assert maximal_sequential_set(C5) == C5.vertex_mask
    g = from_graph6(SMALL_MAX_SEQ)
    m = maximal_sequential_set(g)
    assert list(bits(m)) == [2, 6, 8]
    assert not any(sequential_by_orderings(g, mask_of(c)) for c in combinations(range(10), 4))
    with pytest.raises(PreconditionError):
        maximal_sequential_set(Graph.path(5))


def test_maximum_sequential_set_is_fully_closed():
    g = from_graph6(SEQ3RC_NOT_INTERNAL)
    assert is_sequentially_3rc(g) and not is_internally_3rc(g)
    m = maximal_sequential_set(g)
    assert list(bits(m)) == [4, 6, 7, 8]
    assert is_fully_closed(g, m)


@settings(max_examples=60)
@given(graphs(5, 10))
def test_maximal_sequential_set_properties(g):
    if not is_prime(g):
        return
    m = maximal_sequential_set(g)
    assert is_sequential(g, m)
    if is_sequentially_3rc(g) and m != g.vertex_mask:
        assert is_fully_closed(g, m)
