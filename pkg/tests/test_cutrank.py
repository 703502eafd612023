from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import graph_and_set, graphs
from vmchain.cutrank import (
    MAX_TABLE_N,
    Gf2Matrix,
    all_cut_ranks,
    cross_rank,
    cut_rank,
    gf2_matrix_rank,
    gf2_rank,
    reduced_cut_rank,
)
from vmchain.errors import ArgumentError, ResourceLimitError, UnsupportedError
from vmchain.graph import Graph, ReductionKind, contract_vertex, delete_vertex, local_complement, mask_of
from vmchain.verify.generate import make_rng, random_graph
from vmchain.verify.oracles import naive_cross_rank, naive_cut_rank, naive_rank

C5 = Graph.cycle(5)


def test_matrix_examples():
    assert gf2_matrix_rank(Gf2Matrix.zeros(3, 4)) == 0
    assert gf2_matrix_rank(Gf2Matrix.identity(6)) == 6
    assert gf2_matrix_rank(Gf2Matrix.ones(3, 5)) == 1
    assert gf2_matrix_rank(Gf2Matrix.zeros(0, 3)) == 0
    m = Gf2Matrix.from_lists([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    assert m.rank() == 2  # third row is the sum of the first two
    assert m.transpose().rank() == 2


@given(st.lists(st.lists(st.integers(0, 1), min_size=5, max_size=5), max_size=8))
def test_rank_matches_naive(rows):
    masks = [sum(b << j for j, b in enumerate(r)) for r in rows]
    assert gf2_rank(masks) == naive_rank(rows)


def test_cut_rank_examples():
    assert cut_rank(C5, mask_of([0, 1])) == 2
    assert cut_rank(C5, 0) == 0
    k6 = Graph.complete(6)
    assert {cut_rank(k6, m) for m in range(1, 63)} == {1}
    assert cross_rank(C5, mask_of([0]), mask_of([1, 4])) == 1
    assert cross_rank(Graph.empty(4), 0b0011, 0b1100) == 0


def test_cross_rank_overlap_rejected():
    with pytest.raises(ArgumentError):
        cross_rank(C5, 0b011, 0b110)
    with pytest.raises(ArgumentError):
        cut_rank(C5, 1 << 5)


@given(graph_and_set())
def test_cut_rank_matches_oracle_and_is_symmetric(gx):
    g, x = gx
    xs = [v for v in range(g.n) if (x >> v) & 1]
    r = cut_rank(g, x)
    assert r == naive_cut_rank(g, xs)
    assert r == cut_rank(g, g.vertex_mask ^ x)
    assert r == cross_rank(g, x, g.vertex_mask ^ x)
    assert r <= min(len(xs), g.n - len(xs))


@given(graph_and_set(), st.data())
def test_cross_rank_matches_oracle(gx, data):
    g, x = gx
    y = data.draw(st.integers(0, g.vertex_mask)) & ~x
    xs = [v for v in range(g.n) if (x >> v) & 1]
    ys = [v for v in range(g.n) if (y >> v) & 1]
    assert cross_rank(g, x, y) == naive_cross_rank(g, xs, ys)


def test_reduced_cut_rank_k2():
    assert reduced_cut_rank(Graph.complete(2), 0, 0, ReductionKind.LC_DELETE) == 0
    assert reduced_cut_rank(Graph.complete(2), 0, 0, ReductionKind.PIVOT_DELETE) == 0


def test_reduced_cut_rank_errors():
    with pytest.raises(ArgumentError):
        reduced_cut_rank(C5, 0, 0b10, ReductionKind.DELETE)
    with pytest.raises(UnsupportedError):
        reduced_cut_rank(Graph.empty(3), 0, 0b10, ReductionKind.PIVOT_DELETE)


def _drop(mask, v):
    return (mask & ((1 << v) - 1)) | ((mask >> (v + 1)) << v)


@given(graphs(1, 9), st.data())
def test_reduced_cut_rank_matches_reduced_graph(g, data):
    x = data.draw(st.integers(0, g.n - 1))
    s = data.draw(st.integers(0, g.vertex_mask)) & ~(1 << x)
    lc = delete_vertex(local_complement(g, x), x)
    assert reduced_cut_rank(g, x, s, ReductionKind.LC_DELETE) == cut_rank(lc, _drop(s, x))
    if g.rows[x]:
        assert reduced_cut_rank(g, x, s, ReductionKind.PIVOT_DELETE) == cut_rank(contract_vertex(g, x), _drop(s, x))


@pytest.mark.parametrize("n", [0, 1, 2, 5, 9, 12])
def test_bulk_table_matches_scalar(n):
    g = random_graph(make_rng(n, 1), n)
    table = all_cut_ranks(g)
    assert table.shape == (1 << n,)
    rng = np.random.default_rng(0)
    masks = range(1 << n) if n <= 9 else rng.integers(0, 1 << n, size=500).tolist()
    for m in masks:
        assert table[m] == cut_rank(g, int(m))


def test_bulk_table_cap():
    with pytest.raises(ResourceLimitError):
        all_cut_ranks(Graph.empty(MAX_TABLE_N + 1))
