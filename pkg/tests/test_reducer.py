from __future__ import annotations

import json

import pytest
from hypothesis import given, settings

from conftest import graphs
from vmchain import reducer
from vmchain.connectivity import ConnectivityVerdict, is_internally_3rc, is_prime, is_sequentially_3rc
from vmchain.errors import ArgumentError, PreconditionError, TheoremViolation
from vmchain.formats import from_graph6, to_graph6
from vmchain.graph import Graph, ReductionKind, delete_vertex, elementary_reductions, reduce
from vmchain.reducer import (
    Chain,
    build_chain,
    reduce_internal_triplet,
    reduce_prime,
    reduce_seq3rc,
)
from vmchain.structures import is_triplet, make_triplet, rank_two_triples
from vmchain.verify.generate import GenSpec, sample
from vmchain.verify.oracles import naive_prime

C5 = Graph.cycle(5)


def _first_by_oracle(g):
    for v in range(g.n):
        for kind, h in elementary_reductions(g, v):
            if naive_prime(h):
                return v, kind
    return None


def test_c5_matches_exhaustive_trial():
    step = reduce_prime(C5)
    expect = _first_by_oracle(C5)
    if expect is None:
        assert step is None
    else:
        assert (step.vertex, step.kind) == expect


@settings(max_examples=60)
@given(graphs(5, 8))
def test_reduce_prime_first_hit_and_revalidates(g):
    if not is_prime(g):
        with pytest.raises(PreconditionError):
            reduce_prime(g)
        return
    step = reduce_prime(g)
    expect = _first_by_oracle(g)
    if step is None:
        assert expect is None and g.n <= 5
        return
    assert (step.vertex, step.kind) == expect
    h = reduce(g, step.vertex, step.kind)
    assert h.n == g.n - 1 and is_prime(h)
    assert step.certificate["result"] == to_graph6(h)


def test_prime_seven_vertex_graph_steps():
    g, _ = sample(GenSpec(7, filter="prime", seed=1))
    step = reduce_prime(g)
    assert step is not None and step.pre_check == "prime"
    assert reduce_prime(g) == step  # determinism


def test_precondition_witness():
    with pytest.raises(PreconditionError) as info:
        reduce_seq3rc(Graph.path(6))
    assert info.value.witness == 0b11


@pytest.mark.slow
def test_seq3rc_13_has_step():
    g, _ = sample(GenSpec(13, filter="seq3rc", seed=4))
    step = reduce_seq3rc(g)
    h = reduce(g, step.vertex, step.kind)
    assert h.n == 12 and is_sequentially_3rc(h)


def test_seq3rc_small_graphs_may_have_no_step():
    step = reduce_seq3rc(C5)
    if step is not None:
        assert is_sequentially_3rc(reduce(C5, step.vertex, step.kind))


def _always_true_at(n):
    def pred(g):
        return ConnectivityVerdict(g.n == n, None if g.n == n else 0)

    return pred


def test_theorem_violation_is_loud(monkeypatch):
    g = Graph.cycle(7)
    monkeypatch.setitem(reducer.PREDICATES, "prime", _always_true_at(7))
    with pytest.raises(TheoremViolation) as info:
        reduce_prime(g)
    d = info.value.to_dict()
    assert d["event"] == "theorem_violation"
    assert d["graph6"] == to_graph6(g)
    assert len(d["trial_log"]) == 21 and not any(t["holds"] for t in d["trial_log"])


def test_chain_floor_equal_n_is_empty():
    chain = build_chain(C5, "prime", 5)
    assert chain.steps == [] and chain.stop_reason == "reached_size_bound"


def test_chain_prime_c6_variant():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
    assert is_prime(g)
    chain = build_chain(g, "prime", 5)
    assert len(chain.steps) >= 1 and chain.graphs()[-1].n >= 5
    assert all(is_prime(h) for h in chain.graphs())


def test_chain_exhausted_below_bound():
    chain = build_chain(C5, "prime", 0)
    assert chain.stop_reason in ("exhausted", "reached_size_bound")
    assert chain.graphs()[-1].n >= 1


@pytest.mark.slow
def test_seq3rc_chain_15_to_12():
    g, _ = sample(GenSpec(15, filter="seq3rc", seed=7))
    chain = build_chain(g, "seq3rc", 12)
    assert len(chain.steps) == 3 and chain.stop_reason == "reached_size_bound"
    assert [h.n for h in chain.graphs()] == [15, 14, 13, 12]
    assert all(is_sequentially_3rc(h) for h in chain.graphs())


def test_chain_serialisation_roundtrip():
    g, _ = sample(GenSpec(8, filter="prime", seed=3))
    chain = build_chain(g, "prime", 5)
    assert len(chain.steps) == 3
    again = Chain.from_text(chain.to_text())
    assert again.to_text() == chain.to_text()
    assert [to_graph6(h) for h in again.graphs()] == [to_graph6(h) for h in chain.graphs()]
    via_json = Chain.from_dict(json.loads(chain.to_json()))
    assert via_json.to_json() == chain.to_json()
    # original labels: no vertex is removed twice
    assert len({s.vertex for s in chain.steps}) == 3


def test_chain_rejects_tampering():
    g, _ = sample(GenSpec(8, filter="prime", seed=3))
    lines = build_chain(g, "prime", 5).to_text().splitlines()
    g6, v, kind = lines[2].split("\t")
    lines[2] = "\t".join([to_graph6(Graph.empty(7)), v, kind])
    with pytest.raises(ArgumentError):
        Chain.from_text("\n".join(lines))


def test_build_chain_errors():
    with pytest.raises(ArgumentError):
        build_chain(C5, "weak3rc", 3)
    with pytest.raises(PreconditionError):
        build_chain(Graph.path(5), "prime", 3)


def test_internal_triplet_preconditions():
    with pytest.raises(PreconditionError):
        reduce_internal_triplet(C5, 0b111)


@pytest.mark.slow
def test_internal_triplet_reduction_sample():
    g = None
    for seed in range(50):
        cand, _ = sample(GenSpec(12, filter="internal3rc", seed=seed))
        if rank_two_triples(cand):
            g = cand
            break
    a = rank_two_triples(g)[0]
    h, _ = make_triplet(g, a)
    assert is_internally_3rc(h) and is_triplet(h, a)
    x = reduce_internal_triplet(h, a)
    assert (a >> x) & 1
    assert is_sequentially_3rc(delete_vertex(h, x))
    with pytest.raises(PreconditionError):
        reduce_internal_triplet(h, next(m for m in range(1 << 12) if m.bit_count() == 3 and not is_triplet(h, m)))


def test_step_dict_fields():
    step = reduce_prime(from_graph6(to_graph6(Graph.cycle(6))))
    d = step.to_dict()
    assert set(d) == {"vertex", "kind", "pre_check", "certificate"}
    assert ReductionKind(d["kind"]) in ReductionKind
