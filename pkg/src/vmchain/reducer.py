"""Executable chain theorems.

Given a prime (or sequentially 3-rank-connected) graph, find an elementary
vertex-minor one vertex smaller that stays in the class.  Candidates are
tried in a fixed order (vertex ascending; delete, lc-delete, pivot-delete)
so identical inputs always give identical steps.  An empty search inside the
regime where the theorem guarantees a step raises :class:`TheoremViolation`
instead of returning ``None``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .connectivity import (
    is_internally_3rc,
    is_prime,
    is_sequentially_3rc,
)
from .errors import ArgumentError, PreconditionError, TheoremViolation
from .formats import from_graph6, to_graph6
from .graph import Graph, ReductionKind, bits, delete_vertex, reduce
from .structures import Triplet, is_triplet

KIND_ORDER = (ReductionKind.DELETE, ReductionKind.LC_DELETE, ReductionKind.PIVOT_DELETE)

# Largest vertex count for which each chain theorem allows "no step".
EXCEPTION_BOUND = {"prime": 5, "seq3rc": 12}
PREDICATES = {"prime": is_prime, "seq3rc": is_sequentially_3rc}
STOP_REASONS = ("reached_size_bound", "exhausted", "predicate_lost")


@dataclass(frozen=True)
class ReductionStep:
    vertex: int  # original label of the removed vertex
    kind: ReductionKind
    pre_check: str  # class the reduced graph was checked against
    certificate: dict | None = None

    def to_dict(self) -> dict:
        return {
            "vertex": self.vertex,
            "kind": self.kind.value,
            "pre_check": self.pre_check,
            "certificate": self.certificate,
        }


def _candidates(g: Graph):
    for v in range(g.n):
        for kind in KIND_ORDER:
            if kind is ReductionKind.PIVOT_DELETE and not g.rows[v]:
                continue
            yield v, kind


def _search(g: Graph, cls: str) -> ReductionStep | None:
    pred = PREDICATES[cls]
    verdict = pred(g)
    if not verdict:
        raise PreconditionError(f"input graph is not {cls}", witness=verdict.witness)
    log = []
    for v, kind in _candidates(g):
        h = reduce(g, v, kind)
        ok = bool(pred(h))
        log.append({"vertex": v, "kind": kind.value, "holds": ok})
        if ok:
            return ReductionStep(v, kind, cls, {"trials": len(log), "result": to_graph6(h)})
    if g.n > EXCEPTION_BOUND[cls]:
        raise TheoremViolation(
            f"no {cls} elementary vertex-minor of a {cls} graph on {g.n} vertices",
            to_graph6(g),
            log,
        )
    return None


def reduce_prime(g: Graph) -> ReductionStep | None:
    """First elementary reduction of a prime graph that is again prime.

    ``None`` is only possible for at most 5 vertices.
    """
    return _search(g, "prime")


def reduce_seq3rc(g: Graph) -> ReductionStep | None:
    """First elementary reduction of a sequentially 3-rank-connected graph that stays so.

    ``None`` is only possible for at most 12 vertices.
    """
    return _search(g, "seq3rc")


REDUCERS = {"prime": reduce_prime, "seq3rc": reduce_seq3rc}


def reduce_internal_triplet(g: Graph, t: Triplet | int) -> int:
    """A vertex of the triplet whose deletion leaves a sequentially 3-rank-connected graph."""
    mask = t.vertices if isinstance(t, Triplet) else t
    if g.n < 12:
        raise PreconditionError(f"needs at least 12 vertices, got {g.n}")
    verdict = is_internally_3rc(g)
    if not verdict:
        raise PreconditionError("graph is not internally 3-rank-connected", witness=verdict.witness)
    if not is_triplet(g, mask):
        raise PreconditionError("not a triplet of the graph", witness=mask)
    log = []
    for x in bits(mask):
        ok = bool(is_sequentially_3rc(delete_vertex(g, x)))
        log.append({"vertex": x, "kind": ReductionKind.DELETE.value, "holds": ok})
        if ok:
            return x
    raise TheoremViolation(
        "no triplet vertex deletion is sequentially 3-rank-connected", to_graph6(g), log
    )


@dataclass
class Chain:
    start: Graph
    cls: str
    floor: int
    steps: list[ReductionStep] = field(default_factory=list)
    stop_reason: str = "reached_size_bound"

    def graphs(self) -> list[Graph]:
        """Replay the steps from ``start``; returns every intermediate graph, start included."""
        labels = list(range(self.start.n))
        cur = self.start
        out = [cur]
        for step in self.steps:
            try:
                idx = labels.index(step.vertex)
            except ValueError:
                raise ArgumentError(f"vertex {step.vertex} was already removed") from None
            cur = reduce(cur, idx, step.kind)
            labels.pop(idx)
            out.append(cur)
        return out

    def to_dict(self) -> dict:
        gs = self.graphs()
        return {
            "format": "vmchain-chain/1",
            "class": self.cls,
            "floor": self.floor,
            "start": to_graph6(self.start),
            "steps": [
                {"graph6": to_graph6(h), "vertex": s.vertex, "kind": s.kind.value, "pre_check": s.pre_check}
                for s, h in zip(self.steps, gs[1:])
            ],
            "stop_reason": self.stop_reason,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        """Header comment, start graph, then ``graph6<TAB>vertex<TAB>kind`` per step.

        The graph6 on a step line is the graph after that step.
        """
        d = self.to_dict()
        lines = [
            f"#vmchain-chain/1 class={self.cls} floor={self.floor} stop_reason={self.stop_reason}",
            d["start"],
        ]
        lines += [f"{s['graph6']}\t{s['vertex']}\t{s['kind']}" for s in d["steps"]]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "Chain":
        chain = cls(from_graph6(d["start"]), d["class"], int(d["floor"]), stop_reason=d["stop_reason"])
        chain.steps = [
            ReductionStep(int(s["vertex"]), ReductionKind(s["kind"]), s.get("pre_check", d["class"]))
            for s in d["steps"]
        ]
        chain._check_recorded([s["graph6"] for s in d["steps"]])
        return chain

    @classmethod
    def from_text(cls, text: str) -> "Chain":
        meta = {}
        body = []
        for line in text.splitlines():
            if line.startswith("#"):
                for tok in line[1:].split()[1:]:
                    k, _, v = tok.partition("=")
                    meta[k] = v
            elif line.strip():
                body.append(line.rstrip("\n"))
        if not body:
            raise ArgumentError("chain text has no start graph")
        chain = cls(
            from_graph6(body[0]),
            meta.get("class", "prime"),
            int(meta.get("floor", 0)),
            stop_reason=meta.get("stop_reason", "reached_size_bound"),
        )
        recorded = []
        for line in body[1:]:
            g6, vertex, kind = line.split("\t")
            chain.steps.append(ReductionStep(int(vertex), ReductionKind(kind), chain.cls))
            recorded.append(g6)
        chain._check_recorded(recorded)
        return chain

    def _check_recorded(self, recorded: list[str]) -> None:
        replayed = [to_graph6(h) for h in self.graphs()[1:]]
        for k, (a, b) in enumerate(zip(recorded, replayed)):
            if a != b:
                raise ArgumentError(f"step {k}: recorded graph {a} but replay gives {b}")


def build_chain(g: Graph, cls: str, floor: int) -> Chain:
    """Apply the class's reducer until the graph has at most ``floor`` vertices or no step exists."""
    if cls not in REDUCERS:
        raise ArgumentError(f"unknown chain class {cls!r} (expected one of {sorted(REDUCERS)})")
    pred = PREDICATES[cls]
    verdict = pred(g)
    if not verdict:
        raise PreconditionError(f"input graph is not {cls}", witness=verdict.witness)
    chain = Chain(g, cls, floor)
    labels = list(range(g.n))
    cur = g
    while cur.n > floor:
        step = REDUCERS[cls](cur)
        if step is None:
            chain.stop_reason = "exhausted"
            return chain
        nxt = reduce(cur, step.vertex, step.kind)
        if not pred(nxt):
            chain.stop_reason = "predicate_lost"
            return chain
        chain.steps.append(ReductionStep(labels[step.vertex], step.kind, cls, step.certificate))
        labels.pop(step.vertex)
        cur = nxt
    chain.stop_reason = "reached_size_bound"
    return chain
