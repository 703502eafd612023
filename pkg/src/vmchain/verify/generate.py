"""Seeded graph generation and exhaustive labeled enumeration.

All randomness comes from numpy's PCG64 bit generator keyed by a
``SeedSequence``.  Generation is a pure function of its inputs, so the same
seed reproduces the same graphs on every platform numpy supports.
"""

from __future__ import annotations

import zlib
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from ..connectivity import class_predicate
from ..errors import ArgumentError, GenerationError, ResourceLimitError
from ..graph import Graph

RNG_NAME = "numpy.PCG64/SeedSequence"
RNG_VERSION = 1
MAX_ENUM_N = 7


def make_rng(seed: int, *key: int) -> np.random.Generator:
    """PCG64 stream for ``seed``, split by the integer ``key`` path."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=key)))


def stable_key(name: str) -> int:
    return zlib.crc32(name.encode())


def pairs(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph_from_code(n: int, code: int) -> Graph:
    """Labeled graph whose edge set is the bit pattern ``code`` over :func:`pairs`."""
    rows = [0] * n
    for k, (i, j) in enumerate(pairs(n)):
        if (code >> k) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def random_graph(rng: np.random.Generator, n: int, p: Fraction | float = Fraction(1, 2)) -> Graph:
    """G(n, p).  A rational ``p`` is sampled exactly via integer draws."""
    prs = pairs(n)
    if not prs:
        return Graph.empty(n)
    if isinstance(p, Fraction):
        on = rng.integers(0, p.denominator, size=len(prs)) < p.numerator
    else:
        on = rng.random(len(prs)) < p
    rows = [0] * n
    for (i, j), e in zip(prs, on.tolist()):
        if e:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def random_subset(rng: np.random.Generator, within: int) -> int:
    members = [v for v in range(within.bit_length()) if (within >> v) & 1]
    if not members:
        return 0
    keep = rng.integers(0, 2, size=len(members)).tolist()
    return sum(1 << v for v, k in zip(members, keep) if k)


@dataclass(frozen=True)
class GenSpec:
    n: int
    edge_probability: Fraction = Fraction(1, 2)
    filter: str | None = None  # connectivity class name, see connectivity.class_predicate
    seed: int = 0
    max_rejects: int = 10_000
    index: int = 0  # stream number, so one seed can feed several independent draws

    def __post_init__(self):
        p = Fraction(self.edge_probability)
        if not 0 <= p <= 1:
            raise ArgumentError(f"edge probability {p} outside [0, 1]")
        object.__setattr__(self, "edge_probability", p)
        if self.n < 0:
            raise ArgumentError("n must be non-negative")


def sample(spec: GenSpec) -> tuple[Graph, int]:
    """Return ``(graph, rejects)`` for ``spec``; raises once ``max_rejects`` is exceeded."""
    rng = make_rng(spec.seed, spec.index)
    pred = class_predicate(spec.filter) if spec.filter else None
    rejects = 0
    while True:
        g = random_graph(rng, spec.n, spec.edge_probability)
        if pred is None or pred(g):
            return g, rejects
        rejects += 1
        if rejects > spec.max_rejects:
            raise GenerationError(
                f"no {spec.filter} graph on {spec.n} vertices after {rejects} rejections", rejects
            )


def gen_random(spec: GenSpec) -> Graph:
    return sample(spec)[0]


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices, once each, ascending by edge bit pattern."""
    if n > MAX_ENUM_N:
        raise ResourceLimitError(
            f"labeled enumeration capped at n={MAX_ENUM_N}; sample larger graphs instead"
        )
    for code in range(1 << (n * (n - 1) // 2)):
        yield graph_from_code(n, code)
