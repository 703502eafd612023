"""Generators, brute-force oracles and the seeded lemma catalog."""

from __future__ import annotations

from .generate import GenSpec, enumerate_graphs, gen_random, make_rng, random_graph, sample
from .report import VerifyReport
from .suites import CATALOG, run_suite, suite_ids

__all__ = [
    "CATALOG",
    "GenSpec",
    "VerifyReport",
    "enumerate_graphs",
    "gen_random",
    "make_rng",
    "random_graph",
    "run_suite",
    "sample",
    "suite_ids",
]
