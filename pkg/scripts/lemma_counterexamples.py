#!/usr/bin/env python3
"""Tabulate, by vertex count and set size, how often the literal statements
of the triplet-deletion and fully-closed-set lemmas fail.

    python3 scripts/lemma_counterexamples.py --seed 5 --samples 300
"""

from __future__ import annotations

import argparse
from collections import Counter

import numpy as np

from vmchain.connectivity import is_internally_3rc, is_prime, subset_table
from vmchain.graph import bits, contract_vertex, delete_vertex
from vmchain.structures import is_triplet, rank_two_triples
from vmchain.verify.generate import make_rng, random_graph


def fully_closed(t, n):
    idx = np.arange(1 << n, dtype=np.int64)
    ok = np.ones(idx.size, dtype=bool)
    for v in range(n):
        ok &= ((idx >> v) & 1 == 1) | (t.ranks[idx | (1 << v)] > t.ranks)
    return ok


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, required=True)
    ap.add_argument("--samples", type=int, default=300)
    ap.add_argument("--sizes", type=int, nargs="+", default=[6, 7, 8, 9, 10])
    args = ap.parse_args()
    trip_seen, trip_bad, fc_seen, fc_bad = Counter(), Counter(), Counter(), Counter()
    for n in args.sizes:
        rng = make_rng(args.seed, n)
        for _ in range(args.samples):
            g = random_graph(rng, n)
            if not is_prime(g):
                continue
            good = [bool(is_prime(delete_vertex(g, v))) for v in range(n)]
            if is_internally_3rc(g):
                for a in rank_two_triples(g):
                    if is_triplet(g, a):
                        trip_seen[n] += 1
                        trip_bad[n] += not all(good[v] for v in bits(a))
            if n >= 8:
                t = subset_table(g)
                either = [good[v] or (g.rows[v] != 0 and bool(is_prime(contract_vertex(g, v)))) for v in range(n)]
                for a in np.flatnonzero(fully_closed(t, n) & (t.ranks >= 2)).tolist():
                    key = (n, a.bit_count(), int(t.ranks[a]))
                    fc_seen[key] += 1
                    fc_bad[key] += not any(either[v] for v in bits(a))
    print("triplets in internally 3rc graphs: n, triplets, with a non-prime deletion")
    for n in sorted(trip_seen):
        print(f"  {n}\t{trip_seen[n]}\t{trip_bad[n]}")
    print("fully closed sets, rank >= 2: (n, |A|, rank), sets, with no prime G\\v or G/v")
    for k in sorted(fc_seen):
        print(f"  {k}\t{fc_seen[k]}\t{fc_bad[k]}")


if __name__ == "__main__":
    main()
