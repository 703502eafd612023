#!/usr/bin/env python3
"""Look for sequentially 3-rank-connected graphs on 12 vertices with no
sequentially 3-rank-connected elementary reduction.

    python3 scripts/explore_bound12.py --seed 1 --samples 2000 [--n 12] [--p 1/2]

Finding none says nothing about whether the size bound is tight; finding one
would show that it is.  Hits are printed as graph6.
"""

from __future__ import annotations

import argparse
from fractions import Fraction

from vmchain.connectivity import is_sequentially_3rc
from vmchain.formats import to_graph6
from vmchain.reducer import reduce_seq3rc
from vmchain.verify.generate import make_rng, random_graph


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, required=True)
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--n", type=int, default=12)
    ap.add_argument("--p", type=Fraction, default=Fraction(1, 2))
    args = ap.parse_args()
    rng = make_rng(args.seed)
    members = hits = 0
    for _ in range(args.samples):
        g = random_graph(rng, args.n, args.p)
        if not is_sequentially_3rc(g):
            continue
        members += 1
        if reduce_seq3rc(g) is None:
            hits += 1
            print(to_graph6(g), flush=True)
    print(f"# n={args.n} p={args.p}: {members} seq-3rc samples, {hits} without a step")


if __name__ == "__main__":
    main()
