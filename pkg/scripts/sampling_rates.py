#!/usr/bin/env python3
"""Acceptance rates of the class filters under G(n, 1/2).

    python3 scripts/sampling_rates.py --seed 1 --samples 500 --sizes 8 9 10 11 12

Useful for choosing the vertex ranges of rejection-sampled suites.
"""

from __future__ import annotations

import argparse

from vmchain.connectivity import CLASSES
from vmchain.structures import rank_two_triples
from vmchain.verify.generate import make_rng, random_graph


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, required=True)
    ap.add_argument("--samples", type=int, default=500)
    ap.add_argument("--sizes", type=int, nargs="+", default=[8, 9, 10, 11, 12])
    args = ap.parse_args()
    names = list(CLASSES) + ["internal3rc+triple", "prime-not-seq3rc"]
    print("n\t" + "\t".join(names))
    for n in args.sizes:
        rng = make_rng(args.seed, n)
        counts = dict.fromkeys(names, 0)
        for _ in range(args.samples):
            g = random_graph(rng, n)
            got = {name: bool(pred(g)) for name, pred in CLASSES.items()}
            for name, v in got.items():
                counts[name] += v
            counts["internal3rc+triple"] += got["internal3rc"] and bool(rank_two_triples(g))
            counts["prime-not-seq3rc"] += got["prime"] and not got["seq3rc"]
        print(f"{n}\t" + "\t".join(f"{counts[k] / args.samples:.3f}" for k in names))


if __name__ == "__main__":
    main()
