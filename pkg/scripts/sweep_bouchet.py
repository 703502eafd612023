#!/usr/bin/env python3
"""Exhaustive prime-reduction sweep over labeled graphs.

    python3 scripts/sweep_bouchet.py 6 7 [--workers 4]

Prints, per n, the number of prime graphs, failures, and how often each
(vertex, reduction) slot was the first prime hit.
"""

from __future__ import annotations

import argparse
import json
import time

from vmchain.reducer import KIND_ORDER
from vmchain.verify.sweep import sweep_prime_reductions, worker_count


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("sizes", nargs="+", type=int)
    ap.add_argument("--workers", type=int, default=worker_count())
    args = ap.parse_args()
    for n in args.sizes:
        t0 = time.perf_counter()
        res = sweep_prime_reductions(n, args.workers)
        hits = {f"{k // 3}:{KIND_ORDER[k % 3].value}": c for k, c in sorted(res.first_hits.items())}
        print(json.dumps({
            "n": n,
            "graphs": res.graphs,
            "primes": res.primes,
            "failures": len(res.failures),
            "failure_codes_head": res.failures[:10],
            "first_hits": hits,
            "seconds": round(time.perf_counter() - t0, 1),
        }))


if __name__ == "__main__":
    main()
