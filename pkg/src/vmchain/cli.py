"""``vmchain`` command-line front end.

Exit codes: 0 success / predicate holds, 1 definitional negative (predicate
fails, no step, suite found counterexamples), 2 input error, 3 theorem
violation, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .connectivity import class_predicate
from .cutrank import cut_rank
from .errors import (
    ArgumentError,
    GenerationError,
    GraphParseError,
    PreconditionError,
    ResourceLimitError,
    TheoremViolation,
    UnsupportedError,
)
from .formats import parse_graph, to_graph6
from .graph import DEFAULT_ORBIT_CAP, Graph, local_equivalence_orbit, mask_of, reduce
from .reducer import EXCEPTION_BOUND, REDUCERS, build_chain
from .verify.generate import RNG_NAME, GenSpec, sample
from .verify.suites import CATALOG, parse_trials, run_suite

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2, 3, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", default="-", help="graph file, or '-' for stdin (default)")
    p.add_argument("--g6", help="graph6 string given inline instead of a file")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")


def _read_graph(args) -> Graph:
    if args.g6 is not None:
        return parse_graph(args.g6, "graph6")
    if args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, encoding="latin-1") as fh:
                text = fh.read()
        except OSError as e:
            raise ArgumentError(f"cannot read {args.input}: {e.strerror}") from None
    return parse_graph(text, args.format)


def _parse_set(spec: str) -> list[int]:
    spec = spec.strip()
    if not spec:
        return []
    try:
        return [int(tok) for tok in spec.split(",") if tok.strip()]
    except ValueError:
        raise ArgumentError(f"bad vertex set {spec!r}") from None


def _check_class(name: str, allowed=None) -> None:
    if allowed is not None and name not in allowed:
        raise UsageError(f"class must be one of {', '.join(sorted(allowed))}")
    try:
        class_predicate(name)
    except ArgumentError as e:
        raise UsageError(str(e)) from None


# -- verbs -----------------------------------------------------------------------

def cmd_rank(args) -> int:
    g = _read_graph(args)
    vs = _parse_set(args.set)
    x = mask_of(vs)
    g.check_mask(x)
    r = cut_rank(g, x)
    rows, cols = x.bit_count(), g.n - x.bit_count()
    if args.json:
        print(_dump({
            "schema": "vmchain-rank/1",
            "graph6": to_graph6(g),
            "set": sorted(set(vs)),
            "rank": r,
            "rows": rows,
            "cols": cols,
        }))
    else:
        print(f"{r}\t{rows}x{cols}")
    return EXIT_OK


def cmd_check(args) -> int:
    _check_class(args.cls)
    g = _read_graph(args)
    verdict = class_predicate(args.cls)(g)
    out = {"schema": "vmchain-verdict/1", "class": args.cls, "graph6": to_graph6(g)}
    out.update(verdict.to_dict())
    print(_dump(out))
    return EXIT_OK if verdict.holds else EXIT_NO


def _precondition_report(e: PreconditionError) -> dict:
    w = e.witness
    if isinstance(w, int):
        w = [v for v in range(w.bit_length()) if (w >> v) & 1]
    return {"event": "precondition_failed", "message": str(e), "witness": w}


def cmd_reduce(args) -> int:
    _check_class(args.cls, REDUCERS)
    g = _read_graph(args)
    try:
        step = REDUCERS[args.cls](g)
    except PreconditionError as e:
        print(_dump(_precondition_report(e)))
        return EXIT_NO
    if step is None:
        if args.json:
            print(_dump({"schema": "vmchain-step/1", "class": args.cls, "graph6": to_graph6(g), "step": None}))
        else:
            print(f"# no {args.cls} elementary reduction ({g.n} <= {EXCEPTION_BOUND[args.cls]} vertices)")
        return EXIT_NO
    h = reduce(g, step.vertex, step.kind)
    if args.json:
        d = step.to_dict()
        d["graph6"] = to_graph6(h)
        print(_dump({"schema": "vmchain-step/1", "class": args.cls, "graph6": to_graph6(g), "step": d}))
    else:
        print(f"{to_graph6(h)}\t{step.vertex}\t{step.kind.value}")
    return EXIT_OK


def cmd_chain(args) -> int:
    _check_class(args.cls, REDUCERS)
    g = _read_graph(args)
    floor = EXCEPTION_BOUND[args.cls] if args.floor is None else args.floor
    if floor < 0:
        raise UsageError("--floor must be non-negative")
    try:
        chain = build_chain(g, args.cls, floor)
    except PreconditionError as e:
        print(_dump(_precondition_report(e)))
        return EXIT_NO
    sys.stdout.write(_dump(chain.to_dict()) + "\n" if args.json else chain.to_text())
    return EXIT_OK if chain.stop_reason == "reached_size_bound" else EXIT_NO


def cmd_orbit(args) -> int:
    g = _read_graph(args)
    orbit = sorted(to_graph6(h) for h in local_equivalence_orbit(g, args.cap))
    if args.json:
        print(_dump({"schema": "vmchain-orbit/1", "graph6": to_graph6(g), "size": len(orbit), "orbit": orbit}))
    else:
        print(len(orbit))
        for s in orbit:
            print(s)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite not in CATALOG:
        raise UsageError(f"unknown suite {args.suite!r}; known: {' '.join(CATALOG)}")
    trials = args.trials_opt if args.trials_opt is not None else args.trials_pos
    seed = args.seed_opt if args.seed_opt is not None else args.seed_pos
    try:
        mode, count = parse_trials(trials if trials is not None else CATALOG[args.suite].default_trials)
    except ValueError:
        raise UsageError(f"bad trial count {trials!r}") from None
    if mode == "sampled" and seed is None:
        raise UsageError("sampled suites need an explicit seed (--seed or third positional)")
    try:
        seed_val = int(seed) if seed is not None else 0
    except ValueError:
        raise UsageError(f"bad seed {seed!r}") from None
    try:
        rep = run_suite(args.suite, f"{mode}:{count}" if mode == "exhaustive" else count,
                        seed_val, n=args.n, timing=args.timing)
    except ArgumentError as e:
        raise UsageError(str(e)) from None
    print(rep.to_json())
    return EXIT_OK if rep.passed else EXIT_NO


def _parse_p(text: str) -> Fraction:
    try:
        p = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad edge probability {text!r}") from None
    if not 0 <= p <= 1:
        raise UsageError(f"edge probability {text} outside [0, 1]")
    return p


def cmd_gen(args) -> int:
    if args.filter is not None:
        _check_class(args.filter)
    if args.n < 0 or args.count < 0:
        raise UsageError("--n and --count must be non-negative")
    p = _parse_p(args.p)
    graphs, rejects = [], []
    for i in range(args.count):
        spec = GenSpec(args.n, p, args.filter, args.seed, args.max_rejects, index=i)
        try:
            g, r = sample(spec)
        except GenerationError as e:
            print(_dump({"event": "generation_failed", "message": str(e), "rejects": e.rejects, "index": i}))
            return EXIT_NO
        graphs.append(to_graph6(g))
        rejects.append(r)
    if args.json:
        print(_dump({
            "schema": "vmchain-gen/1",
            "rng": RNG_NAME,
            "seed": args.seed,
            "n": args.n,
            "p": str(p),
            "filter": args.filter,
            "graphs": graphs,
            "rejects": rejects,
        }))
    else:
        for s in graphs:
            print(s)
    return EXIT_OK


# -- wiring ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="vmchain", description="Vertex-minor chain reductions and rank-connectivity checks.")
    sub = ap.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("rank", help="cut-rank of a vertex set")
    _add_input(p)
    p.add_argument("--set", "-X", required=True, help="comma-separated vertices, e.g. 0,1")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("check", help="test a connectivity class; exit 0 holds, 1 fails")
    _add_input(p)
    p.add_argument("--class", dest="cls", required=True,
                   help="prime, krank:K, weak3rc, internal3rc, seq3rc, 3rc")
    p.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON")
    p.set_defaults(func=cmd_check)

    for verb, fn, help_ in (("reduce", cmd_reduce, "one class-preserving elementary reduction"),
                            ("chain", cmd_chain, "repeat reductions down to a floor")):
        p = sub.add_parser(verb, help=help_)
        _add_input(p)
        p.add_argument("--class", dest="cls", default="prime", help="prime or seq3rc")
        if verb == "chain":
            p.add_argument("--floor", type=int, default=None,
                           help="stop at this many vertices (default: the class's exception bound)")
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=fn)

    p = sub.add_parser("orbit", help="local-equivalence class by capped search")
    _add_input(p)
    p.add_argument("--cap", type=int, default=DEFAULT_ORBIT_CAP)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("verify", help="run a lemma/theorem suite and print its JSON report")
    p.add_argument("suite")
    p.add_argument("trials_pos", nargs="?", metavar="TRIALS", help="count or exhaustive:N")
    p.add_argument("seed_pos", nargs="?", metavar="SEED")
    p.add_argument("--trials", dest="trials_opt")
    p.add_argument("--seed", dest="seed_opt")
    p.add_argument("--n", type=int, default=None, help="fix the vertex count where the suite allows it")
    p.add_argument("--timing", action="store_true", help="fill elapsed_ms (makes output non-reproducible)")
    p.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="seeded random graphs, optionally filtered by class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", default="1/2", help="edge probability, rational like 1/2 or 0.3")
    p.add_argument("--filter", default=None)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--max-rejects", type=int, default=10_000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gen)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"vmchain: usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except TheoremViolation as e:
        print(_dump(e.to_dict()))
        print(f"vmchain: theorem violation: {e}", file=sys.stderr)
        return EXIT_VIOLATION
    except (GraphParseError, ArgumentError, UnsupportedError, ResourceLimitError) as e:
        print(f"vmchain: error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
