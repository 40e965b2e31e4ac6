"""Command-line front end: ``latinsym {compute,bounds,invariants,gen,oracle,verify,bench}``."""
from __future__ import annotations

import argparse
import json
import statistics
import sys
import time

import numpy as np

from . import autotopy, bounds, invariants, latin

EXIT_OK, EXIT_INPUT, EXIT_GUARD = 0, 2, 3


class InputError(Exception):
    pass


def _load_square(path: str) -> latin.LatinSquare:
    try:
        return latin.read_square(path)
    except OSError as exc:
        raise InputError(f"{path}: cannot read ({exc.strerror})") from None
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def _reduced(L: latin.LatinSquare, out) -> latin.LatinSquare:
    if latin.is_reduced(L):
        return L
    print("# input is not reduced; using its reduced form", file=out)
    return latin.reduce(L)[0]


def derive_seed(seed: int, index: int) -> int:
    """Per-square seed for the ``index``-th square of a generated batch."""
    return int(np.random.SeedSequence([seed, index]).generate_state(1, np.uint64)[0])


def cmd_compute(args, out) -> int:
    L = _load_square(args.file)
    G = autotopy.autotopy_group_any(L, parallel=args.parallel)
    if args.json:
        json.dump(G.to_dict(), out)
        out.write("\n")
        return EXIT_OK
    Lr = latin.reduce(L)[0]
    pivot = autotopy.search_plan(Lr)[0] if Lr.n > 1 else 1
    print(f"group_order: {G.order}", file=out)
    print(f"pivot_row: {pivot}", file=out)
    for g in G.elements:
        print(f"# alpha {g.alpha.cycle_string()}  beta {g.beta.cycle_string()}  gamma {g.gamma.cycle_string()}", file=out)
        out.write(g.to_text())
    return EXIT_OK


def cmd_bounds(args, out) -> int:
    L = _reduced(_load_square(args.file), out)
    report = bounds.bound_report(L).to_dict()
    report["group_order"] = autotopy.autotopy_group(L).order
    for key, value in report.items():
        print(f"{key}: {value}", file=out)
    return EXIT_OK


def cmd_invariants(args, out) -> int:
    L = _reduced(_load_square(args.file), out)
    json.dump(invariants.compute_invariants(L).to_dict(), out)
    out.write("\n")
    return EXIT_OK


def cmd_gen(args, out) -> int:
    if args.n < 1 or args.count < 1:
        raise InputError("n and count must be positive")
    for t in range(args.count):
        L = latin.jm_random(args.n, derive_seed(args.seed, t), reduced=args.reduced)
        out.write(latin.to_text(L))
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    L = _reduced(_load_square(args.file), out)
    try:
        G = autotopy.autotopy_group_brute(L, override=args.force)
    except autotopy.OrderGuardError as exc:
        print(f"error: {exc} (CLI: --force)", file=sys.stderr)
        return EXIT_GUARD
    print(f"group_order: {G.order}", file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    L = _load_square(args.square)
    try:
        iso = latin.read_isotopism(args.isotopism)
    except OSError as exc:
        raise InputError(f"{args.isotopism}: cannot read ({exc.strerror})") from None
    except ValueError as exc:
        raise InputError(f"{args.isotopism}: {exc}") from None
    if iso.n != L.n:
        raise InputError(f"isotopism has order {iso.n}, square has order {L.n}")
    member = autotopy.verify_autotopism(L, iso)
    print("member" if member else "non-member", file=out)
    return EXIT_OK


def cmd_bench(args, out) -> int:
    if args.n < 1 or args.count < 1:
        raise InputError("n and count must be positive")
    times = []
    orders = []
    for t in range(args.count):
        L = latin.jm_random(args.n, derive_seed(args.seed, t), reduced=True)
        start = time.perf_counter()
        G = autotopy.autotopy_group(L, parallel=args.parallel)
        times.append(time.perf_counter() - start)
        orders.append(G.order)
    ms = [1000 * x for x in times]
    print(f"n: {args.n}  squares: {args.count}  seed: {args.seed}", file=out)
    print(
        f"per-square ms: min {min(ms):.3f}  median {statistics.median(ms):.3f}  "
        f"mean {statistics.fmean(ms):.3f}  max {max(ms):.3f}",
        file=out,
    )
    print(f"total s: {sum(times):.3f}  nontrivial groups: {sum(o > 1 for o in orders)}", file=out)
    print("# JM-random squares only; generation time excluded", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="latinsym", description="Autotopy groups of Latin squares.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="compute the autotopy group")
    c.add_argument("file")
    c.add_argument("--json", action="store_true")
    c.add_argument("--parallel", action="store_true")
    c.set_defaults(func=cmd_compute)

    c = sub.add_parser("bounds", help="report the group-size bounds")
    c.add_argument("file")
    c.set_defaults(func=cmd_bounds)

    c = sub.add_parser("invariants", help="dump cycle-structure invariants as JSON")
    c.add_argument("file")
    c.set_defaults(func=cmd_invariants)

    c = sub.add_parser("gen", help="generate Jacobson-Matthews random squares")
    c.add_argument("-n", type=int, required=True)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--count", type=int, default=1)
    c.add_argument("--reduced", action="store_true")
    c.set_defaults(func=cmd_gen)

    c = sub.add_parser("oracle", help="brute-force autotopy group (small orders)")
    c.add_argument("file")
    c.add_argument("--force", action="store_true", help=f"allow n > {autotopy.BRUTE_MAX_ORDER}")
    c.set_defaults(func=cmd_oracle)

    c = sub.add_parser("verify", help="test whether an isotopism fixes a square")
    c.add_argument("square")
    c.add_argument("isotopism")
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("bench", help="time autotopy_group on random squares")
    c.add_argument("-n", type=int, required=True)
    c.add_argument("--count", type=int, required=True)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--parallel", action="store_true")
    c.set_defaults(func=cmd_bench)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
