"""Command-line front end.

    brp solve  <file> [--root R] [--dot OUT] [--selection feasible|lightest]
    brp oracle <file> [--root R] [--max-n N] [--count]
    brp gen    --n N --chords K --seed S [--wmax W] [--wmin W] [-o OUT]
    brp check  <file>

Exit codes: 0 ok, 1 oracle mismatch, 2 bad input, 3 not outerplanar,
4 disconnected, 5 enumeration bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .errors import (
    BoundExceeded,
    DisconnectedGraphError,
    GraphError,
    NotOuterplanarError,
    NotTwoConnectedError,
    UndefinedValueError,
)
from .generate import random_outerplanar
from .graph import biconnected_components, format_weight
from .io import embedding_to_dict, instance_to_dict, load_instance, solution_to_dict, to_dot
from .oracle import DEFAULT_MAX_N, count_rooted_acyclic, oracle_k
from .outerplanar import recognize
from .reductions import simplify
from .solver import SELECTIONS, solve_brp, solve_rbrp

EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_NOT_OUTERPLANAR = 3
EXIT_DISCONNECTED = 4
EXIT_BOUND = 5


def _emit(doc) -> None:
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _solve(G, root, selection="feasible"):
    if root is not None and not G.has_vertex(root):
        raise GraphError(f"unknown root {root!r}")
    if root is None:
        return solve_brp(G, selection=selection)
    return solve_rbrp(G, root, selection=selection)


def cmd_solve(args) -> int:
    G = load_instance(args.file)
    sol = _solve(G, args.root, args.selection)
    _emit(solution_to_dict(sol))
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(to_dot(sol.orientation))
    print(f"k = {format_weight(sol.k)} at root {sol.root}, {len(sol.packing.items)} arborescences", file=sys.stderr)
    return 0


def cmd_oracle(args) -> int:
    G = load_instance(args.file)
    if G.n > args.max_n:
        raise BoundExceeded(f"{G.n} vertices exceed --max-n {args.max_n}")
    if args.count:
        count = count_rooted_acyclic(G, max_n=args.max_n)
        _emit({"count": count})
        print(f"{count} rooted acyclic orientations", file=sys.stderr)
        return 0
    if args.root is not None and not G.has_vertex(args.root):
        raise GraphError(f"unknown root {args.root!r}")
    if not G.is_connected():
        raise DisconnectedGraphError("graph is disconnected")
    if G.n < 2:
        raise UndefinedValueError("k is undefined for a graph with a single vertex")
    truth = oracle_k(G, r=args.root, max_n=args.max_n)
    sol = _solve(G, args.root)
    status = "MATCH" if sol.k == truth else "MISMATCH"
    _emit({"oracle_k": format_weight(truth), "solver_k": format_weight(sol.k), "status": status})
    print(f"{status} oracle={format_weight(truth)} solver={format_weight(sol.k)}", file=sys.stderr)
    return 0 if status == "MATCH" else EXIT_MISMATCH


def cmd_gen(args) -> int:
    try:
        G = random_outerplanar(args.n, args.chords, args.seed, wmax=args.wmax, wmin=args.wmin)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    doc = instance_to_dict(G)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    else:
        _emit(doc)
    return 0


def cmd_check(args) -> int:
    G = load_instance(args.file)
    simple, _ = simplify(G)
    blocks, cut = biconnected_components(simple)
    report = {"outerplanar": True, "cut_vertices": sorted(cut, key=G.index), "blocks": []}
    for B in blocks:
        if B.m == 1:
            report["blocks"].append({"vertices": list(B.vertices), "trivial": True})
            continue
        try:
            report["blocks"].append(embedding_to_dict(recognize(B)))
        except (NotOuterplanarError, NotTwoConnectedError) as exc:
            report["outerplanar"] = False
            witness = getattr(exc, "witness", None)
            report["blocks"].append(
                {"vertices": list(B.vertices), "error": str(exc), "witness": None if witness is None else [str(x) for x in witness]}
            )
    _emit(report)
    return 0 if report["outerplanar"] else EXIT_NOT_OUTERPLANAR


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="brp", description="Broadcast routing on outerplanar networks")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve BRP (or rBRP with --root)")
    s.add_argument("file")
    s.add_argument("--root")
    s.add_argument("--dot", help="write the oriented graph as DOT")
    s.add_argument("--selection", choices=SELECTIONS, default="feasible")
    s.set_defaults(func=cmd_solve)

    o = sub.add_parser("oracle", help="cross-check the solver by brute force")
    o.add_argument("file")
    o.add_argument("--root")
    o.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    o.add_argument("--count", action="store_true", help="count rooted acyclic orientations instead")
    o.set_defaults(func=cmd_oracle)

    g = sub.add_parser("gen", help="random outerplanar instance")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--chords", type=int, default=0)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--wmax", type=int, default=10)
    g.add_argument("--wmin", type=int, default=0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="outerplanarity report per block")
    c.add_argument("file")
    c.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (GraphError, UndefinedValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (NotOuterplanarError, NotTwoConnectedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_OUTERPLANAR
    except DisconnectedGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND


if __name__ == "__main__":
    sys.exit(main())
