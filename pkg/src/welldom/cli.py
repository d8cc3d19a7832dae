"""Command-line front end.

Exit codes: 0 success (or conforming verification), 1 a verification sweep
found a non-conforming instance, 2 usage or input errors.  ``check`` reports
a graph property and always exits 0 on valid input: a graph failing to be
well-dominated is a result, not an error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import harness
from .corpus import connected_graphs_up_to_iso, decode_graph6, encode_graph6
from .domination import (
    enumerate_maximal_independent_sets,
    enumerate_minimal_dominating_sets,
    is_well_covered,
    is_well_dominated,
)
from .errors import Graph6ParseError, InputError, InternalError, WelldomError
from .families import complete, complete_bipartite, cycle, family_f1, family_f2, path
from .graphs import members
from .product import cartesian_product


def _read_graph(arg: Optional[str]):
    if arg is None or arg == "-":
        arg = sys.stdin.readline().strip()
    return decode_graph6(arg)


def _cmd_check(args) -> int:
    G = _read_graph(args.graph)
    rep = is_well_covered(G) if args.well_covered else is_well_dominated(G)
    prop = "well-covered" if args.well_covered else "well-dominated"
    print(f"graph: {encode_graph6(G)}")
    print(f"order: {G.n}")
    print(f"property: {prop}")
    print(f"verdict: {'true' if rep.verdict else 'false'}")
    if rep.verdict:
        print(f"common-size: {rep.common_size}")
    else:
        small, large = rep.witnesses()
        print(f"witness-small: {json.dumps(small)}")
        print(f"witness-large: {json.dumps(large)}")
    return 0


def _cmd_enum(args, stream_fn) -> int:
    G = _read_graph(args.graph)
    count = 0
    for S in stream_fn(G):
        print(json.dumps(members(S)))
        count += 1
        if args.limit is not None and count >= args.limit:
            break
    return 0


def _cmd_product(args) -> int:
    G = decode_graph6(args.left)
    H = decode_graph6(args.right)
    prod, pm = cartesian_product(G, H)
    print(encode_graph6(prod))
    coords = [list(pm.decode(p)) for p in range(prod.n)]
    print(json.dumps({"n_left": pm.n_left, "n_right": pm.n_right,
                      "encode": "left * n_right + right", "coordinates": coords}))
    return 0


_FAMILIES = {
    "complete": (complete, 1),
    "path": (path, 1),
    "cycle": (cycle, 1),
    "bipartite": (complete_bipartite, 2),
    "f1": (family_f1, 3),
    "f2": (family_f2, 3),
}


def _cmd_gen(args) -> int:
    if args.family not in _FAMILIES:
        raise InputError(f"unknown family {args.family!r}; known: {', '.join(_FAMILIES)}")
    builder, arity = _FAMILIES[args.family]
    try:
        params = [int(p) for p in args.params.split(",")]
    except ValueError:
        raise InputError(f"parameters must be comma-separated integers, got {args.params!r}")
    if len(params) != arity:
        raise InputError(f"family {args.family!r} takes {arity} parameter(s), got {len(params)}")
    print(encode_graph6(builder(*params)))
    return 0


def _cmd_corpus(args) -> int:
    lines = [encode_graph6(G) for G in connected_graphs_up_to_iso(args.order)]
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="ascii") as handle:
            handle.write(text)
        print(f"wrote {len(lines)} graphs of order {args.order} to {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    if args.claim == "all":
        reports = harness.run_all_claims(args.max_order, args.workers)
    else:
        reports = [harness.run_claim(args.claim, args.max_order, args.workers)]
    for rep in reports:
        status = "conforming" if rep.conforming else "NON-CONFORMING"
        print(f"{rep.claim_id}: {status} "
              f"({len(rep.instances)} instances, {rep.elapsed_ms} ms)")
        for failure in rep.failures()[:5]:
            print(f"  counterexample: {json.dumps(failure, sort_keys=True)}")
    payload = reports[0].to_json() if len(reports) == 1 \
        else [rep.to_json() for rep in reports]
    if args.json == "-":
        print(json.dumps(payload, sort_keys=True, indent=2))
    elif args.json:
        with open(args.json, "w", encoding="ascii") as handle:
            json.dump(payload, handle, sort_keys=True, indent=2)
            handle.write("\n")
    return 0 if all(rep.conforming for rep in reports) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="welldom",
        description="Exact domination toolkit: enumeration, recognition, "
                    "products, corpora, and claim verification on small graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="well-dominated / well-covered verdict for one graph")
    p.add_argument("graph", nargs="?", help="graph6 record ('-' or omitted: read stdin)")
    p.add_argument("--well-covered", action="store_true",
                   help="check well-coveredness instead of well-domination")

    p = sub.add_parser("enum-mds", help="stream all minimal dominating sets")
    p.add_argument("graph", nargs="?", help="graph6 record ('-' or omitted: read stdin)")
    p.add_argument("--limit", type=int, help="stop after this many sets")

    p = sub.add_parser("enum-mis", help="stream all maximal independent sets")
    p.add_argument("graph", nargs="?", help="graph6 record ('-' or omitted: read stdin)")
    p.add_argument("--limit", type=int, help="stop after this many sets")

    p = sub.add_parser("product", help="Cartesian product of two graphs")
    p.add_argument("left", help="graph6 record of the left factor")
    p.add_argument("right", help="graph6 record of the right factor")

    p = sub.add_parser("gen", help="named family constructor")
    p.add_argument("family", help=f"one of: {', '.join(_FAMILIES)}")
    p.add_argument("params", help="comma-separated integers, e.g. '1,1,1'")

    p = sub.add_parser("corpus", help="connected graphs of one order, up to isomorphism")
    p.add_argument("--order", type=int, required=True, help="vertex count (1..7)")
    p.add_argument("--out", help="output file (default: stdout)")

    p = sub.add_parser("verify", help="run claim verifiers")
    p.add_argument("claim", help=f"claim id or 'all'; ids: {', '.join(harness.claim_ids())}")
    p.add_argument("--max-order", type=int, default=None,
                   help=f"sweep bound on factor orders (default {harness.DEFAULT_MAX_ORDER})")
    p.add_argument("--workers", type=int, default=1, help="parallel worker processes")
    p.add_argument("--json", help="write the JSON report here ('-' for stdout)")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "enum-mds":
            return _cmd_enum(args, enumerate_minimal_dominating_sets)
        if args.command == "enum-mis":
            return _cmd_enum(args, enumerate_maximal_independent_sets)
        if args.command == "product":
            return _cmd_product(args)
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "corpus":
            return _cmd_corpus(args)
        if args.command == "verify":
            return _cmd_verify(args)
        parser.error(f"unknown command {args.command!r}")
    except InternalError:
        raise  # a broken guarantee must crash loudly, not report usage trouble
    except Graph6ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except WelldomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
