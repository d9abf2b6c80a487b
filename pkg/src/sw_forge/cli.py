"""Command-line surface: one subcommand per operation family.

Domain outcomes that are answers rather than errors (no representation
found, target unresolved) exit 0 with an explicit "status" field in the
JSON; exit 1 is reserved for domain violations and I/O failures, exit 2
for usage errors.  All JSON output has sorted keys so runs are
byte-reproducible.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .binomial import CountSpec, LocalCountSpec, count_local, count_representations, represent
from .errors import SwForgeError
from .graph import (
    Graph,
    encode_graph6,
    parse_edge_list,
    parse_graph6,
    to_dot,
    to_edge_list,
)
from .index import nested_star_closed_form, steiner_wiener
from .inverse import invert
from .scanner import scan
from .stars import NestedStarSpec, build, parse_hubs
from .steiner import steiner_distance


def _emit(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True))


def _ints_arg(text: str) -> tuple[int, ...]:
    return tuple(int(part) for part in text.split(",")) if text.strip() else ()


def _load_graphs(args) -> list[Graph]:
    if args.input:
        with open(args.input) as fh:
            return [parse_edge_list(fh.read())]
    with open(args.graph6) as fh:
        return [parse_graph6(line) for line in fh if line.strip()]


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="edge-list file ('n m' header, then 'u v' lines)")
    src.add_argument("--graph6", help="file with one graph6 string per line")


def _cmd_compute(args) -> int:
    for g in _load_graphs(args):
        _emit({"n": g.n, "k": args.k, "sw": steiner_wiener(g, args.k)})
    return 0


def _cmd_steiner(args) -> int:
    terminals = _ints_arg(args.terminals)
    for g in _load_graphs(args):
        _emit(
            {
                "n": g.n,
                "terminals": sorted(terminals),
                "steiner_distance": steiner_distance(g, terminals),
            }
        )
    return 0


def _cmd_construct(args) -> int:
    spec = NestedStarSpec(args.n, parse_hubs(args.hubs))
    g = build(spec)
    if args.format == "dot":
        print(to_dot(g), end="")
    elif args.format == "text":
        print(to_edge_list(g), end="")
    out = {
        "n": spec.n,
        "hubs": list(spec.hubs),
        "edges": g.edge_count(),
        "graph6": encode_graph6(g),
    }
    if args.k is not None:
        out["predicted"] = nested_star_closed_form(spec, args.k)
        out["verified"] = steiner_wiener(g, args.k)
    _emit(out)
    return 0


def _cmd_represent(args) -> int:
    rep = represent(args.m, args.d, args.max_x)
    if rep is None:
        _emit({"status": "not_found", "m": args.m, "d": args.d, "max_x": args.max_x})
    else:
        _emit({"status": "found", "m": args.m, "d": args.d, "terms": list(rep.terms)})
    return 0


def _emit_certificate(args, cert) -> None:
    if cert is None:
        _emit({"status": "unresolved", "k": args.k, "n_max": args.n_max})
        return
    g = build(cert.spec)
    if args.format == "dot":
        print(to_dot(g), end="")
    elif args.format == "text":
        print(to_edge_list(g), end="")
    _emit(
        {
            "status": "certified",
            "k": cert.k,
            "target": cert.target,
            "n": cert.n,
            "hubs": list(cert.spec.hubs),
            "predicted": cert.predicted,
            "verified": cert.verified == cert.target,
            "graph6": encode_graph6(g),
        }
    )


def _cmd_invert(args) -> int:
    if args.target is None and not args.batch:
        args.parser.error("invert needs --target or --batch")
    if args.batch:
        fh = sys.stdin if args.batch == "-" else open(args.batch)
        try:
            targets = [int(line) for line in fh if line.strip()]
        finally:
            if fh is not sys.stdin:
                fh.close()
        for target in targets:  # output order follows input order
            args_target = target
            _emit_certificate(args, invert(args.k, args_target, args.n_max))
        return 0
    _emit_certificate(args, invert(args.k, args.target, args.n_max))
    return 0


def _cmd_scan(args) -> int:
    corpus = None
    fh = None
    if args.graph6:
        fh = open(args.graph6)
        corpus = fh
    try:
        report = scan(args.k, args.limit, corpus=corpus, strict=not args.allow_partial)
    finally:
        if fh is not None:
            fh.close()
    if args.witness_csv:
        with open(args.witness_csv, "w") as out:
            out.write("value,witness_graph6\n")
            for value, g6 in sorted(report.attainable.items()):
                out.write(f"{value},{g6}\n")
    if args.format == "text":
        print(f"k={report.k} limit={report.limit} complete={report.complete}")
        print(f"covered n_max={report.n_max_covered} source={report.source}")
        print(f"exceptions ({len(report.exceptions)}): {list(report.exceptions)}")
    else:
        _emit(report.to_json_dict())
    return 0


def _cmd_count(args) -> int:
    lambdas = _ints_arg(args.lambdas) if args.lambdas else (1,) * args.s
    spec = CountSpec(
        d=args.d,
        s=args.s,
        lambdas=lambdas,
        m=args.m,
        B=args.B,
        distinct=args.distinct,
        include_zero=args.include_zero,
    )
    key = "Nstar" if args.distinct else "N"
    _emit({"m": spec.m, "B": spec.effective_B, key: count_representations(spec)})
    return 0


def _cmd_local(args) -> int:
    lambdas = _ints_arg(args.lambdas) if args.lambdas else (1,) * args.s
    spec = LocalCountSpec(
        p=args.p, k_exp=args.k_exp, d=args.d, s=args.s, lambdas=lambdas, m=args.m
    )
    _emit(
        {
            "p": spec.p,
            "k_exp": spec.k_exp,
            "t": spec.t,
            "m": spec.m,
            "M": count_local(spec),
        }
    )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sw-forge",
        description="Steiner-Wiener index toolkit: compute, construct, invert, scan, count.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="exact SW_k of a graph")
    _add_graph_source(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("steiner", help="exact Steiner distance of a terminal set")
    _add_graph_source(p)
    p.add_argument("--terminals", required=True, help="comma-separated vertices")
    p.set_defaults(func=_cmd_steiner)

    p = sub.add_parser("construct", help="build a nested star and check its index")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--hubs", default="", help="comma-separated ascending hubs")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--format", choices=("json", "text", "dot"), default="json")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("represent", help="write m as a sum of distinct C(x, d)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--max-x", type=int, required=True, help="exclusive term bound")
    p.set_defaults(func=_cmd_represent)

    p = sub.add_parser("invert", help="realize a target SW_k value, certified")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--target", type=int)
    p.add_argument("--n-max", type=int, default=60)
    p.add_argument("--batch", help="file of targets, one per line ('-' = stdin)")
    p.add_argument("--format", choices=("json", "text", "dot"), default="json")
    p.set_defaults(func=_cmd_invert, parser=p)

    p = sub.add_parser("scan", help="exhaustive attainable/exception scan")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--graph6", help="corpus file, one graph6 per line")
    p.add_argument("--allow-partial", action="store_true")
    p.add_argument("--witness-csv", help="write (value, witness) CSV here")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("count", help="exact N(m) or N*(m)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--B", type=int, default=None)
    p.add_argument("--lambdas", default="", help="comma-separated coefficients")
    p.add_argument("--distinct", action="store_true", help="count N*(m) instead")
    p.add_argument("--include-zero", action="store_true")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("local", help="exact M_m(p^k) residue-tuple count")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k-exp", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--lambdas", default="")
    p.set_defaults(func=_cmd_local)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SwForgeError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
