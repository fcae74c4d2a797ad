"""``gis``: command-line front end.

Exit status is 0 on success, 1 when a verification finds a counterexample
and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import suites
from .embedding import default_spec, embed_countable_into_p2, embed_element
from .gis import invert, multiply
from .graph import GraphError, builtin, enumerate_paths, load_graph
from .polycyclic import poly_multiply, poly_reduce
from .syntax import ParseError, format_element, format_poly, parse_element, parse_letters, parse_poly

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INPUT = 0, 1, 2

SUITES = ("axioms", "embedding", "p2", "confluence", "topology", "all")


class InputError(Exception):
    pass


def _graph_args(p: argparse.ArgumentParser, required=True):
    grp = p.add_mutually_exclusive_group(required=required)
    grp.add_argument("--graph", metavar="FILE", help="graph JSON file")
    grp.add_argument("--builtin", metavar="NAME", help="g1, rose:K or ladder:N")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gis", description="Graph inverse semigroups and polycyclic monoids")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("paths", help="list paths up to a length")
    _graph_args(p)
    p.add_argument("--max-len", type=int, default=2)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("mul", help="multiply two expressions")
    _graph_args(p)
    p.add_argument("lhs")
    p.add_argument("rhs")

    for name, helptext in (("reduce", "normal form of an expression"),
                           ("invert", "inverse of an expression")):
        p = sub.add_parser(name, help=helptext)
        _graph_args(p)
        p.add_argument("expr")

    p = sub.add_parser("embed", help="image under the embedding into P_lambda")
    _graph_args(p)
    p.add_argument("expr")
    p.add_argument("--p2", action="store_true", help="compose with P_omega -> P_2")

    p = sub.add_parser("poly", help="polycyclic monoid calculus")
    psub = p.add_subparsers(dest="poly_command", required=True)
    q = psub.add_parser("reduce", help="normal form of a letter word, e.g. 'p0^-1 p0'")
    q.add_argument("--arity", type=int, required=True)
    q.add_argument("--strategy", choices=("leftmost", "rightmost"), default="leftmost")
    q.add_argument("word", nargs="?", default="")
    q = psub.add_parser("mul", help="multiply two elements given as [x][y]^-1")
    q.add_argument("--arity", type=int, required=True)
    q.add_argument("lhs")
    q.add_argument("rhs")

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", choices=SUITES)
    _graph_args(p, required=False)
    p.add_argument("--max-len", type=int, default=3)
    p.add_argument("--trunc", type=int, default=5)
    p.add_argument("--max-excluded", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--format", choices=("text", "json"), default="text")
    return ap


def _load(args):
    try:
        if getattr(args, "graph", None):
            return load_graph(args.graph)
        if getattr(args, "builtin", None):
            return builtin(args.builtin)
    except OSError as exc:
        raise InputError(f"cannot read graph: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"graph file is not valid JSON: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return builtin("g1")


def _path_text(p) -> str:
    return " ".join(p.edges) if p.edges else p.start


def _verify(args, out) -> int:
    if args.suite in ("confluence",) and not (args.graph or args.builtin):
        g = None
    else:
        g = _load(args)
    cfg = suites.SuiteConfig(max_len=args.max_len, trunc=args.trunc, max_excluded=args.max_excluded,
                             seed=args.seed, samples=args.samples,
                             p2_bound=min(args.max_len, 2))
    t0 = time.perf_counter()
    results = suites.run_suite(args.suite, g, cfg)
    ok = all(r.ok for r in results)
    doc = {"suite": args.suite, "graph": str(g) if g else None,
           "status": "pass" if ok else "fail",
           "seconds": round(time.perf_counter() - t0, 3),
           "results": [r.to_dict() for r in results]}
    if args.format == "json":
        json.dump(doc, out, indent=2)
        out.write("\n")
    else:
        for r in results:
            out.write(f"{r.name:<18} {r.status}  ({r.seconds:.2f}s)\n")
            for f in r.failures:
                out.write(f"    {f['check']}: {f['witness']}\n")
        out.write(f"status: {doc['status']}\n")
    return EXIT_OK if ok else EXIT_COUNTEREXAMPLE


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return _verify(args, out)
        if args.command == "poly":
            if args.arity < 0:
                raise InputError("arity must be non-negative")
            if args.poly_command == "reduce":
                z = poly_reduce(args.arity, parse_letters(args.word), args.strategy)
            else:
                z = poly_multiply(args.arity, parse_poly(args.lhs), parse_poly(args.rhs))
            out.write(format_poly(z) + "\n")
            return EXIT_OK

        g = _load(args)
        if args.command == "paths":
            paths = enumerate_paths(g, args.max_len)
            if args.format == "json":
                json.dump([{"start": p.start, "edges": list(p.edges), "end": p.end} for p in paths], out)
                out.write("\n")
            else:
                out.writelines(_path_text(p) + "\n" for p in paths)
        elif args.command == "mul":
            out.write(format_element(multiply(parse_element(g, args.lhs), parse_element(g, args.rhs))) + "\n")
        elif args.command == "reduce":
            out.write(format_element(parse_element(g, args.expr)) + "\n")
        elif args.command == "invert":
            out.write(format_element(invert(parse_element(g, args.expr))) + "\n")
        elif args.command == "embed":
            spec, x = default_spec(g), parse_element(g, args.expr)
            z = embed_countable_into_p2(spec, x) if args.p2 else embed_element(spec, x)
            out.write(format_poly(z) + "\n")
        return EXIT_OK
    except (InputError, GraphError, ParseError, ValueError) as exc:
        print(f"gis: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
