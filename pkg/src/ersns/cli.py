"""Command-line interface.

Graph arguments accept a graph6 string, ``-`` (first line of stdin),
``named:KIND[:p1,p2]``, ``edges:N:u-v,u-v,...`` or ``complement:<graph>``.

Exit codes: 0 success, 1 counterexample / surviving candidate / not
isomorphic, 2 usage or precondition error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .enumerate import DEFAULT_MAX_N, EnumSpec, enumerate_er, er_parameter_feasible
from .formats import export_dot, parse_graph6, write_graph6
from .graph import Graph, GraphError, NamedGraphSpec, build_graph, complement, named_graph
from .iso import are_isomorphic
from .products import cartesian, shadow, tensor
from .regularity import classify_er
from .reports import (
    analysis_payload,
    document,
    dumps,
    factorization_payload,
    stats_payload,
    theorem_payload,
)
from .theorems import (
    conway_cartesian_report,
    conway_tensor_report,
    load_cited_facts,
    scan_forbidden_usns,
    scan_structural,
    verify_cartesian_usns,
    verify_shadow_theorems,
    verify_tensor_usns,
)
from .theorems.forbidden import default_workers
from .theorems.report import COUNTEREXAMPLE, PreconditionError
from .theorems.structural import check_p3h_property, check_p_lambda_endpoints

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


_stdin_cache: list[str] | None = None


def _stdin_lines() -> list[str]:
    global _stdin_cache
    if _stdin_cache is None:
        _stdin_cache = [ln.strip() for ln in sys.stdin.read().splitlines() if ln.strip()]
    return _stdin_cache


def parse_graph_arg(text: str) -> Graph:
    if text == "-":
        lines = _stdin_lines()
        if not lines:
            raise UsageError("no graph on stdin")
        return parse_graph6(lines[0])
    if text.startswith("complement:"):
        return complement(parse_graph_arg(text[len("complement:"):]))
    if text.startswith("named:"):
        return named_graph(NamedGraphSpec.parse(text[len("named:"):]))
    if text.startswith("edges:"):
        _, n, *rest = text.split(":", 2)
        try:
            edges = [tuple(int(x) for x in e.split("-")) for e in rest[0].split(",") if e] if rest else []
            return build_graph(int(n), edges)
        except ValueError:
            raise UsageError(f"bad edge list {text!r}") from None
    return parse_graph6(text)


def _emit(args, payload, inputs, stats=None) -> None:
    print(dumps(document(args.argv, inputs, payload, stats)))


def cmd_analyze(args) -> int:
    G = parse_graph_arg(args.graph)
    _emit(args, analysis_payload(G), [write_graph6(G)])
    return EXIT_OK


def cmd_product(args) -> int:
    G1, G2 = parse_graph_arg(args.left), parse_graph_arg(args.right)
    P, _ = (cartesian if args.op == "cartesian" else tensor)(G1, G2)
    e1, e2, ep = classify_er(G1), classify_er(G2), classify_er(P)
    expected = None
    if e1 and e2:
        if args.op == "tensor":
            expected = [e1.n * e2.n, e1.d * e2.d, e1.lam * e2.lam]
        elif e1.lam == e2.lam:
            expected = [e1.n * e2.n, e1.d + e2.d, e1.lam]
    holds = None if expected is None else (ep is not None and list(ep) == expected)
    payload = {"type": "product", "op": args.op, "graph6": write_graph6(P),
               "expected": expected, "er": list(ep) if ep else None, "holds": holds}
    _emit(args, payload, [write_graph6(G1), write_graph6(G2)])
    return EXIT_NEGATIVE if holds is False else EXIT_OK


def cmd_shadow(args) -> int:
    if args.m < 1:
        raise UsageError("-m must be positive")
    D, _ = shadow(args.m, parse_graph_arg(args.graph))
    print(write_graph6(D))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    ok, why = er_parameter_feasible(args.n, args.d, args.l)
    try:
        spec = EnumSpec(args.n, args.d, args.l, max_results=args.limit,
                        time_budget=args.budget, allow_large=args.allow_large)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    res = enumerate_er(spec)
    for form in res.forms:
        print(form.graph6())
    stats = stats_payload(res.stats, timing=True)
    stats["feasible"] = ok
    stats["reason"] = why
    print(json.dumps(stats, sort_keys=True), file=sys.stderr)
    return EXIT_OK


def _report_exit(rep) -> int:
    return EXIT_NEGATIVE if rep.verdict == COUNTEREXAMPLE else EXIT_OK


def cmd_scan(args) -> int:
    start = time.perf_counter()
    rep = scan_forbidden_usns(args.family, args.max_n, cell_budget=args.budget,
                              workers=args.workers)
    print(json.dumps({"elapsed": round(time.perf_counter() - start, 3)}), file=sys.stderr)
    _emit(args, theorem_payload(rep), [])
    return _report_exit(rep)


def _lambdas(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        lo, _, hi = part.partition("-")
        out += range(int(lo), int(hi or lo) + 1)
    return out


def cmd_verify(args) -> int:
    graphs = [parse_graph_arg(g) for g in args.graphs]
    th = args.theorem
    if th in ("cartesian-usns", "tensor-usns"):
        if len(graphs) != 2:
            raise UsageError(f"{th} takes exactly two graphs")
        fn = verify_cartesian_usns if th == "cartesian-usns" else verify_tensor_usns
        rep = fn(*graphs)
    elif th == "shadow":
        if len(graphs) != 1:
            raise UsageError("shadow takes exactly one graph")
        rep = verify_shadow_theorems(args.q, args.m, graphs[0])
    else:
        if len(graphs) > 1:
            raise UsageError(f"{th} takes at most one graph")
        if graphs:
            rep = (check_p3h_property if th == "p3h" else check_p_lambda_endpoints)(graphs[0])
        else:
            default = "4-10" if th == "p3h" else "5-9"
            rep = scan_structural(th, _lambdas(args.lambdas or default), args.max_n,
                                  cell_budget=args.budget)
    _emit(args, theorem_payload(rep), [write_graph6(g) for g in graphs])
    return _report_exit(rep)


def cmd_conway(args) -> int:
    facts = load_cited_facts(args.facts) if args.facts else None
    fn = conway_cartesian_report if args.product == "cartesian" else conway_tensor_report
    rep = fn(facts)
    _emit(args, factorization_payload(rep), [])
    return EXIT_NEGATIVE if rep.surviving else EXIT_OK


def cmd_iso(args) -> int:
    G, H = parse_graph_arg(args.left), parse_graph_arg(args.right)
    same, perm = are_isomorphic(G, H)
    if same:
        print("isomorphic")
        print(" ".join(f"{v}->{w}" for v, w in enumerate(perm)))
        return EXIT_OK
    print("not isomorphic")
    return EXIT_NEGATIVE


def cmd_convert(args) -> int:
    if args.graph == "-":
        graphs = [parse_graph6(line) for line in _stdin_lines()]
    else:
        graphs = [parse_graph_arg(args.graph)]
    for i, G in enumerate(graphs):
        if args.to == "g6":
            print(write_graph6(G))
        else:
            sys.stdout.write(export_dot(G, name=f"G{i}" if len(graphs) > 1 else "G"))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ersns",
                                description="Edge-regular graphs and shared neighbourhood structures.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="classify a graph and report its SNS classes")
    a.add_argument("graph")
    a.set_defaults(func=cmd_analyze)

    a = sub.add_parser("product", help="Cartesian or tensor product of two graphs")
    a.add_argument("--op", choices=["cartesian", "tensor"], required=True)
    a.add_argument("left")
    a.add_argument("right")
    a.set_defaults(func=cmd_product)

    a = sub.add_parser("shadow", help="m-fold shadow D_m(G)")
    a.add_argument("-m", type=int, required=True)
    a.add_argument("graph")
    a.set_defaults(func=cmd_shadow)

    a = sub.add_parser("enumerate", help="all ER(n, d, lambda) graphs up to isomorphism")
    a.add_argument("-n", type=int, required=True)
    a.add_argument("-d", type=int, required=True)
    a.add_argument("-l", "--lam", dest="l", type=int, required=True)
    a.add_argument("--limit", type=int, default=None)
    a.add_argument("--budget", type=float, default=None, help="wall-clock seconds")
    a.add_argument("--allow-large", action="store_true",
                   help=f"permit n > {DEFAULT_MAX_N}")
    a.set_defaults(func=cmd_enumerate)

    a = sub.add_parser("scan-forbidden", help="search for a forbidden USNS")
    a.add_argument("--family", required=True,
                   help="p3 | p4 | star:L | wheel:M | kmn:M1,M2 | p3lk1:L")
    a.add_argument("--max-n", type=int, required=True)
    a.add_argument("--budget", type=float, default=None, help="per-cell wall-clock seconds")
    a.add_argument("--workers", type=int, default=None,
                   help=f"process count (default from ERSNS_WORKERS, now {default_workers()})")
    a.set_defaults(func=cmd_scan)

    a = sub.add_parser("verify", help="check a theorem on given graphs or by scanning")
    a.add_argument("--theorem", required=True,
                   choices=["cartesian-usns", "tensor-usns", "shadow", "p3h", "p5"])
    a.add_argument("graphs", nargs="*")
    a.add_argument("-m", type=int, default=2)
    a.add_argument("-q", type=int, default=1)
    a.add_argument("--lambdas", default=None, help="e.g. 5 or 4-10 or 5,7")
    a.add_argument("--max-n", type=int, default=10)
    a.add_argument("--budget", type=float, default=None)
    a.set_defaults(func=cmd_verify)

    a = sub.add_parser("conway", help="product-factorization case analysis for SR(99,14,1,2)")
    a.add_argument("--product", choices=["cartesian", "tensor"], required=True)
    a.add_argument("--facts", default=None, help="cited-facts JSON file")
    a.set_defaults(func=cmd_conway)

    a = sub.add_parser("iso", help="isomorphism test with witness")
    a.add_argument("left")
    a.add_argument("right")
    a.set_defaults(func=cmd_iso)

    a = sub.add_parser("convert", help="convert a graph (or graph6 lines on stdin)")
    a.add_argument("--to", choices=["dot", "g6"], required=True)
    a.add_argument("graph", nargs="?", default="-")
    a.set_defaults(func=cmd_convert)
    return p


def main(argv: list[str] | None = None) -> int:
    global _stdin_cache
    _stdin_cache = None
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.argv = argv
    try:
        return args.func(args)
    except (UsageError, GraphError, PreconditionError) as exc:
        print(f"ersns {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
