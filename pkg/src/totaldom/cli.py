"""Command-line surface: solve, classify, check, generate, enumerate, verify.

Graphs go in and out as graph6 lines (stdin/stdout by default). Exit codes:
0 success/verified, 1 bound or characterization violation, 2 usage or parse
error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Iterable, Iterator

from .domination import NoATDSetError, NoTDSetError, gamma_t, gamma_t_almost, gamma_t_oracle
from .enumeration import (
    ENUMERATION_MAX_ORDER,
    enumerate_connected,
    verify_enumerated,
    verify_theorem,
)
from .families import gen_cycle, gen_F, gen_G, gen_GP16, gen_H, gen_L, two_corona
from .graph import Graph
from .graph6 import Graph6Error, graph6_encode, iter_graph6_lines
from .recognition import BoundViolationError, check_bound, classify

GENERATORS = {
    "G": lambda k: gen_G(k).graph,
    "H": lambda k: gen_H(k).graph,
    "GP16": lambda k: gen_GP16().graph,
    "F": lambda k: gen_F(k).graph,
    "L": lambda k: gen_L(k).graph,
    "corona-cycle": lambda k: two_corona(gen_cycle(k)).graph,
}


def _input_lines(path: str | None) -> Iterable[str]:
    if path is None or path == "-":
        return sys.stdin
    return open(path, "r", encoding="ascii")


def _graphs(path: str | None) -> Iterator[tuple[int, Graph]]:
    lines = _input_lines(path)
    try:
        yield from iter_graph6_lines(lines)
    finally:
        if lines is not sys.stdin:
            lines.close()


def _cmd_gamma_t(args) -> int:
    solver = gamma_t_oracle if args.oracle else gamma_t
    for lineno, g in _graphs(args.input):
        try:
            cert = solver(g)
        except (NoTDSetError, ValueError) as exc:
            print(f"line {lineno}: {exc}", file=sys.stderr)
            return 2
        witness = sorted(cert.witness)
        if args.json:
            print(json.dumps({"gamma_t": cert.value, "witness": witness}))
        else:
            print(f"{cert.value} {witness}")
    return 0


def _cmd_atd(args) -> int:
    for lineno, g in _graphs(args.input):
        try:
            cert = gamma_t_almost(g, args.vertex)
        except NoATDSetError:
            if args.json:
                print(json.dumps({"anchor": args.vertex, "feasible": False,
                                  "gamma_t_almost": None, "witness": None}))
            else:
                print("infeasible")
            continue
        except ValueError as exc:
            print(f"line {lineno}: {exc}", file=sys.stderr)
            return 2
        witness = sorted(cert.witness)
        if args.json:
            print(json.dumps({"anchor": cert.anchor, "feasible": True,
                              "gamma_t_almost": cert.value, "witness": witness}))
        else:
            print(f"{cert.value} {witness}")
    return 0


def _cmd_classify(args) -> int:
    for _lineno, g in _graphs(args.input):
        verdict = classify(g)
        if args.json:
            print(json.dumps({"family": verdict.family, "k": verdict.k}))
        elif verdict.is_member:
            print(verdict.family if verdict.k is None else f"{verdict.family} k={verdict.k}")
        else:
            print("not-in-families")
    return 0


def _cmd_check(args) -> int:
    status = 0
    for lineno, g in _graphs(args.input):
        try:
            report = check_bound(g)
        except BoundViolationError as exc:
            print(f"line {lineno}: VIOLATION: {exc}", file=sys.stderr)
            status = 1
            continue
        except ValueError as exc:
            print(f"line {lineno}: {exc}", file=sys.stderr)
            return 2
        print(json.dumps(report.to_json_dict()))
    return status


def _cmd_generate(args) -> int:
    family = args.family
    if family == "GP16":
        if args.k is not None:
            print("--k does not apply to GP16", file=sys.stderr)
            return 2
        g = GENERATORS[family](None)
    else:
        if args.k is None:
            print(f"--k is required for family {family}", file=sys.stderr)
            return 2
        try:
            g = GENERATORS[family](args.k)
        except ValueError as exc:
            print(str(exc), file=sys.stderr)
            return 2
    if args.format == "graph6":
        print(graph6_encode(g))
    else:
        print(g.n, g.m)
        for u, v in g.edges():
            print(u, v)
    return 0


def _cmd_enumerate(args) -> int:
    try:
        graphs = enumerate_connected(args.n)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    for g in graphs:
        print(graph6_encode(g))
    return 0


def _cmd_verify(args) -> int:
    if (args.max_n is None) == (args.input is None):
        print("verify needs exactly one of --max-n or --input", file=sys.stderr)
        return 2
    try:
        if args.max_n is not None:
            summary = verify_enumerated(args.max_n, jobs=args.jobs)
        else:
            summary = verify_theorem((g for _ln, g in _graphs(args.input)), jobs=args.jobs)
    except (Graph6Error, ValueError) as exc:
        print(str(exc), file=sys.stderr)
        return 2
    print(f"wall time: {summary.wall_time:.2f}s", file=sys.stderr)
    if args.json:
        print(json.dumps(summary.to_json_dict()))
    elif args.csv:
        writer = csv.writer(sys.stdout)
        writer.writerow(["graph6", "n", "gamma_t", "family", "k"])
        for e in summary.extremal:
            writer.writerow([e.graph6, e.n, e.gamma_t, e.family, "" if e.k is None else e.k])
    else:
        orders = " ".join(f"{n}={c}" for n, c in summary.examined_by_order.items())
        print(f"examined {summary.examined} graphs ({orders})")
        print(f"skipped: {summary.skipped_small} too small, "
              f"{summary.skipped_disconnected} disconnected")
        print(f"extremal graphs: {len(summary.extremal)}")
        for e in summary.extremal:
            k = "" if e.k is None else f" k={e.k}"
            print(f"  {e.graph6}  n={e.n}  gamma_t={e.gamma_t}  family={e.family}{k}")
        if summary.violations:
            print(f"violations: {len(summary.violations)}")
            for v in summary.violations:
                print(f"  {v}")
        else:
            print("violations: none")
    return 1 if summary.violations else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="totaldom",
        description="Exact total domination: solve, classify, and verify the size bound.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, json_flag=True):
        p.add_argument("--input", metavar="FILE", default=None,
                       help="graph6 file (default: stdin)")
        if json_flag:
            p.add_argument("--json", action="store_true", help="JSON output")

    p = sub.add_parser("gamma-t", help="total domination number of each input graph")
    p.add_argument("--oracle", action="store_true",
                   help="use the brute-force oracle instead of branch-and-bound")
    add_io(p)
    p.set_defaults(func=_cmd_gamma_t)

    p = sub.add_parser("atd", help="almost total domination number for an anchor vertex")
    p.add_argument("--vertex", type=int, required=True, metavar="V")
    add_io(p)
    p.set_defaults(func=_cmd_atd)

    p = sub.add_parser("classify", help="extremal family membership of each input graph")
    add_io(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("check", help="extremality report (JSON) for each input graph")
    add_io(p, json_flag=False)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("generate", help="emit a family member")
    p.add_argument("--family", required=True, choices=sorted(GENERATORS))
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("enumerate", help="all connected graphs of one order, as graph6")
    p.add_argument("--n", type=int, required=True,
                   help=f"order (1..{ENUMERATION_MAX_ORDER})")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="verify the bound and equality characterization")
    p.add_argument("--max-n", type=int, default=None,
                   help=f"enumerate orders 3..N internally (N <= {ENUMERATION_MAX_ORDER})")
    p.add_argument("--input", metavar="FILE", default=None, help="graph6 file to verify")
    p.add_argument("--jobs", type=int, default=1, metavar="J")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Graph6Error as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
