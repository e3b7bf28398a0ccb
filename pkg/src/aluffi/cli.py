"""Command-line entry point.

Exit codes are shared by every command: 0 torsion-free (or all items
agree), 1 not torsion-free (or some disagreement), 2 inconclusive, and
3 and up for errors (see the EXIT_* constants).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .aluffi import INCONCLUSIVE, NOT_TORSION_FREE, TORSION_FREE, ContainmentError, aluffi_torsion_free
from .graphs import (
    EdgelessGraphError,
    Graph,
    graph_oracle,
    is_graph_atf,
    parse_family,
    theorem34_witness,
    vertex_cover_number,
    worker_count,
)
from .ideals import Ideal, hilbert_series, graded_dimensions, jacobian_ideal
from .pencil import PencilSpec, predicted_atf, predicted_height, verify_theorem24
from .polyring import PolynomialSyntaxError
from .reproduce import TOPICS, ComputationTimeout, reproduce, time_limit

EXIT_TF = 0
EXIT_NOT_TF = 1
EXIT_INCONCLUSIVE = 2
EXIT_PARSE = 3
EXIT_CONTAINMENT = 4
EXIT_INPUT = 5

_STATUS_EXIT = {TORSION_FREE: EXIT_TF, NOT_TORSION_FREE: EXIT_NOT_TF, INCONCLUSIVE: EXIT_INCONCLUSIVE}


class ParseFailure(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise ParseFailure(f"cannot read {path}: {exc.strerror}") from None


def _load_ideal(path: str, ring=None) -> Ideal:
    try:
        return Ideal.from_text(_read(path), ring)
    except (PolynomialSyntaxError, ValueError) as exc:
        raise ParseFailure(f"{path}: {exc}") from None


def _load_graph(source: str) -> Graph:
    if os.path.exists(source):
        text = _read(source)
        try:
            return Graph.from_text(text)
        except ValueError as exc:
            raise ParseFailure(f"{source}: {exc}") from None
    try:
        return parse_family(source)
    except (ValueError, TypeError) as exc:
        raise ParseFailure(f"{source!r} is neither a graph file nor a family like cycle:5 ({exc})") from None


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _timed_out(args, what: str) -> int:
    payload = {"status": INCONCLUSIVE, "reason": f"timeout after {args.timeout}s"}
    _emit(args, payload, f"Inconclusive ({what} timed out after {args.timeout}s)")
    return EXIT_INCONCLUSIVE


# --------------------------------------------------------------------------
# commands


def cmd_check(args) -> int:
    J = _load_ideal(args.J)
    if args.jacobian == (args.I is not None):
        raise ParseFailure("give either an ideal file for I or --jacobian")
    try:
        with time_limit(args.timeout):
            I = jacobian_ideal(J) if args.jacobian else _load_ideal(args.I, J.ring)
            verdict = aluffi_torsion_free(J, I, max_t=args.max_t, certify=args.certify, method=args.method)
    except ComputationTimeout:
        return _timed_out(args, "check")
    payload = verdict.to_dict()
    if args.jacobian:
        payload["I"] = [str(g) for g in I.generators]
    _emit(args, payload, str(verdict))
    return _STATUS_EXIT[verdict.status]


def cmd_graph(args) -> int:
    G = _load_graph(args.graph)
    r = vertex_cover_number(G)
    atf = is_graph_atf(G)
    w = theorem34_witness(G) if r > 1 else None
    payload = {"vertices": G.num_vertices, "edges": [list(e) for e in G.edges], "cover_number": r,
               "atf": atf, "witness": None}
    lines = [f"cover number {r}"]
    if w is not None:
        payload["witness"] = {"x1": w.x1, "x2": w.x2, "S": list(w.S)}
        lines.append(f"not ATF, witness {w}")
    elif r == 1:
        lines.append("not ATF (star: cover number 1)")
    else:
        lines.append("ATF")
    if args.oracle:
        try:
            with time_limit(args.timeout):
                verdict = graph_oracle(G)
        except ComputationTimeout:
            return _timed_out(args, "oracle")
        agree = verdict.is_torsion_free == atf
        payload["oracle"] = verdict.to_dict()
        payload["agree"] = agree
        lines.append(f"oracle: {verdict} ({'agrees' if agree else 'DISAGREES'})")
    _emit(args, payload, "\n".join(lines))
    return EXIT_TF if atf else EXIT_NOT_TF


def cmd_pencil(args) -> int:
    try:
        spec = PencilSpec.parse(args.spec)
    except ValueError as exc:
        raise ParseFailure(str(exc)) from None
    h = predicted_height(spec)
    payload: dict = {"spec": str(spec), "columns": spec.columns, "variables": spec.num_vars,
                     "predicted_height": h, "predicted_atf": None}
    lines = [f"{spec}: {spec.columns} columns, {spec.num_vars} variables", f"predicted height {h}"]
    if h > 1:
        payload["predicted_atf"] = predicted_atf(spec)
        lines.append(f"predicted torsion-free: {payload['predicted_atf']}")
    else:
        lines.append("height at most 1: the block criterion does not apply")
    code = EXIT_INCONCLUSIVE if h <= 1 else (EXIT_TF if payload["predicted_atf"] else EXIT_NOT_TF)
    if args.verify:
        try:
            with time_limit(args.timeout):
                rec = verify_theorem24(spec)
        except ComputationTimeout:
            return _timed_out(args, "verification")
        payload["verify"] = {"r": rec.r, "a": rec.a, "b": rec.b, "c": rec.c,
                             "consistent": rec.consistent, "verdict": rec.verdict.to_dict()}
        lines.append(f"computed height {rec.r}")
        lines.append(f"(a) I_r equals m^r: {rec.a}")
        lines.append(f"(b) block criterion: {rec.b}")
        lines.append(f"(c) {rec.verdict}")
        lines.append("consistent" if rec.consistent else "INCONSISTENT")
        code = _STATUS_EXIT[rec.verdict.status]
    _emit(args, payload, "\n".join(lines))
    return code


def cmd_hilbert(args) -> int:
    A = _load_ideal(args.ideal)
    hs = hilbert_series(A)
    payload = {"series": str(hs), "numerator": list(hs.numerator), "denominator_exponent": hs.denominator_exponent}
    text = str(hs)
    if args.up_to is not None:
        dims = graded_dimensions(A, args.up_to)
        payload["dimensions"] = dims
        text += "\n" + " ".join(str(d) for d in dims)
    _emit(args, payload, text)
    return 0


def cmd_reproduce(args) -> int:
    workers = args.workers or worker_count()
    report = reproduce(args.section or None, timeout=args.timeout, workers=workers)
    if args.json:
        print(report.to_json())
    else:
        print(report.render())
    return EXIT_TF if report.ok else EXIT_NOT_TF


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="aluffi", description="Aluffi torsion-free checks for pairs of ideals.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--timeout", type=float, default=None, help="seconds per computation")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="decide whether J inside I is torsion-free")
    c.add_argument("J", help="ideal file for J")
    c.add_argument("I", nargs="?", help="ideal file for I")
    c.add_argument("--jacobian", action="store_true", help="use the Jacobian ideal of J as I")
    c.add_argument("--max-t", type=int, default=None)
    c.add_argument("--certify", action=argparse.BooleanOptionalAction, default=True,
                   help="derive a bound and decide (default); --no-certify only runs t up to --max-t")
    c.add_argument("--method", default="auto", choices=["auto", "degree", "squarefree-quadratic", "relation-type"])
    c.set_defaults(func=cmd_check)

    g = sub.add_parser("graph", parents=[common], help="combinatorial verdict for a graph")
    g.add_argument("graph", help="graph file or family such as cycle:5, kmm:6,3")
    g.add_argument("--oracle", action="store_true", help="also run the algebraic test")
    g.set_defaults(func=cmd_graph)

    q = sub.add_parser("pencil", parents=[common], help="block-form pencil report")
    q.add_argument("spec", help='e.g. "N(2) J(2;0) S(3)"')
    q.add_argument("--verify", action="store_true", help="compute all three conditions")
    q.set_defaults(func=cmd_pencil)

    h = sub.add_parser("hilbert", parents=[common], help="Hilbert series of R/A")
    h.add_argument("ideal", help="ideal file")
    h.add_argument("--up-to", type=int, default=None, help="also list graded dimensions 0..N")
    h.set_defaults(func=cmd_hilbert)

    r = sub.add_parser("reproduce-paper", parents=[common], help="rerun the worked examples")
    r.add_argument("--section", action="append", choices=TOPICS, help="restrict to a topic (repeatable)")
    r.add_argument("--workers", type=int, default=None, help="process count (default from ALUFFI_WORKERS)")
    r.set_defaults(func=cmd_reproduce)
    return p


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseFailure as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ContainmentError as exc:
        print(f"containment error: {exc}", file=sys.stderr)
        return EXIT_CONTAINMENT
    except (ValueError, EdgelessGraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
