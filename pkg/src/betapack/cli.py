"""Command-line front end.

Exit codes: 0 success, 2 input error, 3 resource cap exceeded, 4 internal
invariant violation. Errors are reported on stderr as one JSON object.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import render
from .config import FORMATS, METHODS, default_cap
from .domination import alpha_domination_number, compare_parameters
from .errors import BetaPackError, CapExceededError, InputError, InvariantViolation
from .graph import Graph, generate, parse_edge_list, parse_graph6
from .packing import (
    beta_pack_number,
    enumerate_maximal_packings,
    interesting_betas,
    packing_profile,
)
from .rational import check_unit_ratio, format_ratio
from .survey import run_survey

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_INTERNAL = 0, 2, 3, 4


def load_graph(args) -> tuple[Graph, str]:
    if args.gen:
        return generate(args.gen), args.gen
    if args.edges:
        try:
            text = Path(args.edges).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read {args.edges}: {exc.strerror}") from None
        return parse_edge_list(text), args.edges
    return parse_graph6(args.graph6), args.graph6.strip()


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--gen", metavar="KIND:PARAMS", help="generator spec, e.g. path:6 or complete_bipartite:4,5")
    src.add_argument("--edges", metavar="FILE", help="edge-list file")
    src.add_argument("--graph6", metavar="STRING", help="graph6-encoded graph")


def _add_common(p: argparse.ArgumentParser, method: bool = True) -> None:
    p.add_argument("--format", choices=FORMATS, default="table")
    p.add_argument("--cap", type=int, default=None, help="exhaustive-search vertex cap")
    if method:
        p.add_argument("--method", choices=METHODS, default="branch_and_bound")


def _emit(args, payload: dict, rows, dot: str | None = None) -> None:
    if args.format == "json":
        print(render.dumps(payload))
    elif args.format == "dot" and dot is not None:
        print(dot)
    else:
        print(render.table(rows))


def cmd_pack(args) -> None:
    G, gid = load_graph(args)
    beta = check_unit_ratio(args.beta)
    res = beta_pack_number(G, beta, method=args.method, cap=args.cap)
    rows = [("graph", gid), ("n", G.n), ("beta", render.show(beta)), ("value", res.value),
            ("witness", render.fmt_set(res.witness)), ("method", res.method)]
    _emit(args, res.to_dict(), rows, render.to_dot(G, res.witness))


def cmd_profile(args) -> None:
    G, gid = load_graph(args)
    prof = packing_profile(G, cap=args.cap)
    cands = interesting_betas(G)
    payload = {"n": G.n, **prof.to_dict(), "interesting_betas": [format_ratio(b) for b in cands]}
    if args.format == "json":
        print(render.dumps(payload))
        return
    print(render.table([("graph", gid), ("n", G.n),
                        ("interesting", ", ".join(render.show(b) for b in cands))]))
    print()
    print(render.table([("beta", "value")] + render.profile_rows(prof)))


def cmd_maximal(args) -> None:
    G, gid = load_graph(args)
    beta = check_unit_ratio(args.beta)
    sets = enumerate_maximal_packings(G, beta, cap=args.cap)
    if args.format == "json":
        print(render.dumps({"n": G.n, "beta": format_ratio(beta),
                            "sets": [sorted(s) for s in sets]}))
    elif args.format == "dot":
        print("\n\n".join(render.to_dot(G, s, name=f"packing_{i}") for i, s in enumerate(sets)))
    else:
        print(render.table([("graph", gid), ("beta", render.show(beta)), ("count", len(sets))]))
        for s in sets:
            print(f"  {len(s):>3}  {render.fmt_set(s)}")


def cmd_dominate(args) -> None:
    G, gid = load_graph(args)
    alpha = check_unit_ratio(args.alpha, "alpha")
    res = alpha_domination_number(G, alpha, method=args.method, cap=args.cap)
    rows = [("graph", gid), ("n", G.n), ("alpha", render.show(alpha)), ("value", res.value),
            ("witness", render.fmt_set(res.witness)), ("method", res.method)]
    _emit(args, res.to_dict(), rows, render.to_dot(G, res.witness, ratios=False))


def cmd_compare(args) -> None:
    G, gid = load_graph(args)
    rec = compare_parameters(G, check_unit_ratio(args.value, "value"), method=args.method, cap=args.cap)
    symbol = {"less": "<", "equal": "=", "greater": ">"}[rec.verdict]
    rows = [("graph", gid), ("n", G.n), ("value", render.show(rec.value)),
            ("gamma", rec.gamma), ("pack", rec.pack), ("verdict", f"{rec.verdict} (pack {symbol} gamma)"),
            ("gamma_witness", render.fmt_set(rec.gamma_witness)),
            ("pack_witness", render.fmt_set(rec.pack_witness))]
    _emit(args, {"n": G.n, **rec.to_dict()}, rows)


def cmd_survey(args) -> None:
    values = [check_unit_ratio(v, "value") for v in args.values.split(",") if v.strip()]
    if not values:
        raise InputError("--values needs at least one ratio")
    if args.input == "-":
        summary = run_survey(sys.stdin, values, args.output, args.method, args.cap, args.jobs)
    else:
        try:
            fh = open(args.input, encoding="ascii")
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc.strerror}") from None
        with fh:
            summary = run_survey(fh, values, args.output, args.method, args.cap, args.jobs)
    payload = summary.to_dict()
    if args.format == "json":
        print(render.dumps(payload))
        return
    rows = [("records", payload["records"]), ("skipped", payload["skipped"])]
    rows += [(f"verdict {k}", v) for k, v in payload["counts"].items()]
    for key in ("max_pack_minus_gamma", "max_gamma_minus_pack"):
        ex = payload[key]
        rows.append((key, "-" if ex is None else f"{ex['diff']} ({ex['id']} at {ex['value']})"))
    print(render.table(rows))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="betapack", description="Exact beta-packing and alpha-domination numbers of small graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pack", help="beta-packing number with a witness")
    _add_graph_source(p)
    p.add_argument("--beta", required=True, help="exact ratio p/q in (0, 1]")
    _add_common(p)
    p.set_defaults(func=cmd_pack)

    p = sub.add_parser("profile", help="beta-pack as a step function of beta")
    _add_graph_source(p)
    _add_common(p, method=False)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("maximal", help="list every maximal beta-packing set")
    _add_graph_source(p)
    p.add_argument("--beta", required=True)
    _add_common(p, method=False)
    p.set_defaults(func=cmd_maximal)

    p = sub.add_parser("dominate", help="alpha-domination number with a witness")
    _add_graph_source(p)
    p.add_argument("--alpha", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_dominate)

    p = sub.add_parser("compare", help="gamma_alpha vs beta-pack at alpha = beta")
    _add_graph_source(p)
    p.add_argument("--value", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("survey", help="compare both parameters over a graph6 stream")
    p.add_argument("--input", default="-", help="graph6 file, one graph per line ('-' for stdin)")
    p.add_argument("--values", required=True, help="comma-separated ratios, e.g. 1/3,1/2")
    p.add_argument("--output", help="JSON Lines output path")
    p.add_argument("--jobs", type=int, default=1)
    _add_common(p)
    p.set_defaults(func=cmd_survey)
    return parser


def _fail(kind: str, exc: Exception, code: int) -> int:
    print(json.dumps({"error": kind, "message": str(exc)}), file=sys.stderr)
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.cap is None:
            args.cap = default_cap()
        args.func(args)
    except InvariantViolation as exc:
        return _fail("invariant_violation", exc, EXIT_INTERNAL)
    except CapExceededError as exc:
        return _fail("cap_exceeded", exc, EXIT_CAP)
    except InputError as exc:
        return _fail("input_error", exc, EXIT_INPUT)
    except BetaPackError as exc:
        return _fail("error", exc, EXIT_INTERNAL)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
