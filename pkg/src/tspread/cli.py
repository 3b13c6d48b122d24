"""Command-line front end.

Subcommands map one-to-one onto the library: ``enumerate`` (t-spread
monomials of one degree), ``betti`` (diagram and corners of an ideal),
``construct`` (the maximal-corner witness ideal), ``table`` (maximal corner
counts over a parameter grid) and ``validate`` (brute force against closed
forms).  Exit codes: 0 success, 2 argument error, 3 domain error (bad
monomial, unstable ideal, inapplicable parameters), 4 partial results from
an exhausted search budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .betti import (
    corners_from_table,
    graded_betti,
    proj_dim,
    regularity,
    render_diagram,
)
from .construction import construct_extremal_ideal
from .errors import BudgetExceededError, TSpreadError
from .ideals import SpreadIdeal, borel_ideal
from .monomials import Context, format_monomial, parse_monomial, spread_monomials
from .oracle import (
    SearchBudget,
    cross_validate,
    regenerate_table,
    table_csv,
    table_markdown,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_PARTIAL = 4


def _parse_range(text: str) -> tuple[int, int]:
    """Inclusive range ``a:b``; a bare ``a`` means ``a:a``."""
    parts = text.split(":")
    if len(parts) == 1:
        a = b = int(parts[0])
    elif len(parts) == 2:
        a, b = int(parts[0]), int(parts[1])
    else:
        raise ValueError(f"bad range {text!r}, expected a:b")
    if a > b:
        raise ValueError(f"empty range {text!r}")
    return a, b


def _budget_from(args) -> SearchBudget:
    seconds = args.budget_seconds
    if seconds is None:
        env = os.environ.get("TSPREAD_BUDGET_SECONDS")
        seconds = float(env) if env else None
    kwargs = {"timeout": seconds}
    if args.max_ideals is not None:
        kwargs["max_ideals"] = args.max_ideals
    return SearchBudget(**kwargs)


def _load_ideal(args) -> SpreadIdeal:
    if args.ideal_file:
        with open(args.ideal_file, "r", encoding="utf-8") as fh:
            ideal = SpreadIdeal.from_json(fh.read())
    else:
        if args.gens is None:
            raise TSpreadError("provide an ideal JSON file or --gens")
        if args.n is None or args.t is None:
            raise TSpreadError("--gens requires -n and -t")
        ctx = Context(args.n, args.t)
        gens = [parse_monomial(g) for g in args.gens.split(",") if g.strip()]
        ideal = SpreadIdeal.from_generators(ctx, gens)
    if getattr(args, "borel", False):
        ideal = borel_ideal(ideal.all_generators(), ideal.ctx)
    return ideal


def cmd_enumerate(args) -> int:
    ctx = Context(args.n, args.t)
    mons = spread_monomials(ctx, args.d)
    if args.count:
        print(len(mons))
    elif args.format == "json":
        print(json.dumps([list(u) for u in mons]))
    else:
        for u in mons:
            print(format_monomial(u))
    return EXIT_OK


def _corner_lines(corners) -> list[str]:
    if not corners.corners:
        return ["corners: none"]
    return [
        "corners: " + ", ".join(f"({k}, {l})" for k, l in corners.corners),
        "values: " + ", ".join(str(v) for v in corners.values),
    ]


def cmd_betti(args) -> int:
    ideal = _load_ideal(args)
    table = graded_betti(ideal)
    corners = corners_from_table(table)
    if args.format == "json":
        payload = {
            "betti": json.loads(table.to_json()),
            "corners": json.loads(corners.to_json()),
        }
        if not table.is_empty:
            payload["regularity"] = regularity(table)
            payload["proj_dim"] = proj_dim(table)
        print(json.dumps(payload))
        return EXIT_OK
    diagram = render_diagram(table)
    if diagram:
        print(diagram)
        print()
    for line in _corner_lines(corners):
        print(line)
    if not table.is_empty:
        print(f"regularity: {regularity(table)}")
        print(f"projective dimension: {proj_dim(table)}")
    return EXIT_OK


def cmd_construct(args) -> int:
    ideal, report = construct_extremal_ideal(args.n, args.t, args.l)
    if args.format == "json":
        payload = json.loads(report.to_json())
        payload["gens"] = [list(u) for u in ideal.all_generators()]
        print(json.dumps(payload))
        return EXIT_OK
    d, k = report.decomp.d, report.decomp.k
    note = " (small-k regime)" if report.regime == "small-k" else ""
    print(f"n={args.n} t={args.t} ell1={args.l}: n = {d} + {k}*{args.t}{note}")
    plural = "monomial" if report.total == 1 else "monomials"
    print(f"j_max={report.j_max} s={report.s} nu_max={report.nu_max}; "
          f"{report.total} {plural}, "
          + (f"critic at index {report.critic_index}" if report.critic_index
             else "no critic monomial"))
    for j, w in enumerate(report.omegas):
        print(f"omega_{j} = {format_monomial(w)}")
    for line in _corner_lines(report.predicted_corners):
        print(line)
    sizes = ", ".join(f"{len(ideal.gens[dd])} in degree {dd}"
                      for dd in sorted(ideal.gens))
    print(f"minimal generators: {sizes}")
    return EXIT_OK


def cmd_table(args) -> int:
    budget = _budget_from(args)
    cells = regenerate_table(args.t, args.n, args.l, budget,
                             brute_force_upto=args.brute_force_upto)
    if args.format == "csv":
        print(table_csv(cells))
    elif args.format == "json":
        print(json.dumps([
            {"t": c.t, "n": c.n, "ell1": c.ell1, "value": c.value,
             "provenance": c.provenance, "partial": c.partial}
            for c in cells
        ]))
    else:
        print(table_markdown(cells))
    return EXIT_PARTIAL if any(c.partial for c in cells) else EXIT_OK


def cmd_validate(args) -> int:
    budget = _budget_from(args)
    report = cross_validate(args.n, args.t, args.l, budget)
    print(report.to_json_lines())
    if not report.ok:
        return 1
    if report.partial:
        return EXIT_PARTIAL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tspread",
        description="t-spread strongly stable ideals: enumeration, Betti "
                    "numbers, extremal corners",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list M_{n,d,t} in slex order")
    p.add_argument("-n", type=int, required=True, help="number of variables")
    p.add_argument("-t", type=int, required=True, help="spread t")
    p.add_argument("-d", type=int, required=True, help="degree")
    p.add_argument("--count", action="store_true", help="print only the count")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("betti", help="Betti diagram and corners of an ideal")
    p.add_argument("ideal_file", nargs="?", help="ideal as JSON")
    p.add_argument("--gens", help='inline generators, e.g. "x1*x14,x2*x5*x14"')
    p.add_argument("-n", type=int, help="number of variables (with --gens)")
    p.add_argument("-t", type=int, help="spread t (with --gens)")
    p.add_argument("--borel", action="store_true",
                   help="take the Borel closure of the input generators first")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("construct", help="maximal-corner witness ideal")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-t", type=int, required=True)
    p.add_argument("-l", type=int, default=2, help="initial degree (default 2)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("table", help="maximal corner counts over a grid")
    p.add_argument("-t", type=int, required=True)
    p.add_argument("--n", type=_parse_range, required=True, metavar="A:B")
    p.add_argument("--l", type=_parse_range, required=True, metavar="A:B")
    p.add_argument("--brute-force-upto", type=int, default=0, metavar="N",
                   help="verify cells with n <= N by exhaustive enumeration")
    p.add_argument("--budget-seconds", type=float, default=None)
    p.add_argument("--max-ideals", type=int, default=None)
    p.add_argument("--format", choices=["text", "json", "markdown", "csv"],
                   default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("validate", help="cross-validate oracle vs formulas")
    p.add_argument("--n", type=_parse_range, required=True, metavar="A:B")
    p.add_argument("--t", type=_parse_range, required=True, metavar="A:B")
    p.add_argument("--l", type=_parse_range, required=True, metavar="A:B")
    p.add_argument("--budget-seconds", type=float, default=None)
    p.add_argument("--max-ideals", type=int, default=None)
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # argparse exits 2 on bad arguments
    try:
        return args.func(args)
    except TSpreadError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except BudgetExceededError as exc:
        print(f"partial: {exc}", file=sys.stderr)
        return EXIT_PARTIAL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
