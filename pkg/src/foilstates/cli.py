"""Command-line front end.

Subcommands: poly, table, words, states, regions-geo, bijection, verify.
Exit codes: 0 success, 2 usage error, 3 domain or capacity error,
4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import arrangement as geo
from .bijection import pairing_table
from .diagram import DEFAULT_ENUMERATION_CAP, build_foil, build_twist, state_sum, states_by_components
from .errors import CapacityError, DomainError
from .polynomials import (
    poly_foil_closed,
    poly_foil_recurrence,
    poly_twist_closed,
    poly_twist_recurrence,
)
from .tables import grid_cells, to_csv, to_text, triangle_cells
from .verification import run_checks
from .words import (
    foil_two_state_words,
    new_region_codes,
    region_codes_closed,
    twist_two_state_words,
)

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY = 0, 2, 3, 4

EMPTY_TEXT = "(empty)"

WORD_SETS = {
    "twist2": twist_two_state_words,
    "foil2": foil_two_state_words,
    "regions": region_codes_closed,
    "newregions": new_region_codes,
}

EPILOG = (
    "The empty word is printed as '(empty)' in text output and as an empty "
    "string in csv and json output."
)


def _text_word(w: str) -> str:
    return w if w else EMPTY_TEXT


def _json(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def cmd_poly(args) -> str:
    if args.method == "statesum":
        cap = args.max_enumeration or DEFAULT_ENUMERATION_CAP
        diagram = build_foil(args.n) if args.kind == "foil" else build_twist(args.n)
        poly = state_sum(diagram, cap=cap)
    elif args.method == "recurrence":
        poly = (poly_foil_recurrence if args.kind == "foil" else poly_twist_recurrence)(args.n)
    else:
        poly = (poly_foil_closed if args.kind == "foil" else poly_twist_closed)(args.n)
    coeffs = list(poly.coefficients)
    if args.format == "json":
        return _json(
            {"kind": args.kind, "n": args.n, "method": args.method,
             "coefficients": [str(c) for c in coeffs]}
        )
    if args.format == "csv":
        return to_csv(["k", "coefficient"], [[str(k), str(c)] for k, c in enumerate(coeffs)])
    return f"{poly}\ncoefficients: [{','.join(map(str, coeffs))}]\n"


def cmd_table(args) -> str:
    header, rows = triangle_cells(args.kind, args.max_n)
    if args.format == "csv":
        return to_csv(header, rows)
    if args.format == "json":
        return _json(
            {"kind": args.kind, "max_n": args.max_n,
             "rows": [[c for c in row[1:] if c != ""] for row in rows]}
        )
    return to_text(header, rows, corner="n\\k")


def _render_words(words, args, extra) -> str:
    words = list(words)
    if args.format == "json":
        return _json({**extra, "words": words})
    if args.format == "csv":
        return to_csv(["word"], [[w] for w in words])
    return "".join(_text_word(w) + "\n" for w in words)


def cmd_words(args) -> str:
    words = WORD_SETS[args.which](args.n)
    return _render_words(words, args, {"set": args.which, "n": args.n})


def cmd_states(args) -> str:
    cap = args.max_enumeration or DEFAULT_ENUMERATION_CAP
    diagram = build_foil(args.n) if args.kind == "foil" else build_twist(args.n)
    words = states_by_components(diagram, args.k, cap=cap)
    return _render_words(words, args, {"kind": args.kind, "n": args.n, "components": args.k})


def cmd_regions_geo(args) -> str:
    cap = args.max_enumeration or geo.DEFAULT_ORACLE_CAP
    found = geo.region_witnesses(args.n, cap=cap)
    rows = sorted(
        (geo.signvector_to_code(v), str(pt.x), str(pt.y)) for v, pt in found.items()
    )
    if args.format == "json":
        return _json(
            {"n": args.n,
             "regions": [{"code": c, "x": x, "y": y} for c, x, y in rows]}
        )
    if args.format == "csv":
        return to_csv(["code", "x", "y"], [list(r) for r in rows])
    width = max(len(r[1]) for r in rows)
    return "".join(f"{c}  x={x:<{width}}  y={y}\n" for c, x, y in rows)


def cmd_bijection(args) -> str:
    n = args.n
    if args.layout != "pairs":
        if n < 1:
            raise DomainError("grid layouts need n >= 1")
        header, rows = grid_cells(args.layout, n)
        if args.format == "csv":
            return to_csv(header, rows)
        if args.format == "json":
            return _json({"n": n, "layout": args.layout, "rows": [r[1:] for r in rows]})
        return to_text(header, rows, corner="k\\p")
    pairs = pairing_table(n)
    if args.format == "json":
        return _json(
            {"n": n, "pairs": [{"region_code": a, "state_word": b} for a, b in pairs]}
        )
    if args.format == "csv":
        return to_csv(["region_code", "state_word"], [[a, b] for a, b in pairs])
    width = max(len(_text_word(a)) for a, _ in pairs)
    return "".join(f"{_text_word(a):>{width}} -> {b}\n" for a, b in pairs)


def cmd_verify(args) -> tuple[str, int]:
    max_n = args.max_n
    cap = args.max_enumeration or DEFAULT_ENUMERATION_CAP
    if max_n > cap:
        raise CapacityError(
            f"verify {max_n} enumerates diagrams above the enumeration cap of {cap} "
            f"(raise it with --max-enumeration)",
            cap=cap,
            flag="--max-enumeration",
        )
    results = run_checks(max_n, golden_dir=args.golden_dir)
    failed = [r for r in results if not r.ok]
    if args.format == "json":
        out = _json(
            {"max_n": max_n, "passed": not failed,
             "checks": [{"name": r.name, "ok": r.ok, "detail": r.detail,
                         "seconds": round(r.seconds, 4)} for r in results]}
        )
    elif args.format == "csv":
        out = to_csv(
            ["check", "status", "seconds", "detail"],
            [[r.name, "pass" if r.ok else "FAIL", f"{r.seconds:.3f}", r.detail] for r in results],
        )
    else:
        lines = [
            f"{'PASS' if r.ok else 'FAIL'}  {r.name:<24} {r.seconds:8.3f}s  {r.detail}".rstrip()
            for r in results
        ]
        lines.append(f"{len(results) - len(failed)}/{len(results)} checks passed")
        out = "\n".join(lines) + "\n"
    return out, EXIT_VERIFY if failed else EXIT_OK


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "csv", "json"], default=argparse.SUPPRESS)
    common.add_argument(
        "--max-enumeration", type=_positive, default=argparse.SUPPRESS,
        help=f"cap on crossings for state enumeration (default {DEFAULT_ENUMERATION_CAP}) "
        f"or on lines for regions-geo (default {geo.DEFAULT_ORACLE_CAP})",
    )
    common.add_argument("--out", metavar="FILE", default=argparse.SUPPRESS,
                        help="write output to FILE instead of stdout")

    parser = argparse.ArgumentParser(
        prog="foilstates", parents=[common], epilog=EPILOG,
        description="State enumeration of foil knots and twist loops, line-arrangement "
        "region codes, and the bijection between them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", parents=[common], help="generating polynomial")
    p.add_argument("kind", choices=["foil", "twist"])
    p.add_argument("n", type=_nonnegative)
    p.add_argument("--method", choices=["closed", "recurrence", "statesum"], default="closed")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("table", parents=[common], help="coefficient triangle for n = 0..MAX_N")
    p.add_argument("kind", choices=["foil", "twist"])
    p.add_argument("max_n", type=_nonnegative)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("words", parents=[common], epilog=EPILOG,
                       help="2-state split words or region codes")
    p.add_argument("which", choices=sorted(WORD_SETS))
    p.add_argument("n", type=_nonnegative)
    p.set_defaults(func=cmd_words)

    p = sub.add_parser("states", parents=[common],
                       help="split words with K components, by enumeration")
    p.add_argument("kind", choices=["foil", "twist"])
    p.add_argument("n", type=_nonnegative)
    p.add_argument("k", type=_positive)
    p.set_defaults(func=cmd_states)

    p = sub.add_parser("regions-geo", parents=[common],
                       help="region codes of n family lines with witness points")
    p.add_argument("n", type=_positive)
    p.set_defaults(func=cmd_regions_geo)

    p = sub.add_parser("bijection", parents=[common], epilog=EPILOG,
                       help="region code to 2-state pairing")
    p.add_argument("n", type=_nonnegative)
    p.add_argument("--layout", choices=["pairs", "regions-grid", "states-grid"], default="pairs",
                   help="list of pairs, or the k-by-p grid of codes or of their images")
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("verify", parents=[common], help="run all cross-checks")
    p.add_argument("max_n", type=_nonnegative, nargs="?", default=12,
                   help="largest crossing count for enumeration checks (default 12)")
    p.add_argument("--golden-dir", metavar="DIR", default=None,
                   help="directory with table1.csv .. table4.csv replacing the packaged copies")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("format", "text"), ("max_enumeration", None), ("out", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        result = args.func(args)
    except (DomainError, CapacityError) as exc:
        print(f"foilstates: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"foilstates: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    output, code = result if isinstance(result, tuple) else (result, EXIT_OK)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(output)
    else:
        sys.stdout.write(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
