"""``autjac`` command line.

Exit codes: 0 success, 1 inadmissible or impossible input, 2 internal
verification failure, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    InexactDivision,
    NonCyclotomicFactor,
    NonIntegralCoefficient,
    TheoremError,
    VerificationFailure,
)
from .exactpoly import Poly, pretty
from .numtheory import cyclotomic
from .oracle import check_genus, verify_range
from .spectrum import profile_from_poly
from .theorem import RamConfig, charpoly_cases, classify, inertia_options, quotient_genus

SCHEMA = "autjac/1"
EXIT_OK, EXIT_INPUT, EXIT_INTERNAL, EXIT_USAGE = 0, 1, 2, 64

# row order of the published genus-2 table
GENUS2_ROWS = [(1, 1), (2, 1), (2, 2), (3, 3), (4, 2), (5, 5), (6, 3), (6, 6), (8, 4), (10, 5)]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def factored(f: Poly, n: int) -> list[list[int]]:
    return [[d, k] for d, k in profile_from_poly(f, n).exponents()]


def pretty_factored(f: Poly, n: int) -> str:
    parts = []
    exps = profile_from_poly(f, n).exponents()
    for d, k in exps:
        body = pretty(cyclotomic(d))
        if len(exps) == 1 and k == 1:
            return body
        parts.append(f"({body})" + (f"^{k}" if k > 1 else ""))
    return "".join(parts) or "1"


def _charpoly_record(res, with_factored=True) -> dict:
    t = res.triple
    rec = {
        "schema": SCHEMA,
        "genus": t.g,
        "order": t.n,
        "reduced_order": t.nbar,
        "case": res.case.tag,
        "ambiguous": res.ambiguous,
        "candidates": [f.to_list() for f in res.candidates],
    }
    if with_factored:
        rec["factored"] = [factored(f, t.n) for f in res.candidates]
    return rec


def _entry(n, nbar, res) -> dict:
    return {
        "order": n,
        "reduced_order": nbar,
        "case": res.case.tag,
        "candidates": [f.to_list() for f in res.candidates],
    }


def classify_record(g: int, witness: bool = False) -> dict:
    seen = set(check_genus(g).witnessed[g]) if witness else None
    entries = []
    for n, nbar, res in classify(g):
        e = _entry(n, nbar, res)
        if witness:
            e["witnessed"] = (n, nbar) in seen
        entries.append(e)
    return {"schema": SCHEMA, "genus": g, "entries": entries}


def table_genus2_record() -> dict:
    by_pair = {(n, nbar): res for n, nbar, res in classify(2)}
    return {"schema": SCHEMA, "genus": 2, "entries": [_entry(n, nbar, by_pair[(n, nbar)]) for n, nbar in GENUS2_ROWS]}


def entries_from_record(rec: dict) -> list[tuple[int, int, tuple[Poly, ...]]]:
    """Parse a classify-style record back into ``(n, nbar, candidates)`` triples."""
    if rec.get("schema") != SCHEMA:
        raise ValueError(f"unexpected schema {rec.get('schema')!r}")
    return [
        (e["order"], e["reduced_order"], tuple(Poly.from_list(c) for c in e["candidates"]))
        for e in rec["entries"]
    ]


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=False))


def cmd_charpoly(args) -> int:
    res = charpoly_cases(args.genus, args.order, args.reduced_order)
    if args.format == "json":
        _emit(_charpoly_record(res))
    elif args.format == "factored":
        rec = _charpoly_record(res)
        rec["profiles"] = [profile_from_poly(f, args.order).to_json() for f in res.candidates]
        _emit(rec)
    else:
        head = f"g={args.genus} n={args.order} nbar={args.reduced_order} case {res.case.tag}"
        print(head + (" (two possibilities)" if res.ambiguous else ""))
        for f in res.candidates:
            print(f"  {pretty_factored(f, args.order)}  =  {pretty(f)}")
    return EXIT_OK


def cmd_classify(args) -> int:
    rec = classify_record(args.genus, witness=args.witness)
    if args.format == "json":
        _emit(rec)
    else:
        for e in rec["entries"]:
            polys = " or ".join(pretty_factored(Poly.from_list(c), e["order"]) for c in e["candidates"])
            tag = "" if "witnessed" not in e else ("  [witnessed]" if e["witnessed"] else "  [not witnessed]")
            print(f"({e['order']},{e['reduced_order']})  {e['case']:<2}  {polys}{tag}")
    return EXIT_OK


def cmd_table_genus2(args) -> int:
    rec = table_genus2_record()
    if args.format == "json":
        _emit(rec)
    else:
        for e in rec["entries"]:
            f = Poly.from_list(e["candidates"][0])
            print(f"{'(%d,%d)' % (e['order'], e['reduced_order']):<8} {pretty_factored(f, e['order'])}")
    return EXIT_OK


def cmd_quotient_genus(args) -> int:
    try:
        h = quotient_genus(RamConfig(args.genus, args.order, args.common_ram, args.char))
    except TheoremError as exc:
        _emit({"schema": SCHEMA, "error": str(exc)})
        return EXIT_INPUT
    _emit({"schema": SCHEMA, "h": h})
    return EXIT_OK


def cmd_inertia(args) -> int:
    _emit({"schema": SCHEMA, "options": sorted(inertia_options(args.parity, args.char))})
    return EXIT_OK


def cmd_verify(args) -> int:
    rep = verify_range(args.from_genus, args.to_genus, jobs=args.jobs, strict=False)
    _emit(rep.to_json())
    return EXIT_OK if rep.ok else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="autjac", description="Characteristic polynomials of hyperelliptic curve automorphisms.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("charpoly", help="polynomial(s) for a triple (g, n, nbar)")
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--reduced-order", type=int, required=True)
    s.add_argument("--format", choices=["json", "text", "factored"], default="json")
    s.set_defaults(func=cmd_charpoly)

    s = sub.add_parser("classify", help="all admissible (n, nbar) for a genus")
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--witness", action="store_true", help="mark pairs realized by an explicit rotation model")
    s.add_argument("--format", choices=["json", "text"], default="json")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("table-genus2", help="the genus-2 table")
    s.add_argument("--format", choices=["json", "text"], default="json")
    s.set_defaults(func=cmd_table_genus2)

    s = sub.add_parser("quotient-genus", help="genus of C/<beta>")
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--common-ram", type=int, required=True)
    s.add_argument("--char", choices=["not-two", "two"], required=True)
    s.set_defaults(func=cmd_quotient_genus)

    s = sub.add_parser("inertia", help="possible inertia groups")
    s.add_argument("--parity", choices=["odd", "even"], required=True)
    s.add_argument("--char", choices=["not-two", "two"], required=True)
    s.set_defaults(func=cmd_inertia)

    s = sub.add_parser("verify", help="check the formulas against the point-counting oracle")
    s.add_argument("--from", dest="from_genus", type=int, required=True)
    s.add_argument("--to", dest="to_genus", type=int, required=True)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TheoremError as exc:
        _emit({"schema": SCHEMA, "error": str(exc)})
        return EXIT_INPUT
    except (VerificationFailure, NonIntegralCoefficient, NonCyclotomicFactor, InexactDivision) as exc:
        _emit({"schema": SCHEMA, "error": f"internal: {exc}"})
        return EXIT_INTERNAL
    except ValueError as exc:
        print(f"autjac: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
