"""Command-line front end.

Exit codes: 0 success (or isomorphic), 1 negative decision, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional

from . import algebra as alg
from .algebra import Algebra, StructureMatrix
from .catalog import CATALOG, parse_literal
from .classify import FLAG_NAMES, ClassificationReport, classify, paper_name
from .errors import ParseError, UnknownFilter, UnknownName
from .gf2 import rank_4x2
from .iso import are_isomorphic, canonical_form, orbit_of

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


def _bool(v: bool) -> str:
    return "true" if v else "false"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _names_for(sm: StructureMatrix) -> list[str]:
    return [n for n, m in CATALOG.items() if m == sm]


def check_report(sm: StructureMatrix) -> dict:
    A = Algebra(sm)
    unit = alg.unit_element(A)
    return {
        "code": sm.code,
        "literal": str(sm),
        "names": _names_for(sm),
        "ec": alg.is_endo_commutative_oracle(A),
        "curled": alg.is_curled(A),
        "straight": alg.is_straight(A),
        "commutative": alg.is_commutative(A),
        "associative": alg.is_associative(A),
        "unital": unit is not None,
        "unit": str(unit) if unit is not None else None,
        "zeropotent": alg.is_zeropotent(A),
        "anticommutative": alg.is_anticommutative(A),
        "square_rootable": alg.is_square_rootable(A),
        "rank": rank_4x2(sm),
        "canonical_code": canonical_form(sm).code,
        "paper_name": paper_name(sm),
    }


def table_entries(sm: StructureMatrix) -> list[list[str]]:
    return [[str(v) for v in row] for row in Algebra(sm).table()]


def render_check(d: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(d, indent=2) + "\n"
    if fmt == "csv":
        flat = {**d, "names": " ".join(d["names"])}
        return _csv(list(flat), [[_fmt_cell(v) for v in flat.values()]])
    lines = []
    for k, v in d.items():
        if k == "names":
            v = ", ".join(v) or "-"
        lines.append(f"{k}: {_fmt_cell(v)}")
    return "\n".join(lines) + "\n"


def _fmt_cell(v) -> str:
    if isinstance(v, bool):
        return _bool(v)
    if v is None:
        return "-"
    return str(v)


def render_report(report: ClassificationReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2) + "\n"
    header = ["canonical_code", "representative", "paper_name", "size", "rank",
              *FLAG_NAMES, "members"]
    rows = [
        [c.canonical_code, c.representative, c.paper_name or "", c.size, c.rank,
         *(_bool(c.properties[k]) for k in FLAG_NAMES),
         " ".join(map(str, c.members))]
        for c in report.classes
    ]
    if fmt == "csv":
        return _csv(header, rows)
    out = [f"family: {report.family}  matrices: {report.family_size}  classes: {len(report.classes)}"]
    short = ["canon", "rep", "name", "size", "rank", "EC", "curl", "comm", "assoc",
             "unit", "zero", "anti", "sqrt", "members"]
    widths = [5, 4, 8, 4, 4, 5, 5, 5, 5, 5, 5, 5, 5, 0]
    fmt_row = lambda cells: "  ".join(str(s).ljust(w) for s, w in zip(cells, widths)).rstrip()
    out.append(fmt_row(short))
    for row in rows:
        flags = ["y" if v == "true" else "." for v in row[5:5 + len(FLAG_NAMES)]]
        out.append(fmt_row([*row[:5], *flags, row[-1]]))
    return "\n".join(out) + "\n"


def render_table(label: str, sm: StructureMatrix, fmt: str) -> str:
    entries = table_entries(sm)
    if fmt == "json":
        return json.dumps({"name": label, "code": sm.code, "table": entries}, indent=2) + "\n"
    if fmt == "csv":
        return _csv(["left", "right_e", "right_f"],
                    [["e", *entries[0]], ["f", *entries[1]]])
    width = max(len(s) for row in entries for s in row)
    body = ["  ".join(s.ljust(width) for s in row).rstrip() for row in entries]
    return f"{label}  {sm}\n" + "\n".join(body) + "\n"


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_check(args) -> int:
    _emit(render_check(check_report(parse_literal(args.algebra)), args.format), args.out)
    return EXIT_OK


def cmd_iso(args) -> int:
    a, b = parse_literal(args.a), parse_literal(args.b)
    w = are_isomorphic(a, b)
    if args.format == "json":
        text = json.dumps({"a": a.code, "b": b.code, "isomorphic": w is not None,
                           "X": w.X.rows() if w else None}) + "\n"
    elif args.format == "csv":
        text = _csv(["a", "b", "isomorphic", "X"],
                    [[a.code, b.code, _bool(w is not None), str(w.X) if w else ""]])
    else:
        text = f"X={w.X}\n" if w else "NOT-ISOMORPHIC\n"
    _emit(text, args.out)
    return EXIT_OK if w else EXIT_NEGATIVE


def cmd_canon(args) -> int:
    sm = parse_literal(args.algebra)
    orbit = orbit_of(sm)
    canon = StructureMatrix(orbit.canonical)
    d = {"code": sm.code, "canonical_code": canon.code, "canonical_literal": str(canon),
         "orbit": sorted(orbit.members), "paper_name": paper_name(sm)}
    if args.format == "json":
        text = json.dumps(d, indent=2) + "\n"
    elif args.format == "csv":
        text = _csv(list(d), [[_fmt_cell(v) if not isinstance(v, list)
                               else " ".join(map(str, v)) for v in d.values()]])
    else:
        text = "".join(f"{k}: {_fmt_cell(v) if not isinstance(v, list) else ' '.join(map(str, v))}\n"
                       for k, v in d.items())
    _emit(text, args.out)
    return EXIT_OK


def cmd_classify(args) -> int:
    _emit(render_report(classify(args.family), args.format), args.out)
    return EXIT_OK


def cmd_table(args) -> int:
    name = args.name
    if name in CATALOG:
        sm = CATALOG[name]
    else:
        try:
            sm = parse_literal(name)
        except ParseError:
            raise UnknownName(f"unknown algebra name: {name!r}") from None
    _emit(render_table(name, sm, args.format), args.out)
    return EXIT_OK


def cmd_list(args) -> int:
    rows = [[name, sm.code, str(sm)] for name, sm in CATALOG.items()]
    if args.format == "json":
        text = json.dumps([{"name": n, "code": c, "literal": l} for n, c, l in rows], indent=2) + "\n"
    elif args.format == "csv":
        text = _csv(["name", "code", "literal"], rows)
    else:
        text = "".join(f"{n:<8} #{c:<4} {l}\n" for n, c, l in rows)
    _emit(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    p = argparse.ArgumentParser(
        prog="endocomm",
        description="Two-dimensional algebras over F2: properties, isomorphism, classification.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="property report for one algebra")
    s.add_argument("algebra")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("iso", parents=[common], help="decide isomorphism, print a witness")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("canon", parents=[common], help="canonical form and orbit")
    s.add_argument("algebra")
    s.set_defaults(func=cmd_canon)

    s = sub.add_parser("classify", parents=[common], help="classify a family into isomorphism classes")
    s.add_argument("--family", default="ec-all",
                   help="ec-curled | ec-straight-normalized | ec-straight | ec-all | all")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("table", parents=[common], help="multiplication table of a named algebra")
    s.add_argument("name")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("list", parents=[common], help="dump the catalog of named algebras")
    s.set_defaults(func=cmd_list)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UnknownName, UnknownFilter) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
