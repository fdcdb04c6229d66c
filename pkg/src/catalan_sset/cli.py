"""Command-line interface: counting, enumeration, catalogue, verification, export.

Exit status: 0 when every check passes, 1 when a mathematical verdict
fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import tamari
from .bicats import PosetalMonoidalBicat
from .catalan import (
    CatalanSet,
    DEFAULT_COUNT_BOUND,
    HARD_LEVEL_BOUND,
    enumerate_level,
    level_export,
    matrix_is_degenerate,
    nondegenerate_count,
    reference_counts,
)
from .catalogue import catalogue, verify_catalogue
from .classify import verify_monad_remark, verify_theorem
from .errors import CatalanSetError
from .inputs import resolve_input
from .nerve import BicatNerve, MonoidalNerve

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _level_arg(parser: argparse.ArgumentParser, value: str, ceiling: int = HARD_LEVEL_BOUND) -> int:
    try:
        n = int(value)
    except ValueError:
        parser.error(f"level {value!r} is not an integer")
    if n < 0 or n > ceiling:
        parser.error(f"level {n} outside 0..{ceiling}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catalan-sset",
        description="Counting, catalogue and classification checks for the Catalan simplicial set.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("count", help="level counts against the closed-form references")
    p.add_argument("--max-n", default=str(DEFAULT_COUNT_BOUND))
    p.add_argument("--format", choices=("table", "json"), default="table")

    p = sub.add_parser("enumerate", help="print one level in canonical order")
    p.add_argument("--n", required=True)

    sub.add_parser("catalogue", help="print the named simplices and verify them")

    p = sub.add_parser("verify-identities", help="simplicial identity harness")
    p.add_argument("--input", help="run on the nerve of this input instead of the Catalan set")
    p.add_argument("--max-n", default=None)

    p = sub.add_parser("verify-theorem", help="maps out of the Catalan set vs internal structures")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output")

    p = sub.add_parser("verify-monads", help="maps into a plain nerve vs monads")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output")

    p = sub.add_parser("order-probe", help="inclusion and rotation order preservation")
    p.add_argument("--n", default="3")

    p = sub.add_parser("export", help="write a level as deterministic JSON")
    p.add_argument("--what", choices=("catalan",), default="catalan")
    p.add_argument("--n", required=True)
    p.add_argument("--output", required=True)

    return parser


def _cmd_count(args, parser) -> int:
    max_n = _level_arg(parser, args.max_n)
    cat_ref, motzkin_ref = reference_counts(max_n)
    rows = []
    all_ok = True
    for n in range(max_n + 1):
        enumerated = len(enumerate_level(n))
        nondeg = nondegenerate_count(n)
        paths = tamari.dyck_crosscheck(n)
        ok = enumerated == cat_ref[n] == paths and nondeg == motzkin_ref[n]
        all_ok = all_ok and ok
        rows.append((n, enumerated, cat_ref[n], paths, nondeg, motzkin_ref[n], ok))
    if args.format == "json":
        doc = [
            {
                "n": n,
                "simplices": enum,
                "catalan": ref,
                "paths": paths,
                "nondegenerate": nd,
                "motzkin": mref,
                "match": ok,
            }
            for (n, enum, ref, paths, nd, mref, ok) in rows
        ]
        print(json.dumps(doc, sort_keys=True))
    else:
        print(f"{'n':>3} {'simplices':>10} {'catalan':>10} {'paths':>10} "
              f"{'nondeg':>8} {'motzkin':>8}  match")
        for (n, enum, ref, paths, nd, mref, ok) in rows:
            print(
                f"{n:>3} {enum:>10} {ref:>10} {paths:>10} {nd:>8} {mref:>8}  "
                + ("ok" if ok else "MISMATCH")
            )
    return EXIT_OK if all_ok else EXIT_FAIL


def _cmd_enumerate(args, parser) -> int:
    n = _level_arg(parser, args.n)
    sims = enumerate_level(n)
    print(f"n={n} count={len(sims)}")
    for x in sims:
        word = "".join(map(str, x.bit_tuple()))
        marker = "." if matrix_is_degenerate(x) else "*"
        print(f"{word or '-'} {marker}")
    return EXIT_OK


def _cmd_catalogue(args, parser) -> int:
    for ns in catalogue():
        faces = ", ".join(ns.face_labels) if ns.faces else "-"
        word = "".join(map(str, ns.matrix.bit_tuple())) or "-"
        print(f"{ns.name:>4}  level {ns.level}  bits {word:<10}  faces ({faces})")
    report = verify_catalogue()
    print(report.summary())
    return EXIT_OK if report.ok else EXIT_FAIL


def _cmd_verify_identities(args, parser) -> int:
    if args.input:
        max_n = _level_arg(parser, args.max_n if args.max_n is not None else "4")
        obj = resolve_input(args.input)
        if isinstance(obj, PosetalMonoidalBicat):
            space = MonoidalNerve(obj, top_level=max_n)
            label = "monoidal nerve"
        elif hasattr(obj, "objects"):
            space = BicatNerve(obj, top_level=max_n)
            label = "nerve"
        else:
            from .bicats import embed

            space = MonoidalNerve(embed(obj), top_level=max_n)
            label = "monoidal nerve of the embedded poset"
    else:
        max_n = _level_arg(parser, args.max_n if args.max_n is not None else "5")
        space = CatalanSet(top_level=max_n)
        label = "catalan set"
    report = space.verify_simplicial_identities(max_n)
    print(f"{label}: {report.summary()}")
    return EXIT_OK if report.ok else EXIT_FAIL


def _report_out(report, args) -> int:
    if args.format == "json":
        text = report.to_json_text()
    else:
        text = report.summary() + "\n"
    sys.stdout.write(text)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(report.to_json_text())
    return EXIT_OK if report.ok else EXIT_FAIL


def _cmd_verify_theorem(args, parser) -> int:
    obj = resolve_input(args.input)
    if not isinstance(obj, PosetalMonoidalBicat):
        if hasattr(obj, "elements"):
            from .bicats import embed

            obj = embed(obj)
        else:
            parser.error("verify-theorem needs a monoidal input")
    report = verify_theorem(obj, input_name=args.input)
    return _report_out(report, args)


def _cmd_verify_monads(args, parser) -> int:
    obj = resolve_input(args.input)
    if hasattr(obj, "elements"):
        from .bicats import embed

        obj = embed(obj)
    report = verify_monad_remark(obj, input_name=args.input)
    return _report_out(report, args)


def _cmd_order_probe(args, parser) -> int:
    n = _level_arg(parser, args.n, ceiling=HARD_LEVEL_BOUND - 1)
    report = tamari.order_probe(n)
    print(report.summary())
    return EXIT_OK if report.inclusion_ok else EXIT_FAIL


def _cmd_export(args, parser) -> int:
    n = _level_arg(parser, args.n)
    doc = level_export(n)
    text = json.dumps(doc, sort_keys=True) + "\n"
    try:
        if args.output == "-":
            sys.stdout.write(text)
        else:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


_DISPATCH = {
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "catalogue": _cmd_catalogue,
    "verify-identities": _cmd_verify_identities,
    "verify-theorem": _cmd_verify_theorem,
    "verify-monads": _cmd_verify_monads,
    "order-probe": _cmd_order_probe,
    "export": _cmd_export,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.verb](args, parser)
    except CatalanSetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
