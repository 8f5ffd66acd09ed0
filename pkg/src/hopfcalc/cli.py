"""hopfcalc command line: build, analyze, verify."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog
from .cyclotomic import ENV_CONDUCTOR_MAX
from .groups import FiniteGroup, GroupTableError
from .hopf import FiniteDimHopf, HopfAxiomError, group_algebra

EXIT_OK, EXIT_CHECKS_FAILED, EXIT_BAD_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from None


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def load_group_spec(doc) -> FiniteDimHopf:
    """{"table": [[...]], "labels": [...]} with entries as indices or labels."""
    if not isinstance(doc, dict) or "table" not in doc:
        raise InputError('group spec needs a "table" entry')
    labels = doc.get("labels")
    table = doc["table"]
    if labels and table and isinstance(table[0][0], str):
        try:
            table = [[labels.index(x) for x in row] for row in table]
        except ValueError as exc:
            raise InputError(f"table entry not among labels: {exc}") from None
    G = FiniteGroup(table, labels)
    return group_algebra(None, group=G)


def load_hopf(path: str) -> FiniteDimHopf:
    doc = _read_json(path)
    try:
        if isinstance(doc, dict) and "table" in doc and "mult" not in doc:
            return load_group_spec(doc)
        return FiniteDimHopf.from_json(doc)
    except (KeyError, TypeError, IndexError, ValueError) as exc:
        if isinstance(exc, GroupTableError):
            raise
        raise InputError(f"malformed Hopf algebra file {path}: {exc!r}") from None


def cmd_build(args) -> int:
    if args.catalog:
        H = catalog.get(args.catalog)
    else:
        H = load_group_spec(_read_json(args.group))
    _write(json.dumps(H.to_json(), sort_keys=True, indent=1) + "\n", args.out)
    return EXIT_OK


def cmd_analyze(args) -> int:
    from .report import analyze, dumps, strip_timings
    from .subnormal import sub_from_json

    if os.path.exists(args.hopf):
        H, name = load_hopf(args.hopf), os.path.basename(args.hopf)
    else:
        H, name = catalog.get(args.hopf), args.hopf
    K = None
    if args.sub:
        from .hopf import verify_hopf_axioms
        if not verify_hopf_axioms(H).ok:
            raise InputError("parent algebra fails the Hopf axioms")
        K = sub_from_json(H, _read_json(args.sub))
    report = analyze(H, K, name)
    if args.no_timings:
        report = strip_timings(report)
    _write(dumps(report), args.out)
    return EXIT_OK if report["summary"]["ok"] else EXIT_CHECKS_FAILED


def cmd_verify(args) -> int:
    from .report import dumps, run_suite, strip_timings

    algebras = None
    if args.hopf:
        algebras = {}
        for item in args.hopf:
            if os.path.exists(item):
                algebras[os.path.basename(item)] = load_hopf(item)
            else:
                algebras[item] = catalog.get(item)
    report = run_suite(args.suite, algebras)
    if args.no_timings:
        report = strip_timings(report)
    _write(dumps(report), args.out)
    s = report["summary"]
    print(f"{s['pass']} passed, {s['fail']} failed, {s['error']} errors, {s['skipped']} skipped",
          file=sys.stderr)
    return EXIT_OK if s["ok"] else EXIT_CHECKS_FAILED


def _catalog_name(value: str) -> str:
    try:
        catalog.validate_name(value)
    except catalog.UnknownCatalogEntry as exc:
        raise argparse.ArgumentTypeError(exc.args[0]) from None
    return value


def parser() -> argparse.ArgumentParser:
    from .report import SUITES

    p = argparse.ArgumentParser(prog="hopfcalc", description=__doc__)
    p.add_argument("--conductor-max", type=int, metavar="N",
                   help=f"largest cyclotomic conductor allowed (also {ENV_CONDUCTOR_MAX})")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="write a Hopf algebra as interchange JSON")
    src = b.add_mutually_exclusive_group(required=True)
    src.add_argument("--catalog", type=_catalog_name, metavar="NAME",
                     help="C2..C8, V4, S3, D4, Q8, optionally prefixed by dual: or double:")
    src.add_argument("--group", metavar="FILE", help='JSON group spec {"table": ..., "labels": ...}')
    b.add_argument("--out", metavar="FILE")
    b.set_defaults(func=cmd_build)

    a = sub.add_parser("analyze", help="integrals, characters, normality and induction data")
    a.add_argument("--hopf", required=True, metavar="FILE", help="algebra JSON, group spec, or catalog name")
    a.add_argument("--sub", metavar="FILE", help='Hopf subalgebra JSON: {"basis": ...} or {"subgroup": [...]}')
    a.add_argument("--out", metavar="FILE")
    a.add_argument("--no-timings", action="store_true", help="omit timing fields")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="run the labelled verification suites")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--hopf", nargs="+", metavar="FILE",
                   help="check these algebras instead of the catalog (per-algebra suites only)")
    v.add_argument("--out", metavar="FILE")
    v.add_argument("--no-timings", action="store_true", help="omit timing fields")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = parser().parse_args(argv)
    if args.conductor_max is not None:
        os.environ[ENV_CONDUCTOR_MAX] = str(args.conductor_max)
    from .subnormal import NotASubobject
    from .characters import NotSemisimpleError
    from .algebra import RadicalError
    try:
        return args.func(args)
    except (InputError, GroupTableError, HopfAxiomError, NotASubobject, NotSemisimpleError,
            RadicalError, catalog.UnknownCatalogEntry) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"hopfcalc: error: {msg}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
