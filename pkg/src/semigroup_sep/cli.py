"""Command-line entry point.

Exit codes: 0 pass, 1 violation, 2 vacuous only, 3 input error, 4 usage error.
"""

from __future__ import annotations

import argparse
import gzip
import json
import logging
import sys
from pathlib import Path
from typing import Any

from . import green, order2, predicates, verify
from .analysis import Analysis
from .core import CayleyTable, TableError, load_table, parse_line
from .enumeration import EnumerationConfig, enumerate_flat

log = logging.getLogger("semigroup_sep")

EXIT_INPUT = 3
EXIT_USAGE = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit 2, which means "vacuous" here
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def read_input(source: str) -> CayleyTable:
    """A path, '-' for stdin, or an inline table (JSON object or ``n:e00,...``)."""
    if source == "-":
        return load_table(sys.stdin.read())
    stripped = source.strip()
    if stripped.startswith("{"):
        return load_table(stripped)
    path = Path(source)
    if path.exists():
        return load_table(path.read_text())
    if ":" in stripped:
        return parse_line(stripped)
    raise TableError(f"no such file and not an inline table: {source!r}")


def render_text(doc: Any, indent: int = 0) -> str:
    """Plain-text rendering of a JSON document, key by key."""
    pad = "  " * indent
    lines = []
    if isinstance(doc, dict):
        for k, v in doc.items():
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(doc, list):
        for v in doc:
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}-")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(f"{pad}{_scalar(doc)}")
    return "\n".join(lines)


def _flat_list(v: Any) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _scalar(v: Any) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    if isinstance(v, dict):
        return "{}"
    return str(v)


def emit(doc: Any, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write(render_text(doc) + "\n")


# -- documents -----------------------------------------------------------------------

def analyze_document(s: CayleyTable) -> dict:
    a = Analysis(s)
    report = predicates.evaluate_properties(a)
    reps = sorted({min(h) for h in a.h_classes})
    refl = a.reflection
    return {
        "table": s.to_json(),
        "properties": report.to_json(),
        "idempotents": list(a.E_sorted),
        "h_classes": [sorted(a.h_classes[r]) for r in reps],
        "clifford_part": sorted(a.clifford),
        "pi": list(a.pi),
        "center": sorted(predicates.center(s)),
        "reflection": {
            "size": refl.quotient.order,
            "classes": [sorted(b) for b in refl.congruence.partition],
            "projection": list(refl.projection),
        },
    }


def classes_document(s: CayleyTable, x: int) -> dict:
    if not 0 <= x < s.order:
        raise UsageError(f"element {x} out of range 0..{s.order - 1}")
    up, down, bi = order2.up_down_biclass(s, x)
    trace = order2.up_class_fixpoint(s, x)
    return {
        "element": x,
        "up": sorted(up),
        "down": sorted(down),
        "bi": sorted(bi),
        "trace": [sorted(st) for st in trace.stages],
    }


def reflect_document(s: CayleyTable) -> dict:
    return order2.semilattice_reflection(s).to_json()


# -- commands -----------------------------------------------------------------------

def cmd_analyze(args) -> int:
    emit(analyze_document(read_input(args.input)), args.format)
    return 0


def cmd_classes(args) -> int:
    emit(classes_document(read_input(args.input), args.element), args.format)
    return 0


def cmd_reflect(args) -> int:
    emit(reflect_document(read_input(args.input)), args.format)
    return 0


def cmd_enumerate(args) -> int:
    try:
        cfg = EnumerationConfig(args.order, args.up_to_iso)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lines = (f"{cfg.order}:" + ",".join(map(str, flat)) + "\n" for flat in enumerate_flat(cfg, args.jobs))
    if args.count:
        sys.stdout.write(f"{sum(1 for _ in lines)}\n")
        return 0
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        name = f"semigroups-{cfg.order}{'-iso' if cfg.up_to_iso else ''}.txt"
        if args.gzip:
            with gzip.open(out / (name + ".gz"), "wt") as fh:
                fh.writelines(lines)
        else:
            (out / name).write_text("".join(lines))
    else:
        sys.stdout.writelines(lines)
    return 0


def cmd_verify(args) -> int:
    try:
        ids = [args.suite] if args.suite else [s.id for s in verify.SUITES]
        reports = verify.run_suites(ids, args.max_order, up_to_iso=args.up_to_iso, jobs=args.jobs)
    except verify.UnknownSuiteError:
        raise UsageError(f"unknown suite {args.suite!r}; known: {', '.join(verify.SUITE_BY_ID)}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    status = verify.exit_status(reports)
    if reports:
        log.info("sweep took %.2fs", reports[0].elapsed)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for r in reports:
            (out / f"{r.suite}.json").write_text(r.dumps())
    if args.format == "json":
        emit({"exit_status": status, "reports": [r.to_json() for r in reports]}, "json")
    else:
        for r in reports:
            sys.stdout.write(r.summary() + "\n")
            for v in r.violations:
                sys.stdout.write(f"    violation {v.item} at {v.table} witness {list(v.witness)}\n")
            for n in r.notes:
                sys.stdout.write(f"    note: {n}\n")
        sys.stdout.write(f"exit status {status}\n")
    return status


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="semigroup-sep", description="Finite semigroup analysis and theorem sweeps.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_format(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")
        return sp

    sp = with_format(sub.add_parser("analyze", help="properties and structure of one semigroup"))
    sp.add_argument("input", help="table file, '-' for stdin, or an inline table")
    sp.set_defaults(func=cmd_analyze)

    sp = with_format(sub.add_parser("classes", help="up/down/2-class of an element"))
    sp.add_argument("input")
    sp.add_argument("element", type=int)
    sp.set_defaults(func=cmd_classes)

    sp = with_format(sub.add_parser("reflect", help="semilattice reflection"))
    sp.add_argument("input")
    sp.set_defaults(func=cmd_reflect)

    sp = sub.add_parser("enumerate", help="dump all semigroups of one order")
    sp.add_argument("order", type=int)
    sp.add_argument("--up-to-iso", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--count", action="store_true", help="print only the number of tables")
    sp.add_argument("--out", help="directory to write the corpus file into")
    sp.add_argument("--gzip", action="store_true", help="gzip the corpus file (with --out)")
    sp.set_defaults(func=cmd_enumerate)

    sp = with_format(sub.add_parser("verify", help="run theorem suites over the corpus"))
    sp.add_argument("--max-order", type=int, default=3)
    sp.add_argument("--suite")
    sp.add_argument("--up-to-iso", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--out", help="directory for per-suite JSON reports")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except TableError as exc:
        witness = getattr(exc, "witness", None)
        msg = f"input error: {exc}"
        if witness is not None:
            msg += f" (witness {list(witness)})"
        print(msg, file=sys.stderr)
        return EXIT_INPUT
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
