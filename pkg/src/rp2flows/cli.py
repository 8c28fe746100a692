"""Command-line front end.

    rp2flows surfaces  [--surface S] [--format json|table]
    rp2flows enumerate --surface S --family F [--count] [--labeled] [--format json|csv|table]
    rp2flows classify  --surface S --family F [--group reflection|full] [--format json|csv|table]
    rp2flows report    table61|regions|census [--surface S] [--format json|csv|table]
    rp2flows export    --surface S --family F [--index K] [--format dot|svg|json]

Exit status 0 on success, 2 on a usage error (message on stderr).
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from collections import Counter
from typing import Sequence

from .classification import (
    FAMILIES,
    acting_elements,
    classify,
    count_report,
    enumerate_family,
    table61,
    burnside_combine,
)
from .cw_complex import SurfaceName, get_surface, validate_complex
from .errors import DomainError
from .export import export_dot, export_svg
from .region_enumeration import Family, fixed_point_census, region_counts
from .serialization import SCHEMA_VERSION, dumps, structure_to_dict, surface_to_dict, write_ndjson

SURFACES = ("boys", "girls")
FAMILY_NAMES = tuple(f.value for f in Family)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # pragma: no cover - exercised via run()
        raise UsageError(f"{self.prog}: {message}")


def _common(p: argparse.ArgumentParser, formats: Sequence[str], default: str) -> None:
    p.add_argument("--format", choices=formats, default=default)
    p.add_argument("--output", metavar="PATH", help="write to a file instead of stdout")
    p.add_argument("--seedless", action="store_true",
                   help="accepted for compatibility; enumeration uses no randomness")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rp2flows", description="Flows on Boy's and Girl's surfaces.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("surfaces", help="show the CW data and its validation")
    p.add_argument("--surface", choices=SURFACES)
    _common(p, ("json", "table"), "table")

    for verb in ("enumerate", "classify"):
        p = sub.add_parser(verb)
        p.add_argument("--surface", choices=SURFACES, required=True)
        p.add_argument("--family", choices=FAMILY_NAMES, required=True)
        p.add_argument("--group", choices=("reflection", "full"), default="reflection")
        p.add_argument("--jobs", type=int, default=1, help="threads for region searches")
        _common(p, ("json", "csv", "table"), "json" if verb == "enumerate" else "table")
        if verb == "enumerate":
            p.add_argument("--count", action="store_true", help="print the number of classes only")
            p.add_argument("--labeled", action="store_true",
                           help="list every labeled structure instead of one per class")

    p = sub.add_parser("report")
    p.add_argument("topic", choices=("table61", "regions", "census"))
    p.add_argument("--surface", choices=SURFACES)
    p.add_argument("--jobs", type=int, default=1)
    _common(p, ("json", "csv", "table"), "table")

    p = sub.add_parser("export")
    p.add_argument("--surface", choices=SURFACES, required=True)
    p.add_argument("--family", choices=FAMILY_NAMES, required=True)
    p.add_argument("--index", type=int, default=0, help="class index (as listed by classify)")
    p.add_argument("--group", choices=("reflection", "full"), default="reflection")
    p.add_argument("--jobs", type=int, default=1)
    _common(p, ("dot", "svg", "json"), "svg")
    return parser


# -- verbs ------------------------------------------------------------------------

def _surfaces(args) -> str:
    names = [args.surface] if args.surface else list(SURFACES)
    docs = []
    for name in names:
        s = get_surface(name)
        d = surface_to_dict(s)
        d["validation"] = [
            {"check": c.name, "passed": c.passed, "detail": c.detail}
            for c in validate_complex(s).checks
        ]
        docs.append(d)
    if args.format == "json":
        return dumps({"schemaVersion": SCHEMA_VERSION, "surfaces": docs}) + "\n"
    out = []
    for d in docs:
        out.append(f"{SurfaceName.parse(d['name']).title} surface")
        for c, pairs in d["oneCells"].items():
            out.append(f"  {c}: " + ", ".join(f"{a}-{b}" for a, b in pairs))
        for r, w in zip(d["regions"], d["twoCells"]):
            out.append(f"  {r}: {w}")
        out.append("  classes: " + " ".join("{" + ",".join(c) + "}" for c in d["markedPointClasses"]))
        out.append(f"  symmetry order: {d['symmetryOrder']}")
        for v in d["validation"]:
            out.append(f"  [{'ok' if v['passed'] else 'FAIL'}] {v['check']} {v['detail']}".rstrip())
    return "\n".join(out) + "\n"


def _family_classes(args):
    s = get_surface(args.surface)
    flows = enumerate_family(s, args.family, jobs=max(1, args.jobs))
    return s, flows, classify(flows, acting_elements(s, args.group))


def _summary(f) -> str:
    parts = []
    if f.cells:
        parts.append(" ".join(("" if d > 0 else "-") + c for c, d in f.cells))
    if f.coloring is not None and f.family is Family.MS_OPTIMAL:
        parts.append(" ".join(f"{''.join(c)}={col.value}" for c, col in f.coloring.colors))
    if f.point_types:
        parts.append(" ".join(f"{p}={t}" for p, t in f.point_types))
    for r in f.regions:
        if r.edges:
            parts.append(f"{r.region}: " + " ".join(f"{a}>{b}" for a, b in r.chords()))
    return "; ".join(parts)


def _enumerate(args) -> str:
    s, flows, classes = _family_classes(args)
    items = flows if args.labeled else [c.representative for c in classes]
    if args.count:
        return f"{len(items)}\n"
    if args.format == "json":
        buf = io.StringIO()
        write_ndjson((structure_to_dict(f) for f in items), buf)
        return buf.getvalue()
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "option", "separatrices", "summary"])
        for k, f in enumerate(items):
            w.writerow([k, f.option, f.separatrix_count, _summary(f)])
        return buf.getvalue()
    return "".join(f"{k:4d}  option {f.option}  {_summary(f)}\n" for k, f in enumerate(items))


def _classify(args) -> str:
    s, flows, classes = _family_classes(args)
    rep = count_report(classes, s.name)
    if args.format == "json":
        doc = {
            "schemaVersion": SCHEMA_VERSION,
            "surface": s.name.value,
            "family": args.family,
            "group": args.group,
            "labeled": len(flows),
            "counts": rep.to_dict(),
            "classes": [
                {"index": k, "option": c.option, "orbitSize": c.orbit_size,
                 "symmetric": c.symmetric, "code": c.canonical_code.decode()}
                for k, c in enumerate(classes)
            ],
        }
        return dumps(doc) + "\n"
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["option", "classes", "symmetric"])
        for o, n, ns in rep.per_option:
            w.writerow([o, n, ns])
        w.writerow(["total", rep.n, rep.n_s])
        w.writerow(["homotopy", rep.m, ""])
        return buf.getvalue()
    lines = [f"{s.name.title} surface, {args.family} flows ({len(flows)} labeled)"]
    for o, n, ns in rep.per_option:
        lines.append(f"  option {o}: {n} classes, {ns} symmetric")
    lines.append(f"  n = {rep.n}, n_s = {rep.n_s}, m = {rep.m}")
    return "\n".join(lines) + "\n"


def _report(args) -> str:
    if args.topic == "table61":
        rows = table61(args.surface, jobs=max(1, args.jobs))
        if args.format == "json":
            doc = {
                "schemaVersion": SCHEMA_VERSION,
                "rows": [
                    {
                        "surface": r.surface.value,
                        "consistent": r.consistent,
                        "cells": {
                            c.family.value: {"n": c.n, "m": c.m, "n_s": c.n_s, "computed": c.computed}
                            for c in r.cells
                        },
                    }
                    for r in rows
                ],
            }
            return dumps(doc) + "\n"
        if args.format == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["surface"] + [f.value for f in FAMILIES])
            for r in rows:
                w.writerow([r.surface.value.capitalize()] + [r.cell(f).text() for f in FAMILIES])
            return buf.getvalue()
        lines = [f"{'surface':10s}" + "".join(f"{f.value:>18s}" for f in FAMILIES)]
        for r in rows:
            lines.append(f"{r.surface.title:10s}" + "".join(f"{r.cell(f).text():>18s}" for f in FAMILIES))
            note = ", ".join(f"n_s={r.cell(f).n_s}" for f in FAMILIES)
            src = "enumerated" if all(c.computed for c in r.cells) else "published, formula check"
            lines.append(f"{'':10s}  ({src}: {note})")
        return "\n".join(lines) + "\n"

    surface = args.surface or "girls"
    s = get_surface(surface)
    if args.topic == "regions":
        rows = []
        for opt in (1, 2, 3):
            rc = region_counts(s, opt)
            combined = burnside_combine(rc) if rc.b_s is not None else rc.n_b * rc.n_c
            rows.append((opt, rc, combined))
        if args.format == "json":
            doc = {"schemaVersion": SCHEMA_VERSION, "surface": s.name.value, "options": [
                {"option": o, "n_b": rc.n_b, "n_c": rc.n_c, "b_s": rc.b_s, "b_n": rc.b_n,
                 "c_s": rc.c_s, "c_n": rc.c_n, "classes": comb} for o, rc, comb in rows]}
            return dumps(doc) + "\n"
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n", delimiter="," if args.format == "csv" else "\t")
        w.writerow(["option", "n_b", "n_c", "b_s", "b_n", "c_s", "c_n", "classes"])
        blank = "" if args.format == "csv" else "-"
        for o, rc, comb in rows:
            split = [blank if x is None else x for x in (rc.b_s, rc.b_n, rc.c_s, rc.c_n)]
            w.writerow([o, rc.n_b, rc.n_c, *split, comb])
        return buf.getvalue()

    # census over the projective family
    flows = enumerate_family(s, Family.PROJECTIVE, jobs=max(1, args.jobs))
    tally = Counter((fixed_point_census(f).as_tuple(), fixed_point_census(f).index_sum) for f in flows)
    if args.format == "json":
        doc = {"schemaVersion": SCHEMA_VERSION, "surface": s.name.value, "census": [
            {"sources": c[0], "sinks": c[1], "saddles": c[2], "indexSum": i, "flows": k}
            for (c, i), k in sorted(tally.items())]}
        return dumps(doc) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n", delimiter="," if args.format == "csv" else "\t")
    w.writerow(["sources", "sinks", "saddles", "index_sum", "flows"])
    for (c, i), k in sorted(tally.items()):
        w.writerow([*c, i, k])
    return buf.getvalue()


def _export(args) -> str:
    s, flows, classes = _family_classes(args)
    if not 0 <= args.index < len(classes):
        raise DomainError(f"class index {args.index} out of range 0..{len(classes) - 1}")
    f = classes[args.index].representative
    if args.format == "dot":
        return export_dot(f)
    if args.format == "json":
        return dumps(structure_to_dict(f)) + "\n"
    return export_svg(f)


VERBS = {
    "surfaces": _surfaces,
    "enumerate": _enumerate,
    "classify": _classify,
    "report": _report,
    "export": _export,
}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("rp2flows: --jobs must be at least 1")
        text = VERBS[args.verb](args)
    except UsageError as exc:
        print(exc, file=stderr)
        return 2
    except DomainError as exc:
        print(f"rp2flows: error: {exc}", file=stderr)
        return 2
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())
