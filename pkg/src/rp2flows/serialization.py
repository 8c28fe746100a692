"""JSON documents for surfaces, flow structures and reports.

Every document carries ``"schemaVersion": 1``.  Dumps are byte-stable:
keys are sorted and separators fixed.
"""

from __future__ import annotations

import json
from typing import IO, Iterable

from .cw_complex import (
    Automorphism,
    BoundaryWord,
    StratifiedSurface,
    SurfaceName,
    SymmetryGroup,
    Wing,
    _close,
    get_surface,
)
from .errors import DomainError
from .flow_model import Color, Coloring
from .region_enumeration import Family, FlowStructure, RegionFlow, boundary_for

SCHEMA_VERSION = 1


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _check_version(data: dict) -> None:
    if data.get("schemaVersion") != SCHEMA_VERSION:
        raise DomainError(f"unsupported schemaVersion {data.get('schemaVersion')!r}")


# -- surfaces --------------------------------------------------------------------

def surface_to_dict(s: StratifiedSurface) -> dict:
    return {
        "schemaVersion": SCHEMA_VERSION,
        "name": s.name.value,
        "angles": list(s.angles),
        "oneCells": {c: [list(p) for p in pairs] for c, pairs in s.one_cells.items()},
        "regions": list(s.regions),
        "twoCells": [str(w) for w in s.two_cells.values()],
        "markedPoints": [
            {"cell": w.cell, "start": w.start, "end": w.end, "label": lab}
            for w, lab in sorted(s.marked_points.items())
        ],
        "markedPointClasses": [list(c) for c in s.marked_point_classes],
        "symmetry": [g.as_table() for g in s.symmetry.generators] if s.symmetry else [],
        "symmetryOrder": s.symmetry.order if s.symmetry else 1,
    }


def surface_from_dict(data: dict) -> StratifiedSurface:
    _check_version(data)
    gens = tuple(Automorphism.from_table(t) for t in data.get("symmetry", []))
    return StratifiedSurface(
        name=SurfaceName.parse(data["name"]),
        angles=tuple(data["angles"]),
        one_cells={c: tuple(tuple(p) for p in pairs) for c, pairs in data["oneCells"].items()},
        two_cells={r: BoundaryWord.parse(w) for r, w in zip(data["regions"], data["twoCells"])},
        marked_points={
            Wing(m["cell"], m["start"], m["end"]): m["label"] for m in data["markedPoints"]
        },
        marked_point_classes=tuple(tuple(c) for c in data["markedPointClasses"]),
        symmetry=SymmetryGroup(gens, _close(list(gens))) if gens else None,
    )


# -- flow structures ------------------------------------------------------------------

def _coloring_to_dict(c: Coloring | None):
    if c is None:
        return None
    return {",".join(cls): col.value for cls, col in c.colors}


def _coloring_from_dict(s: StratifiedSurface, data) -> Coloring | None:
    if data is None:
        return None
    by_class = {tuple(k.split(",")): Color.parse(v) for k, v in data.items()}
    if set(by_class) != set(s.marked_point_classes):
        raise DomainError("coloring classes do not match the surface")
    return Coloring(tuple((cls, by_class[cls]) for cls in s.marked_point_classes))


def region_flow_to_dict(f: RegionFlow) -> dict:
    out = f.to_dict()
    out["chords"] = [list(c) for c in f.chords()]
    out["active"] = [list(a) for a in f.active()]
    return out


def structure_to_dict(f: FlowStructure) -> dict:
    return {
        "schemaVersion": SCHEMA_VERSION,
        "surface": f.surface.value,
        "family": f.family.value,
        "option": f.option,
        "coloring": _coloring_to_dict(f.coloring),
        "cells": {c: d for c, d in f.cells},
        "kinds": {r: k for r, k in f.kinds},
        "pointTypes": {p: t for p, t in f.point_types},
        "regions": [region_flow_to_dict(r) for r in f.regions],
    }


def structure_from_dict(data: dict) -> FlowStructure:
    _check_version(data)
    s = get_surface(data["surface"])
    c = _coloring_from_dict(s, data.get("coloring"))
    order = {r: i for i, r in enumerate(s.regions)}
    regions = []
    for rd in data.get("regions", []):
        if c is None:
            raise DomainError("region diagrams need a coloring")
        rb = boundary_for(s.name, c, rd["region"])
        if list(rb.names()) != rd.get("items", list(rb.names())):
            raise DomainError(f"boundary of {rd['region']} does not match")
        regions.append(RegionFlow(
            rb,
            tuple(rd["states"]),
            tuple(rd["interior"]),
            tuple(tuple(e) for e in rd["separatrices"]),
            tuple(tuple(tuple(p) for p in face) for face in rd["faces"]),
        ))
    return FlowStructure(
        surface=s.name,
        family=Family.parse(data["family"]),
        option=int(data["option"]),
        regions=tuple(regions),
        coloring=c,
        cells=tuple(sorted((k, int(v)) for k, v in data.get("cells", {}).items())),
        kinds=tuple(sorted(data.get("kinds", {}).items(), key=lambda kv: order[kv[0]])),
        point_types=tuple(sorted(data.get("pointTypes", {}).items())),
    )


def write_ndjson(objs: Iterable[dict], out: IO[str]) -> int:
    k = 0
    for obj in objs:
        out.write(dumps(obj))
        out.write("\n")
        k += 1
    return k


def read_ndjson(lines: Iterable[str]) -> list[dict]:
    return [json.loads(line) for line in lines if line.strip()]
