"""Orbit classification of flow structures and the counting formulas."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Iterable, Sequence

from .cw_complex import Automorphism, StratifiedSurface, SurfaceName, SymmetryGroup, get_surface
from .errors import DomainError
from .flow_model import Coloring
from .region_enumeration import (
    Family,
    FlowStructure,
    RegionCounts,
    RegionFlow,
    _point_key,
    boundary_for,
    enumerate_ms_optimal,
    enumerate_one_fixed_point_structures,
    enumerate_projective,
    transform,
)


# -- group action --------------------------------------------------------------

def acting_elements(s: StratifiedSurface, group: str = "reflection") -> tuple[Automorphism, ...]:
    """Group elements used for classification.

    ``reflection`` is the subgroup {identity, reflection}; ``full`` is the
    whole symmetry group (the same thing on the Girl's surface).
    """
    elems = s.symmetry.elements
    if group == "full":
        return elems
    if group == "reflection":
        refl = s.symmetry.generator("reflection")
        return tuple(g for g in elems if g.is_identity or g.cells == refl.cells)
    raise DomainError(f"unknown group {group!r}; expected 'reflection' or 'full'")


def _image_coloring(s: StratifiedSurface, c: Coloring, g: Automorphism) -> Coloring:
    colors = {s.class_of(g.label(cls[0])): col for cls, col in c.colors}
    return Coloring(tuple((cls, colors[cls]) for cls in s.marked_point_classes))


@lru_cache(maxsize=None)
def _image_region(f: RegionFlow, g: Automorphism, name: SurfaceName, c: Coloring) -> RegionFlow:
    return transform(f, g, boundary_for(name, c, g.region(f.region)))


def apply(g: Automorphism, f: FlowStructure) -> FlowStructure:
    """Image of a flow structure under a surface symmetry."""
    s = get_surface(f.surface)
    order = {r: i for i, r in enumerate(s.regions)}
    out = f
    if f.coloring is not None:
        c2 = _image_coloring(s, f.coloring, g)
        regions = sorted(
            (_image_region(r, g, s.name, c2) for r in f.regions), key=lambda r: order[r.region]
        )
        out = replace(out, coloring=c2, regions=tuple(regions))
    if f.cells:
        cells = []
        for c, d in f.cells:
            img, flip = g.cell(c)
            cells.append((img, -d if flip else d))
        out = replace(out, cells=tuple(sorted(cells)))
    if f.kinds:
        kinds = sorted(((g.region(r), k) for r, k in f.kinds), key=lambda rk: order[rk[0]])
        out = replace(out, kinds=tuple(kinds))
    if f.point_types:
        pts = [(_point_key(s, g.label(p[0])), t) for p, t in f.point_types]
        out = replace(out, point_types=tuple(sorted(pts)))
    return out


def serialize(f: FlowStructure) -> bytes:
    """Compact, order-stable serialization used to compare structures."""
    obj = {
        "family": f.family.value,
        "option": f.option,
        "coloring": f.coloring.code() if f.coloring else None,
        "cells": [list(x) for x in f.cells],
        "kinds": [list(x) for x in f.kinds],
        "points": [list(x) for x in f.point_types],
        "regions": [
            [r.region, list(r.states), list(r.interior), [list(e) for e in r.edges],
             [[list(p) for p in face] for face in r.faces]]
            for r in f.regions
        ],
    }
    return json.dumps(obj, separators=(",", ":"), sort_keys=True).encode()


# -- classes ------------------------------------------------------------------

@dataclass(frozen=True)
class FlowClass:
    canonical_code: bytes
    representative: FlowStructure
    orbit_size: int
    symmetric: bool

    @property
    def option(self) -> int:
        return self.representative.option

    @property
    def family(self) -> Family:
        return self.representative.family


def canonical_form(f: FlowStructure, group: SymmetryGroup | Sequence[Automorphism] | None = None) -> FlowClass:
    """Lexicographically least serialization over the orbit of ``f``.

    The color flip is not part of the acting group: flows related only by
    reversing time are different classes.
    """
    elems = _elements(f, group)
    images = {}
    for g in elems:
        img = f if g.is_identity else apply(g, f)
        images.setdefault(serialize(img), img)
    code = min(images)
    return FlowClass(code, images[code], len(images), len(images) < len(elems))


def _elements(f: FlowStructure, group) -> tuple[Automorphism, ...]:
    if group is None:
        return acting_elements(get_surface(f.surface))
    if isinstance(group, SymmetryGroup):
        if get_surface(f.surface).name is SurfaceName.GIRLS:
            return group.elements
        # Boy's: reflection subgroup unless a list of elements is passed
        refl = group.generator("reflection")
        return tuple(g for g in group.elements if g.is_identity or g.cells == refl.cells)
    return tuple(group)


def classify(flows: Iterable[FlowStructure], group=None) -> list[FlowClass]:
    """Partition ``flows`` into orbit classes, ordered by (option, code)."""
    classes: dict[bytes, FlowClass] = {}
    for f in flows:
        fc = canonical_form(f, group)
        classes.setdefault(fc.canonical_code, fc)
    return sorted(classes.values(), key=lambda c: (c.option, c.canonical_code))


# -- counting -------------------------------------------------------------------

def burnside_combine(rc: RegionCounts) -> int:
    """Classes of BR x CR pairs under the reflection acting on both.

    A pair is fixed only if both parts are; free pairs of non-symmetric
    parts form orbits of two out of four labeled combinations.
    """
    if None in (rc.b_s, rc.b_n, rc.c_s, rc.c_n):
        raise DomainError("symmetric counts are undefined for this coloring")
    return rc.b_s * rc.c_s + rc.b_s * rc.c_n + rc.b_n * rc.c_s + 2 * rc.b_n * rc.c_n


def homotopy_count(n: int, n_s: int, surface: SurfaceName | str) -> int:
    surface = SurfaceName.parse(surface)
    if n < 0 or n_s < 0:
        raise DomainError("counts must be nonnegative")
    if n_s > n:
        raise DomainError(f"symmetric count {n_s} exceeds class count {n}")
    base = 2 * n - n_s
    return base if surface is SurfaceName.GIRLS else 3 * base


def infer_symmetric(n: int, m: int, surface: SurfaceName | str) -> int | None:
    """Invert :func:`homotopy_count`; ``None`` if no integer solution exists."""
    surface = SurfaceName.parse(surface)
    base = m if surface is SurfaceName.GIRLS else (m // 3 if m % 3 == 0 else None)
    if base is None:
        return None
    n_s = 2 * n - base
    return n_s if 0 <= n_s <= n else None


@dataclass(frozen=True)
class CountReport:
    n: int
    n_s: int
    m: int
    per_option: tuple[tuple[int, int, int], ...] = ()  # (option, classes, symmetric)

    @property
    def half_total(self) -> int:
        return sum(n for _, n, _ in self.per_option)

    def option(self, k: int) -> tuple[int, int]:
        for o, n, s in self.per_option:
            if o == k:
                return n, s
        raise KeyError(k)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "n_s": self.n_s,
            "m": self.m,
            "halfTotal": self.half_total,
            "perOption": {str(o): {"n": n, "n_s": s} for o, n, s in self.per_option},
        }


def count_report(classes: Sequence[FlowClass], surface: SurfaceName | str) -> CountReport:
    """Totals over all classes; per-option subtotals cover one time direction
    (the other half is its exact mirror in time)."""
    n = len(classes)
    n_s = sum(1 for c in classes if c.symmetric)
    forward = [c for c in classes if not c.representative.reversed_time]
    per = Counter(c.option for c in forward)
    sym = Counter(c.option for c in forward if c.symmetric)
    rows = tuple((o, per[o], sym[o]) for o in sorted(per))
    return CountReport(n, n_s, homotopy_count(n, n_s, surface), rows)


def enumerate_family(s: StratifiedSurface, family: Family | str, jobs: int = 1) -> list[FlowStructure]:
    family = Family.parse(family)
    if family is Family.ONE_FIXED_POINT:
        return enumerate_one_fixed_point_structures(s)
    if family is Family.MS_OPTIMAL:
        return enumerate_ms_optimal(s)
    return enumerate_projective(s, jobs=jobs)


# -- the summary table --------------------------------------------------------

FAMILIES = (Family.ONE_FIXED_POINT, Family.MS_OPTIMAL, Family.PROJECTIVE)

# Boy's surface values are taken as published; only their consistency with
# the homotopy formula is checked here.
BOYS_TABLE = {
    Family.ONE_FIXED_POINT: (18, 108),
    Family.MS_OPTIMAL: (342, 2004),
    Family.PROJECTIVE: (80, 438),
}


@dataclass(frozen=True)
class TableCell:
    family: Family
    n: int
    m: int
    n_s: int | None
    computed: bool

    def text(self) -> str:
        return f"{self.n}/{self.m}"


@dataclass(frozen=True)
class TableRow:
    surface: SurfaceName
    cells: tuple[TableCell, ...]

    def cell(self, family: Family | str) -> TableCell:
        family = Family.parse(family)
        return next(c for c in self.cells if c.family is family)

    @property
    def consistent(self) -> bool:
        return all(c.n_s is not None for c in self.cells)


@lru_cache(maxsize=None)
def _girls_row(jobs: int = 1) -> TableRow:
    s = get_surface(SurfaceName.GIRLS)
    cells = []
    for fam in FAMILIES:
        rep = count_report(classify(enumerate_family(s, fam, jobs=jobs)), s.name)
        cells.append(TableCell(fam, rep.n, rep.m, rep.n_s, True))
    return TableRow(SurfaceName.GIRLS, tuple(cells))


def _boys_row() -> TableRow:
    cells = []
    for fam in FAMILIES:
        n, m = BOYS_TABLE[fam]
        cells.append(TableCell(fam, n, m, infer_symmetric(n, m, SurfaceName.BOYS), False))
    return TableRow(SurfaceName.BOYS, tuple(cells))


def table61(surface: SurfaceName | str | None = None, jobs: int = 1) -> list[TableRow]:
    """Rows of the optimal-flow summary: one per surface (both by default)."""
    if surface is None:
        return [_boys_row(), _girls_row(max(1, jobs))]
    surface = SurfaceName.parse(surface)
    return [_boys_row()] if surface is SurfaceName.BOYS else [_girls_row(max(1, jobs))]
