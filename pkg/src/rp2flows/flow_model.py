"""Orientations, corner roles and region boundaries.

A 1-cell side carries a fixed point in the middle, splitting it into two
halves.  Directions are stored per half, relative to the direction of the
1-cell loop (+1 runs from the wing's start angle towards its end angle).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .cw_complex import StratifiedSurface, SurfaceName, Wing
from .errors import DomainError


class Color(str, Enum):
    GREEN = "G"  # potential source
    RED = "R"  # potential sink

    def flipped(self) -> "Color":
        return Color.RED if self is Color.GREEN else Color.GREEN

    @classmethod
    def parse(cls, value: "Color | str") -> "Color":
        if isinstance(value, cls):
            return value
        key = str(value).strip().upper()[:1]
        for c in cls:
            if c.value == key:
                return c
        raise DomainError(f"unknown color {value!r}")


class CornerRole(str, Enum):
    SOURCE = "source"
    SINK = "sink"
    TRANSIT = "transit"


class RegionKind(str, Enum):
    ELLIPTIC = "elliptic"
    POLAR = "polar"
    REQUIRES_SEPARATRIX = "requires-separatrix"


@dataclass(frozen=True)
class Coloring:
    """Colors per marked-point class; every label of a class shares one color."""

    colors: tuple[tuple[tuple[str, ...], Color], ...]

    @classmethod
    def from_labels(cls, s: StratifiedSurface, mapping: Mapping[str, Color | str]) -> "Coloring":
        """Build from ``{label: color}``; any label of a class may stand for it."""
        chosen: dict[tuple[str, ...], Color] = {}
        for label, color in mapping.items():
            cls_ = s.class_of(label)
            color = Color.parse(color)
            if chosen.get(cls_, color) is not color:
                raise DomainError(f"labels of class {cls_} given different colors")
            chosen[cls_] = color
        missing = [c for c in s.marked_point_classes if c not in chosen]
        if missing:
            raise DomainError(f"coloring leaves classes uncolored: {missing}")
        return cls(tuple((c, chosen[c]) for c in s.marked_point_classes))

    def color_of(self, label: str) -> Color:
        for cls_, color in self.colors:
            if label in cls_:
                return color
        raise DomainError(f"label {label!r} is not colored")

    def flipped(self) -> "Coloring":
        return Coloring(tuple((c, col.flipped()) for c, col in self.colors))

    def to_dict(self) -> dict[str, str]:
        return {"".join(c): col.value for c, col in self.colors}

    def code(self) -> str:
        return "".join(col.value for _, col in self.colors)


@dataclass(frozen=True)
class OrientationAssignment:
    """Direction of every half-arc, +1 meaning along the 1-cell loop.

    ``halves`` holds ``(wing, start_half, end_half)``.  ``cells`` is set when
    the assignment comes from whole 1-cell directions (no fixed points on the
    1-cells), otherwise empty.
    """

    halves: tuple[tuple[Wing, int, int], ...]
    cells: tuple[tuple[str, int], ...] = ()

    def half(self, wing: Wing, which: str) -> int:
        for w, a, b in self.halves:
            if w == wing:
                return a if which == "start" else b
        raise DomainError(f"no direction for wing {wing}")


def cell_orientation(s: StratifiedSurface, directions: Mapping[str, int]) -> OrientationAssignment:
    """Whole-cell directions, e.g. ``{"A": -1, "B": 1, "C": 1}``."""
    if set(directions) != set(s.one_cells) or any(d not in (1, -1) for d in directions.values()):
        raise DomainError("need a direction +1 or -1 for each 1-cell")
    halves = tuple((w, directions[w.cell], directions[w.cell]) for w in s.wings())
    return OrientationAssignment(halves, tuple(sorted(directions.items())))


def derive_orientations(s: StratifiedSurface, c: Coloring) -> OrientationAssignment:
    """Arcs run away from Green points and towards Red points."""
    classes = {cls_ for cls_, _ in c.colors}
    if classes != set(s.marked_point_classes):
        raise DomainError("coloring must color every marked-point class")
    halves = []
    for w in s.wings():
        if c.color_of(s.label(w)) is Color.GREEN:
            halves.append((w, -1, 1))
        else:
            halves.append((w, 1, -1))
    return OrientationAssignment(tuple(halves))


def corner_roles(s: StratifiedSurface, o: OrientationAssignment) -> dict[int, CornerRole]:
    roles = {}
    for angle in s.angles:
        outgoing = []
        for cell, end in s.half_axes(angle):
            for w in s.wings():
                if w.cell != cell:
                    continue
                if end == "s" and w.start == angle:
                    outgoing.append(o.half(w, "start") == 1)
                elif end == "e" and w.end == angle:
                    outgoing.append(o.half(w, "end") == -1)
        if len(outgoing) != 2:
            raise DomainError(f"angle {angle} is not bounded by two arcs")
        if all(outgoing):
            roles[angle] = CornerRole.SOURCE
        elif not any(outgoing):
            roles[angle] = CornerRole.SINK
        else:
            roles[angle] = CornerRole.TRANSIT
    return roles


@dataclass(frozen=True)
class Corner:
    angle: int
    role: CornerRole

    @property
    def name(self) -> str:
        return str(self.angle)


@dataclass(frozen=True)
class Marked:
    label: str
    color: Color
    wing: Wing

    @property
    def name(self) -> str:
        return self.label


@dataclass(frozen=True)
class RegionBoundary:
    """Cyclic boundary of one region.  ``arcs[i]`` is +1 when arc ``i`` runs
    from ``items[i]`` to ``items[i + 1]``."""

    region: str
    items: tuple[Corner | Marked, ...]
    arcs: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.items)

    @property
    def corners(self) -> tuple[Corner, ...]:
        return tuple(i for i in self.items if isinstance(i, Corner))

    @property
    def marked(self) -> tuple[Marked, ...]:
        return tuple(i for i in self.items if isinstance(i, Marked))

    def names(self) -> tuple[str, ...]:
        return tuple(i.name for i in self.items)

    def source_elements(self) -> list[int]:
        return [k for k, it in enumerate(self.items) if _is_source(it)]

    def sink_elements(self) -> list[int]:
        return [k for k, it in enumerate(self.items) if _is_sink(it)]

    def __str__(self) -> str:
        parts = []
        for it in self.items:
            if isinstance(it, Corner):
                parts.append(f"{it.angle}{ {'source': '+', 'sink': '-', 'transit': ''}[it.role.value]}")
            else:
                parts.append(f"{it.label}:{it.color.value}")
        return f"{self.region}[{' '.join(parts)}]"


def _is_source(item) -> bool:
    if isinstance(item, Corner):
        return item.role is CornerRole.SOURCE
    return item.color is Color.GREEN


def _is_sink(item) -> bool:
    if isinstance(item, Corner):
        return item.role is CornerRole.SINK
    return item.color is Color.RED


def _along(side, wing: Wing) -> bool:
    if wing.is_loop:
        return not side.primed
    return (side.start, side.end) == (wing.start, wing.end)


def region_boundary(
    s: StratifiedSurface,
    region: str,
    o: OrientationAssignment,
    c: Coloring | None = None,
) -> RegionBoundary:
    roles = corner_roles(s, o)
    items: list[Corner | Marked] = []
    arcs: list[int] = []
    for side, wing in s.boundary_sides(region):
        items.append(Corner(side.start, roles[side.start]))
        sign = 1 if _along(side, wing) else -1
        first, second = ("start", "end") if sign > 0 else ("end", "start")
        if c is None:
            if o.half(wing, "start") != o.half(wing, "end"):
                raise DomainError("half-arc directions disagree; supply the coloring")
            arcs.append(o.half(wing, "start") * sign)
        else:
            label = s.label(wing)
            items.append(Marked(label, c.color_of(label), wing))
            arcs.append(o.half(wing, first) * sign)
            arcs.append(o.half(wing, second) * sign)
    return RegionBoundary(region, tuple(items), tuple(arcs))


def classify_simple_region(rb: RegionBoundary) -> RegionKind:
    """Decide whether a region admits a flow without separatrices."""
    if len(rb.corners) == 1 and not rb.marked:
        return RegionKind.ELLIPTIC
    sources = rb.source_elements()
    sinks = rb.sink_elements()
    if len(sources) == 1 and len(sinks) == 1:
        return RegionKind.POLAR
    return RegionKind.REQUIRES_SEPARATRIX


# -- flows with a single fixed point ------------------------------------------

@dataclass(frozen=True)
class OneFixedPointFlow:
    """Each 1-cell is a single trajectory from the null-point to itself."""

    cells: tuple[tuple[str, int], ...]
    regions: tuple[tuple[str, RegionKind], ...]

    @property
    def directions(self) -> dict[str, int]:
        return dict(self.cells)

    @property
    def case(self) -> int:
        """Case number 1..4 for (A, B) = (+,+), (-,+), (+,-), (-,-) with C = +.

        A flow with C reversed is first replaced by its mirror image, which
        sends (A, B, C) to (-B, -A, -C); the case is thus a class invariant.
        """
        d = self.directions
        if d["C"] < 0:
            d = {"A": -d["B"], "B": -d["A"], "C": -d["C"]}
        return 1 + (d["A"] < 0) + 2 * (d["B"] < 0)

    def label(self) -> str:
        return ", ".join(("" if v > 0 else "-") + k for k, v in self.cells)

    def to_dict(self) -> dict:
        return {
            "cells": {k: v for k, v in self.cells},
            "regions": {r: k.value for r, k in self.regions},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "OneFixedPointFlow":
        return cls(
            tuple(sorted((k, int(v)) for k, v in data["cells"].items())),
            tuple((r, RegionKind(k)) for r, k in data["regions"].items()),
        )


def one_fixed_point_flow(s: StratifiedSurface, directions: Mapping[str, int]) -> OneFixedPointFlow:
    o = cell_orientation(s, directions)
    kinds = tuple((r, classify_simple_region(region_boundary(s, r, o))) for r in s.regions)
    return OneFixedPointFlow(tuple(sorted(directions.items())), kinds)


def _normal_c(s: StratifiedSurface) -> int:
    """Direction of C that runs from angle 12 to angle 2."""
    for a, b in s.one_cells["C"]:
        if (a, b) == (12, 2):
            return 1
        if (a, b) == (2, 12):
            return -1
    return 1


def enumerate_one_fixed_point(s: StratifiedSurface, normalize: bool = True) -> list[OneFixedPointFlow]:
    """Flows whose only fixed point is the null-point.

    With ``normalize`` the direction of C is fixed (12 to 2); this picks one
    flow from every mirror pair since the reflection reverses C.  Without it
    all valid labeled flows are returned.
    """
    if s.name is not SurfaceName.GIRLS and normalize:
        # the rotation of Boy's surface permutes the cells, so fixing C alone
        # is not a normal form there
        normalize = False
    c_dirs = (_normal_c(s),) if normalize else (1, -1)
    out = []
    for sc in c_dirs:
        for sa, sb in ((1, 1), (-1, 1), (1, -1), (-1, -1)):
            flow = one_fixed_point_flow(s, {"A": sa, "B": sb, "C": sc})
            if all(k is not RegionKind.REQUIRES_SEPARATRIX for _, k in flow.regions):
                out.append(flow)
    return out


def all_cell_orientations() -> list[dict[str, int]]:
    return [dict(zip("ABC", d)) for d in itertools.product((1, -1), repeat=3)]
