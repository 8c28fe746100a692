"""Stratified CW structures of the Boy's and Girl's surfaces.

Both surfaces carry one 0-cell (the triple point, called the null-point),
three 1-cells ``A``, ``B``, ``C`` (loops of double points) and four 2-cells.
The twelve angles around the null-point are numbered 1..12.  Every 1-cell
has four *wings* (the local sheets along the double curve); a wing starts
in one angle and ends in another, so the gluing data of a 1-cell is a list
of four angle pairs ``start -> end`` in the direction of the loop.

The preimage of the CW structure on the projective plane (the pullback)
has three vertices (one per sheet through the triple point), two edges per
1-cell and the same four faces.
"""

from __future__ import annotations

import itertools
import re
from collections import Counter, defaultdict
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

from .errors import DomainError

CELLS = ("A", "B", "C")
ANGLES = tuple(range(1, 13))


class SurfaceName(str, Enum):
    BOYS = "boys"
    GIRLS = "girls"

    @classmethod
    def parse(cls, value: "SurfaceName | str") -> "SurfaceName":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace("'", "").replace("’", "")
        for member in cls:
            if key in (member.value, member.value[:-1]):
                return member
        raise DomainError(f"unknown surface {value!r}; expected 'boys' or 'girls'")

    @property
    def title(self) -> str:
        return "Boy's" if self is SurfaceName.BOYS else "Girl's"


@dataclass(frozen=True, order=True)
class Wing:
    """One sheet of a 1-cell: runs along ``cell`` from angle ``start`` to ``end``."""

    cell: str
    start: int
    end: int

    @property
    def is_loop(self) -> bool:
        return self.start == self.end

    def __str__(self) -> str:
        return f"{self.cell}{self.start}-{self.end}"


@dataclass(frozen=True)
class Side:
    """One side of a 2-cell boundary walk: corner ``start``, cell, corner ``end``."""

    start: int
    cell: str
    primed: bool
    end: int


_TOKEN = re.compile(r"\d+|[A-Z]'?")


@dataclass(frozen=True)
class BoundaryWord:
    """Cyclic boundary of a 2-cell, alternating angle and 1-cell tokens.

    ``BoundaryWord.parse("9A'9")`` stores the cyclic word without the
    repeated closing angle.
    """

    tokens: tuple[str, ...]

    @classmethod
    def parse(cls, text: str) -> "BoundaryWord":
        compact = text.replace(" ", "").replace("\\-", "")
        tokens = _TOKEN.findall(compact)
        if "".join(tokens) != compact:
            raise DomainError(f"malformed boundary word {text!r}")
        if len(tokens) < 3 or tokens[0] != tokens[-1]:
            raise DomainError(f"boundary word {text!r} must start and end at the same angle")
        tokens = tokens[:-1]
        for i, tok in enumerate(tokens):
            if tok.isdigit() != (i % 2 == 0):
                raise DomainError(f"boundary word {text!r} does not alternate angles and cells")
            if not tok.isdigit() and tok[0] not in CELLS:
                raise DomainError(f"unknown 1-cell {tok!r} in {text!r}")
        return cls(tuple(tokens))

    def sides(self) -> tuple[Side, ...]:
        toks = self.tokens
        n = len(toks)
        out = []
        for i in range(0, n, 2):
            cell = toks[i + 1]
            out.append(Side(int(toks[i]), cell[0], cell.endswith("'"), int(toks[(i + 2) % n])))
        return tuple(out)

    def corners(self) -> tuple[int, ...]:
        return tuple(int(t) for t in self.tokens[::2])

    def __str__(self) -> str:
        return "".join(self.tokens) + self.tokens[0]


# -- literal data ------------------------------------------------------------

# Girl's surface, wings listed as start -> end along each loop.
GIRLS_ONE_CELLS: dict[str, tuple[tuple[int, int], ...]] = {
    "A": ((9, 9), (1, 6), (12, 10), (4, 7)),
    "B": ((3, 3), (7, 10), (4, 2), (8, 11)),
    "C": ((5, 6), (12, 2), (8, 5), (11, 1)),
}
GIRLS_TWO_CELLS = {
    "LD": "9A'9",
    "RD": "3B'3",
    "BR": "1A6C'5C'8B11C1",
    "CR": "2C12A'10B7A4B'2",
}
# Marked points of the planar model, one per wing.  The letters follow the
# published figures: c and d are the two copies of the fixed point on the
# boundary edge (the C-sides left unglued), g is the same surface point seen
# on the interior C-edge; a/e sit on the two lifts of A and b/f on those of B.
# The assignment is pinned by the per-region flow counts it must reproduce.
GIRLS_MARKED_POINTS = {
    ("A", 1, 6): "a",
    ("A", 4, 7): "a",
    ("B", 8, 11): "b",
    ("B", 7, 10): "b",
    ("C", 5, 6): "c",
    ("C", 8, 5): "d",
    ("A", 9, 9): "e",
    ("A", 12, 10): "e",
    ("B", 3, 3): "f",
    ("B", 4, 2): "f",
    ("C", 11, 1): "g",
    ("C", 12, 2): "g",
}
GIRLS_CLASSES = (("c", "d", "g"), ("b", "f"), ("a", "e"))

BOYS_TWO_CELLS = {
    "D9": "9A'9",
    "D3": "3B'3",
    "D5": "5C'5",
    "N": "1A6C'8B11C2B'4A7B10A'12C1",
}


# -- symmetries ---------------------------------------------------------------

@dataclass(frozen=True)
class Automorphism:
    """A symmetry of the gluing data.

    ``cells`` maps a 1-cell to ``(image, flipped)``; the angle, wing, region
    and label maps are induced.  ``reversed_regions`` lists the 2-cells whose
    boundary walk is traversed backwards by the image.
    """

    name: str
    cells: tuple[tuple[str, str, bool], ...]
    angles: tuple[tuple[int, int], ...]
    regions: tuple[tuple[str, str], ...]
    labels: tuple[tuple[str, str], ...]
    reversed_regions: frozenset[str] = frozenset()

    @cached_property
    def _cell_map(self) -> dict[str, tuple[str, bool]]:
        return {c: (img, flip) for c, img, flip in self.cells}

    @cached_property
    def _angle_map(self) -> dict[int, int]:
        return dict(self.angles)

    def angle(self, x: int) -> int:
        return self._angle_map[x]

    def region(self, r: str) -> str:
        return dict(self.regions)[r]

    def label(self, lab: str) -> str:
        return dict(self.labels)[lab]

    def cell(self, c: str) -> tuple[str, bool]:
        return self._cell_map[c]

    def wing(self, w: Wing) -> Wing:
        img, flip = self._cell_map[w.cell]
        s, e = self.angle(w.start), self.angle(w.end)
        return Wing(img, e, s) if flip else Wing(img, s, e)

    def reverses(self, region: str) -> bool:
        return region in self.reversed_regions

    @property
    def is_identity(self) -> bool:
        return all(c == img and not f for c, img, f in self.cells)

    def order(self) -> int:
        k, g = 1, self
        while not g.is_identity:
            g = compose(g, self)
            k += 1
        return k

    def as_table(self) -> dict:
        return {
            "name": self.name,
            "cells": {c: img + ("'" if f else "") for c, img, f in self.cells},
            "angles": {str(a): b for a, b in self.angles},
            "regions": dict(self.regions),
            "labels": dict(self.labels),
            "reversedRegions": sorted(self.reversed_regions),
        }

    @classmethod
    def from_table(cls, table: dict) -> "Automorphism":
        cells = tuple(
            (c, img[0], img.endswith("'")) for c, img in sorted(table["cells"].items())
        )
        return cls(
            name=table["name"],
            cells=cells,
            angles=tuple(sorted((int(a), int(b)) for a, b in table["angles"].items())),
            regions=tuple(sorted(table["regions"].items())),
            labels=tuple(sorted(table["labels"].items())),
            reversed_regions=frozenset(table.get("reversedRegions", ())),
        )


def compose(g: Automorphism, h: Automorphism) -> Automorphism:
    """Return ``g`` followed by ``h``."""
    cells = []
    for c, img, flip in g.cells:
        img2, flip2 = h.cell(img)
        cells.append((c, img2, flip != flip2))
    angles = tuple((a, h.angle(b)) for a, b in g.angles)
    regions = tuple((r, h.region(s)) for r, s in g.regions)
    labels = tuple((a, h.label(b)) for a, b in g.labels)
    rev = frozenset(r for r, s in g.regions if g.reverses(r) != h.reverses(s))
    return Automorphism(f"{g.name}*{h.name}", tuple(cells), angles, regions, labels, rev)


@dataclass(frozen=True)
class SymmetryGroup:
    generators: tuple[Automorphism, ...]
    elements: tuple[Automorphism, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def generator(self, name: str) -> Automorphism:
        for g in self.generators:
            if g.name == name:
                return g
        raise KeyError(name)


# -- the surface -------------------------------------------------------------

@dataclass(frozen=True, eq=True)
class StratifiedSurface:
    name: SurfaceName
    angles: tuple[int, ...]
    one_cells: dict[str, tuple[tuple[int, int], ...]]
    two_cells: dict[str, BoundaryWord]
    marked_points: dict[Wing, str]
    marked_point_classes: tuple[tuple[str, ...], ...]
    symmetry: SymmetryGroup | None = field(default=None, compare=False)

    __hash__ = None  # type: ignore[assignment]

    @property
    def regions(self) -> tuple[str, ...]:
        return tuple(self.two_cells)

    def wings(self) -> list[Wing]:
        return [Wing(c, s, e) for c, pairs in self.one_cells.items() for s, e in pairs]

    def wing_for(self, side: Side) -> Wing:
        for s, e in self.one_cells.get(side.cell, ()):
            if {s, e} == {side.start, side.end} and (s == e) == (side.start == side.end):
                return Wing(side.cell, s, e)
        raise DomainError(f"side {side} matches no wing of {side.cell}")

    def boundary_sides(self, region: str) -> tuple[tuple[Side, Wing], ...]:
        if region not in self.two_cells:
            raise DomainError(f"region {region!r} is not a 2-cell of the {self.name.title} surface")
        return tuple((side, self.wing_for(side)) for side in self.two_cells[region].sides())

    def label(self, wing: Wing) -> str:
        return self.marked_points[wing]

    @cached_property
    def labels(self) -> tuple[str, ...]:
        return tuple(sorted(set(self.marked_points.values())))

    def class_of(self, label: str) -> tuple[str, ...]:
        for cls in self.marked_point_classes:
            if label in cls:
                return cls
        raise DomainError(f"unknown marked point {label!r}")

    def half_axes(self, angle: int) -> list[tuple[str, str]]:
        """The two 1-cell ends bounding ``angle``, as ``(cell, 's'|'e')``."""
        out = []
        for c, pairs in self.one_cells.items():
            for s, e in pairs:
                if s == angle:
                    out.append((c, "s"))
                if e == angle:
                    out.append((c, "e"))
        return out

    def region_of_angle(self, angle: int) -> str:
        for r, word in self.two_cells.items():
            if angle in word.corners():
                return r
        raise DomainError(f"angle {angle} is not a corner of any 2-cell")


def _wing_key(w: Wing) -> tuple[str, int, int]:
    return (w.cell, w.start, w.end)


def _derive_one_cells(two_cells: dict[str, BoundaryWord]) -> dict[str, tuple[tuple[int, int], ...]]:
    """Read wing directions off boundary words (unprimed = along the loop)."""
    cells: dict[str, list[tuple[int, int]]] = {c: [] for c in CELLS}
    for word in two_cells.values():
        for side in word.sides():
            pair = (side.end, side.start) if side.primed else (side.start, side.end)
            cells[side.cell].append(pair)
    return {c: tuple(p) for c, p in cells.items()}


def _axes(one_cells) -> dict[tuple[str, str], int] | None:
    """Group the six 1-cell ends into three coordinate axes.

    Two ends lie on one axis exactly when they never bound a common angle.
    Returns ``{half_axis: axis_index}`` or ``None`` for inconsistent data.
    """
    ends = [(c, t) for c in CELLS for t in "se"]
    bounding = set()
    per_angle: dict[int, list[tuple[str, str]]] = defaultdict(list)
    for c, pairs in one_cells.items():
        for s, e in pairs:
            per_angle[s].append((c, "s"))
            per_angle[e].append((c, "e"))
    for sides in per_angle.values():
        if len(sides) != 2:
            return None
        bounding.add(frozenset(sides))
    free = [frozenset(p) for p in itertools.combinations(ends, 2) if frozenset(p) not in bounding]
    for matching in itertools.combinations(free, 3):
        if len(frozenset().union(*matching)) == 6:
            axes = sorted(sorted(m) for m in matching)
            return {h: i for i, m in enumerate(axes) for h in m}
    return None


def _planes(one_cells) -> dict[int, str] | None:
    """Map each angle to the vertex lift (coordinate plane) containing it."""
    axes = _axes(one_cells)
    if axes is None:
        return None
    groups: dict[frozenset[int], list[int]] = defaultdict(list)
    for c, pairs in one_cells.items():
        for s, e in pairs:
            pass
    per_angle: dict[int, set[tuple[str, str]]] = defaultdict(set)
    for c, pairs in one_cells.items():
        for s, e in pairs:
            per_angle[s].add((c, "s"))
            per_angle[e].add((c, "e"))
    for angle, sides in per_angle.items():
        plane = frozenset(axes[h] for h in sides)
        if len(plane) != 2:
            return None
        groups[plane].append(angle)
    if len(groups) != 3 or any(len(v) != 4 for v in groups.values()):
        return None
    ordered = sorted(groups.values(), key=min)
    return {a: f"v{i + 1}" for i, angles in enumerate(ordered) for a in angles}


def find_automorphisms(one_cells, two_cells: dict[str, BoundaryWord]) -> list[Automorphism]:
    """All symmetries of the gluing data, identity first.

    A candidate permutes the 1-cells, possibly reversing each; the induced
    map on 1-cell ends fixes the map on angles (an angle is determined by
    its two bounding ends) and must carry wings onto wings.
    """
    per_angle: dict[int, frozenset[tuple[str, str]]] = {}
    tmp: dict[int, set] = defaultdict(set)
    for c, pairs in one_cells.items():
        for s, e in pairs:
            tmp[s].add((c, "s"))
            tmp[e].add((c, "e"))
    per_angle = {a: frozenset(v) for a, v in tmp.items()}
    by_sides = {v: a for a, v in per_angle.items()}
    wings = {(c, s, e) for c, pairs in one_cells.items() for s, e in pairs}
    result = []
    for perm in itertools.permutations(CELLS):
        for flips in itertools.product((False, True), repeat=3):
            cmap = {c: (perm[i], flips[i]) for i, c in enumerate(CELLS)}

            def end_image(h):
                img, flip = cmap[h[0]]
                return (img, {"s": "e", "e": "s"}[h[1]] if flip else h[1])

            amap = {}
            for a, sides in per_angle.items():
                image = frozenset(end_image(h) for h in sides)
                if image not in by_sides:
                    break
                amap[a] = by_sides[image]
            else:
                def wing_image(c, s, e):
                    img, flip = cmap[c]
                    return (img, amap[e], amap[s]) if flip else (img, amap[s], amap[e])

                if {wing_image(*w) for w in wings} != wings:
                    continue
                regions, reversed_regions = _region_map(two_cells, amap, cmap, one_cells)
                if regions is None:
                    continue
                result.append(
                    Automorphism(
                        name="",
                        cells=tuple((c, cmap[c][0], cmap[c][1]) for c in CELLS),
                        angles=tuple(sorted(amap.items())),
                        regions=tuple(sorted(regions.items())),
                        labels=(),
                        reversed_regions=frozenset(reversed_regions),
                    )
                )
    result.sort(key=lambda g: (not g.is_identity, g.order(), g.cells))
    return result


def _region_map(two_cells, amap, cmap, one_cells):
    """Match each 2-cell with its image; a region is reversed when the image
    walk runs against the target walk (decided on sides, so single-corner
    regions are handled too)."""
    wings = {(c, s, e) for c, pairs in one_cells.items() for s, e in pairs}

    def wing_of(side):
        for c, s, e in wings:
            if c == side.cell and {s, e} == {side.start, side.end} and (s == e) == (side.start == side.end):
                return (c, s, e)
        return None

    def along(side, w):
        if w[1] == w[2]:
            return not side.primed
        return (side.start, side.end) == (w[1], w[2])

    regions, rev = {}, set()
    for r, word in two_cells.items():
        side = word.sides()[0]
        w = wing_of(side)
        img, flip = cmap[w[0]]
        iw = (img, amap[w[2]], amap[w[1]]) if flip else (img, amap[w[1]], amap[w[2]])
        forward = along(side, w) != flip
        image_corners = tuple(amap[x] for x in word.corners())
        for t, target in two_cells.items():
            for tside in target.sides():
                if wing_of(tside) == iw:
                    reversed_ = along(tside, iw) != forward
                    expect = image_corners[::-1] if reversed_ else image_corners
                    if not _is_rotation(expect, target.corners()):
                        return None, None
                    regions[r] = t
                    if reversed_:
                        rev.add(r)
        if r not in regions:
            return None, None
    return regions, rev


def _is_rotation(a, b) -> bool:
    if len(a) != len(b):
        return False
    return any(tuple(a[i:] + a[:i]) == tuple(b) for i in range(len(a)))


def _with_labels(g: Automorphism, marked: dict[Wing, str], name: str) -> Automorphism:
    labels = {}
    for w, lab in marked.items():
        labels[lab] = marked[g.wing(w)]
    return Automorphism(name, g.cells, g.angles, g.regions, tuple(sorted(labels.items())), g.reversed_regions)


def _close(generators: list[Automorphism]) -> tuple[Automorphism, ...]:
    identity_cells = tuple((c, c, False) for c in CELLS)
    seen: dict[tuple, Automorphism] = {}
    frontier = list(generators)
    for g in frontier:
        seen.setdefault(g.cells, g)
    while frontier:
        nxt = []
        for g in frontier:
            for h in generators:
                k = compose(g, h)
                if k.cells not in seen:
                    seen[k.cells] = k
                    nxt.append(k)
        frontier = nxt
    elems = sorted(seen.values(), key=lambda g: (g.cells != identity_cells, g.order(), g.cells))
    return tuple(replace(g, name="identity") if g.is_identity else g for g in elems)


# -- construction ------------------------------------------------------------

def build_surface(name: SurfaceName | str) -> StratifiedSurface:
    """Build the CW structure of the named surface."""
    name = SurfaceName.parse(name)
    if name is SurfaceName.GIRLS:
        two_cells = {r: BoundaryWord.parse(t) for r, t in GIRLS_TWO_CELLS.items()}
        one_cells = dict(GIRLS_ONE_CELLS)
        marked = {Wing(*k): v for k, v in GIRLS_MARKED_POINTS.items()}
        classes = GIRLS_CLASSES
    else:
        two_cells = {r: BoundaryWord.parse(t) for r, t in BOYS_TWO_CELLS.items()}
        one_cells = _derive_one_cells(two_cells)
        marked, classes = _boys_marked_points(one_cells)
    autos = find_automorphisms(one_cells, two_cells)
    if name is SurfaceName.GIRLS:
        refl = next(g for g in autos if g.order() == 2)
        gens = [_with_labels(refl, marked, "reflection")]
    else:
        rot = next(g for g in autos if g.order() == 3)
        refl = next(g for g in autos if g.order() == 2)
        gens = [_with_labels(rot, marked, "rotation"), _with_labels(refl, marked, "reflection")]
    group = SymmetryGroup(tuple(gens), _close(gens))
    return StratifiedSurface(
        name=name,
        angles=ANGLES,
        one_cells=one_cells,
        two_cells=two_cells,
        marked_points=marked,
        marked_point_classes=tuple(tuple(c) for c in classes),
        symmetry=group,
    )


@lru_cache(maxsize=None)
def get_surface(name: SurfaceName | str) -> StratifiedSurface:
    """Shared, memoised instance of :func:`build_surface`."""
    return build_surface(SurfaceName.parse(name))


def _boys_marked_points(one_cells):
    """Label the fixed point on each lifted edge of Boy's surface ``a1``..``c2``."""
    planes = _planes(one_cells)
    marked = {}
    classes = []
    for c in CELLS:
        groups: dict[str, list[Wing]] = defaultdict(list)
        for s, e in one_cells[c]:
            groups[planes[s]].append(Wing(c, s, e))
        labels = []
        for i, plane in enumerate(sorted(groups)):
            lab = f"{c.lower()}{i + 1}"
            labels.append(lab)
            for w in groups[plane]:
                marked[w] = lab
        classes.append(tuple(labels))
    return marked, tuple(classes)


# -- validation --------------------------------------------------------------

@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]


def validate_complex(s: StratifiedSurface) -> ValidationReport:
    checks = [
        _check_angles(s),
        _check_words(s),
        _check_image_euler(s),
        _check_pullback_euler(s),
        _check_marked_points(s),
        _check_symmetry(s),
    ]
    return ValidationReport(tuple(checks))


def _check_angles(s: StratifiedSurface) -> Check:
    counts = Counter(a for pairs in s.one_cells.values() for p in pairs for a in p)
    bad = {a: counts.get(a, 0) for a in s.angles if counts.get(a, 0) != 2}
    extra = sorted(set(counts) - set(s.angles))
    ok = not bad and not extra
    detail = "" if ok else f"occurrences {bad}" + (f", unknown angles {extra}" if extra else "")
    return Check("angle-double-occurrence", ok, detail)


def _check_words(s: StratifiedSurface) -> Check:
    used: Counter = Counter()
    problems = []
    for r, word in s.two_cells.items():
        conventions = set()
        for side in word.sides():
            try:
                w = s.wing_for(side)
            except DomainError as exc:
                problems.append(f"{r}: {exc}")
                continue
            used[_wing_key(w)] += 1
            if not w.is_loop:
                along = (side.start, side.end) == (w.start, w.end)
                conventions.add(along != side.primed)
        if len(conventions) > 1:
            problems.append(f"{r}: inconsistent primes in {word}")
    for w in s.wings():
        if used[_wing_key(w)] != 1:
            problems.append(f"wing {w} used {used[_wing_key(w)]} times")
    corners = Counter(x for word in s.two_cells.values() for x in word.corners())
    if any(corners.get(a, 0) != 1 for a in s.angles):
        problems.append("every angle must be a corner of exactly one 2-cell")
    return Check("boundary-word-gluing", not problems, "; ".join(problems))


def _check_image_euler(s: StratifiedSurface) -> Check:
    chi = 1 - len(s.one_cells) + len(s.two_cells)
    return Check("image-euler-characteristic", chi == 2, f"chi = {chi}")


def _check_pullback_euler(s: StratifiedSurface) -> Check:
    try:
        cx = _pullback(s)
    except DomainError as exc:
        return Check("pullback-euler-characteristic", False, str(exc))
    chi = cx.euler_characteristic
    return Check("pullback-euler-characteristic", chi == 1, f"{cx.counts} chi = {chi}")


def _check_marked_points(s: StratifiedSurface) -> Check:
    problems = []
    if set(s.marked_points) != set(s.wings()):
        problems.append("every wing must carry exactly one marked point")
    labels = [lab for cls in s.marked_point_classes for lab in cls]
    if sorted(labels) != sorted(set(s.marked_points.values())) or len(labels) != len(set(labels)):
        problems.append("classes must partition the marked-point labels")
    for cls in s.marked_point_classes:
        cells = {w.cell for w, lab in s.marked_points.items() if lab in cls}
        if len(cells) != 1:
            problems.append(f"class {cls} spans cells {sorted(cells)}")
    return Check("marked-point-classes", not problems, "; ".join(problems))


def _check_symmetry(s: StratifiedSurface) -> Check:
    if s.symmetry is None:
        return Check("symmetry-automorphisms", False, "no symmetry group")
    wings = set(s.wings())
    for g in s.symmetry.generators:
        if {g.wing(w) for w in wings} != wings:
            return Check("symmetry-automorphisms", False, f"{g.name} does not preserve the wings")
        for w, lab in s.marked_points.items():
            if s.marked_points[g.wing(w)] != g.label(lab):
                return Check("symmetry-automorphisms", False, f"{g.name} does not preserve labels")
    return Check("symmetry-automorphisms", True, f"group order {s.symmetry.order}")


# -- pullback to the projective plane ------------------------------------------

@dataclass(frozen=True)
class LiftedEdge:
    name: str
    cell: str
    tail: str
    head: str
    wings: tuple[Wing, Wing]


@dataclass(frozen=True)
class CWComplex:
    """The induced CW structure on the projective plane."""

    vertices: tuple[tuple[str, tuple[int, ...]], ...]
    edges: tuple[LiftedEdge, ...]
    faces: tuple[str, ...]

    @property
    def counts(self) -> tuple[int, int, int]:
        return (len(self.vertices), len(self.edges), len(self.faces))

    @property
    def euler_characteristic(self) -> int:
        v, e, f = self.counts
        return v - e + f

    def edge_of(self, wing: Wing) -> LiftedEdge:
        for e in self.edges:
            if wing in e.wings:
                return e
        raise KeyError(wing)

    def vertex_of(self, angle: int) -> str:
        for name, angles in self.vertices:
            if angle in angles:
                return name
        raise KeyError(angle)


def _pullback(s: StratifiedSurface) -> CWComplex:
    planes = _planes(s.one_cells)
    if planes is None:
        raise DomainError("angles do not group into three coordinate planes")
    edges = []
    for c in sorted(s.one_cells):
        groups: dict[str, list[Wing]] = defaultdict(list)
        for st, en in s.one_cells[c]:
            groups[planes[st]].append(Wing(c, st, en))
        if len(groups) != 2 or any(len(g) != 2 for g in groups.values()):
            raise DomainError(f"wings of {c} do not pair into two lifted edges")
        for i, tail in enumerate(sorted(groups)):
            w1, w2 = sorted(groups[tail])
            if planes[w1.end] != planes[w2.end]:
                raise DomainError(f"wings {w1} and {w2} end on different sheets")
            edges.append(LiftedEdge(f"{c}{i + 1}", c, tail, planes[w1.end], (w1, w2)))
    verts = defaultdict(list)
    for a, v in planes.items():
        verts[v].append(a)
    vertices = tuple((v, tuple(sorted(verts[v]))) for v in sorted(verts))
    return CWComplex(vertices, tuple(edges), tuple(s.two_cells))


def pullback_complex(s: StratifiedSurface) -> CWComplex:
    """Lift the stratification to the projective plane.

    The triple point has three preimages, each double-point loop two.
    """
    report = validate_complex(s)
    for name in ("angle-double-occurrence", "boundary-word-gluing"):
        if not report[name].passed:
            raise DomainError(f"invalid surface: {name}: {report[name].detail}")
    return _pullback(s)


# -- planar models -----------------------------------------------------------

@dataclass(frozen=True)
class GluingResult:
    glued: frozenset[str]
    admissible: bool
    reason: str
    euler_characteristic: int | None = None
    boundary_components: int | None = None
    boundary: tuple[tuple[str, str, int], ...] = ()


def _polygons(s: StratifiedSurface):
    """Each 2-cell as a list of ``(wing, sign)``; sign +1 walks along the loop."""
    polys = []
    for r, word in s.two_cells.items():
        sides = []
        for side in word.sides():
            w = s.wing_for(side)
            if w.is_loop:
                sign = -1 if side.primed else 1
            else:
                sign = 1 if (side.start, side.end) == (w.start, w.end) else -1
            sides.append((w, sign))
        polys.append((r, sides))
    return polys


class _UnionFind:
    def __init__(self, items: Iterable):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def classes(self) -> int:
        return len({self.find(x) for x in self.parent})


def glue(s: StratifiedSurface, glued: Iterable[str]) -> GluingResult:
    """Glue the 2-cells along the named lifted edges and classify the result.

    Non-orientable gluings (a 2-cell side glued to a side traversed the same
    way, possibly through a chain of cells) contain a Moebius band and are
    rejected first.  The remaining complex must be a disk whose boundary
    word has the form ``w w`` so that antipodal boundary points are glued.
    """
    cx = pullback_complex(s)
    glued = frozenset(glued)
    unknown = glued - {e.name for e in cx.edges}
    if unknown:
        raise DomainError(f"unknown lifted edges {sorted(unknown)}")
    polys = _polygons(s)
    where: dict[Wing, tuple[int, int, int]] = {}
    corners = []
    for p, (_, sides) in enumerate(polys):
        for k, (w, sign) in enumerate(sides):
            where[w] = (p, k, sign)
            corners.append((p, k))
    uf = _UnionFind(corners)

    def corner(p, k):
        return (p, k % len(polys[p][1]))

    constraints: list[tuple[int, int, int]] = []  # eps[p] * eps[q] must equal value
    for e in cx.edges:
        if e.name not in glued:
            continue
        (p, i, s1), (q, j, s2) = where[e.wings[0]], where[e.wings[1]]
        start1 = corner(p, i if s1 > 0 else i + 1)
        end1 = corner(p, i + 1 if s1 > 0 else i)
        start2 = corner(q, j if s2 > 0 else j + 1)
        end2 = corner(q, j + 1 if s2 > 0 else j)
        uf.union(start1, start2)
        uf.union(end1, end2)
        constraints.append((p, q, -s1 * s2))

    eps = _orient(len(polys), constraints)
    if eps is None:
        return GluingResult(glued, False, "mobius")
    if any(e is None for e in eps):
        return GluingResult(glued, False, "disconnected")
    free = [(p, k) for p, (_, sides) in enumerate(polys) for k in range(len(sides))
            if cx.edge_of(sides[k][0]).name not in glued]
    v = uf.classes()
    chi = v - (len(glued) + len(free)) + len(polys)
    if not free:
        return GluingResult(glued, False, "closed", chi, 0)
    # boundary graph: vertex classes joined by free sides
    ends = {}
    degree: Counter = Counter()
    for p, k in free:
        a, b = uf.find(corner(p, k)), uf.find(corner(p, k + 1))
        if eps[p] < 0:
            a, b = b, a
        ends[(p, k)] = (a, b)
        degree[a] += 1
        degree[b] += 1
    bu = _UnionFind(degree)
    for a, b in ends.values():
        bu.union(a, b)
    components = bu.classes()
    if chi != 1 or components != 1 or any(d != 2 for d in degree.values()):
        return GluingResult(glued, False, "not-disk", chi, components)
    # walk the boundary circle in the induced orientation
    start_of = {ab[0]: pk for pk, ab in ends.items()}
    if len(start_of) != len(free):
        return GluingResult(glued, False, "not-disk", chi, components)
    walk = []
    pk = min(free)
    for _ in free:
        p, k = pk
        w, sign = polys[p][1][k]
        walk.append((cx.edge_of(w).name, str(w), eps[p] * sign))
        pk = start_of[ends[pk][1]]
    half = len(walk) // 2
    antipodal = len(walk) % 2 == 0 and all(
        walk[i][0] == walk[i + half][0] and walk[i][2] == walk[i + half][2]
        and walk[i][1] != walk[i + half][1]
        for i in range(half)
    )
    if not antipodal:
        return GluingResult(glued, False, "not-antipodal", chi, components, tuple(walk))
    return GluingResult(glued, True, "disk", chi, components, tuple(walk))


def _orient(n: int, constraints) -> list[int | None] | None:
    eps: list[int | None] = [None] * n
    adj: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for p, q, val in constraints:
        adj[p].append((q, val))
        adj[q].append((p, val))
    if n:
        eps[0] = 1
        stack = [0]
        while stack:
            p = stack.pop()
            for q, val in adj[p]:
                want = eps[p] * val
                if eps[q] is None:
                    eps[q] = want
                    stack.append(q)
                elif eps[q] != want:
                    return None
    return eps


def enumerate_planar_gluings(s: StratifiedSurface) -> list[frozenset[str]]:
    """Every set of lifted edges whose gluing yields an antipodal-disk model."""
    names = [e.name for e in pullback_complex(s).edges]
    found = []
    for k in range(len(names) + 1):
        for subset in itertools.combinations(names, k):
            if glue(s, subset).admissible:
                found.append(frozenset(subset))
    return found


@dataclass(frozen=True)
class PlanarModel:
    """Disk model: boundary sides (identified antipodally) and glued interior."""

    polygon: tuple[tuple[str, str, int], ...]
    interior: frozenset[str]
    marked_points: tuple[tuple[str, str], ...]

    def pairing(self) -> list[tuple[int, int]]:
        half = len(self.polygon) // 2
        return [(i, i + half) for i in range(half)]


def planar_model(s: StratifiedSurface) -> PlanarModel:
    gluings = enumerate_planar_gluings(s)
    if len(gluings) != 1:
        raise DomainError(f"expected a unique planar model, found {len(gluings)}")
    res = glue(s, gluings[0])
    cx = pullback_complex(s)
    boundary_wings = {w for _, w, _ in res.boundary}
    positions = []
    for w, lab in sorted(s.marked_points.items()):
        where = "boundary" if str(w) in boundary_wings else f"interior:{cx.edge_of(w).name}"
        positions.append((lab, where))
    return PlanarModel(res.boundary, res.glued, tuple(sorted(set(positions))))


def iter_regions(s: StratifiedSurface) -> Iterator[str]:
    yield from s.two_cells
