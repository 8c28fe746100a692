"""Separatrix diagrams inside a region and their composition into flows.

A region is a disk whose boundary alternates corners (null-point angles)
and marked fixed points.  A flow inside it is a plane graph: the boundary
cycle plus separatrices.  The graph is kept as a list of faces, each face
a closed walk of ``(vertex, edge)`` pairs (leave ``vertex`` along ``edge``).
Vertices ``0..n-1`` are the boundary items, edges ``0..n-1`` the boundary
arcs (arc ``i`` joins item ``i`` and item ``i+1``).

Rules for a valid diagram:

* a Green point is either the active source of its region or a boundary
  saddle receiving one separatrix from a source element;
* a Red point is either an active sink or a boundary saddle sending one
  separatrix to a sink element;
* an interior saddle has four separatrices alternating in/out, its stable
  ones coming from sources and its unstable ones going to sinks;
* separatrices never join two saddles and never touch a transit corner;
* every face has exactly one source sector and exactly one sink sector.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from functools import lru_cache
from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator, Mapping, Sequence

from .cw_complex import Automorphism, StratifiedSurface, SurfaceName, get_surface
from .errors import DomainError
from .flow_model import (
    Color,
    Coloring,
    Corner,
    CornerRole,
    Marked,
    RegionBoundary,
    derive_orientations,
    region_boundary,
)

Walk = tuple[tuple[int, int], ...]

SOURCE, SINK, SADDLE = "source", "sink", "saddle"


@dataclass(frozen=True)
class RegionFlow:
    """A separatrix diagram in canonical numbering.

    ``states`` gives, per boundary item, ``source``/``sink``/``saddle`` for
    marked points and the corner role for corners.  ``interior`` lists the
    kinds of interior vertices ``n, n+1, ...``; ``edges`` the separatrices
    ``n, n+1, ...`` as ``(tail, head)``.
    """

    boundary: RegionBoundary
    states: tuple[str, ...]
    interior: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]
    faces: tuple[Walk, ...]

    @property
    def region(self) -> str:
        return self.boundary.region

    @property
    def n(self) -> int:
        return len(self.boundary.items)

    def name(self, v: int) -> str:
        if v < self.n:
            return self.boundary.items[v].name
        kind = self.interior[v - self.n]
        same = [i for i, k in enumerate(self.interior) if k == kind]
        return f"{kind[:2]}{same.index(v - self.n) + 1}"

    def chords(self) -> list[tuple[str, str]]:
        return [(self.name(t), self.name(h)) for t, h in self.edges]

    @property
    def separatrix_count(self) -> int:
        return len(self.edges)

    def interior_count(self, kind: str) -> int:
        return sum(1 for k in self.interior if k == kind)

    def active(self) -> list[tuple[str, str]]:
        """Per face, the items holding its source sector and its sink sector."""
        out = []
        for face in self.faces:
            src = snk = None
            for v, kind in _sectors(face, self._tail, self._head):
                if kind == "out":
                    src = v
                elif kind == "in":
                    snk = v
            out.append((self.name(src), self.name(snk)))
        return out

    def _tail(self, e: int) -> int:
        return self._ends(e)[0]

    def _head(self, e: int) -> int:
        return self._ends(e)[1]

    def _ends(self, e: int) -> tuple[int, int]:
        n = self.n
        if e < n:
            return _arc_ends(self.boundary, e)
        return self.edges[e - n]

    def code(self) -> tuple:
        return (self.states, self.interior, self.edges, self.faces)

    def to_dict(self) -> dict:
        return {
            "region": self.region,
            "items": list(self.boundary.names()),
            "states": list(self.states),
            "interior": list(self.interior),
            "separatrices": [list(e) for e in self.edges],
            "faces": [[list(p) for p in f] for f in self.faces],
        }


def _arc_ends(rb: RegionBoundary, i: int) -> tuple[int, int]:
    n = len(rb.items)
    j = (i + 1) % n
    return (i, j) if rb.arcs[i] > 0 else (j, i)


def _sectors(face: Walk, tail, head) -> Iterator[tuple[int, str]]:
    """Yield ``(vertex, 'out'|'in'|'mixed')`` for every corner of a face."""
    L = len(face)
    for k, (v, e_out) in enumerate(face):
        e_in = face[k - 1][1]
        a = tail(e_in) == v
        b = tail(e_out) == v
        yield v, ("out" if a and b else "in" if not a and not b else "mixed")


# -- the search ----------------------------------------------------------------

@dataclass
class _Map:
    n: int
    roles: list[str]  # per vertex: source, sink, saddle_in, saddle_out, transit, saddle
    ends: list[tuple[int, int]]
    faces: list[list[tuple[int, int]]]

    def copy(self) -> "_Map":
        return _Map(self.n, list(self.roles), list(self.ends), [list(f) for f in self.faces])

    def positions(self, v: int) -> list[tuple[int, int]]:
        return [(fi, k) for fi, f in enumerate(self.faces) for k, (u, _) in enumerate(f) if u == v]

    def chord(self, fi: int, i: int, j: int, tail_at_i: bool) -> "_Map":
        m = self.copy()
        W = m.faces[fi]
        L = len(W)
        vi, vj = W[i][0], W[j][0]
        c = len(m.ends)
        m.ends.append((vi, vj) if tail_at_i else (vj, vi))
        a = [(vi, c)] + [W[(j + t) % L] for t in range((i - j) % L)]
        b = [(vj, c)] + [W[(i + t) % L] for t in range((j - i) % L)]
        m.faces[fi] = a
        m.faces.append(b)
        return m

    def pendant(self, fi: int, i: int, role: str, outward: bool) -> tuple["_Map", int]:
        m = self.copy()
        W = m.faces[fi]
        vi = W[i][0]
        x = len(m.roles)
        m.roles.append(role)
        c = len(m.ends)
        m.ends.append((vi, x) if outward else (x, vi))
        m.faces[fi] = W[:i] + [(vi, c), (x, c)] + W[i:]
        return m, x


def _initial(rb: RegionBoundary, states: Sequence[str]) -> _Map:
    n = len(rb.items)
    roles = []
    for item, st in zip(rb.items, states):
        if isinstance(item, Corner):
            roles.append(item.role.value)
        elif st == SADDLE:
            roles.append("saddle_in" if item.color is Color.GREEN else "saddle_out")
        else:
            roles.append(st)
    ends = [_arc_ends(rb, i) for i in range(n)]
    return _Map(n, roles, ends, [[(i, i) for i in range(n)]])


@dataclass
class _Budget:
    saddles: int
    sinks: int
    sources: int


def _search(m: _Map, tasks: list[tuple[str, int]], budget: _Budget, seen: set) -> Iterator[_Map]:
    if not tasks:
        # checkpoint between saddles: drop maps already reached another way
        key = (_partial_code(m), budget.saddles, budget.sinks, budget.sources)
        if key in seen:
            return
        seen.add(key)
        if budget.saddles:
            yield from _new_saddle(m, budget, seen)
        elif budget.sinks == 0 and budget.sources == 0:
            yield m
        return
    kind, v = tasks[0]
    rest = tasks[1:]
    want = SOURCE if kind == "in" else SINK
    last = m.roles[v] == SADDLE and not any(u == v for _, u in rest)
    for fi, p in m.positions(v):
        W = m.faces[fi]
        if last and _sector_kind(m, W, p) != ("in" if kind == "out" else "out"):
            # the fourth separatrix closes the alternation in/out/in/out
            continue
        for j, (u, _) in enumerate(W):
            if j != p and m.roles[u] == want:
                yield from _search(m.chord(fi, p, j, tail_at_i=(kind == "out")), rest, budget, seen)
        spare = budget.sinks if want == SINK else budget.sources
        if spare:
            m2, _ = m.pendant(fi, p, want, outward=(kind == "out"))
            b2 = replace(budget, **{"sinks" if want == SINK else "sources": spare - 1})
            yield from _search(m2, rest, b2, seen)


def _new_saddle(m: _Map, budget: _Budget, seen: set) -> Iterator[_Map]:
    b2 = replace(budget, saddles=budget.saddles - 1)
    for fi, W in enumerate(m.faces):
        for k, (u, _) in enumerate(W):
            if m.roles[u] == SOURCE:
                m2, x = m.pendant(fi, k, SADDLE, outward=True)
                yield from _search(m2, [("out", x), ("in", x), ("out", x)], b2, seen)
            elif m.roles[u] == SINK:
                m2, x = m.pendant(fi, k, SADDLE, outward=False)
                yield from _search(m2, [("in", x), ("out", x), ("in", x)], b2, seen)


def _sector_kind(m: _Map, W: list[tuple[int, int]], k: int) -> str:
    v = W[k][0]
    a = m.ends[W[k - 1][1]][0] == v
    b = m.ends[W[k][1]][0] == v
    return "out" if a and b else "in" if not a and not b else "mixed"


def _partial_code(m: _Map) -> tuple:
    n = m.n
    rb = RegionBoundary("", (), tuple(1 if m.ends[i][0] == i else -1 for i in range(n)))
    f = _canonical(rb, (), m)
    return (tuple(m.roles[:n]), f.interior, f.edges, f.faces)


def _valid(m: _Map) -> bool:
    tail = lambda e: m.ends[e][0]
    head = lambda e: m.ends[e][1]
    for face in m.faces:
        counts = {"out": 0, "in": 0, "mixed": 0}
        for v, kind in _sectors(tuple(face), tail, head):
            if m.roles[v] == SADDLE and kind != "mixed":
                return False
            counts[kind] += 1
        if counts["out"] != 1 or counts["in"] != 1:
            return False
    return True


def _canonical(rb: RegionBoundary, states: tuple[str, ...], m: _Map) -> RegionFlow:
    n = m.n
    rot: dict[tuple[int, int], int] = {}
    for face in m.faces:
        for k, (v, e_out) in enumerate(face):
            rot[(v, face[k - 1][1])] = e_out
    vname = {i: i for i in range(n)}
    ename = {i: i for i in range(n)}
    order = list(range(n))
    start = {i: (i - 1) % n for i in range(n)}
    q = 0
    while q < len(order):
        v = order[q]
        q += 1
        e = start[v]
        seen = set()
        while e not in seen:
            seen.add(e)
            if e not in ename:
                ename[e] = len(ename)
            t, h = m.ends[e]
            w = h if t == v else t
            if w not in vname:
                vname[w] = len(vname)
                order.append(w)
                start[w] = e
            if v < n and e == v:
                break
            e = rot[(v, e)]
    inv_e = sorted(ename, key=ename.get)
    edges = tuple((vname[m.ends[e][0]], vname[m.ends[e][1]]) for e in inv_e[n:])
    interior = tuple(m.roles[v] for v in order[n:])
    faces = []
    for face in m.faces:
        walk = [(vname[v], ename[e]) for v, e in face]
        k = walk.index(min(walk))
        faces.append(tuple(walk[k:] + walk[:k]))
    return RegionFlow(rb, states, interior, edges, tuple(sorted(faces)))


def _to_map(f: RegionFlow) -> _Map:
    rb = f.boundary
    n = f.n
    m = _initial(rb, f.states)
    roles = m.roles + list(f.interior)
    ends = m.ends + list(f.edges)
    return _Map(n, roles, ends, [list(w) for w in f.faces])


def point_states(rb: RegionBoundary) -> Iterator[tuple[str, ...]]:
    """All assignments active/saddle to the marked points of ``rb``."""
    options = []
    for item in rb.items:
        if isinstance(item, Corner):
            options.append((item.role.value,))
        else:
            active = SOURCE if item.color is Color.GREEN else SINK
            options.append((active, SADDLE))
    yield from itertools.product(*options)


def enumerate_region_flows(
    rb: RegionBoundary,
    allow_interior_saddles: bool = False,
    *,
    states: Sequence[str] | None = None,
    saddles: int = 0,
    sinks: int = 0,
    sources: int = 0,
) -> list[RegionFlow]:
    """Every valid diagram of ``rb``, deduplicated and sorted.

    ``states`` pins the marked points (``source``/``sink``/``saddle``); by
    default every combination is tried.  Interior vertices are used only
    with ``allow_interior_saddles`` and must all be used.
    """
    if not allow_interior_saddles and (saddles or sinks or sources):
        raise DomainError("interior fixed points need allow_interior_saddles")
    if not rb.source_elements() and not sources:
        return []
    combos = [tuple(states)] if states is not None else list(point_states(rb))
    found: dict[tuple, RegionFlow] = {}
    for st in combos:
        if len(st) != len(rb.items):
            raise DomainError("one state per boundary item is required")
        m = _initial(rb, st)
        tasks = []
        for v, role in enumerate(m.roles):
            if role == "saddle_in":
                tasks.append(("in", v))
            elif role == "saddle_out":
                tasks.append(("out", v))
        for final in _search(m, tasks, _Budget(saddles, sinks, sources), set()):
            if _valid(final):
                flow = _canonical(rb, tuple(st), final)
                found.setdefault(flow.code(), flow)
    return sorted(found.values(), key=lambda f: (f.separatrix_count, f.code()))


# -- symmetry and time reversal --------------------------------------------------

def _item_key(item) -> tuple:
    return ("c", item.angle) if isinstance(item, Corner) else ("m", item.wing)


def transform(f: RegionFlow, g: Automorphism, target: RegionBoundary) -> RegionFlow:
    """Image of a diagram under a surface symmetry; ``target`` is the image
    region's boundary (under the transported coloring)."""
    rb = f.boundary
    n = f.n
    if len(target.items) != n:
        raise DomainError("target boundary has a different length")
    where = {_item_key(it): k for k, it in enumerate(target.items)}
    pi = []
    for it in rb.items:
        key = ("c", g.angle(it.angle)) if isinstance(it, Corner) else ("m", g.wing(it.wing))
        pi.append(where[key])
    rev = g.reverses(rb.region)
    vmap = {k: pi[k] for k in range(n)}
    for k in range(len(f.interior)):
        vmap[n + k] = n + k
    emap = {}
    for i in range(n):
        emap[i] = pi[(i + 1) % n] if rev else pi[i]
    for k in range(len(f.edges)):
        emap[n + k] = n + k
    states = [None] * n
    for k in range(n):
        states[pi[k]] = f.states[k]
    faces = []
    for face in f.faces:
        walk = [(vmap[v], emap[e]) for v, e in face]
        if rev:
            L = len(walk)
            walk = [(walk[-k % L][0], walk[(-k - 1) % L][1]) for k in range(L)]
        faces.append(walk)
    tmp = RegionFlow(target, tuple(states), f.interior,
                     tuple((vmap[t], vmap[h]) for t, h in f.edges), ())
    m = _to_map(tmp)
    m.faces = faces
    if not _valid(m):
        raise DomainError("transformed diagram is not valid for the target boundary")
    return _canonical(target, tuple(states), m)


def _flip_boundary(rb: RegionBoundary) -> RegionBoundary:
    swap = {CornerRole.SOURCE: CornerRole.SINK, CornerRole.SINK: CornerRole.SOURCE,
            CornerRole.TRANSIT: CornerRole.TRANSIT}
    items = tuple(
        Corner(it.angle, swap[it.role]) if isinstance(it, Corner)
        else Marked(it.label, it.color.flipped(), it.wing)
        for it in rb.items
    )
    return RegionBoundary(rb.region, items, tuple(-a for a in rb.arcs))


def time_reversal(f: RegionFlow) -> RegionFlow:
    swap = {SOURCE: SINK, SINK: SOURCE}
    rb = _flip_boundary(f.boundary)
    states = tuple(swap.get(s, s) for s in f.states)
    states = tuple(
        it.role.value if isinstance(it, Corner) else st for it, st in zip(rb.items, states)
    )
    tmp = RegionFlow(rb, states, tuple(swap.get(k, k) for k in f.interior),
                     tuple((h, t) for t, h in f.edges), f.faces)
    return _canonical(rb, states, _to_map(tmp))


# -- whole-surface structures -------------------------------------------------

class Family(str, Enum):
    ONE_FIXED_POINT = "one-fixed-point"
    MS_OPTIMAL = "ms-optimal"
    PROJECTIVE = "projective"

    @classmethod
    def parse(cls, value: "Family | str") -> "Family":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace("_", "-")
        for f in cls:
            if f.value == key:
                return f
        raise DomainError(f"unknown family {value!r}")


@dataclass(frozen=True)
class FlowStructure:
    """A flow on a whole surface, given region by region.

    ``coloring`` is set for the families with fixed points on the 1-cells
    (for projective flows it is the uniform coloring of the edge points),
    ``cells`` holds the 1-cell directions of one-fixed-point flows, and
    ``point_types`` the type of each fixed point on the projective plane's
    edges (``sink``/``source``/``saddle``).
    """

    surface: SurfaceName
    family: Family
    option: int
    regions: tuple[RegionFlow, ...] = ()
    coloring: Coloring | None = None
    cells: tuple[tuple[str, int], ...] = ()
    kinds: tuple[tuple[str, str], ...] = ()
    point_types: tuple[tuple[str, str], ...] = ()

    def region(self, name: str) -> RegionFlow:
        for f in self.regions:
            if f.region == name:
                return f
        raise KeyError(name)

    @property
    def separatrix_count(self) -> int:
        return sum(f.separatrix_count for f in self.regions)

    @property
    def reversed_time(self) -> bool:
        """True for the second half of a family: the time reversal of a flow
        with Green {c,d,g} (MS-optimal) or with source vertices (projective)."""
        if self.coloring is None:
            return False
        first = self.coloring.colors[0][1]
        if self.family is Family.PROJECTIVE:
            return first is Color.GREEN
        return first is Color.RED


def _boundaries(s: StratifiedSurface, c: Coloring) -> dict[str, RegionBoundary]:
    return {r: boundary_for(s.name, c, r) for r in s.regions}


@lru_cache(maxsize=None)
def boundary_for(name: SurfaceName, c: Coloring, region: str) -> RegionBoundary:
    """Boundary of ``region`` under the orientation induced by ``c``."""
    s = get_surface(name)
    return region_boundary(s, region, derive_orientations(s, c), c)


def _require_girls(s: StratifiedSurface, what: str) -> None:
    if s.name is not SurfaceName.GIRLS:
        raise DomainError(f"{what} enumeration is implemented for the Girl's surface only")


# MS-optimal options, coloring of ({a,e}, {b,f}) with {c,d,g} Green
_MS_OPTIONS = (
    (1, Color.RED, Color.GREEN),
    (1, Color.GREEN, Color.RED),
    (2, Color.RED, Color.RED),
    (3, Color.GREEN, Color.GREEN),
)


def ms_colorings(s: StratifiedSurface) -> list[tuple[int, Coloring]]:
    """The labeled colorings with Green {c,d,g}, tagged by option."""
    _require_girls(s, "optimal Morse-Smale")
    return [
        (opt, Coloring.from_labels(s, {"c": Color.GREEN, "a": ca, "b": cb}))
        for opt, ca, cb in _MS_OPTIONS
    ]


def enumerate_ms_optimal(s: StratifiedSurface) -> list[FlowStructure]:
    """All labeled optimal Morse-Smale flows (both time directions).

    The Green half is enumerated region by region; the Red half is its time
    reversal.  Mirror images are kept, classification merges them.
    """
    _require_girls(s, "optimal Morse-Smale")
    return list(_ms_optimal(s.name))


@lru_cache(maxsize=None)
def _ms_optimal(name: SurfaceName) -> tuple[FlowStructure, ...]:
    s = get_surface(name)
    green: list[FlowStructure] = []
    for opt, c in ms_colorings(s):
        bounds = _boundaries(s, c)
        per_region = [enumerate_region_flows(bounds[r]) for r in s.regions]
        for combo in itertools.product(*per_region):
            green.append(FlowStructure(s.name, Family.MS_OPTIMAL, opt, tuple(combo), c))
    return tuple(green + [reverse_structure(f) for f in green])


def reverse_structure(f: FlowStructure) -> FlowStructure:
    swap = {SINK: SOURCE, SOURCE: SINK}
    return replace(
        f,
        regions=tuple(time_reversal(r) for r in f.regions),
        coloring=f.coloring.flipped() if f.coloring else None,
        cells=tuple((c, -d) for c, d in f.cells),
        point_types=tuple((p, swap.get(t, t)) for p, t in f.point_types),
    )


@dataclass(frozen=True)
class RegionCounts:
    """Per-region flow counts for one coloring.

    The symmetric/non-symmetric split is only defined when the coloring is
    invariant under the reflection; otherwise those fields are ``None``.
    """

    n_b: int
    n_c: int
    b_s: int | None = None
    b_n: int | None = None
    c_s: int | None = None
    c_n: int | None = None


def region_counts(s: StratifiedSurface, option: int) -> RegionCounts:
    """Counts in the two big regions (BR, CR) for an MS-optimal option."""
    opt_colorings = [c for o, c in ms_colorings(s) if o == option]
    if not opt_colorings:
        raise DomainError(f"unknown option {option}")
    c = opt_colorings[0]
    bounds = _boundaries(s, c)
    br = enumerate_region_flows(bounds["BR"])
    cr = enumerate_region_flows(bounds["CR"])
    g = s.symmetry.generator("reflection")
    mirrored = {s.class_of(g.label(cls[0])): col for cls, col in c.colors}
    if any(mirrored[cls] is not col for cls, col in c.colors):
        return RegionCounts(len(br), len(cr))
    b_s = sum(1 for f in br if transform(f, g, bounds[g.region("BR")]) == f)
    c_s = sum(1 for f in cr if transform(f, g, bounds[g.region("CR")]) == f)
    return RegionCounts(len(br), len(cr), b_s, (len(br) - b_s) // 2, c_s, (len(cr) - c_s) // 2)


def projective_points(s: StratifiedSurface) -> list[tuple[str, str]]:
    """Fixed points on the projective plane's edges: ``(edge, labels)``.

    Each lifted 1-cell edge carries one fixed point; its name is the set of
    marked-point labels it shows in the planar model (``c`` and ``d`` are the
    same point on the projective plane, so that one is called ``cd``).
    """
    from .cw_complex import pullback_complex

    out = []
    for e in pullback_complex(s).edges:
        labels = sorted({s.label(w) for w in e.wings})
        out.append((e.name, "".join(labels)))
    return out


def _projective_option(s: StratifiedSurface, types: Mapping[str, str]) -> int:
    """Option 1/2/3 = number of nodes among the points on the one-corner disks
    equal to 2/1/0."""
    disk_points = []
    for r, word in s.two_cells.items():
        if len(word.corners()) == 1:
            for _, w in s.boundary_sides(r):
                disk_points.append(_point_key(s, s.label(w)))
    nodes = sum(1 for p in disk_points if types[p] != SADDLE)
    return {2: 1, 1: 2, 0: 3}[nodes]


def _point_key(s: StratifiedSurface, label: str) -> str:
    return _point_keys(s.name)[label]


@lru_cache(maxsize=None)
def _point_keys(name: SurfaceName) -> dict[str, str]:
    return {lab: key for _, key in projective_points(get_surface(name)) for lab in key}


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    for cut in itertools.combinations_with_replacement(range(parts), total):
        v = [0] * parts
        for x in cut:
            v[x] += 1
        yield tuple(v)


def enumerate_projective(s: StratifiedSurface, jobs: int = 1) -> list[FlowStructure]:
    """Optimal projective Morse-Smale flows compatible with the stratification.

    Half of them have all three lifts of the null-point as sources; every
    edge fixed point is then a sink or a saddle, and the remaining sinks and
    saddles sit inside the regions (three sinks and five saddles in all).
    The other half is the time reversal.  ``jobs`` > 1 spreads the region
    searches over threads; the result does not depend on it.
    """
    _require_girls(s, "projective")
    return list(_projective(s.name, max(1, jobs)))


@lru_cache(maxsize=None)
def _projective(name: SurfaceName, jobs: int) -> tuple[FlowStructure, ...]:
    s = get_surface(name)
    c = Coloring.from_labels(s, {cls[0]: Color.RED for cls in s.marked_point_classes})
    bounds = _boundaries(s, c)
    points = [key for _, key in projective_points(s)]
    n_sinks, n_saddles = 3, 5
    cache: dict[tuple, list[RegionFlow]] = {}

    def region_flows(r: str, types: dict[str, str], k: int, sk: int) -> list[RegionFlow]:
        rb = bounds[r]
        states = tuple(
            it.role.value if isinstance(it, Corner) else types[_point_key(s, it.label)]
            for it in rb.items
        )
        key = (r, states, k, sk)
        if key not in cache:
            cache[key] = enumerate_region_flows(rb, True, states=states, saddles=k, sinks=sk)
        return cache[key]

    jobs_list = []
    for combo in itertools.product((SINK, SADDLE), repeat=len(points)):
        types = dict(zip(points, combo))
        edge_sinks = combo.count(SINK)
        inner_sinks = n_sinks - edge_sinks
        inner_saddles = n_saddles - (len(points) - edge_sinks)
        if inner_sinks < 0 or inner_saddles < 0:
            continue
        for ks in _compositions(inner_saddles, len(s.regions)):
            for ss in _compositions(inner_sinks, len(s.regions)):
                jobs_list.append((types, ks, ss))

    def run(job):
        types, ks, ss = job
        option = _projective_option(s, types)
        per = [region_flows(r, types, ks[i], ss[i]) for i, r in enumerate(s.regions)]
        return [
            FlowStructure(s.name, Family.PROJECTIVE, option, tuple(flows), c,
                          point_types=tuple(sorted(types.items())))
            for flows in itertools.product(*per)
        ]

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(run, jobs_list))
    else:
        batches = [run(j) for j in jobs_list]
    out = [f for batch in batches for f in batch]
    return tuple(out + [reverse_structure(f) for f in out])


def enumerate_one_fixed_point_structures(s: StratifiedSurface, normalize: bool = False) -> list[FlowStructure]:
    from .flow_model import enumerate_one_fixed_point

    out = []
    for flow in enumerate_one_fixed_point(s, normalize=normalize):
        out.append(FlowStructure(
            s.name, Family.ONE_FIXED_POINT, flow.case if s.name is SurfaceName.GIRLS else 0,
            cells=flow.cells, kinds=tuple((r, k.value) for r, k in flow.regions),
        ))
    return out


@dataclass(frozen=True)
class Census:
    sources: int
    sinks: int
    saddles: int
    other: int = 0

    @property
    def total(self) -> int:
        return self.sources + self.sinks + self.saddles + self.other

    @property
    def index_sum(self) -> int:
        return self.sources - self.saddles + self.sinks

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.sources, self.sinks, self.saddles)


def fixed_point_census(f: FlowStructure) -> Census:
    """Count fixed points by type.

    Projective flows are counted on the projective plane: lifts of the
    null-point (typed by their corners), edge points and interior points.
    MS-optimal flows are counted on the surface: one point per 1-cell, typed
    by its color as a potential source or sink, plus the null-point, which
    has no single type and is reported under ``other``.
    """
    s = get_surface(f.surface)
    if f.family is Family.PROJECTIVE:
        from .cw_complex import pullback_complex

        cx = pullback_complex(s)
        roles = {}
        for r in f.regions:
            for it in r.boundary.items:
                if isinstance(it, Corner):
                    roles[it.angle] = it.role
        counts = {SOURCE: 0, SINK: 0, SADDLE: 0}
        for _, angles in cx.vertices:
            vr = {roles[a] for a in angles}
            if len(vr) != 1 or CornerRole.TRANSIT in vr:
                raise DomainError("a lifted null-point is not a node")
            counts[vr.pop().value] += 1
        for _, t in f.point_types:
            counts[t] += 1
        for r in f.regions:
            for k in r.interior:
                counts[k] += 1
        return Census(counts[SOURCE], counts[SINK], counts[SADDLE])
    if f.family is Family.MS_OPTIMAL:
        colors = [col for _, col in f.coloring.colors]
        return Census(colors.count(Color.GREEN), colors.count(Color.RED), 0, other=1)
    return Census(0, 0, 0, other=1)
