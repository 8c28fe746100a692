"""DOT and SVG renderings of flow structures.

The SVG places every region as a regular polygon.  The layout is chosen so
that the surface's reflection is the mirror ``x -> WIDTH - x``: LD and RD
sit left and right, BR and CR are centred with their fixed items on the
vertical axis.  Coordinates are rounded to two decimals, so the output is
byte-stable.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .cw_complex import get_surface, pullback_complex
from .flow_model import (
    Color,
    Corner,
    CornerRole,
    cell_orientation,
    region_boundary,
)
from .region_enumeration import FlowStructure, RegionFlow

WIDTH, HEIGHT = 640.0, 640.0
RADIUS = {2: 60.0}
DEFAULT_RADIUS = 115.0

# centre and the item that sits on top (at angle 90 degrees)
_GIRLS_LAYOUT = {
    "LD": ((90.0, 320.0), "9"),
    "RD": ((550.0, 320.0), "3"),
    "BR": ((320.0, 155.0), "g"),
    "CR": ((320.0, 485.0), "g"),
}


def _layout(surface, regions: list[str]) -> dict[str, tuple[tuple[float, float], str | None]]:
    if set(regions) == set(_GIRLS_LAYOUT):
        return _GIRLS_LAYOUT
    out = {}
    for k, r in enumerate(regions):
        col, row = k % 2, k // 2
        out[r] = ((160.0 + 280.0 * col, 160.0 + 280.0 * row), None)
    return out


def _fmt(x: float) -> str:
    s = f"{x:.2f}"
    return "0.00" if s == "-0.00" else s


def _polygon(names: tuple[str, ...], centre, top: str | None):
    n = len(names)
    r = RADIUS.get(n, DEFAULT_RADIUS)
    k0 = names.index(top) if top in names else 0
    pts = []
    for k in range(n):
        # counterclockwise in the model; item k0 on top
        theta = math.pi / 2 + 2 * math.pi * (k - k0) / n
        pts.append((centre[0] + r * math.cos(theta), centre[1] - r * math.sin(theta)))
    return pts


def _tutte(flow: RegionFlow, pos: dict[int, tuple[float, float]], centre) -> dict[int, tuple[float, float]]:
    """Place interior vertices at the average of their neighbours (pulled a
    little towards the centre so pendant vertices do not collapse)."""
    n = flow.n
    inner = range(n, n + len(flow.interior))
    nbrs = {v: [] for v in inner}
    for t, h in flow.edges:
        if t in nbrs:
            nbrs[t].append(h)
        if h in nbrs:
            nbrs[h].append(t)
    cur = dict(pos)
    for v in inner:
        cur[v] = centre
    for _ in range(200):
        nxt = dict(cur)
        for v in inner:
            xs = [cur[u] for u in nbrs[v]] or [centre]
            ax = sum(p[0] for p in xs) / len(xs)
            ay = sum(p[1] for p in xs) / len(xs)
            nxt[v] = (0.6 * ax + 0.4 * centre[0], 0.6 * ay + 0.4 * centre[1])
        cur = nxt
    return cur


def _arc_path(p, q, centre) -> tuple[str, tuple[float, float]]:
    """Circular arc from p to q bulging towards the centre; returns the path
    and the arc midpoint."""
    mx, my = (p[0] + q[0]) / 2, (p[1] + q[1]) / 2
    dx, dy = centre[0] - mx, centre[1] - my
    bend = 0.3
    m = (mx + bend * dx, my + bend * dy)
    chord = math.dist(p, q)
    sag = math.dist((mx, my), m)
    if sag < 1e-6 or chord < 1e-6:
        return f"M {_fmt(p[0])} {_fmt(p[1])} L {_fmt(q[0])} {_fmt(q[1])}", (mx, my)
    radius = (chord * chord / 4 + sag * sag) / (2 * sag)
    cross = (q[0] - p[0]) * (m[1] - p[1]) - (q[1] - p[1]) * (m[0] - p[0])
    sweep = 0 if cross > 0 else 1
    return (
        f"M {_fmt(p[0])} {_fmt(p[1])} A {_fmt(radius)} {_fmt(radius)} 0 0 {sweep} "
        f"{_fmt(q[0])} {_fmt(q[1])}",
        m,
    )


def _arc_arrow(a, mid, b) -> str:
    """Boundary arc a -> b with the arrowhead at ``mid``."""
    return (
        f'<polyline class="arc" points="{_fmt(a[0])},{_fmt(a[1])} {_fmt(mid[0])},{_fmt(mid[1])} '
        f'{_fmt(b[0])},{_fmt(b[1])}" fill="none" stroke="none" marker-mid="url(#arrow)"/>'
    )


_ROLE_MARK = {CornerRole.SOURCE: "+", CornerRole.SINK: "-", CornerRole.TRANSIT: ""}


def export_svg(f: FlowStructure) -> str:
    s = get_surface(f.surface)
    layout = _layout(s, list(s.regions))
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{int(WIDTH)}" height="{int(HEIGHT)}" '
        f'viewBox="0 0 {int(WIDTH)} {int(HEIGHT)}" data-family="{f.family.value}" '
        f'data-option="{f.option}">',
        '<defs><marker id="arrow" viewBox="0 0 10 10" refX="5" refY="5" markerWidth="6" '
        'markerHeight="6" orient="auto-start-reverse"><path d="M 0 0 L 10 5 L 0 10 z"/></marker></defs>',
    ]
    if f.regions:
        boundaries = [(r.boundary, r) for r in f.regions]
    else:
        o = cell_orientation(s, dict(f.cells))
        boundaries = [(region_boundary(s, r, o), None) for r in s.regions]
    for rb, flow in boundaries:
        centre, top = layout[rb.region]
        names = rb.names()
        pts = _polygon(names, centre, top)
        n = len(names)
        parts.append(f'<g class="region" data-region="{rb.region}">')
        if n == 1:
            # a single corner: the boundary is one loop
            r = RADIUS[2]
            parts.append(
                f'<circle class="face" cx="{_fmt(centre[0])}" cy="{_fmt(centre[1])}" r="{_fmt(r)}" '
                f'fill="#f4f4f4" stroke="black"/>'
            )
            pts = [(centre[0], centre[1] - r)]
        elif n == 2:
            # lens: item 0 on top, arc 0 runs counterclockwise down the left side
            a, b = pts
            w = 0.8 * RADIUS[2]
            mids = [(centre[0] - w, centre[1]), (centre[0] + w, centre[1])]
            if a[1] > b[1]:
                mids.reverse()
            d = (f"M {_fmt(a[0])} {_fmt(a[1])} Q {_fmt(2 * mids[0][0] - centre[0])} {_fmt(centre[1])} "
                 f"{_fmt(b[0])} {_fmt(b[1])} Q {_fmt(2 * mids[1][0] - centre[0])} {_fmt(centre[1])} "
                 f"{_fmt(a[0])} {_fmt(a[1])} Z")
            parts.append(f'<path class="face" d="{d}" fill="#f4f4f4" stroke="black"/>')
            for i in range(2):
                p0, p1 = (pts[i], pts[1 - i]) if rb.arcs[i] > 0 else (pts[1 - i], pts[i])
                parts.append(_arc_arrow(p0, mids[i], p1))
        else:
            poly = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
            parts.append(f'<polygon class="face" points="{poly}" fill="#f4f4f4" stroke="black"/>')
            for i in range(n):
                a, b = pts[i], pts[(i + 1) % n]
                if rb.arcs[i] < 0:
                    a, b = b, a
                parts.append(_arc_arrow(a, ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2), b))
        pos = {k: pts[k] for k in range(len(pts))}
        if flow is not None and flow.edges:
            pos = _tutte(flow, pos, centre)
            for t, h in flow.edges:
                d, mid = _arc_path(pos[t], pos[h], centre)
                parts.append(
                    f'<path class="separatrix" d="{d}" fill="none" stroke="#3060c0" '
                    f'marker-end="url(#arrow)" data-from="{_fmt(pos[t][0])},{_fmt(pos[t][1])}" '
                    f'data-to="{_fmt(pos[h][0])},{_fmt(pos[h][1])}" '
                    f'data-mid="{_fmt(mid[0])},{_fmt(mid[1])}"/>'
                )
            for k, kind in enumerate(flow.interior):
                x, y = pos[flow.n + k]
                fill = {"saddle": "white", "sink": "#d03030", "source": "#30a030"}[kind]
                parts.append(
                    f'<circle class="interior {kind}" cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" '
                    f'fill="{fill}" stroke="black"/>'
                )
        for k, item in enumerate(rb.items[: len(pts)]):
            x, y = pts[k]
            if isinstance(item, Corner):
                parts.append(
                    f'<rect class="corner {item.role.value}" x="{_fmt(x - 3)}" y="{_fmt(y - 3)}" '
                    f'width="6" height="6" fill="black"/>'
                )
                text = f"{item.angle}{_ROLE_MARK[item.role]}"
            else:
                fill = "#30a030" if item.color is Color.GREEN else "#d03030"
                state = flow.states[k] if flow is not None else ""
                parts.append(
                    f'<circle class="point {state}" cx="{_fmt(x)}" cy="{_fmt(y)}" r="5" '
                    f'fill="{fill}" stroke="black"/>'
                )
                text = item.label
            lx = centre[0] + 1.15 * (x - centre[0])
            ly = centre[1] + 1.15 * (y - centre[1])
            parts.append(
                f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="11" text-anchor="middle">'
                f"{escape(text)}</text>"
            )
        r = RADIUS.get(n, DEFAULT_RADIUS)
        parts.append(
            f'<text x="{_fmt(centre[0])}" y="{_fmt(centre[1] + r + 30)}" font-size="12" '
            f'text-anchor="middle" fill="#888">{rb.region}</text>'
        )
        parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def export_dot(f: FlowStructure) -> str:
    """Region adjacency (through lifted edges) plus the separatrix graph."""
    s = get_surface(f.surface)
    cx = pullback_complex(s)
    side_region = {}
    for r in s.regions:
        for _, w in s.boundary_sides(r):
            side_region[w] = r
    lines = [f'digraph "{f.surface.value}-{f.family.value}" {{', "  rankdir=LR;"]
    lines.append("  subgraph regions {")
    for r in s.regions:
        lines.append(f'    "{r}" [shape=box];')
    for e in cx.edges:
        a, b = (side_region[w] for w in e.wings)
        lines.append(f'    "{a}" -> "{b}" [dir=none, label="{e.name}"];')
    lines.append("  }")
    for flow in f.regions:
        r = flow.region
        lines.append(f'  subgraph "cluster_{r}" {{')
        lines.append(f'    label="{r}";')
        for v in range(flow.n + len(flow.interior)):
            name = flow.name(v)
            if v < flow.n:
                item = flow.boundary.items[v]
                if isinstance(item, Corner):
                    attrs = f'shape=square, label="{name}", xlabel="{item.role.value}"'
                else:
                    color = "green" if item.color is Color.GREEN else "red"
                    attrs = f'shape=circle, color={color}, label="{name}", xlabel="{flow.states[v]}"'
            else:
                attrs = f'shape=diamond, label="{name}"'
            lines.append(f'    "{r}:{name}" [{attrs}];')
        for i in range(flow.n):
            t, h = (i, (i + 1) % flow.n) if flow.boundary.arcs[i] > 0 else ((i + 1) % flow.n, i)
            lines.append(f'    "{r}:{flow.name(t)}" -> "{r}:{flow.name(h)}" [style=dashed];')
        for t, h in flow.edges:
            lines.append(f'    "{r}:{flow.name(t)}" -> "{r}:{flow.name(h)}" [color=blue];')
        lines.append("  }")
    if f.cells:
        lines.append("  // cells " + " ".join(f"{c}{d:+d}" for c, d in f.cells))
    lines.append("}")
    return "\n".join(lines) + "\n"
