from __future__ import annotations

import re
import xml.etree.ElementTree as ET

from rp2flows.classification import classify, enumerate_family
from rp2flows.cw_complex import get_surface
from rp2flows.export import WIDTH, export_dot, export_svg

GIRLS = get_surface("girls")
NS = "{http://www.w3.org/2000/svg}"


def _separatrices(svg: str):
    root = ET.fromstring(svg)
    out = []
    for p in root.iter(f"{NS}path"):
        if p.get("class") == "separatrix":
            pt = lambda k: tuple(float(x) for x in p.get(k).split(","))
            out.append((pt("data-from"), pt("data-to"), pt("data-mid")))
    return root, out


def _mirror(seg):
    return tuple((WIDTH - x, y) for x, y in seg)


def _same(a, b, tol=0.02):
    return all(abs(p - q) <= tol for u, v in zip(a, b) for p, q in zip(u, v))


def test_one_fixed_point_svg():
    f = classify(enumerate_family(GIRLS, "one-fixed-point"))[0].representative
    root, seps = _separatrices(export_svg(f))
    assert seps == []
    regions = [g for g in root.iter(f"{NS}g") if g.get("class") == "region"]
    assert len(regions) == 4


def test_svg_is_deterministic():
    f = classify(enumerate_family(GIRLS, "projective"))[3].representative
    assert export_svg(f) == export_svg(f)


def test_symmetric_flows_draw_symmetric():
    classes = classify(enumerate_family(GIRLS, "ms-optimal"))
    sym = [c for c in classes if c.symmetric and c.option == 2]
    assert sym
    for fc in sym:
        _, seps = _separatrices(export_svg(fc.representative))
        for s in seps:
            m = _mirror(s)
            back = (m[1], m[0], m[2])
            assert any(_same(m, t) or _same(back, t) for t in seps)


def test_asymmetric_flow_is_not_mirror_drawn():
    classes = classify(enumerate_family(GIRLS, "ms-optimal"))
    fc = next(c for c in classes if not c.symmetric and c.option == 2)
    _, seps = _separatrices(export_svg(fc.representative))
    mirrored = all(
        any(_same(_mirror(s), t) or _same((_mirror(s)[1], _mirror(s)[0], _mirror(s)[2]), t) for t in seps)
        for s in seps
    )
    assert not mirrored


def test_dot_export_lists_regions():
    f = classify(enumerate_family(GIRLS, "ms-optimal"))[0].representative
    dot = export_dot(f)
    assert dot.startswith("digraph")
    for r in GIRLS.regions:
        assert re.search(rf"\b{r}\b", dot)
    assert dot.count("{") == dot.count("}")
