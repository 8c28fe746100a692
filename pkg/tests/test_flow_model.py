from __future__ import annotations

import pytest

from rp2flows.cw_complex import get_surface
from rp2flows.errors import DomainError
from rp2flows.flow_model import (
    Color,
    Coloring,
    CornerRole,
    RegionKind,
    all_cell_orientations,
    cell_orientation,
    classify_simple_region,
    corner_roles,
    derive_orientations,
    enumerate_one_fixed_point,
    one_fixed_point_flow,
    region_boundary,
)


@pytest.fixture
def girls():
    return get_surface("girls")


def test_color_parse():
    assert Color.parse("green") is Color.GREEN
    assert Color.parse("R") is Color.RED
    assert Color.GREEN.flipped() is Color.RED
    with pytest.raises(DomainError):
        Color.parse("blue")


def test_coloring_from_labels_shares_class_color(girls):
    c = Coloring.from_labels(girls, {"c": "G", "a": "R", "b": "R"})
    assert c.color_of("g") is Color.GREEN
    assert c.color_of("e") is Color.RED
    assert c.flipped().color_of("d") is Color.RED


def test_coloring_conflict_and_missing(girls):
    with pytest.raises(DomainError):
        Coloring.from_labels(girls, {"c": "G", "d": "R", "a": "R", "b": "R"})
    with pytest.raises(DomainError):
        Coloring.from_labels(girls, {"c": "G"})


def test_cell_orientation_requires_every_cell(girls):
    with pytest.raises(DomainError):
        cell_orientation(girls, {"A": 1, "B": 1})
    with pytest.raises(DomainError):
        cell_orientation(girls, {"A": 1, "B": 1, "C": 0})


def test_green_points_push_flow_away(girls):
    c = Coloring.from_labels(girls, {"c": "G", "a": "G", "b": "G"})
    roles = corner_roles(girls, derive_orientations(girls, c))
    # every arc runs into the null-point, so every corner is a sink
    assert set(roles.values()) == {CornerRole.SINK}
    roles = corner_roles(girls, derive_orientations(girls, c.flipped()))
    assert set(roles.values()) == {CornerRole.SOURCE}


@pytest.mark.parametrize("dirs", all_cell_orientations())
def test_whole_cell_corners_are_balanced(girls, dirs):
    roles = corner_roles(girls, cell_orientation(girls, dirs))
    # each 1-cell loop leaves and enters the null-point once per end pair
    n_src = sum(r is CornerRole.SOURCE for r in roles.values())
    n_snk = sum(r is CornerRole.SINK for r in roles.values())
    assert n_src == n_snk


def test_disk_regions_are_elliptic_without_points(girls):
    o = cell_orientation(girls, {"A": 1, "B": 1, "C": 1})
    for r in ("LD", "RD"):
        assert classify_simple_region(region_boundary(girls, r, o)) is RegionKind.ELLIPTIC


def test_region_boundary_alternates_with_coloring(girls):
    c = Coloring.from_labels(girls, {"c": "G", "a": "R", "b": "G"})
    rb = region_boundary(girls, "BR", derive_orientations(girls, c), c)
    assert len(rb) == 10
    assert rb.names()[::2] == ("1", "6", "5", "8", "11")
    assert len(rb.arcs) == len(rb)


def test_one_fixed_point_girls(girls):
    flows = enumerate_one_fixed_point(girls)
    assert len(flows) == 3
    assert sorted(f.case for f in flows) == [2, 3, 4]
    every = enumerate_one_fixed_point(girls, normalize=False)
    assert len(every) == 6


def test_one_fixed_point_roundtrip(girls):
    f = one_fixed_point_flow(girls, {"A": -1, "B": 1, "C": 1})
    assert type(f).from_dict(f.to_dict()) == f


def test_case_is_mirror_invariant(girls):
    f = one_fixed_point_flow(girls, {"A": 1, "B": -1, "C": 1})
    m = one_fixed_point_flow(girls, {"A": 1, "B": -1, "C": -1})
    assert f.case == m.case


def test_boys_has_no_separatrix_free_flow():
    # region N always needs a separatrix under these rules
    assert enumerate_one_fixed_point(get_surface("boys")) == []
