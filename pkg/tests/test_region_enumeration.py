from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from rp2flows.cw_complex import get_surface
from rp2flows.errors import DomainError
from rp2flows.flow_model import Coloring
from rp2flows.region_enumeration import (
    Family,
    boundary_for,
    enumerate_ms_optimal,
    enumerate_region_flows,
    fixed_point_census,
    ms_colorings,
    region_counts,
    reverse_structure,
    time_reversal,
    transform,
)

GIRLS = get_surface("girls")
OPTIONS = {opt: c for opt, c in ms_colorings(GIRLS)}  # option 1 has two colorings; one is enough


def _all_region_flows():
    out = []
    for _, c in ms_colorings(GIRLS):
        for r in GIRLS.regions:
            out.extend(enumerate_region_flows(boundary_for(GIRLS.name, c, r)))
    return out


ALL = _all_region_flows()


def _crosses(a, b, n):
    (i, j), (k, l) = sorted(a), sorted(b)
    if len({i, j, k, l}) < 4:
        return False
    inside = lambda x: i < x < j
    return inside(k) != inside(l)


def test_region_counts_option1():
    rc = region_counts(GIRLS, 1)
    assert (rc.n_b, rc.n_c) == (14, 12)
    assert rc.b_s is None


def test_region_counts_split():
    rc = region_counts(GIRLS, 2)
    assert (rc.n_b, rc.n_c, rc.b_s, rc.b_n, rc.c_s, rc.c_n) == (12, 14, 2, 5, 2, 6)
    rc = region_counts(GIRLS, 3)
    assert (rc.b_s, rc.b_n, rc.c_s, rc.c_n) == (1, 2, 1, 2)


def test_unknown_option():
    with pytest.raises(DomainError):
        region_counts(GIRLS, 7)


def test_disk_regions_have_one_flow_each():
    for _, c in ms_colorings(GIRLS):
        for r in ("LD", "RD"):
            assert len(enumerate_region_flows(boundary_for(GIRLS.name, c, r))) == 1


@pytest.mark.parametrize("k", range(0, len(ALL), 7))
def test_diagram_is_plane_disk(k):
    f = ALL[k]
    v = f.n + len(f.interior)
    e = f.n + len(f.edges)
    assert v - e + len(f.faces) == 1
    boundary_chords = [x for x in f.edges if max(x) < f.n]
    for a, b in itertools.combinations(boundary_chords, 2):
        assert not _crosses(a, b, f.n)


def test_every_face_has_one_source_and_one_sink():
    for f in ALL:
        for src, snk in f.active():
            assert src is not None and snk is not None


def test_time_reversal_is_involution():
    for f in ALL:
        assert time_reversal(time_reversal(f)) == f


def test_reflection_closes_each_symmetric_option():
    g = GIRLS.symmetry.generator("reflection")
    for opt in (2, 3):
        c = OPTIONS[opt]
        for r in ("BR", "CR"):
            flows = enumerate_region_flows(boundary_for(GIRLS.name, c, r))
            target = boundary_for(GIRLS.name, c, g.region(r))
            images = {transform(f, g, target) for f in flows}
            assert images == set(flows)


def test_interior_points_need_flag():
    rb = boundary_for(GIRLS.name, OPTIONS[2], "BR")
    with pytest.raises(DomainError):
        enumerate_region_flows(rb, saddles=1)


def test_reverse_structure_roundtrip():
    flows = enumerate_ms_optimal(GIRLS)
    for f in flows[:40]:
        assert reverse_structure(reverse_structure(f)) == f


def test_ms_labeled_total():
    flows = enumerate_ms_optimal(GIRLS)
    assert len(flows) == 1058
    assert all(f.family is Family.MS_OPTIMAL for f in flows)


def test_ms_census_counts_colors():
    for f in enumerate_ms_optimal(GIRLS)[:50]:
        c = fixed_point_census(f)
        assert c.sources + c.sinks == 3 and c.other == 1


def test_boys_ms_not_supported():
    with pytest.raises(DomainError):
        enumerate_ms_optimal(get_surface("boys"))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(ALL), st.booleans())
def test_reversal_swaps_sources_and_sinks(f, twice):
    r = time_reversal(f)
    if twice:
        r = time_reversal(r)
        assert r.states == f.states
        return
    assert r.separatrix_count == f.separatrix_count
    swap = {"source": "sink", "sink": "source"}
    assert r.states == tuple(swap.get(s, s) for s in f.states)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([c for _, c in ms_colorings(GIRLS)]), st.sampled_from(["BR", "CR"]))
def test_enumeration_is_deterministic(c, r):
    rb = boundary_for(GIRLS.name, c, r)
    assert enumerate_region_flows(rb) == enumerate_region_flows(rb)


def test_flipped_coloring_matches_reversal():
    c = OPTIONS[2]
    rb = boundary_for(GIRLS.name, c, "CR")
    flipped = boundary_for(GIRLS.name, c.flipped(), "CR")
    direct = set(enumerate_region_flows(flipped))
    assert {time_reversal(f) for f in enumerate_region_flows(rb)} == direct
