from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from rp2flows.classification import (
    acting_elements,
    apply,
    burnside_combine,
    canonical_form,
    classify,
    count_report,
    enumerate_family,
    homotopy_count,
    infer_symmetric,
    serialize,
    table61,
)
from rp2flows.cw_complex import get_surface
from rp2flows.errors import DomainError
from rp2flows.region_enumeration import RegionCounts, region_counts

GIRLS = get_surface("girls")


@pytest.fixture(scope="module")
def ms_classes():
    return classify(enumerate_family(GIRLS, "ms-optimal"))


def test_ms_totals(ms_classes):
    rep = count_report(ms_classes, "girls")
    assert (rep.n, rep.n_s, rep.m) == (534, 10, 1058)
    assert rep.half_total == 267
    assert [rep.option(k)[0] for k in (1, 2, 3)] == [168, 86, 13]
    assert [rep.option(k)[1] for k in (1, 2, 3)] == [0, 4, 1]


def test_burnside_matches_orbits(ms_classes):
    rep = count_report(ms_classes, "girls")
    for opt in (2, 3):
        assert burnside_combine(region_counts(GIRLS, opt)) == rep.option(opt)[0]


def test_burnside_needs_split():
    with pytest.raises(DomainError):
        burnside_combine(RegionCounts(14, 12))


def test_orbits_partition_labeled(ms_classes):
    flows = enumerate_family(GIRLS, "ms-optimal")
    assert sum(c.orbit_size for c in ms_classes) == len(flows)


def test_canonical_form_is_orbit_invariant():
    g = GIRLS.symmetry.generator("reflection")
    for f in enumerate_family(GIRLS, "ms-optimal")[::37]:
        assert canonical_form(apply(g, f)).canonical_code == canonical_form(f).canonical_code


def test_symmetric_flag_agrees_with_fixed_point():
    g = GIRLS.symmetry.generator("reflection")
    for fc in classify(enumerate_family(GIRLS, "ms-optimal")):
        fixed = serialize(apply(g, fc.representative)) == serialize(fc.representative)
        assert fixed == fc.symmetric


def test_one_fixed_point_classes():
    classes = classify(enumerate_family(GIRLS, "one-fixed-point"))
    rep = count_report(classes, "girls")
    assert (rep.n, rep.n_s, rep.m) == (3, 0, 6)


def test_projective_classes():
    classes = classify(enumerate_family(GIRLS, "projective"))
    rep = count_report(classes, "girls")
    assert (rep.n, rep.n_s, rep.m) == (118, 6, 230)
    assert rep.per_option == ((1, 38, 2), (2, 19, 0), (3, 2, 1))


def test_homotopy_formula():
    assert homotopy_count(534, 10, "girls") == 1058
    assert homotopy_count(18, 0, "boys") == 108
    with pytest.raises(DomainError):
        homotopy_count(3, 4, "girls")
    with pytest.raises(DomainError):
        homotopy_count(-1, 0, "girls")


@given(st.integers(0, 500), st.data())
def test_infer_inverts_homotopy(n, data):
    n_s = data.draw(st.integers(0, n))
    for surface in ("girls", "boys"):
        assert infer_symmetric(n, homotopy_count(n, n_s, surface), surface) == n_s


def test_infer_rejects_non_multiple():
    assert infer_symmetric(10, 61, "boys") is None
    assert infer_symmetric(10, 5, "girls") is None


def test_boys_table_values():
    (row,) = table61("boys")
    assert [c.n_s for c in row.cells] == [0, 16, 14]
    assert row.consistent
    assert not any(c.computed for c in row.cells)


def test_acting_elements():
    assert len(acting_elements(get_surface("boys"), "reflection")) == 2
    assert len(acting_elements(get_surface("boys"), "full")) == 6
    with pytest.raises(DomainError):
        acting_elements(GIRLS, "rotation")
