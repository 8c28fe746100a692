from __future__ import annotations

import io
import json

import pytest

from rp2flows.classification import classify, enumerate_family
from rp2flows.cw_complex import get_surface, validate_complex
from rp2flows.errors import DomainError
from rp2flows.serialization import (
    dumps,
    read_ndjson,
    structure_from_dict,
    structure_to_dict,
    surface_from_dict,
    surface_to_dict,
    write_ndjson,
)

GIRLS = get_surface("girls")


@pytest.mark.parametrize("name", ["girls", "boys"])
def test_surface_roundtrip(name):
    s = get_surface(name)
    d = surface_to_dict(s)
    back = surface_from_dict(json.loads(dumps(d)))
    assert surface_to_dict(back) == d
    assert validate_complex(back).ok


def test_schema_version_checked():
    d = surface_to_dict(GIRLS)
    d["schemaVersion"] = 2
    with pytest.raises(DomainError):
        surface_from_dict(d)


@pytest.mark.parametrize("family", ["ms-optimal", "projective", "one-fixed-point"])
def test_structure_roundtrip_over_family(family):
    flows = enumerate_family(GIRLS, family)
    if family == "ms-optimal":
        assert len(classify(flows)) == 534
    buf = io.StringIO()
    assert write_ndjson((structure_to_dict(f) for f in flows), buf) == len(flows)
    docs = read_ndjson(buf.getvalue().splitlines())
    assert [structure_from_dict(d) for d in docs] == flows


def test_mismatched_boundary_rejected():
    f = enumerate_family(GIRLS, "ms-optimal")[0]
    d = structure_to_dict(f)
    d["regions"][2]["items"] = list(reversed(d["regions"][2]["items"]))
    with pytest.raises(DomainError):
        structure_from_dict(d)


def test_dumps_is_stable():
    f = enumerate_family(GIRLS, "projective")[5]
    assert dumps(structure_to_dict(f)) == dumps(json.loads(dumps(structure_to_dict(f))))
