from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from rp2flows.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_count_ms():
    assert call("enumerate", "--surface", "girls", "--family", "ms-optimal", "--count") == (0, "534\n", "")


def test_count_labeled():
    code, out, _ = call("enumerate", "--surface", "girls", "--family", "projective", "--count", "--labeled")
    assert code == 0 and out == "230\n"


def test_table61_csv():
    code, out, _ = call("report", "table61", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "surface,one-fixed-point,ms-optimal,projective"
    assert "Boys,18/108,342/2004,80/438" in lines
    assert "Girls,3/6,534/1058,118/230" in lines


def test_table61_json():
    code, out, _ = call("report", "table61", "--format", "json", "--surface", "girls")
    doc = json.loads(out)
    assert doc["schemaVersion"] == 1
    cells = doc["rows"][0]["cells"]
    assert cells["projective"] == {"n": 118, "m": 230, "n_s": 6, "computed": True}


@pytest.mark.parametrize("argv", [
    ("enumerate", "--surface", "torus", "--family", "ms-optimal"),
    ("enumerate", "--surface", "girls", "--family", "bogus"),
    ("report", "table61", "--format", "svg"),
    ("classify", "--surface", "girls", "--family", "projective", "--jobs", "0"),
    ("frobnicate",),
])
def test_usage_errors_exit_2(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == "" and err


def test_boys_enumeration_is_domain_error():
    code, _, err = call("enumerate", "--surface", "boys", "--family", "projective")
    assert code == 2 and "Girl's" in err


def test_enumerate_ndjson():
    code, out, _ = call("enumerate", "--surface", "girls", "--family", "one-fixed-point")
    docs = [json.loads(line) for line in out.splitlines()]
    assert len(docs) == 3
    assert all(d["schemaVersion"] == 1 for d in docs)


def test_classify_json_counts():
    code, out, _ = call("classify", "--surface", "girls", "--family", "ms-optimal", "--format", "json")
    doc = json.loads(out)
    assert doc["counts"]["n"] == 534 and doc["counts"]["m"] == 1058
    assert doc["counts"]["halfTotal"] == 267
    assert len(doc["classes"]) == 534


def test_export_svg_to_file(tmp_path):
    path = tmp_path / "flow.svg"
    code, out, _ = call("export", "--surface", "girls", "--family", "projective",
                        "--index", "4", "--output", str(path))
    assert code == 0 and out == ""
    assert path.read_text().startswith("<svg")


def test_export_index_out_of_range():
    code, _, err = call("export", "--surface", "girls", "--family", "one-fixed-point", "--index", "3")
    assert code == 2 and "out of range" in err


def test_regions_report():
    code, out, _ = call("report", "regions", "--format", "csv")
    assert out.splitlines()[1:] == ["1,14,12,,,,,168", "2,12,14,2,5,2,6,86", "3,5,5,1,2,1,2,13"]


def test_surfaces_json():
    code, out, _ = call("surfaces", "--format", "json")
    doc = json.loads(out)
    assert [s["name"] for s in doc["surfaces"]] == ["boys", "girls"]
    assert all(v["passed"] for s in doc["surfaces"] for v in s["validation"])


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rp2flows", "enumerate", "--surface", "girls",
         "--family", "one-fixed-point", "--count"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "3\n"
