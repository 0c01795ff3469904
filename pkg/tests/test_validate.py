import io
import json

import pytest

from torsig import validate as val
from torsig.cli import main


@pytest.fixture(scope="module")
def report8():
    return val.run_validation(8)


def test_report_schema(report8):
    assert report8["schema"] == 1
    summary = report8["summary"]
    assert summary["UNEXPECTED"] == 0
    assert summary["match"] + summary["known-erratum"] == summary["entries"] == len(report8["entries"])
    for e in report8["entries"]:
        assert set(e) >= {"formula", "input", "oracle", "closed_form", "printed_form", "status"}
        if e["status"] == "known-erratum":
            assert e["erratum"] in val.ERRATA


def test_report_errata_classes(report8):
    assert report8["summary"]["known_erratum_classes"] == sorted(val.ERRATA)


def _find(report, formula, **inputs):
    for e in report["entries"]:
        if e["formula"] == formula and all(e["input"].get(k) == v for k, v in inputs.items()):
            return e
    raise AssertionError(f"no entry {formula} {inputs}")


def test_hand_checked_defects(report8):
    e = _find(report8, "integral_via_dedekind", p=2, q=3)
    assert (e["oracle"], e["printed_form"], e["status"]) == ("-4/3", "-8/9", "known-erratum")
    e = _find(report8, "rosen_lattice_count", p=2, q=3, C="1/4")
    assert (e["oracle"], e["printed_form"], e["defect"]) == ("4", "33/8", "1/8")
    e = _find(report8, "ordinary_signature", p=3, q=4)
    assert (e["oracle"], e["closed_form"], e["printed_form"]) == ("-6", "-6", "-4")


def test_convention_notes(report8):
    notes = {n["id"]: n for n in report8["convention_notes"]}
    assert notes["dedekind-summation-range"]["reciprocity_defect_under_rejected"] == "1/36"
    assert notes["rosen-delta-range"]["value_under_rejected"] == "37/8"
    assert notes["rademacher-reciprocity-weights"]["reciprocity_defect_under_rejected"] == "-5/48"


def test_sorted_and_deterministic(report8):
    keys = [val._sort_key(e) for e in report8["entries"]]
    assert keys == sorted(keys)
    assert val.dumps(val.run_validation(8)) == val.dumps(report8)


def test_parallel_matches_serial(report8):
    assert val.dumps(val.run_validation(8, jobs=2)) == val.dumps(report8)


def test_unexpected_is_flagged(monkeypatch):
    import torsig.closed_forms as cf

    real = cf.integral_closed
    monkeypatch.setattr(cf, "integral_closed", lambda knot: real(knot) + (1 if knot.p == 2 and knot.q == 3 else 0))
    report = val.run_validation(5)
    assert report["summary"]["UNEXPECTED"] == 1
    assert main(["validate", "--max", "5"], out=io.StringIO()) == 1


def test_cli_writes_report(tmp_path):
    path = tmp_path / "r.json"
    out = io.StringIO()
    assert main(["validate", "--max", "8", "--report", str(path)], out=out) == 0
    data = json.loads(path.read_text())
    e = _find(data, "integral_via_dedekind", p=2, q=3)
    assert e["status"] == "known-erratum" and e["printed_form"] == "-8/9"
    assert "UNEXPECTED=0" in out.getvalue()
