import json
from pathlib import Path

import pytest

import fairplan

SHIPPED = Path(__file__).resolve().parents[2] / "scenarios" / "fsplus.json"


@pytest.fixture(scope="module")
def doc():
    return fairplan.load(SHIPPED)


def test_shipped_document(doc):
    assert len(doc.experiments) == 7
    assert doc.scenarios == ["FS+", "MSVc-parallel", "MSVc-sequential"]


def test_bundled_copy_matches_repository():
    assert fairplan.shipped_scenario().read_text(encoding="utf-8") == SHIPPED.read_text(encoding="utf-8")


def test_unresolved_reference_is_located():
    text = SHIPPED.read_text(encoding="utf-8").replace('"setup": "hadron"', '"setup": "hadrn"', 1)
    with pytest.raises(fairplan.ScenarioError) as info:
        fairplan.Document.parse(text)
    path, line, message = info.value.errors[0]
    assert path == "/runs/hadron/setup"
    assert line > 0
    assert "hadrn" in message
    assert isinstance(info.value, ValueError)


def test_validate_returns_errors():
    assert fairplan.validate("{}") == [("", 1, "missing schema_version")]
    assert fairplan.validate(SHIPPED.read_text(encoding="utf-8")) == []


def test_scalar_helpers():
    assert fairplan.convert_volume(1, "T", "binary") == 1024**4
    assert fairplan.hs06_scale_by_clock(654, 2400, 2260) == pytest.approx(615.85, rel=1e-4)
    assert fairplan.online_reco_time(0.0085, 3, 1.5) == pytest.approx(0.017)
    assert fairplan.hs06_per_event(0.23, 22) == pytest.approx(5.06)
    assert fairplan.offline_total(500e3, 22e3, 0.5) == pytest.approx(772e3)
    _, per_year = fairplan.campaign_hs06(14e10, 81.4, 365, 0.95, 4)
    assert per_year == pytest.approx(1_524_000, rel=0.02)
    increase, total = fairplan.reprocessed_accumulation(560, 4, 10, 13)
    assert increase[0] == 560 and increase[3] == 2240 and total[-1] == 22400


def test_errors_map_to_python_exceptions():
    with pytest.raises(fairplan.ValidationError):
        fairplan.convert_volume(-1, "k")
    with pytest.raises(ValueError):
        fairplan.hs06_scale_by_clock(1, 0, 1)


def test_reports(doc):
    csv = doc.tables("storage-plan", "csv")
    assert csv.startswith("block,row,column,value,unit\n")
    parsed = json.loads(doc.report("json"))
    assert {t["id"] for t in parsed["tables"]} >= {"event-sizes", "storage-plan", "tier0-FSp"}
    assert doc.report("markdown") == doc.report("markdown")
    with pytest.raises(ValueError):
        doc.report("xml")


def test_facility_numbers(doc):
    assert doc.tier0_fraction("FS+") == pytest.approx(0.64, abs=0.02)
    assert doc.saturation_pb("FS+") == pytest.approx(160, rel=0.15)


def test_emit_round_trips(doc):
    text = doc.emit()
    assert fairplan.Document.parse(text).emit() == text


def test_schema_accepts_shipped_and_canonical_documents(doc):
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads((SHIPPED.parents[1] / "schema" / "fairplan-scenario.schema.json").read_text(encoding="utf-8"))
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    validator.validate(json.loads(SHIPPED.read_text(encoding="utf-8")))
    validator.validate(json.loads(doc.emit()))
    assert not validator.is_valid({})
