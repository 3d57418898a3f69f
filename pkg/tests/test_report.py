import json

import jsonschema
import pytest

from ringlab.classifiers import classify
from ringlab.expr import eval_expr
from ringlab.report import REPORT_SCHEMA, ReportDocument, ReportFormatError, build_report


def make_doc(text, **kw):
    ring = eval_expr(text)
    witnesses = kw.pop("witnesses", False)
    report = classify(ring, with_witnesses=witnesses, **kw)
    return build_report(ring, report, text, 512, 4096, members=True)


@pytest.mark.parametrize("text", ["Z(1)", "Z(4)", "M(2, F(2))", "GR(F(2), C2)", "morita(R2)"])
def test_round_trips(text):
    doc = make_doc(text, witnesses=True)
    assert ReportDocument.from_json(doc.to_json()) == doc
    assert ReportDocument.from_text(doc.to_text()) == doc
    jsonschema.validate(doc.to_dict(), REPORT_SCHEMA)


def test_skipped_flags_serialize():
    doc = make_doc("prod(F(2), F(2), F(2))", budget=2)
    assert doc.flags["right_quasi_duo"] == "skipped"
    assert "budget" in doc.skipped["right_quasi_duo"]
    jsonschema.validate(doc.to_dict(), REPORT_SCHEMA)
    assert ReportDocument.from_text(doc.to_text()) == doc


def test_text_form_uses_stable_dotted_keys():
    doc = make_doc("Z(4)")
    lines = doc.to_text().splitlines()
    assert lines[0] == "schema_version: 1"
    assert "flags.strongly_delta_clean: true" in lines
    assert "members.delta: [0, 2]" in lines
    keys = [line.split(": ", 1)[0] for line in lines]
    assert len(keys) == len(set(keys))


def test_text_and_json_agree_on_flags():
    doc = make_doc("T(2, Z(4))")
    as_json = json.loads(doc.to_json())
    from_text = ReportDocument.from_text(doc.to_text())
    assert as_json["flags"] == from_text.flags


def test_witness_entries_decode():
    doc = make_doc("M(2, F(2))", witnesses=True)
    assert len(doc.witnesses) == 16
    assert any(w is None for w in doc.witnesses.values())
    assert doc.ring["elements"][0] == "[0 0; 0 0]"


def test_bad_documents():
    with pytest.raises(ReportFormatError, match="schema_version"):
        ReportDocument.from_dict({"schema_version": 99})
    with pytest.raises(ReportFormatError, match="missing"):
        ReportDocument.from_dict({"schema_version": 1})
    with pytest.raises(ReportFormatError, match="line 1"):
        ReportDocument.from_text("no separator\n")
    with pytest.raises(ReportFormatError, match="bad value"):
        ReportDocument.from_text("schema_version: {\n")


def test_schema_rejects_unknown_fields():
    data = make_doc("Z(2)").to_dict()
    data["extra"] = 1
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(data, REPORT_SCHEMA)
