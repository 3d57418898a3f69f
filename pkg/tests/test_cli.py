import io
import json
import os
from pathlib import Path

import jsonschema
import pytest

from ringlab import cli
from ringlab.config import ENV_MAX_ORDER
from ringlab.report import REPORT_SCHEMA, ReportDocument

GOLDEN = Path(__file__).parent / "golden"
UPDATE = os.environ.get("RINGLAB_UPDATE_GOLDEN") == "1"

GOLDEN_RUNS = {
    "classify_z4.txt": ["classify", "Z(4)"],
    "classify_z4.json": ["classify", "Z(4)", "--json"],
    "classify_m2f2.txt": ["classify", "M(2,F(2))", "--text"],
    "classify_m2f2.json": ["classify", "M(2,F(2))", "--json"],
    "classify_t2f2_full.json": ["classify", "T(2, F(2))", "--witnesses", "--members", "--json"],
    "classify_t2f2_full.txt": ["classify", "T(2, F(2))", "--witnesses", "--members"],
    "verify_prop22.txt": ["verify", "--case-filter", "prop-2.2*"],
    "verify_prop22.jsonl": ["verify", "--case-filter", "prop-2.2*", "--json"],
    "verify_standard.txt": ["verify", "--findings"],
    "verify_standard.jsonl": ["verify", "--json", "--jobs", "2"],
    "search_sdc_z.txt": ["search", "--property", "strongly_delta_clean", "--within", "Z"],
    "search_sdc_z.json": ["search", "--property", "strongly_delta_clean", "--within", "Z", "--json"],
    "search_boolean.txt": ["search", "--property", "boolean", "--max-order", "4"],
    "search_boolean.json": ["search", "--property", "boolean", "--max-order", "4", "--json"],
    "search_local_t_fails.txt": ["search", "--property", "local", "--within", "T", "--max-order",
                                 "64", "--show", "fails"],
}


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    monkeypatch.delenv(ENV_MAX_ORDER, raising=False)


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name", sorted(GOLDEN_RUNS))
def test_golden_output(name):
    code, out, err = run(GOLDEN_RUNS[name])
    assert code == 0, err
    path = GOLDEN / name
    if UPDATE:
        GOLDEN.mkdir(exist_ok=True)
        path.write_text(out)
    assert out == path.read_text()


def test_json_reports_validate_against_schema():
    for name in ("classify_z4.json", "classify_m2f2.json", "classify_t2f2_full.json"):
        jsonschema.validate(json.loads((GOLDEN / name).read_text()), REPORT_SCHEMA)


def test_text_and_json_reports_agree():
    for stem in ("classify_z4", "classify_m2f2", "classify_t2f2_full"):
        stem_text = stem + ".txt" if (GOLDEN / (stem + ".txt")).exists() else None
        if stem_text is None:
            continue
        a = ReportDocument.from_text((GOLDEN / stem_text).read_text())
        b = ReportDocument.from_json((GOLDEN / (stem + ".json")).read_text())
        assert a == b


def test_spec_examples():
    assert "flags.strongly_delta_clean: true" in run(["classify", "Z(4)"])[1]
    assert "flags.strongly_delta_clean: false" in run(["classify", "M(2,F(2))"])[1]
    code, out, _ = run(["search", "--property", "strongly_delta_clean", "--within", "Z"])
    assert [line.split("\t")[0] for line in out.splitlines()[4:]] == ["Z2", "Z4", "Z8", "Z16"]
    code, out, _ = run(["search", "--property", "boolean", "--max-order", "4"])
    assert [line.split("\t")[0] for line in out.splitlines()[4:]] == ["F2", "F2 x F2"]


def _bad_corpus(tmp_path):
    path = tmp_path / "bad.tsv"
    path.write_text("no tab here\n")
    return str(path)


def _small_corpus(tmp_path):
    path = tmp_path / "small.tsv"
    path.write_text("Z4\tZ(4)\nM2\tM(2, F(2))\n")
    return str(path)


def _raise(*args, **kwargs):
    raise RuntimeError("boom")


EXIT_MATRIX = [
    # (id, argv, env, patch, expected exit, stderr fragment)
    ("classify-ok", ["classify", "Z(6)"], None, None, 0, ""),
    ("classify-syntax", ["classify", "Z("], None, None, 2, "syntax error at offset 2"),
    ("classify-unknown-ctor", ["classify", "Q(3)"], None, None, 2, "unknown constructor"),
    ("classify-arity", ["classify", "M(2)"], None, None, 2, "takes"),
    ("classify-order-flag", ["classify", "T(2, Z(4))", "--max-order", "16"], None, None, 2, "order"),
    ("classify-order-env", ["classify", "T(2, Z(4))"], "16", None, 2, "order"),
    ("classify-flag-beats-env", ["classify", "T(2, Z(4))", "--max-order", "64"], "16", None, 0, ""),
    ("classify-bad-env", ["classify", "Z(4)"], "many", None, 2, ENV_MAX_ORDER),
    ("classify-not-idempotent", ["classify", "corner(Z(4), 2)"], None, None, 2, "not idempotent"),
    ("classify-bad-index", ["classify", "quot(Z(4), [9])"], None, None, 2, "out of range"),
    ("classify-internal", ["classify", "Z(4)"], None, "classify", 1, "internal error"),
    ("classify-bad-max-order", ["classify", "Z(4)", "--max-order", "0"], None, None, 2, ""),
    ("classify-json-text-exclusive", ["classify", "Z(4)", "--json", "--text"], None, None, 2, ""),
    ("verify-filter-ok", ["verify", "--case-filter", "lemma-1.1"], None, None, 0, ""),
    ("verify-missing-file", ["verify", "--corpus", "/no/such/corpus.tsv"], None, None, 2, "No such file"),
    ("verify-bad-file", ["verify", "--corpus", "BAD"], None, None, 2, "line 1"),
    ("verify-file-ok", ["verify", "--corpus", "SMALL", "--case-filter", "lemma-1*"], None, None, 0, ""),
    ("verify-file-vacuous", ["verify", "--corpus", "SMALL"], None, None, 1, ""),
    ("verify-no-match", ["verify", "--case-filter", "zzz*"], None, None, 2, "no case matches"),
    ("verify-bad-jobs", ["verify", "--jobs", "0", "--case-filter", "lemma-1.1"], None, None, 2, "--jobs"),
    ("verify-corpus-too-big", ["verify", "--corpus", "SMALL", "--max-order", "8"], None, None, 2, "order"),
    ("verify-failure", ["verify", "--corpus", "SMALL", "--case-filter", "thm-main-1"], None,
     "sdc", 1, ""),
    ("search-ok", ["search", "--property", "local", "--within", "F"], None, None, 0, ""),
    ("search-unknown-property", ["search", "--property", "shiny"], None, None, 2, "valid: commutative"),
    ("search-unknown-family", ["search", "--property", "local", "--within", "Q"], None, None, 2, "family"),
    ("search-missing-property", ["search"], None, None, 2, ""),
    ("no-command", [], None, None, 2, ""),
    ("version", ["--version"], None, None, 0, ""),
]


@pytest.mark.parametrize("case", EXIT_MATRIX, ids=[c[0] for c in EXIT_MATRIX])
def test_exit_code_matrix(case, tmp_path, monkeypatch, capsys):
    _, argv, env, patch, expected, fragment = case
    argv = [_bad_corpus(tmp_path) if a == "BAD" else _small_corpus(tmp_path) if a == "SMALL" else a
            for a in argv]
    if env is not None:
        monkeypatch.setenv(ENV_MAX_ORDER, env)
    if patch == "classify":
        monkeypatch.setattr(cli, "classify", _raise)
    if patch == "sdc":
        from ringlab import classifiers
        monkeypatch.setattr(classifiers, "is_strongly_delta_clean", lambda ring: True)
    code, out, err = run(argv)
    assert code == expected, (out, err)
    assert fragment in err + capsys.readouterr().err


def test_verify_failure_prints_trace(tmp_path, monkeypatch):
    from ringlab import classifiers
    monkeypatch.setattr(classifiers, "is_strongly_delta_clean", lambda ring: True)
    code, out, _ = run(["verify", "--corpus", _small_corpus(tmp_path), "--case-filter", "thm-main-1"])
    assert code == 1
    assert "FAIL    thm-main-1" in out and "case thm-main-1: FAIL" in out and "-> FAILED" in out


def test_verify_jobs_do_not_change_output():
    a = run(["verify", "--json", "--jobs", "1"])[1]
    b = run(["verify", "--json", "--jobs", "4"])[1]
    assert a == b


def test_figures_are_written(tmp_path):
    figs = tmp_path / "figs"
    assert run(["classify", "T(2, F(2))", "--figures", str(figs)])[0] == 0
    assert run(["verify", "--case-filter", "prop-*", "--figures", str(figs)])[0] == 0
    assert run(["search", "--property", "local", "--within", "Z", "--figures", str(figs)])[0] == 0
    names = sorted(p.name for p in figs.iterdir())
    assert names == ["T_2_F2_cayley.png", "T_2_F2_sizes.png", "search_local.png",
                     "verify_cases.png", "verify_delta_vs_j.png"]
    assert all(p.stat().st_size > 1000 for p in figs.iterdir())


def test_families():
    assert cli.family("Z", 5) == ["Z(2)", "Z(3)", "Z(4)", "Z(5)"]
    assert cli.family("prod", 16) == ["prod(F(2), F(2))", "prod(F(2), Z(4))", "prod(Z(4), Z(4))",
                                      "prod(F(2), F(2), F(2))", "prod(F(2), F(2), Z(4))",
                                      "prod(F(2), F(2), F(2), F(2))"]
    assert "Z(5)" not in cli.family("all", 8) and "F(5)" in cli.family("all", 8)
    assert cli.family("GR", 8) == ["GR(F(2), C2)", "GR(F(2), C3)"]
