import json

import numpy as np
import pytest

from ringlab import classifiers as K
from ringlab.ring import FiniteRing
from ringlab.theorems import (CASES, SCOPES, STANDARD, CorpusError, NotFailedError, case_index,
                              delta_tally, dump_corpus, explain_failure, load_corpus,
                              make_corpus, parse_corpus_text, results_to_jsonl,
                              run_theorem_suite, standard_corpus)
from ringlab.theorems.cases import TheoremCase, Witness
from ringlab.theorems.harness import case_citations, select_cases, suite_passed


@pytest.fixture(scope="module")
def suite():
    return run_theorem_suite(standard_corpus())


def test_every_case_passes_and_is_exercised(suite):
    assert [r.id for r in suite] == [c.id for c in CASES]
    bad = [(r.id, r.status) for r in suite if r.status != "pass"]
    assert not bad, "\n".join(explain_failure(r) for r in suite if r.status == "fail")
    assert suite_passed(suite)


def test_standard_corpus_contents():
    labels = [label for label, _ in STANDARD]
    assert len(labels) == len(set(labels))
    required = ["0", "F2", "F3", "F4", "Z4", "Z6", "Z8", "Z9", "Z16", "F2xF2", "Z2xZ4", "T2(F2)",
                "T3(F2)", "T2(Z4)", "M2(F2)", "M2(Z4)", "T(F2,F2)", "T(Z4,Z4)", "Morita R1",
                "Morita R2", "Morita R1J", "Morita R2J", "F2[C2]", "F2[C4]", "F2[C2xC2]",
                "Z4[C2]", "F2[C3]", "F4[C2]", "Z4[C3]", "F2[S3]", "T2(F2)[C2]"]
    assert set(required) <= set(labels)
    corpus = standard_corpus()
    assert all(e.ring.label == e.label for e in corpus)


def test_case_ids_and_scopes_are_registered():
    assert len(case_index()) == len(CASES)
    assert all(c.scope in SCOPES for c in CASES)
    assert set(case_citations()) == {c.id for c in CASES}


def test_results_are_deterministic_across_jobs(suite):
    parallel = run_theorem_suite(standard_corpus(), jobs=3)
    assert results_to_jsonl(parallel) == results_to_jsonl(suite)


def test_jsonl_records(suite):
    lines = results_to_jsonl(suite).splitlines()
    assert len(lines) == len(suite)
    first = json.loads(lines[0])
    assert set(first) == {"id", "citation", "scope", "scope_size", "result", "witness"}
    timed = json.loads(results_to_jsonl(suite[:1], timing=True))
    assert "duration" in timed


def test_case_filter():
    results = run_theorem_suite(standard_corpus(), "prop-2.2*")
    assert [r.id for r in results] == ["prop-2.2"]
    assert results[0].scope_size == 2 and results[0].status == "pass"
    assert select_cases("nothing-matches") == []


def test_explain_failure_requires_a_failure(suite):
    with pytest.raises(NotFailedError, match="not failed"):
        explain_failure(suite[0])


def test_forced_failure_is_explained():
    def always_fails(entry, ctx):
        return Witness(entry.label, "a = a + 1", {"a": "1"}, {"a in Delta": True}, "demo")

    demo = TheoremCase("demo-fail", "a = a + 1", "all", always_fails)
    [result] = run_theorem_suite(standard_corpus(), cases=(demo,))
    assert result.status == "fail" and result.witness.ring == "0"
    trace = explain_failure(result)
    assert "demo-fail" in trace and "a = a + 1" in trace and "[a in Delta] True" in trace


def test_vacuous_cases_are_reported():
    corpus = make_corpus([("F2", "F(2)")])
    [result] = run_theorem_suite(corpus, "prop-2.2")
    assert result.status == "vacuous" and not result.ok
    untargeted = TheoremCase("x", "x", "matrix-n2", lambda e, c: None, targeted=False)
    [other] = run_theorem_suite(corpus, cases=(untargeted,))
    assert other.status == "vacuous" and other.ok


def test_exceptions_become_failures():
    def boom(entry, ctx):
        raise ZeroDivisionError("nope")

    case = TheoremCase("boom", "never", "all", boom)
    [result] = run_theorem_suite(make_corpus([("Z4", "Z(4)")]), cases=(case,))
    assert result.status == "fail"
    assert "ZeroDivisionError" in result.witness.note


def test_broken_ring_is_caught_by_axiom_case():
    corpus = make_corpus([("Z4", "Z(4)"), ("Z5", "Z(5)")])
    good = corpus.entries[1].ring
    mul = good.mul_table.copy()
    mul[2, 3] = mul[3, 2] = 0
    corpus.entries[1]._ring = FiniteRing(5, good.add_table, mul, 0, 1, label="Z5")
    results = run_theorem_suite(corpus)
    by_id = {r.id: r for r in results}
    axioms = by_id["ring-axioms"]
    assert axioms.status == "fail"
    a, b, c = (int(v.split(" = ")[0]) for v in axioms.witness.elements.values())
    assert mul[mul[a, b], c] != mul[a, mul[b, c]]
    assert "multiplicative-associativity" in explain_failure(axioms)
    # the broken ring is kept out of the other cases
    assert all(r.status == "pass" for r in results if r.id != "ring-axioms" and r.scope_size)
    assert by_id["lemma-1.1"].scope_size == 1


def test_biconditional_detects_a_broken_classifier(monkeypatch):
    monkeypatch.setattr(K, "is_strongly_delta_clean", lambda ring: True)
    results = run_theorem_suite(standard_corpus(fresh=True), "thm-main-1")
    assert results[0].status == "fail"


def test_delta_tally():
    rows = delta_tally(standard_corpus())
    assert len(rows) == len(STANDARD)
    assert all(r["delta_equals_j"] for r in rows)
    assert not any(r["sdc_not_strongly_j_clean"] for r in rows)


def test_corpus_file_round_trip(tmp_path):
    corpus = standard_corpus()
    path = tmp_path / "corpus.tsv"
    path.write_text("# comment\n\n" + dump_corpus(corpus))
    loaded = load_corpus(path)
    assert loaded.labels() == corpus.labels()
    assert [e.expr for e in loaded] == [e.expr for e in corpus]


def test_corpus_errors():
    with pytest.raises(CorpusError, match="line 1"):
        parse_corpus_text("Z4 Z(4)\n")
    with pytest.raises(CorpusError, match="duplicate"):
        parse_corpus_text("a\tZ(4)\na\tZ(2)\n")
    with pytest.raises(Exception):
        parse_corpus_text("a\tZ(\n")
    with pytest.raises(FileNotFoundError):
        load_corpus("/nonexistent/corpus.tsv")


def test_build_validates_once():
    corpus = make_corpus([("Z4", "Z(4)")]).build()
    assert corpus.entries[0].ring.cache["validated"]
    assert corpus.get("Z4").ctor == "Z"
    with pytest.raises(KeyError):
        corpus.get("nope")


def test_scope_sizes_match_direct_counts(suite):
    corpus = standard_corpus()
    by_id = {r.id: r for r in suite}
    assert by_id["prop-2.2"].rings == ["M2(F2)", "M2(Z4)"]
    sdc = [e.label for e in corpus if K.is_strongly_delta_clean(e.ring)]
    assert by_id["lemma-2"].rings == sdc
    assert by_id["lemma-1.1"].scope_size == len(corpus)
    # group rings with an odd-order group
    assert set(by_id["prop-group"].rings) == {"F2[C3]", "Z4[C3]", "F3[C3]", "F2[C5]"}
    assert np.all([s > 0 for s in (r.scope_size for r in suite)])
