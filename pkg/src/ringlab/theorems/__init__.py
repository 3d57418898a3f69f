"""Executable theorem cases, the standard corpus and the suite runner."""

from .cases import CASES, SCOPES, Context, TheoremCase, Witness, case_index
from .corpus import (STANDARD, Corpus, CorpusEntry, CorpusError, dump_corpus, load_corpus,
                     make_corpus, parse_corpus_text, standard_corpus)
from .harness import (CaseResult, NotFailedError, delta_tally, explain_failure,
                      results_to_jsonl, run_theorem_suite)

__all__ = [
    "CASES", "SCOPES", "Context", "TheoremCase", "Witness", "case_index",
    "STANDARD", "Corpus", "CorpusEntry", "CorpusError", "dump_corpus", "load_corpus",
    "make_corpus", "parse_corpus_text", "standard_corpus",
    "CaseResult", "NotFailedError", "delta_tally", "explain_failure", "results_to_jsonl",
    "run_theorem_suite",
]
