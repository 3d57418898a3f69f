"""Run the theorem catalog over a corpus and report results."""

from __future__ import annotations

import fnmatch
import json
import time
import traceback
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .. import classifiers as K
from ..config import DEFAULT_IDEAL_BUDGET
from ..subsets import delta, jacobson_radical
from .cases import AXIOM_CASE, CASES, SCOPES, Context, TheoremCase, Witness, case_index
from .corpus import Corpus

STATUSES = ("pass", "fail", "vacuous")


class NotFailedError(ValueError):
    pass


@dataclass
class CaseResult:
    id: str
    citation: str
    scope: str
    scope_size: int
    status: str
    witness: Witness | None = None
    duration: float = 0.0
    targeted: bool = True
    rings: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status == "pass" or (self.status == "vacuous" and not self.targeted)

    def as_dict(self, timing: bool = False) -> dict:
        out = {"id": self.id, "citation": self.citation, "scope": self.scope,
               "scope_size": self.scope_size, "result": self.status,
               "witness": self.witness.as_dict() if self.witness else None}
        if timing:
            out["duration"] = round(self.duration, 4)
        return out


def select_cases(case_filter: str | None = None, cases=CASES) -> list[TheoremCase]:
    if not case_filter:
        return list(cases)
    return [c for c in cases if fnmatch.fnmatchcase(c.id, case_filter)]


def _error_witness(entry, exc: BaseException) -> Witness:
    frame = traceback.extract_tb(exc.__traceback__)[-1] if exc.__traceback__ else None
    where = f" ({frame.name}:{frame.lineno})" if frame else ""
    return Witness(entry.label, "check raised", note=f"{type(exc).__name__}: {exc}{where}")


def _axioms_ok(entry) -> bool:
    return bool(entry.ring.cache.get("validated"))


def run_case(case: TheoremCase, corpus: Corpus, ctx: Context) -> CaseResult:
    start = time.perf_counter()
    scope = SCOPES[case.scope]
    in_scope, witness = [], None
    for entry in corpus:
        if case.id != AXIOM_CASE and not _axioms_ok(entry):
            continue
        try:
            if not scope(entry, ctx):
                continue
        except Exception as exc:  # a scope that cannot be decided is a failure too
            in_scope.append(entry.label)
            witness = _error_witness(entry, exc)
            break
        in_scope.append(entry.label)
        try:
            witness = case.check(entry, ctx)
        except Exception as exc:
            witness = _error_witness(entry, exc)
        if witness is not None:
            break
    if witness is not None:
        status = "fail"
    else:
        status = "pass" if in_scope else "vacuous"
    return CaseResult(case.id, case.citation, case.scope, len(in_scope), status, witness,
                      time.perf_counter() - start, case.targeted, in_scope)


def run_theorem_suite(corpus: Corpus, case_filter: str | None = None, jobs: int = 1,
                      cases=CASES, max_order: int | None = None,
                      budget: int = DEFAULT_IDEAL_BUDGET) -> list[CaseResult]:
    """Evaluate every selected case; results follow catalog order for any ``jobs``.

    Corpus rings are validated once, by the ring-axioms check, before anything
    else runs (whether or not that case is selected); rings that fail
    validation are excluded from every other case.
    """
    ctx = Context(max_order=max_order, budget=budget)
    selected = select_cases(case_filter, cases)
    axioms = case_index()[AXIOM_CASE]
    for entry in corpus:  # every ring, so one broken ring does not hide another
        axioms.check(entry, ctx)
    axiom_result = run_case(axioms, corpus, ctx)
    rest = [c for c in selected if c.id != AXIOM_CASE]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rest_results = list(pool.map(lambda c: run_case(c, corpus, ctx), rest))
    else:
        rest_results = [run_case(c, corpus, ctx) for c in rest]
    by_id = {r.id: r for r in rest_results}
    by_id[AXIOM_CASE] = axiom_result
    return [by_id[c.id] for c in selected]


def suite_passed(results) -> bool:
    return all(r.ok for r in results)


def results_to_jsonl(results, timing: bool = False) -> str:
    return "".join(json.dumps(r.as_dict(timing), sort_keys=True) + "\n" for r in results)


def case_citations(cases=CASES) -> dict[str, str]:
    """Auditable index: case id -> statement checked."""
    return {c.id: c.citation for c in cases}


def explain_failure(result: CaseResult) -> str:
    """A readable trace of a failed case's witness."""
    if result.status != "fail" or result.witness is None:
        raise NotFailedError(f"case {result.id} not failed (status {result.status})")
    w = result.witness
    lines = [f"case {result.id}: FAIL", f"  statement: {result.citation}",
             f"  ring: {w.ring}", f"  violated: {w.identity}"]
    for name, value in w.elements.items():
        lines.append(f"  {name} = {value}" if " = " not in value else f"  {name}: {value}")
    for name, value in w.memberships.items():
        lines.append(f"  [{name}] {value}")
    if w.note:
        lines.append(f"  note: {w.note}")
    return "\n".join(lines)


def delta_tally(corpus: Corpus) -> list[dict]:
    """Per ring: does Delta equal J, and is the ring SDC but not strongly J-clean."""
    rows = []
    for entry in corpus:
        R = entry.ring
        d, j = delta(R), jacobson_radical(R)
        sdc = K.is_strongly_delta_clean(R)
        sj = K.is_strongly_j_clean(R)
        rows.append({"ring": entry.label, "order": R.order, "delta": len(d), "jacobson": len(j),
                     "delta_equals_j": d == j, "sdc": sdc, "strongly_j_clean": sj,
                     "sdc_not_strongly_j_clean": sdc and not sj})
    return rows
