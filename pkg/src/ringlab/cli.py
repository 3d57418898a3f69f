"""``ringlab`` command line: classify, verify and search.

Exit codes: 0 success; 1 verification failures or an internal error;
2 bad input (syntax, construction, configuration, missing files, unknown names).
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import combinations_with_replacement
from math import prod

from . import __version__
from .classifiers import FLAG_ORDER, PREDICATES, Skipped, classify, is_quasi_duo
from .config import DEFAULT_IDEAL_BUDGET, ConfigError, max_order as resolve_max_order
from .expr import ExprError, eval_expr, parse_expr, to_text
from .groups import GroupError, standard_groups
from .report import build_report
from .ring import RingError
from .subsets import BudgetExceeded
from .theorems.corpus import CorpusError, load_corpus, standard_corpus
from .theorems.harness import (delta_tally, explain_failure, results_to_jsonl,
                               run_theorem_suite, suite_passed)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2

INPUT_ERRORS = (ExprError, RingError, ConfigError, CorpusError, GroupError, BudgetExceeded,
                OSError)

FAMILIES = ("Z", "F", "prod", "T", "GR", "all")
SEARCH_DEFAULT_ORDER = 16
_FIELDS = (2, 3, 4, 5, 7, 8, 9)
_T_BASES = ((2, "F(2)"), (3, "F(3)"), (4, "F(4)"), (5, "F(5)"), (4, "Z(4)"), (8, "Z(8)"))
_GR_BASES = ((2, "F(2)"), (3, "F(3)"), (4, "F(4)"), (4, "Z(4)"))


class UsageError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    return n > 1 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def family(name: str, bound: int) -> list[str]:
    """Expressions of the named family with ring order at most ``bound``."""
    if name not in FAMILIES:
        raise UsageError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")
    out: list[str] = []
    if name in ("F", "all"):
        out += [f"F({q})" for q in _FIELDS if q <= bound]
    if name == "Z":
        out += [f"Z({n})" for n in range(2, bound + 1)]
    if name == "all":  # Z(p) duplicates F(p)
        out += [f"Z({n})" for n in range(4, bound + 1) if not _is_prime(n)]
    if name in ("prod", "all"):
        for k in range(2, bound.bit_length()):
            for factors in combinations_with_replacement(((2, "F(2)"), (4, "Z(4)")), k):
                if prod(o for o, _ in factors) <= bound:
                    out.append(f"prod({', '.join(t for _, t in factors)})")
    if name in ("T", "all"):
        for n in (2, 3):
            out += [f"T({n}, {t})" for o, t in _T_BASES if o ** (n * (n + 1) // 2) <= bound]
    if name in ("GR", "all"):
        for gname, group in standard_groups().items():
            if group.order > 1:
                out += [f"GR({t}, {gname})" for o, t in _GR_BASES if o ** group.order <= bound]
    return out


def _property_value(ring, prop: str, budget: int):
    if prop in ("right_quasi_duo", "left_quasi_duo"):
        value = is_quasi_duo(ring, prop.split("_")[0], budget)
    else:
        value = PREDICATES[prop](ring)
    return "skipped" if isinstance(value, Skipped) else bool(value)


# -- subcommands ------------------------------------------------------------------------

def cmd_classify(args, out) -> int:
    limit = resolve_max_order(args.max_order)
    node = parse_expr(args.expr)
    ring = eval_expr(node, limit)
    report = classify(ring, args.budget, with_witnesses=args.witnesses)
    doc = build_report(ring, report, to_text(node), limit, args.budget, members=args.members)
    out.write(doc.to_json() if args.json else doc.to_text())
    if args.figures:
        from . import plotting
        plotting.cayley_tables(ring, args.figures)
        plotting.subset_sizes(report.sizes, ring.label, args.figures)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    limit = resolve_max_order(args.max_order)
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    if args.corpus == "standard":
        corpus = standard_corpus(limit)
    else:
        corpus = load_corpus(args.corpus, limit)
    corpus.build(validate_axioms=False)  # surface construction errors as input errors
    results = run_theorem_suite(corpus, args.case_filter, jobs=args.jobs, max_order=limit,
                                budget=args.budget)
    if args.case_filter and not results:
        raise UsageError(f"no case matches {args.case_filter!r}")
    counts = {s: sum(r.status == s for r in results) for s in ("pass", "fail", "vacuous")}
    passed = suite_passed(results)
    tally = delta_tally(corpus) if args.findings else []
    if args.json:
        out.write(results_to_jsonl(results))
        for row in tally:
            out.write(json.dumps({"finding": row}, sort_keys=True) + "\n")
        out.write(json.dumps({"summary": {"cases": len(results), **counts, "rings": len(corpus),
                                          "ok": passed}}, sort_keys=True) + "\n")
    else:
        for r in results:
            out.write(f"{r.status.upper():7s} {r.id}  (scope {r.scope_size})  {r.citation}\n")
            if r.status == "fail":
                out.write(explain_failure(r) + "\n")
        for row in tally:
            out.write(f"finding: {row['ring']}  |Delta|={row['delta']} |J|={row['jacobson']}  "
                      f"delta_equals_j={str(row['delta_equals_j']).lower()}  "
                      f"sdc_not_strongly_j_clean={str(row['sdc_not_strongly_j_clean']).lower()}\n")
        out.write(f"summary: {len(results)} cases over {len(corpus)} rings: {counts['pass']} pass, "
                  f"{counts['fail']} fail, {counts['vacuous']} vacuous -> "
                  f"{'OK' if passed else 'FAILED'}\n")
    if args.figures:
        from . import plotting
        plotting.case_results(results, args.figures)
        plotting.corpus_sizes(tally or delta_tally(corpus), args.figures)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_search(args, out) -> int:
    if args.property not in FLAG_ORDER:
        raise UsageError(f"unknown property {args.property!r}; valid: {', '.join(FLAG_ORDER)}")
    limit = resolve_max_order(args.max_order)
    bound = min(args.max_order or SEARCH_DEFAULT_ORDER, limit)
    rows = []
    for text in family(args.within, bound):
        ring = eval_expr(text, limit)
        rows.append({"label": ring.label, "expression": to_text(parse_expr(text)),
                     "order": ring.order, "value": _property_value(ring, args.property, args.budget)})
    holds = [r for r in rows if r["value"] is True]
    shown = {"holds": holds, "fails": [r for r in rows if r["value"] is not True], "all": rows}[args.show]
    if args.json:
        out.write(json.dumps({"schema_version": 1, "property": args.property, "family": args.within,
                              "max_order": bound, "checked": len(rows), "holds": len(holds),
                              "results": shown}, indent=2) + "\n")
    else:
        out.write(f"property: {args.property}\nfamily: {args.within}\nmax_order: {bound}\n"
                  f"holds: {len(holds)} of {len(rows)}\n")
        for r in shown:
            value = r["value"] if isinstance(r["value"], str) else str(r["value"]).lower()
            out.write(f"{r['label']}\t{r['expression']}\torder={r['order']}\t{value}\n")
    if args.figures:
        from . import plotting
        plotting.search_results(rows, args.property, args.figures)
    return EXIT_OK


# -- parser -----------------------------------------------------------------------------

def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ringlab", description="Finite-ring workbench.")
    parser.add_argument("--version", action="version", version=f"ringlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--budget", type=_positive, default=DEFAULT_IDEAL_BUDGET,
                       help="ideal-lattice budget (number of ideals)")
        p.add_argument("--figures", metavar="DIR", help="also write PNG figures into DIR")
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true", help="machine-readable output")
        fmt.add_argument("--text", dest="json", action="store_false", help="text output (default)")

    p = sub.add_parser("classify", help="classify the ring an expression denotes")
    p.add_argument("expr", help='ring expression, e.g. "T(2, Z(4))"')
    p.add_argument("--witnesses", action="store_true", help="include an SDC decomposition per element")
    p.add_argument("--members", action="store_true", help="include subset member lists")
    p.add_argument("--max-order", type=_positive, help="largest ring order to build")
    common(p)
    p.set_defaults(run=cmd_classify)

    p = sub.add_parser("verify", help="run the theorem suite over a corpus")
    p.add_argument("--corpus", default="standard", help="'standard' or a label<TAB>expr file")
    p.add_argument("--case-filter", metavar="GLOB", help="only cases whose id matches GLOB")
    p.add_argument("--jobs", type=int, default=1, help="cases evaluated concurrently")
    p.add_argument("--findings", action="store_true",
                   help="also report Delta = J and SDC-but-not-strongly-J-clean per ring")
    p.add_argument("--max-order", type=_positive, help="largest ring order to build")
    common(p)
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("search", help="list rings of a family with a property")
    p.add_argument("--property", required=True, help=f"one of: {', '.join(FLAG_ORDER)}")
    p.add_argument("--within", default="all", help=f"family: {', '.join(FAMILIES)}")
    p.add_argument("--max-order", type=_positive,
                   help=f"largest order searched (default {SEARCH_DEFAULT_ORDER})")
    p.add_argument("--show", choices=("holds", "fails", "all"), default="holds")
    common(p)
    p.set_defaults(run=cmd_search)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors itself
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.run(args, out)
    except (UsageError, *INPUT_ERRORS) as exc:
        err.write(f"ringlab: error: {exc}\n")
        return EXIT_INPUT
    except Exception as exc:  # noqa: BLE001 - contract: internal errors exit 1
        err.write(f"ringlab: internal error: {type(exc).__name__}: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
