"""Executable statements about strongly Delta-clean rings.

Each :class:`TheoremCase` pairs a named scope (which corpus entries it applies
to) with a check that returns ``None`` on success or a :class:`Witness`
describing the violated identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .. import classifiers as K
from .. import constructions as C
from ..expr import Node
from ..groups import get_group, is_p_group
from ..ring import AxiomError, FiniteRing, OrderError, check_order, validate
from ..subsets import (BudgetExceeded, ElementSubset, additive_span, center, delta,
                       delta_left, ideal_lattice, idempotents, jacobson_radical,
                       left_annihilator, nilpotents, radical_from_lattice,
                       right_annihilator, units)
from . import oracles as O


@dataclass
class Witness:
    ring: str
    identity: str
    elements: dict = field(default_factory=dict)
    memberships: dict = field(default_factory=dict)
    note: str = ""

    def as_dict(self) -> dict:
        return {"ring": self.ring, "identity": self.identity,
                "elements": self.elements, "memberships": self.memberships,
                "note": self.note}


@dataclass
class Context:
    max_order: int | None = None
    budget: int = 4096


@dataclass(frozen=True)
class TheoremCase:
    id: str
    citation: str
    scope: str
    check: Callable
    targeted: bool = True  # the standard corpus is expected to hit this scope


def _el(ring: FiniteRing, a: int) -> str:
    return f"{int(a)} = {ring.name(int(a))}"


def _fail(entry, identity: str, note: str = "", memberships=None, **elements) -> Witness:
    ring = entry.ring if hasattr(entry, "ring") else entry
    return Witness(ring.label if isinstance(ring, FiniteRing) else str(ring), identity,
                   {k: (_el(ring, v) if isinstance(v, (int, np.integer)) else str(v))
                    for k, v in elements.items()},
                   memberships or {}, note)


def _first(mask: np.ndarray):
    hits = np.argwhere(mask)
    return tuple(int(v) for v in hits[0]) if hits.size else None


def _sdc(ring: FiniteRing) -> bool:
    return K.is_strongly_delta_clean(ring)


def _flags_note(**values) -> str:
    return ", ".join(f"{k}={v}" for k, v in values.items())


# -- scopes ----------------------------------------------------------------------

def _morita_spec(entry):
    key = "morita_spec"
    if key not in entry._parts:
        entry._parts[key] = C.named_morita(entry.expr.args[0])
    return entry._parts[key]


def _in_set(ring: FiniteRing, values: np.ndarray, subset: ElementSubset) -> bool:
    return bool(subset.mask[np.asarray(values).ravel()].all())


def _morita_traces_in_radicals(entry) -> bool:
    spec = _morita_spec(entry)
    return (_in_set(spec.A, spec.phi, jacobson_radical(spec.A))
            and _in_set(spec.B, spec.psi, jacobson_radical(spec.B)))


def _no_nontrivial_idempotents(ring: FiniteRing) -> bool:
    return ring.order > 1 and len(idempotents(ring)) == 2


def _com_morita_hypotheses(entry) -> bool:
    spec = _morita_spec(entry)
    if not spec.is_trivial() or spec.A is not spec.B or not K.is_commutative(spec.A):
        return False
    U = units(spec.A).units.indices
    M, N = spec.M, spec.N
    return (np.array_equal(M.left_action[U], M.right_action[:, U].T)
            and np.array_equal(N.right_action[:, U].T, N.left_action[U]))


def _lattice_ok(entry, ctx) -> bool:
    try:
        for side in ("right", "left"):
            ideal_lattice(entry.ring, side, ctx.budget)
    except BudgetExceeded:
        return False
    return True


def _group_ring_parts(entry):
    base_node, gname = entry.expr.args
    return entry.part(base_node), get_group(gname)


def _tn_group_ring(entry):
    """For ``GR(T(n, R), G)`` return ``(n, R)``, else None."""
    base_node = entry.expr.args[0]
    if base_node.ctor != "T":
        return None
    return base_node.args[0], entry.part(base_node.args[1])


SCOPES: dict[str, Callable] = {
    "all": lambda e, c: True,
    "nonzero": lambda e, c: e.ring.order > 1,
    "sdc": lambda e, c: _sdc(e.ring),
    "nonzero-sdc": lambda e, c: e.ring.order > 1 and _sdc(e.ring),
    "sdc-lattice": lambda e, c: _sdc(e.ring) and _lattice_ok(e, c),
    "lattice": _lattice_ok,
    "product": lambda e, c: e.ctor == "prod",
    "matrix-n2": lambda e, c: e.ctor == "M" and e.expr.args[0] >= 2,
    "division": lambda e, c: K.is_division(e.ring),
    "semisimple": lambda e, c: K.is_semisimple(e.ring),
    "commutative": lambda e, c: K.is_commutative(e.ring),
    "local": lambda e, c: K.is_local(e.ring),
    "commutative-local": lambda e, c: K.is_commutative(e.ring) and K.is_local(e.ring),
    "uniquely-delta-clean": lambda e, c: K.is_uniquely_delta_clean(e.ring),
    "morita": lambda e, c: e.ctor == "morita",
    "morita-sdc": lambda e, c: e.ctor == "morita" and _sdc(e.ring),
    "morita-rad": lambda e, c: e.ctor == "morita" and _morita_traces_in_radicals(e),
    "morita-trivial": lambda e, c: e.ctor == "morita" and _morita_spec(e).is_trivial(),
    "morita-trivial-local": lambda e, c: (
        e.ctor == "morita" and _morita_spec(e).is_trivial()
        and _no_nontrivial_idempotents(_morita_spec(e).A)
        and _no_nontrivial_idempotents(_morita_spec(e).B)),
    "morita-formal-triangular": lambda e, c: (
        e.ctor == "morita" and _morita_spec(e).is_trivial() and _morita_spec(e).N.order == 1
        and _no_nontrivial_idempotents(_morita_spec(e).A)
        and _no_nontrivial_idempotents(_morita_spec(e).B)),
    "morita-trivial-abelian": lambda e, c: (
        e.ctor == "morita" and _morita_spec(e).is_trivial()
        and K.is_abelian(_morita_spec(e).A) and K.is_abelian(_morita_spec(e).B)),
    "morita-commutative-subring": lambda e, c: e.ctor == "morita" and _com_morita_hypotheses(e),
    "small": lambda e, c: e.ring.order <= 16,
    "small-no-idempotents": lambda e, c: e.ring.order <= 16 and _no_nontrivial_idempotents(e.ring),
    "group-ring": lambda e, c: e.ctor == "GR",
    "group-ring-sdc-2group": lambda e, c: (
        e.ctor == "GR" and _sdc(_group_ring_parts(e)[0])
        and is_p_group(_group_ring_parts(e)[1], 2)),
    "group-ring-abelian": lambda e, c: e.ctor == "GR" and K.is_abelian(_group_ring_parts(e)[0]),
    "group-ring-odd": lambda e, c: (
        e.ctor == "GR" and _group_ring_parts(e)[1].order > 1
        and _group_ring_parts(e)[1].order % 2 == 1),
    "group-ring-triangular": lambda e, c: (
        e.ctor == "GR" and _tn_group_ring(e) is not None
        and K.is_commutative(_tn_group_ring(e)[1]) and K.is_uniquely_clean(_tn_group_ring(e)[1])
        and _group_ring_parts(e)[1].is_abelian() and is_p_group(_group_ring_parts(e)[1], 2)),
}


# -- basic properties -------------------------------------------------------------

def check_axioms(entry, ctx):
    R = entry.ring
    if R.cache.get("validated"):
        return None
    try:
        validate(R)
    except AxiomError as exc:
        names = [R.name(w) if 0 <= w < R.order else str(w) for w in exc.witness]
        return Witness(R.label, exc.axiom, {f"x{i}": f"{w} = {n}" for i, (w, n)
                                            in enumerate(zip(exc.witness, names))},
                       note=str(exc))
    R.cache["validated"] = True
    return None


def check_units_plus_delta(entry, ctx):
    R = entry.ring
    U, D = units(R).units, delta(R)
    sums = R.add_table[np.ix_(U.indices, D.indices)]
    hit = _first(~U.mask[sums])
    if hit:
        u, d = U.indices[hit[0]], D.indices[hit[1]]
        return _fail(R, "u + d is a unit", u=u, d=d, **{"u+d": R.add(u, d)})
    if not set(U.members) <= {int(x) for x in sums.ravel()}:
        return _fail(R, "U(R) is contained in U(R) + Delta(R)")
    return None


def check_product(entry, ctx):
    factors = [entry.part(node) for node in entry.expr.args]
    whole = _sdc(entry.ring)
    parts = [_sdc(f) for f in factors]
    if whole != all(parts):
        return _fail(entry.ring, "SDC(prod R_i) <=> all SDC(R_i)",
                     note=_flags_note(product=whole, **{f.label: p for f, p in zip(factors, parts)}))
    return None


def check_quotient_by_radical_ideal(entry, ctx):
    R = entry.ring
    J = jacobson_radical(R)
    for ideal in ideal_lattice(R, "two-sided", ctx.budget).ideals:
        if ideal <= J:
            Q, _ = C.quotient_ring(R, ideal)
            if not _sdc(Q):
                return _fail(R, "R/I is strongly Delta-clean for ideals I inside J(R)",
                             ideal=ideal.sorted())
    return None


def check_strongly_clean_from_sdc(entry, ctx):
    R = entry.ring
    U = units(R).units
    for a in R.elements():
        w = K.witness(R, a)
        # a = (1 - e) + (2e - 1 + d)
        f = R.sub(R.one, w.idempotent)
        two_e_minus_one = R.sub(R.add(w.idempotent, w.idempotent), R.one)
        u = R.add(two_e_minus_one, w.part)
        if u not in U or R.add(f, u) != a or R.mul(f, u) != R.mul(u, f):
            return _fail(R, "a = (1-e) + (2e-1+d) is a strongly clean decomposition",
                         a=a, e=w.idempotent, d=w.part, u=u)
    if not K.is_strongly_clean(R):
        return _fail(R, "strongly Delta-clean implies strongly clean")
    return None


def check_delta_elements_sdc(entry, ctx):
    R = entry.ring
    S = K.sdc_elements(R)
    for d in delta(R):
        if d not in S:
            return _fail(R, "every element of Delta(R) is strongly Delta-clean", d=d)
    return None


def check_unit_sdc(entry, ctx):
    R = entry.ring
    S, D = K.sdc_elements(R), delta(R)
    for u in units(R).units:
        if (u in S) != (R.sub(u, R.one) in D):
            return _fail(R, "unit u is SDC <=> u - 1 in Delta(R)", u=u,
                         memberships={"u in SDC": u in S, "u-1 in Delta": R.sub(u, R.one) in D})
    return None


def check_complement_sdc(entry, ctx):
    R = entry.ring
    S = K.sdc_elements(R)
    for a in R.elements():
        b = R.sub(R.one, a)
        if (a in S) != (b in S):
            return _fail(R, "a is SDC <=> 1 - a is SDC", a=a, **{"1-a": b})
    return None


def check_two_e_d(entry, ctx):
    R = entry.ring
    D = delta(R)
    for e in idempotents(R):
        for d in D:
            ed = R.mul(e, d)
            x = R.add(ed, ed)
            if x not in D:
                return _fail(R, "2ed in Delta(R)", e=e, d=d, **{"2ed": x})
    return None


def check_square_in_delta(entry, ctx):
    R = entry.ring
    D = delta(R)
    for a in R.elements():
        if R.mul(a, a) in D and a not in D:
            return _fail(R, "a^2 in Delta(R) implies a in Delta(R)", a=a)
    return None


def check_nil_in_delta(entry, ctx):
    R = entry.ring
    missing = nilpotents(R).members - delta(R).members
    if missing:
        return _fail(R, "Nil(R) is contained in Delta(R)", a=min(missing))
    return None


def check_commutator_in_delta(entry, ctx):
    R = entry.ring
    D = delta(R)
    M = R.mul_table
    for e in idempotents(R):
        comm = R.add_table[M[e, :], R.neg_table[M[:, e]]]
        bad = np.flatnonzero(~D.mask[comm])
        if bad.size:
            r = int(bad[0])
            return _fail(R, "er - re in Delta(R)", e=e, r=r)
    return None


def check_a_minus_square(entry, ctx):
    R = entry.ring
    idx = np.arange(R.order)
    vals = R.add_table[idx, R.neg_table[R.mul_table[idx, idx]]]
    bad = np.flatnonzero(~delta(R).mask[vals])
    if bad.size:
        return _fail(R, "a - a^2 in Delta(R)", a=int(bad[0]))
    return None


def _radical_quotient(R: FiniteRing):
    if "radical_quotient" not in R.cache:
        R.cache["radical_quotient"] = C.quotient_ring(R, jacobson_radical(R),
                                                      label=f"{R.label}/J")[0]
    return R.cache["radical_quotient"]


def check_residue_reduced(entry, ctx):
    Q = _radical_quotient(entry.ring)
    if not K.is_reduced(Q):
        return _fail(entry.ring, "R/J(R) is reduced", x=min(nilpotents(Q).members - {Q.zero}))
    return None


def check_two_in_radical(entry, ctx):
    R = entry.ring
    two = R.integer(2)
    if two not in jacobson_radical(R):
        return _fail(R, "2 in J(R)", two=two)
    return None


def check_delta_u(entry, ctx):
    if not K.is_delta_u(entry.ring):
        return _fail(entry.ring, "1 + Delta(R) = U(R)")
    return None


def check_annihilators(entry, ctx):
    R = entry.ring
    for a in K.sdc_elements(R):
        la, ra = left_annihilator(R, a), right_annihilator(R, a)
        for w in K.all_witnesses(R, a):
            e = w.idempotent
            if not la <= left_annihilator(R, e):
                r = min(la.members - left_annihilator(R, e).members)
                return _fail(R, "ann_l(a) inside ann_l(e) for a = e + d", a=a, e=e, r=r)
            if not ra <= right_annihilator(R, e):
                r = min(ra.members - right_annihilator(R, e).members)
                return _fail(R, "ann_r(a) inside ann_r(e) for a = e + d", a=a, e=e, r=r)
    return None


def _corners(R: FiniteRing):
    if "corners" not in R.cache:
        R.cache["corners"] = {int(e): C.corner_ring(R, int(e)) for e in idempotents(R)}
    return R.cache["corners"]


def check_corner_elements(entry, ctx):
    R = entry.ring
    S = K.sdc_elements(R)
    for e, (corner, embed) in _corners(R).items():
        inner = K.sdc_elements(corner)
        for k, a in enumerate(embed):
            if int(a) in S and k not in inner:
                return _fail(R, "a in eRe strongly Delta-clean in R stays so in eRe", e=e, a=int(a))
    return None


def check_corner_rings(entry, ctx):
    R = entry.ring
    for e, (corner, _) in _corners(R).items():
        if not _sdc(corner):
            return _fail(R, "eRe is strongly Delta-clean", e=e)
    return None


def check_matrix_not_sdc(entry, ctx):
    R = entry.ring
    if _sdc(R) or K.is_delta_u(R):
        return _fail(R, "M_n(S), n >= 2, is neither strongly Delta-clean nor Delta U",
                     note=_flags_note(sdc=_sdc(R), delta_u=K.is_delta_u(R)))
    return None


def check_division(entry, ctx):
    R = entry.ring
    if _sdc(R) != (R.order == 2):
        return _fail(R, "division ring is SDC <=> R = F2", note=_flags_note(sdc=_sdc(R)))
    return None


def check_local_residue(entry, ctx):
    R = entry.ring
    lhs = K.is_local(R) and _sdc(R)
    rhs = K.residue_is_F2(R)
    if lhs != rhs:
        return _fail(R, "(local and SDC) <=> R/J(R) = F2", note=_flags_note(lhs=lhs, rhs=rhs))
    return None


def _is_boolean_power(R: FiniteRing) -> bool:
    # a finite boolean ring is F2^k; check the order and that every element is idempotent
    k = R.order.bit_length() - 1
    return R.order == 2 ** k and K.is_boolean(R)


def check_semisimple(entry, ctx):
    R = entry.ring
    if _sdc(R) != _is_boolean_power(R):
        return _fail(R, "semisimple R is SDC <=> R = F2 x ... x F2",
                     note=_flags_note(sdc=_sdc(R), boolean=K.is_boolean(R)))
    return None


def check_semilocal(entry, ctx):
    Q = _radical_quotient(entry.ring)
    if not (_is_boolean_power(Q) and K.is_semisimple(Q)):
        return _fail(entry.ring, "R/J(R) = F2 x ... x F2")
    return None


def check_dedekind(entry, ctx):
    if not K.is_dedekind_finite(entry.ring):
        return _fail(entry.ring, "ab = 1 implies ba = 1")
    return None


def check_local_iff_no_idempotents(entry, ctx):
    R = entry.ring
    lhs, rhs = K.is_local(R), len(idempotents(R)) == 2
    if lhs != rhs:
        return _fail(R, "local <=> no non-trivial idempotents", note=_flags_note(local=lhs, trivial_ids=rhs))
    return None


def check_boolean_theorem(entry, ctx):
    R = entry.ring
    lhs = _sdc(R) and K.is_semisimple(R)
    if lhs != K.is_boolean(R):
        return _fail(R, "(SDC and J(R) = 0) <=> boolean", note=_flags_note(lhs=lhs, boolean=K.is_boolean(R)))
    return None


def check_residue_boolean(entry, ctx):
    if not K.is_boolean(_radical_quotient(entry.ring)):
        return _fail(entry.ring, "R/J(R) is boolean")
    return None


def check_quasi_duo(entry, ctx):
    R = entry.ring
    for side in ("right", "left"):
        value = K.is_quasi_duo(R, side, ctx.budget)
        if value is not True:
            return _fail(R, f"every maximal {side} ideal is two-sided", note=str(value))
    return None


def check_uniquely_delta_abelian(entry, ctx):
    R = entry.ring
    if not K.is_abelian(R):
        e = min(idempotents(R).members - center(R).members)
        return _fail(R, "idempotents of a uniquely Delta-clean ring are central", e=e)
    return None


# -- biconditionals with an independent oracle side -------------------------------

def _naive(entry) -> O.NaiveRing:
    if "naive" not in entry._parts:
        entry._parts["naive"] = O.from_tables(entry.ring)
    return entry._parts["naive"]


def check_main_characterization(entry, ctx):
    R = entry.ring
    lhs = _sdc(R)
    N = _naive(entry)
    rhs = O.strongly_clean(N) and O.delta(N) == O.one_minus_units(N)
    if lhs != rhs:
        return _fail(R, "SDC <=> strongly clean and Delta(R) = {x : 1 - x in U(R)}",
                     note=_flags_note(lhs=lhs, rhs=rhs))
    return None


def check_uniquely_clean_characterization(entry, ctx):
    R = entry.ring
    lhs = K.is_uniquely_clean(R)
    N = _naive(entry)
    rhs = O.strongly_delta_clean(N) and O.abelian(N)
    if lhs != rhs:
        return _fail(R, "uniquely clean <=> SDC with central idempotents",
                     note=_flags_note(lhs=lhs, rhs=rhs))
    return None


def check_uniquely_delta_characterization(entry, ctx):
    R = entry.ring
    lhs = K.is_uniquely_delta_clean(R)
    N = _naive(entry)
    rhs = O.strongly_delta_clean(N) and O.abelian(N)
    if lhs != rhs:
        return _fail(R, "uniquely Delta-clean <=> SDC with central idempotents",
                     note=_flags_note(lhs=lhs, rhs=rhs))
    return None


def check_uniquely_delta_vs_clean(entry, ctx):
    R = entry.ring
    lhs = K.is_uniquely_delta_clean(R)
    rhs = O.uniquely_clean(_naive(entry))
    if lhs != rhs:
        return _fail(R, "uniquely Delta-clean <=> uniquely clean", note=_flags_note(lhs=lhs, rhs=rhs))
    return None


def check_nil_characterization(entry, ctx):
    R = entry.ring
    lhs = K.is_strongly_nil_clean(R)
    N = _naive(entry)
    rhs = O.strongly_delta_clean(N) and O.delta(N) <= O.nilpotents(N)
    if lhs != rhs:
        return _fail(R, "strongly nil-clean <=> SDC and Delta(R) nil",
                     note=_flags_note(lhs=lhs, rhs=rhs))
    return None


def _feasible(ring: FiniteRing, cells: int, ctx) -> bool:
    try:
        check_order(ring.order ** cells, ctx.max_order)
    except OrderError:
        return False
    return True


def check_triangular_commutative(entry, ctx):
    R = entry.ring
    N = _naive(entry)
    values = {"SDC(R)": _sdc(R), "uniquely clean(R)": O.uniquely_clean(N)}
    for n in (1, 2, 3):
        if _feasible(R, n * (n + 1) // 2, ctx):
            values[f"SDC(T{n}(R))"] = O.strongly_delta_clean(N if n == 1 else O.triangular(N, n))
    if len(set(values.values())) != 1:
        return _fail(R, "commutative R: SDC(R) <=> uniquely clean <=> SDC(T_n(R)) for n = 1, 2, 3",
                     note=_flags_note(**values))
    return None


def _triangular(entry, n: int) -> FiniteRing:
    key = ("T", n)
    if key not in entry._parts:
        entry._parts[key] = C.upper_triangular_ring(entry.ring, n, entry.max_order)
    return entry._parts[key]


def check_triangular_local(entry, ctx):
    R = entry.ring
    N = _naive(entry)
    rhs = O.bleached(N) and O.residue_is_F2(N)
    for n in (2, 3):
        if _feasible(R, n * (n + 1) // 2, ctx):
            lhs = _sdc(_triangular(entry, n))
            if lhs != rhs:
                return _fail(R, f"local R: SDC(T{n}(R)) <=> bleached and R/J(R) = F2",
                             note=_flags_note(lhs=lhs, rhs=rhs))
    return None


def check_triangular_commutative_local(entry, ctx):
    R = entry.ring
    rhs = K.residue_is_F2(R)
    for n in (2, 3):
        if _feasible(R, n * (n + 1) // 2, ctx):
            lhs = _sdc(_triangular(entry, n))
            if lhs != rhs:
                return _fail(R, f"commutative local R: SDC(T{n}(R)) <=> R/J(R) = Z2",
                             note=_flags_note(lhs=lhs, rhs=rhs))
    return None


# -- Morita contexts ---------------------------------------------------------------

def _morita_blocks(entry) -> np.ndarray:
    sizes = C.morita_sizes(_morita_spec(entry))
    return np.array(np.unravel_index(np.arange(entry.ring.order), sizes)).T


def check_morita_radical_blocks(entry, ctx):
    R = entry.ring
    spec = _morita_spec(entry)
    blocks = _morita_blocks(entry)
    a, b = blocks[:, 0], blocks[:, 3]
    expected = {
        "J": (jacobson_radical(R), jacobson_radical(spec.A), jacobson_radical(spec.B)),
        "U": (units(R).units, units(spec.A).units, units(spec.B).units),
        "Delta": (delta(R), delta(spec.A), delta(spec.B)),
    }
    for name, (whole, left, right) in expected.items():
        block = left.mask[a] & right.mask[b]
        hit = _first(block != whole.mask)
        if hit:
            x = hit[0]
            return _fail(R, f"{name}(R) = ({name}(A) M; N {name}(B))", x=x,
                         memberships={f"x in {name}(R)": bool(whole.mask[x]),
                                      "block form": bool(block[x])})
    qa = spec.A.order // len(jacobson_radical(spec.A))
    qb = spec.B.order // len(jacobson_radical(spec.B))
    if R.order // len(jacobson_radical(R)) != qa * qb:
        return _fail(R, "|R/J(R)| = |A/J(A)| |B/J(B)|")
    return None


def check_com_morita(entry, ctx):
    spec = _morita_spec(entry)
    lhs = _sdc(entry.ring)
    rhs = _sdc(spec.A) and _sdc(spec.B)
    if lhs != rhs:
        return _fail(entry.ring, "SDC(R) <=> SDC(A) and SDC(B)", note=_flags_note(lhs=lhs, rhs=rhs))
    return None


def _solvable_everywhere(spec) -> tuple[bool, str]:
    """For a in U(A), b in J(B): x -> ax - xb onto M and y -> ya - by onto N."""
    A, B, M, N = spec.A, spec.B, spec.M, spec.N
    negM, negN = M.neg(), N.neg()
    xs, ys = np.arange(M.order), np.arange(N.order)
    for a in units(A).units:
        for b in jacobson_radical(B):
            img_m = M.add[M.left_action[a, xs], negM[M.right_action[xs, b]]]
            if len(set(img_m.tolist())) != M.order:
                return False, f"m = ax - xb unsolvable for a={a}, b={b}"
            img_n = N.add[N.right_action[ys, a], negN[N.left_action[b, ys]]]
            if len(set(img_n.tolist())) != N.order:
                return False, f"n = ya - by unsolvable for a={a}, b={b}"
    return True, ""


def check_local_morita(entry, ctx):
    spec = _morita_spec(entry)
    lhs = _sdc(entry.ring)
    solvable, why = _solvable_everywhere(spec)
    rhs = K.residue_is_F2(spec.A) and K.residue_is_F2(spec.B) and solvable
    if lhs != rhs:
        return _fail(entry.ring, "SDC(R) <=> A/J = F2 = B/J and ax - xb, ya - by onto",
                     note=_flags_note(lhs=lhs, rhs=rhs) + (f"; {why}" if why else ""))
    return None


def check_formal_triangular(entry, ctx):
    spec = _morita_spec(entry)
    A, B, M = spec.A, spec.B, spec.M
    negM = M.neg()
    xs = np.arange(M.order)
    onto = all(len(set(M.add[M.left_action[a, xs], negM[M.right_action[xs, b]]].tolist())) == M.order
               for a in units(A).units for b in jacobson_radical(B))
    lhs = _sdc(entry.ring)
    rhs = K.residue_is_F2(A) and K.residue_is_F2(B) and onto
    if lhs != rhs:
        return _fail(entry.ring, "(A M; 0 B) SDC <=> residues F2 and m = ax - xb solvable",
                     note=_flags_note(lhs=lhs, rhs=rhs))
    return None


def _trivial_morita_criterion(spec, choose_idempotents) -> bool:
    A, B, M, N = spec.A, spec.B, spec.M, spec.N
    negM, negN = M.neg(), N.neg()
    LM, RM, LN, RN = M.left_action, M.right_action, N.left_action, N.right_action
    ms, ns = np.arange(M.order), np.arange(N.order)
    for a in A.elements():
        for b in B.elements():
            cover = np.zeros((M.order, N.order), dtype=bool)
            for e, f in choose_idempotents(a, b):
                # x with ex + xf = x, then need em - mf in {ax - xb}
                x_ok = ms[M.add[LM[e, ms], RM[ms, f]] == ms]
                img = set(M.add[LM[a, x_ok], negM[RM[x_ok, b]]].tolist())
                target = M.add[LM[e, ms], negM[RM[ms, f]]]
                good_m = np.array([int(t) in img for t in target])
                y_ok = ns[N.add[LN[f, ns], RN[ns, e]] == ns]
                img = set(N.add[RN[y_ok, a], negN[LN[b, y_ok]]].tolist())
                target = N.add[RN[ns, e], negN[LN[f, ns]]]
                good_n = np.array([int(t) in img for t in target])
                cover |= good_m[:, None] & good_n[None, :]
            if not cover.all():
                return False
    return True


def check_trivial_morita_criterion(entry, ctx):
    spec = _morita_spec(entry)
    A, B = spec.A, spec.B
    DA, DB = delta(A), delta(B)

    def choose(a, b):
        es = [e for e in idempotents(A) if A.sub(a, e) in DA and A.mul(a, e) == A.mul(e, a)]
        fs = [f for f in idempotents(B) if B.sub(b, f) in DB and B.mul(b, f) == B.mul(f, b)]
        return [(e, f) for e in es for f in fs]

    lhs = _sdc(entry.ring)
    rhs = _trivial_morita_criterion(spec, choose)
    if lhs != rhs:
        return _fail(entry.ring, "trivial context SDC <=> idempotent/solvability criterion",
                     note=_flags_note(lhs=lhs, rhs=rhs))
    return None


def check_trivial_morita_abelian(entry, ctx):
    spec = _morita_spec(entry)
    A, B = spec.A, spec.B
    unique = K.is_uniquely_delta_clean(A) and K.is_uniquely_delta_clean(B)

    def choose(a, b):
        return [(K.witness(A, a, strong=False).idempotent, K.witness(B, b, strong=False).idempotent)]

    rhs = unique and _trivial_morita_criterion(spec, choose)
    lhs = _sdc(entry.ring)
    if lhs != rhs:
        return _fail(entry.ring, "abelian A, B: SDC(R) <=> uniquely Delta-clean A, B and criterion",
                     note=_flags_note(lhs=lhs, rhs=rhs))
    return None


def _nilpotent_ideal(ring: FiniteRing, ideal: ElementSubset) -> bool:
    power = ideal.mask
    for _ in range(ring.order + 1):
        if power.sum() == 1:
            return True
        prods = ring.mul_table[np.ix_(np.flatnonzero(power), ideal.indices)].ravel()
        nxt = additive_span(ring, np.unique(prods))
        if np.array_equal(nxt, power):
            return False
        power = nxt
    return False  # pragma: no cover


def check_pure_morita(entry, ctx):
    spec = _morita_spec(entry)
    if not (_sdc(spec.A) and _sdc(spec.B)):
        return _fail(entry.ring, "SDC(R) implies SDC(A) and SDC(B)")
    if not _morita_traces_in_radicals(entry):
        return _fail(entry.ring, "SDC(R) implies MN in J(A) and NM in J(B)")
    return None


def check_nilpotent_morita(entry, ctx):
    spec = _morita_spec(entry)
    if not (_nilpotent_ideal(spec.A, jacobson_radical(spec.A))
            and _nilpotent_ideal(spec.B, jacobson_radical(spec.B))):
        return _fail(entry.ring, "J(A), J(B) nilpotent (hypothesis)")
    lhs = _sdc(entry.ring)
    rhs = _sdc(spec.A) and _sdc(spec.B) and _morita_traces_in_radicals(entry)
    if lhs != rhs:
        return _fail(entry.ring, "SDC(R) <=> SDC(A), SDC(B), MN in J(A), NM in J(B)",
                     note=_flags_note(lhs=lhs, rhs=rhs))
    return None


def check_trivial_morita_extension(entry, ctx):
    spec = _morita_spec(entry)
    ext = C.trivial_morita_as_extension(spec, entry.max_order)
    left = K.flag_signature(K.classify(entry.ring, ctx.budget))
    right = K.flag_signature(K.classify(ext, ctx.budget))
    if left != right:
        diff = {k: (v, w) for (k, v), (_, w) in zip(left, right) if v != w}
        return _fail(entry.ring, "trivial context ring and T(A x B, M + N) share all flags",
                     note=str(diff))
    return None


# -- trivial extensions -------------------------------------------------------------

def _extensions(entry):
    """T(R, R) and, when small enough, T(R, R + R) with their modules."""
    if "extensions" not in entry._parts:
        R = entry.ring
        reg = C.regular_bimodule(R)
        out = [(C.trivial_extension(R, reg, max_order=entry.max_order), reg)]
        if _feasible(R, 3, Context(entry.max_order)):
            two = C.direct_sum_bimodule([reg, reg], label=f"{R.label}^2")
            out.append((C.trivial_extension(R, two, max_order=entry.max_order), two))
        entry._parts["extensions"] = out
    return entry._parts["extensions"]


def check_extension_blocks(entry, ctx):
    R = entry.ring
    for T, module in _extensions(entry):
        r = np.arange(T.order) // module.order
        for name, whole, base in (("Delta", delta(T), delta(R)), ("U", units(T).units, units(R).units)):
            hit = _first(base.mask[r] != whole.mask)
            if hit:
                return _fail(T, f"{name}(T(R, M)) = T({name}(R), M)", x=hit[0])
    return None


def check_extension_no_idempotents(entry, ctx):
    for T, _ in _extensions(entry):
        if _sdc(T) != K.residue_is_F2(entry.ring):
            return _fail(T, "R without non-trivial idempotents: SDC(T(R, M)) <=> R/J(R) = Z2",
                         note=_flags_note(sdc=_sdc(T), residue=K.residue_is_F2(entry.ring)))
    return None


def _idempotents_commute_with_module(R: FiniteRing, module) -> bool:
    ids = idempotents(R).indices
    return bool(np.array_equal(module.left_action[ids], module.right_action[:, ids].T))


def check_extension_base(entry, ctx):
    R = entry.ring
    for T, module in _extensions(entry):
        if _sdc(T) and not _sdc(R):
            return _fail(T, "SDC(T(R, M)) implies SDC(R)")
        if _idempotents_commute_with_module(R, module) and _sdc(R) and not _sdc(T):
            return _fail(T, "em = me for idempotents e: SDC(R) implies SDC(T(R, M))")
    return None


def check_extension_regular(entry, ctx):
    R = entry.ring
    T, _ = _extensions(entry)[0]
    if _sdc(T) and not _sdc(R):
        return _fail(T, "SDC(T(R, R)) implies SDC(R)")
    if K.is_abelian(R) and _sdc(R) and not _sdc(T):
        return _fail(T, "abelian R: SDC(R) implies SDC(T(R, R))")
    return None


# -- group rings ---------------------------------------------------------------------

def _augmentation(entry):
    if "augmentation" not in entry._parts:
        base, group = _group_ring_parts(entry)
        ring, aug = C.group_ring(base, group, entry.max_order)
        C.check_homomorphism(ring, base, aug)
        entry._parts["augmentation"] = aug
    return entry._parts["augmentation"]


def check_group_ring_radical(entry, ctx):
    R = entry.ring
    base, _ = _group_ring_parts(entry)
    aug = _augmentation(entry)
    J = jacobson_radical(R)
    kernel = aug == base.zero
    hit = _first(kernel & ~J.mask)
    if hit:
        return _fail(R, "augmentation ideal inside J(RG)", x=hit[0])
    if not K.is_boolean(_radical_quotient(R)):
        return _fail(R, "RG/J(RG) is boolean")
    expected = jacobson_radical(base).mask[aug]
    hit = _first(expected != J.mask)
    if hit:
        return _fail(R, "J(RG) = {x : augmentation(x) in J(R)}", x=hit[0])
    return None


def check_group_ring_necessary(entry, ctx):
    base, group = _group_ring_parts(entry)
    if _sdc(entry.ring) and not (_sdc(base) and is_p_group(group, 2)):
        return _fail(entry.ring, "SDC(RG) implies SDC(R) and G a 2-group",
                     note=_flags_note(sdc_base=_sdc(base), two_group=is_p_group(group, 2)))
    return None


def check_group_ring_abelian(entry, ctx):
    base, group = _group_ring_parts(entry)
    lhs = _sdc(entry.ring)
    rhs = _sdc(base) and is_p_group(group, 2)
    if lhs != rhs:
        return _fail(entry.ring, "abelian R: SDC(RG) <=> SDC(R) and G a 2-group",
                     note=_flags_note(lhs=lhs, rhs=rhs))
    return None


def check_group_ring_triangular(entry, ctx):
    n, base = _tn_group_ring(entry)
    _, group = _group_ring_parts(entry)
    rg, _ = C.group_ring(base, group, entry.max_order)
    other = C.upper_triangular_ring(rg, n, entry.max_order)
    left = K.classify(entry.ring, ctx.budget)
    right = K.classify(other, ctx.budget)
    if K.flag_signature(left) != K.flag_signature(right) or left.sizes != right.sizes:
        return _fail(entry.ring, "T_n(R)G and T_n(RG) have equal flags")
    if not left.flags["strongly_delta_clean"]:
        return _fail(entry.ring, "T_n(R)G is strongly Delta-clean")
    if n >= 2 and left.flags["uniquely_clean"]:
        return _fail(entry.ring, "T_n(R)G is not uniquely clean for n >= 2")
    return None


def check_odd_group(entry, ctx):
    if _sdc(entry.ring):
        return _fail(entry.ring, "G != 1 of odd order: RG is not strongly Delta-clean")
    return None


# -- structural sanity ------------------------------------------------------------------

def check_delta_structure(entry, ctx):
    R = entry.ring
    D, J, U = delta(R), jacobson_radical(R), units(R).units
    if not J <= D:
        return _fail(R, "J(R) inside Delta(R)", x=min(J.members - D.members))
    sums = R.add_table[np.ix_(D.indices, D.indices)]
    if not D.mask[sums].all():
        return _fail(R, "Delta(R) closed under addition")
    for u in U:
        left = {int(v) for v in R.mul_table[u, D.indices]}
        right = {int(v) for v in R.mul_table[D.indices, u]}
        if left != D.members or right != D.members:
            return _fail(R, "u Delta(R) = Delta(R) u = Delta(R)", u=u)
    if D.members & idempotents(R).members != {R.zero}:
        return _fail(R, "Delta(R) and Id(R) meet only in 0")
    if not U.mask[R.add_table[R.one, D.indices]].all():
        return _fail(R, "1 + Delta(R) inside U(R)")
    if delta_left(R) != D:
        return _fail(R, "{x : 1 - xu in U} = {x : 1 - ux in U}")
    return None


def check_radical_via_lattice(entry, ctx):
    R = entry.ring
    J = jacobson_radical(R)
    for side in ("right", "left"):
        if radical_from_lattice(R, side, ctx.budget) != J:
            return _fail(R, f"J(R) = intersection of maximal {side} ideals")
    return None


def check_implication_chain(entry, ctx):
    R = entry.ring
    chain = [("strongly J-clean", K.is_strongly_j_clean(R)),
             ("strongly Delta-clean", _sdc(R)),
             ("strongly clean", K.is_strongly_clean(R)),
             ("clean", K.is_clean(R))]
    for (p, vp), (q, vq) in zip(chain, chain[1:]):
        if vp and not vq:
            return _fail(R, f"{p} implies {q}")
    if _sdc(R) and not K.is_delta_u(R):
        return _fail(R, "strongly Delta-clean implies Delta U")
    return None


AXIOM_CASE = "ring-axioms"

CASES: tuple[TheoremCase, ...] = (
    TheoremCase(AXIOM_CASE, "(R, +, *) is a ring with 1", "all", check_axioms),
    TheoremCase("lemma-1.1", "U(R) + Delta(R) = U(R)", "all", check_units_plus_delta),
    TheoremCase("lemma-0.1", "prod R_i is SDC iff every R_i is SDC", "product", check_product),
    TheoremCase("lemma-0.2", "R SDC, I ideal inside J(R) => R/I SDC", "sdc",
                check_quotient_by_radical_ideal),
    TheoremCase("lemma-1.5", "SDC => strongly clean via a = (1-e) + (2e-1+d)", "sdc",
                check_strongly_clean_from_sdc),
    TheoremCase("example-2.1", "Delta(R) inside SDC(R)", "all", check_delta_elements_sdc),
    TheoremCase("example-2.2", "u in U(R): u in SDC(R) iff u - 1 in Delta(R)", "all", check_unit_sdc),
    TheoremCase("example-2.3", "a in SDC(R) iff 1 - a in SDC(R)", "all", check_complement_sdc),
    TheoremCase("lemma-1", "e in Id(R), d in Delta(R) => 2ed in Delta(R)", "all", check_two_e_d),
    TheoremCase("lemma-2", "R SDC: a^2 in Delta(R) => a in Delta(R)", "sdc", check_square_in_delta),
    TheoremCase("cor-subset-nil", "R SDC => Nil(R) inside Delta(R)", "sdc", check_nil_in_delta),
    TheoremCase("cor-com-idim", "R SDC => er - re in Delta(R)", "sdc", check_commutator_in_delta),
    TheoremCase("lemma-3", "R SDC => a - a^2 in Delta(R)", "sdc", check_a_minus_square),
    TheoremCase("lemma-4", "R SDC => R/J(R) reduced", "sdc", check_residue_reduced),
    TheoremCase("lemma-5", "R SDC => 2 in J(R)", "sdc", check_two_in_radical),
    TheoremCase("lemma-du", "R SDC => 1 + Delta(R) = U(R)", "sdc", check_delta_u),
    TheoremCase("lemma-ann", "a = e + d SDC => ann_l(a) in ann_l(e), ann_r(a) in ann_r(e)", "all",
                check_annihilators),
    TheoremCase("lemma-corner", "a in eRe and SDC in R => SDC in eRe", "all", check_corner_elements),
    TheoremCase("cor-corner-ring", "R SDC => eRe SDC", "sdc", check_corner_rings),
    TheoremCase("prop-2.2", "n >= 2 => M_n(S) not SDC (not Delta U)", "matrix-n2", check_matrix_not_sdc),
    TheoremCase("lemma-local-1", "division R: SDC iff R = F2", "division", check_division),
    TheoremCase("lemma-local-2", "R local and SDC iff R/J(R) = F2", "all", check_local_residue),
    TheoremCase("lemma-local-3", "semisimple R: SDC iff R = F2 x ... x F2", "semisimple",
                check_semisimple),
    TheoremCase("lemma-local-4", "R SDC => R/J(R) = F2 x ... x F2", "sdc", check_semilocal),
    TheoremCase("lemma-dedekind", "R SDC => Dedekind-finite", "sdc", check_dedekind),
    TheoremCase("thm-main-1", "SDC iff strongly clean and Delta(R) = {x : 1 - x in U(R)}", "all",
                check_main_characterization),
    TheoremCase("thm-uc", "uniquely clean iff SDC and abelian", "all",
                check_uniquely_clean_characterization),
    TheoremCase("thm-udc", "uniquely Delta-clean iff SDC and abelian", "all",
                check_uniquely_delta_characterization),
    TheoremCase("cor-udc-uc", "uniquely Delta-clean iff uniquely clean", "all",
                check_uniquely_delta_vs_clean),
    TheoremCase("lemma-uniquely", "uniquely Delta-clean => idempotents central",
                "uniquely-delta-clean", check_uniquely_delta_abelian),
    TheoremCase("lemma-ni-idempotent", "R SDC, R != 0: local iff Id(R) = {0, 1}", "nonzero-sdc",
                check_local_iff_no_idempotents),
    TheoremCase("thm-boolean", "SDC with J(R) = 0 iff boolean", "all", check_boolean_theorem),
    TheoremCase("cor-booli", "R SDC => R/J(R) boolean", "sdc", check_residue_boolean),
    TheoremCase("cor-quasi-duo", "R SDC => right and left quasi-duo", "sdc-lattice", check_quasi_duo),
    TheoremCase("thm-nil", "strongly nil-clean iff SDC and Delta(R) inside Nil(R)", "all",
                check_nil_characterization),
    TheoremCase("cor-triangular", "commutative R: SDC iff uniquely clean iff T_n(R) SDC",
                "commutative", check_triangular_commutative),
    TheoremCase("cor-11", "local R, n >= 2: T_n(R) SDC iff R bleached and R/J(R) = F2", "local",
                check_triangular_local),
    TheoremCase("cor-comm-local", "commutative local R: T_n(R) SDC iff R/J(R) = Z2",
                "commutative-local", check_triangular_commutative_local),
    TheoremCase("lemma-rad-morita", "MN in J(A), NM in J(B) => J, U, Delta of (A M; N B) are blockwise",
                "morita-rad", check_morita_radical_blocks),
    TheoremCase("thm-com-morita", "trivial (A M; N B), A commutative in B: SDC iff A, B SDC",
                "morita-commutative-subring", check_com_morita),
    TheoremCase("thm-loc-mori", "trivial context, A, B local: SDC iff residues F2 and ax - xb, ya - by onto",
                "morita-trivial-local", check_local_morita),
    TheoremCase("cor-formal-triangular", "(A M; 0 B), A, B local: SDC iff residues F2 and m = ax - xb solvable",
                "morita-formal-triangular", check_formal_triangular),
    TheoremCase("thm-mor-fin", "trivial context: SDC iff the idempotent/solvability criterion holds",
                "morita-trivial", check_trivial_morita_criterion),
    TheoremCase("thm-mor-abelian", "trivial context, A, B abelian: SDC iff uniquely Delta-clean and criterion",
                "morita-trivial-abelian", check_trivial_morita_abelian),
    TheoremCase("lemma-pur-mori", "(A M; N B) SDC => A, B SDC and MN in J(A), NM in J(B)",
                "morita-sdc", check_pure_morita),
    TheoremCase("thm-eq-mori", "J(A), J(B) nilpotent: SDC iff A, B SDC and MN in J(A), NM in J(B)",
                "morita", check_nilpotent_morita),
    TheoremCase("morita-trivial-extension", "trivial (A M; N B) = T(A x B, M + N)", "morita-trivial",
                check_trivial_morita_extension),
    TheoremCase("te-blocks", "Delta(T(R, M)) = T(Delta(R), M), U(T(R, M)) = T(U(R), M)", "small",
                check_extension_blocks),
    TheoremCase("te-no-idempotents", "R without non-trivial idempotents: T(R, M) SDC iff R/J(R) = Z2",
                "small-no-idempotents", check_extension_no_idempotents),
    TheoremCase("te-base", "T(R, M) SDC => R SDC; converse when em = me", "small", check_extension_base),
    TheoremCase("te-regular", "T(R, R) SDC => R SDC; converse when R abelian", "small",
                check_extension_regular),
    TheoremCase("gr-radical", "R SDC, G 2-group: augmentation ideal in J(RG), RG/J boolean, "
                "J(RG) = augmentation^-1(J(R))", "group-ring-sdc-2group", check_group_ring_radical),
    TheoremCase("thm-1.6", "RG SDC => R SDC and G a 2-group", "group-ring", check_group_ring_necessary),
    TheoremCase("lemma-abelian-gr", "abelian R: RG SDC iff R SDC and G a 2-group", "group-ring-abelian",
                check_group_ring_abelian),
    TheoremCase("example-tn-rg", "commutative uniquely clean R, abelian 2-group G: T_n(R)G and T_n(RG) "
                "agree and are SDC", "group-ring-triangular", check_group_ring_triangular),
    TheoremCase("prop-group", "G != 1 with odd order => RG not SDC", "group-ring-odd", check_odd_group),
    TheoremCase("sanity-delta", "J inside Delta; Delta additive, unit-stable, idempotent-free, left-right symmetric",
                "all", check_delta_structure),
    TheoremCase("sanity-radical-lattice", "J(R) = intersection of maximal right (left) ideals", "lattice",
                check_radical_via_lattice),
    TheoremCase("sanity-dedekind", "finite rings are Dedekind-finite", "all", check_dedekind),
    TheoremCase("sanity-chain", "strongly J-clean => SDC => strongly clean => clean; SDC => Delta U", "all",
                check_implication_chain),
)


def case_index() -> dict[str, TheoremCase]:
    return {c.id: c for c in CASES}
