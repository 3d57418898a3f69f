"""Ring-class predicates and idempotent-plus-part decomposition witnesses."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .config import DEFAULT_IDEAL_BUDGET
from .ring import FiniteRing, is_commutative
from .subsets import (BudgetExceeded, ElementSubset, _cached, center, delta, idempotents,
                      ideal_lattice, is_ideal, jacobson_radical, lower_nilradical,
                      nilpotents, units)

KINDS = ("delta", "jacobson", "nilpotent", "unit")


class NotLocalError(ValueError):
    pass


@dataclass(frozen=True)
class Skipped:
    reason: str

    def __str__(self) -> str:
        return f"skipped ({self.reason})"


@dataclass(frozen=True)
class DecompositionWitness:
    element: int
    idempotent: int
    part: int
    kind: str
    commutes: bool


def part_set(ring: FiniteRing, kind: str) -> ElementSubset:
    if kind == "delta":
        return delta(ring)
    if kind == "jacobson":
        return jacobson_radical(ring)
    if kind == "nilpotent":
        return nilpotents(ring)
    if kind == "unit":
        return units(ring).units
    raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")


def decomposition_matrix(ring: FiniteRing, kind: str, strong: bool) -> np.ndarray:
    """Boolean ``[a, k]``: ``a - e_k`` lies in the part set (and commutes with
    ``e_k`` when ``strong``), ``e_k`` running over idempotents ascending."""
    def build():
        ids = idempotents(ring).indices
        parts = ring.add_table[:, ring.neg_table[ids]]  # [a, k] -> a - e_k
        ok = part_set(ring, kind).mask[parts]
        if strong:
            M = ring.mul_table
            ok &= M[ids[None, :], parts] == M[parts, ids[None, :]]
        return ok
    return _cached(ring, ("decomp", kind, strong), build)


def decomposable(ring: FiniteRing, kind: str, strong: bool) -> ElementSubset:
    return ElementSubset.from_mask(ring, decomposition_matrix(ring, kind, strong).any(axis=1))


def witness(ring: FiniteRing, a: int, kind: str = "delta",
            strong: bool = True) -> DecompositionWitness | None:
    """First decomposition of ``a`` by ascending idempotent index."""
    row = decomposition_matrix(ring, kind, strong)[a]
    if not row.any():
        return None
    return _make_witness(ring, a, int(idempotents(ring).indices[np.argmax(row)]), kind)


def all_witnesses(ring: FiniteRing, a: int, kind: str = "delta",
                  strong: bool = True) -> list[DecompositionWitness]:
    row = decomposition_matrix(ring, kind, strong)[a]
    ids = idempotents(ring).indices
    return [_make_witness(ring, a, int(e), kind) for e in ids[row]]


def _make_witness(ring: FiniteRing, a: int, e: int, kind: str) -> DecompositionWitness:
    d = ring.sub(a, e)
    return DecompositionWitness(int(a), e, d, kind, ring.mul(e, d) == ring.mul(d, e))


def witnesses(ring: FiniteRing, kind: str = "delta", strong: bool = True) -> list:
    return [witness(ring, a, kind, strong) for a in ring.elements()]


def _all(ring: FiniteRing, kind: str, strong: bool) -> bool:
    return bool(decomposition_matrix(ring, kind, strong).any(axis=1).all())


def _unique(ring: FiniteRing, kind: str) -> bool:
    return bool((decomposition_matrix(ring, kind, False).sum(axis=1) == 1).all())


def is_clean(ring: FiniteRing) -> bool:
    return _all(ring, "unit", False)


def is_strongly_clean(ring: FiniteRing) -> bool:
    return _all(ring, "unit", True)


def is_strongly_delta_clean(ring: FiniteRing) -> bool:
    return _all(ring, "delta", True)


def sdc_elements(ring: FiniteRing) -> ElementSubset:
    """Elements admitting a commuting idempotent + Delta decomposition."""
    return decomposable(ring, "delta", True)


def is_uniquely_clean(ring: FiniteRing) -> bool:
    return _unique(ring, "unit")


def is_uniquely_delta_clean(ring: FiniteRing) -> bool:
    return _unique(ring, "delta")


def is_nil_clean(ring: FiniteRing) -> bool:
    return _all(ring, "nilpotent", False)


def is_strongly_nil_clean(ring: FiniteRing) -> bool:
    return _all(ring, "nilpotent", True)


def is_strongly_j_clean(ring: FiniteRing) -> bool:
    return _all(ring, "jacobson", True)


def is_delta_u(ring: FiniteRing) -> bool:
    shifted = {int(x) for x in ring.add_table[ring.one, delta(ring).indices]}
    return shifted == set(units(ring).units.members)


def is_boolean(ring: FiniteRing) -> bool:
    return len(idempotents(ring)) == ring.order


def is_reduced(ring: FiniteRing) -> bool:
    return len(nilpotents(ring)) == 1


def is_abelian(ring: FiniteRing) -> bool:
    return idempotents(ring) <= center(ring)


def is_local(ring: FiniteRing) -> bool:
    """Nonzero ring whose non-units are closed under addition."""
    if ring.order == 1:
        return False
    nonunits = np.flatnonzero(~units(ring).units.mask)
    sums = ring.add_table[np.ix_(nonunits, nonunits)]
    return not units(ring).units.mask[sums].any()


def is_semisimple(ring: FiniteRing) -> bool:
    return len(jacobson_radical(ring)) == 1


def is_division(ring: FiniteRing) -> bool:
    return ring.order > 1 and len(units(ring).units) == ring.order - 1


def is_dedekind_finite(ring: FiniteRing) -> bool:
    right_inverse = ring.mul_table == ring.one
    return not (right_inverse & ~right_inverse.T).any()


def is_2_primal(ring: FiniteRing) -> bool:
    return nilpotents(ring) == lower_nilradical(ring)


def is_quasi_duo(ring: FiniteRing, side: str = "right",
                 budget: int = DEFAULT_IDEAL_BUDGET) -> bool | Skipped:
    """Every maximal ``side`` ideal is two-sided (``side='both'`` checks both)."""
    sides = ("right", "left") if side == "both" else (side,)
    for s in sides:
        try:
            lattice = ideal_lattice(ring, s, budget)
        except BudgetExceeded as exc:
            return Skipped(str(exc))
        for ideal in lattice.maximal:
            if not is_ideal(ring, ideal.members, "two-sided"):
                return False
    return True


def is_bleached_local(ring: FiniteRing) -> bool:
    """For ``a`` a unit and ``b`` in J, ``x -> ax - xb`` and ``x -> bx - xa``
    are both onto."""
    if not is_local(ring):
        raise NotLocalError(f"{ring.label} is not local")
    A, M, neg = ring.add_table, ring.mul_table, ring.neg_table
    J = jacobson_radical(ring).indices
    n = ring.order
    for a in units(ring).units.indices:
        # rows indexed by b in J, columns by x
        left = A[M[a][None, :], neg[M[:, J].T]]       # a x - x b
        right = A[M[J, :], neg[M[:, a]][None, :]]     # b x - x a
        for images in (left, right):
            if any(len(np.unique(row)) != n for row in images):
                return False
    return True


def residue_is_F2(ring: FiniteRing) -> bool:
    return ring.order == 2 * len(jacobson_radical(ring))


# -- reports -----------------------------------------------------------------

FLAG_ORDER = (
    "commutative", "boolean", "reduced", "abelian", "local", "semisimple", "division",
    "dedekind_finite", "two_primal", "clean", "strongly_clean", "nil_clean",
    "strongly_nil_clean", "strongly_j_clean", "strongly_delta_clean", "uniquely_clean",
    "uniquely_delta_clean", "delta_u", "residue_f2", "bleached_local",
    "right_quasi_duo", "left_quasi_duo", "delta_equals_j",
)

SIZE_ORDER = ("units", "idempotents", "nilpotents", "jacobson", "delta")


def _bleached_flag(ring: FiniteRing):
    if not is_local(ring):
        return Skipped("not local")
    return is_bleached_local(ring)


PREDICATES: dict[str, Callable] = {
    "commutative": is_commutative,
    "boolean": is_boolean,
    "reduced": is_reduced,
    "abelian": is_abelian,
    "local": is_local,
    "semisimple": is_semisimple,
    "division": is_division,
    "dedekind_finite": is_dedekind_finite,
    "two_primal": is_2_primal,
    "clean": is_clean,
    "strongly_clean": is_strongly_clean,
    "nil_clean": is_nil_clean,
    "strongly_nil_clean": is_strongly_nil_clean,
    "strongly_j_clean": is_strongly_j_clean,
    "strongly_delta_clean": is_strongly_delta_clean,
    "uniquely_clean": is_uniquely_clean,
    "uniquely_delta_clean": is_uniquely_delta_clean,
    "delta_u": is_delta_u,
    "residue_f2": residue_is_F2,
    "bleached_local": _bleached_flag,
    "delta_equals_j": lambda r: delta(r) == jacobson_radical(r),
}


@dataclass
class ClassificationReport:
    label: str
    order: int
    sizes: dict
    flags: dict
    witnesses: list | None = None
    timing: dict = field(default_factory=dict)

    def flag(self, name: str):
        return self.flags[name]

    def skipped(self) -> dict:
        return {k: v.reason for k, v in self.flags.items() if isinstance(v, Skipped)}


def subset_sizes(ring: FiniteRing) -> dict:
    return {
        "units": len(units(ring).units),
        "idempotents": len(idempotents(ring)),
        "nilpotents": len(nilpotents(ring)),
        "jacobson": len(jacobson_radical(ring)),
        "delta": len(delta(ring)),
    }


def classify(ring: FiniteRing, budget: int = DEFAULT_IDEAL_BUDGET,
             with_witnesses: bool = False, quasi_duo_max_order: int | None = None
             ) -> ClassificationReport:
    """Run every predicate; lattice-based ones degrade to :class:`Skipped`.

    ``quasi_duo_max_order`` skips the lattice predicates on larger rings.
    """
    flags: dict = {}
    timing: dict = {}
    for name in FLAG_ORDER:
        start = time.perf_counter()
        if name in ("right_quasi_duo", "left_quasi_duo"):
            if quasi_duo_max_order is not None and ring.order > quasi_duo_max_order:
                value = Skipped(f"order {ring.order} above lattice limit {quasi_duo_max_order}")
            else:
                value = is_quasi_duo(ring, name.split("_")[0], budget)
        else:
            value = PREDICATES[name](ring)
        flags[name] = value if isinstance(value, Skipped) else bool(value)
        timing[name] = time.perf_counter() - start
    found = witnesses(ring) if with_witnesses else None
    return ClassificationReport(ring.label, ring.order, subset_sizes(ring), flags, found, timing)


def flag_signature(report: ClassificationReport) -> tuple:
    """Flags as a comparable tuple (skips compare equal to each other)."""
    return tuple((k, "skipped" if isinstance(v, Skipped) else v) for k, v in report.flags.items())
