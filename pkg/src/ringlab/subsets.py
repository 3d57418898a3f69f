"""Distinguished subsets of a finite ring: units, idempotents, nilpotents,
the Jacobson radical, Delta, the center, annihilators and ideal lattices.

All results are cached on the ring (rings are immutable).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from .config import DEFAULT_IDEAL_BUDGET
from .ring import FiniteRing

SIDES = ("left", "right", "two-sided")


class BudgetExceeded(RuntimeError):
    """The ideal lattice has more members than the configured budget."""

    def __init__(self, ring: FiniteRing, side: str, budget: int):
        self.budget = budget
        super().__init__(f"{side} ideal lattice of {ring.label} exceeds budget {budget}")


@dataclass(frozen=True, eq=False)
class ElementSubset:
    ring: FiniteRing
    members: frozenset

    def __post_init__(self):
        bad = [m for m in self.members if not 0 <= m < self.ring.order]
        if bad:
            raise ValueError(f"indices {sorted(bad)} out of range for {self.ring.label}")

    @classmethod
    def from_mask(cls, ring: FiniteRing, mask: np.ndarray) -> "ElementSubset":
        subset = cls(ring, frozenset(int(i) for i in np.flatnonzero(mask)))
        subset.__dict__["mask"] = np.asarray(mask, dtype=bool)
        return subset

    @classmethod
    def of(cls, ring: FiniteRing, members: Iterable[int]) -> "ElementSubset":
        return cls(ring, frozenset(int(m) for m in members))

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.ring.order, dtype=bool)
        m[list(self.members)] = True
        return m

    @cached_property
    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.mask)

    def __contains__(self, a) -> bool:
        return int(a) in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __eq__(self, other) -> bool:
        if isinstance(other, ElementSubset):
            return self.ring is other.ring and self.members == other.members
        return NotImplemented

    def __hash__(self) -> int:
        return hash((id(self.ring), self.members))

    def __le__(self, other: "ElementSubset") -> bool:
        return self.members <= other.members

    def __repr__(self) -> str:
        return f"ElementSubset({self.ring.label}, {sorted(self.members)})"

    def sorted(self) -> list[int]:
        return sorted(self.members)


@dataclass(frozen=True, eq=False)
class UnitTable:
    ring: FiniteRing
    units: ElementSubset
    inverse: dict = field(repr=False)


@dataclass(frozen=True, eq=False)
class IdealLattice:
    ring: FiniteRing
    side: str
    ideals: tuple
    maximal: tuple


def _cached(ring: FiniteRing, key, build):
    try:
        return ring.cache[key]
    except KeyError:
        value = ring.cache[key] = build()
        return value


def one_minus(ring: FiniteRing) -> np.ndarray:
    """Vector ``y -> 1 - y`` as an index map."""
    return _cached(ring, "one_minus", lambda: ring.add_table[ring.one][ring.neg_table])


def units(ring: FiniteRing) -> UnitTable:
    def build():
        hits = ring.mul_table == ring.one
        two_sided = hits & hits.T
        mask = two_sided.any(axis=1)
        inv = np.argmax(two_sided, axis=1)
        inverse = {int(u): int(inv[u]) for u in np.flatnonzero(mask)}
        return UnitTable(ring, ElementSubset.from_mask(ring, mask), inverse)
    return _cached(ring, "units", build)


def idempotents(ring: FiniteRing) -> ElementSubset:
    def build():
        idx = np.arange(ring.order)
        return ElementSubset.from_mask(ring, ring.mul_table[idx, idx] == idx)
    return _cached(ring, "idempotents", build)


def nilpotents(ring: FiniteRing) -> ElementSubset:
    def build():
        # a nilpotent element of a ring of order n satisfies a^n = 0
        base = np.arange(ring.order)
        power = base.copy()
        for _ in range(ring.order - 1):
            power = ring.mul_table[power, base]
        return ElementSubset.from_mask(ring, power == ring.zero)
    return _cached(ring, "nilpotents", build)


def jacobson_radical(ring: FiniteRing) -> ElementSubset:
    """``{x : 1 - r x is a unit for every r}``."""
    def build():
        unit = units(ring).units.mask
        quasi = unit[one_minus(ring)[ring.mul_table]]  # [r, x] -> 1 - r x is a unit
        return ElementSubset.from_mask(ring, quasi.all(axis=0))
    return _cached(ring, "jacobson", build)


def delta(ring: FiniteRing) -> ElementSubset:
    """``{x : 1 - x u is a unit for every unit u}``."""
    def build():
        table = units(ring)
        unit = table.units.mask
        prods = ring.mul_table[:, table.units.indices]  # [x, u] -> x u
        return ElementSubset.from_mask(ring, unit[one_minus(ring)[prods]].all(axis=1))
    return _cached(ring, "delta", build)


def delta_left(ring: FiniteRing) -> ElementSubset:
    """Mirror of :func:`delta` using ``1 - u x``."""
    def build():
        table = units(ring)
        unit = table.units.mask
        prods = ring.mul_table[table.units.indices, :]  # [u, x] -> u x
        return ElementSubset.from_mask(ring, unit[one_minus(ring)[prods]].all(axis=0))
    return _cached(ring, "delta_left", build)


def lower_nilradical(ring: FiniteRing) -> ElementSubset:
    # In an artinian ring J is a nilpotent ideal and contains every nil
    # one-sided ideal, so the prime radical coincides with J.
    return jacobson_radical(ring)


def center(ring: FiniteRing) -> ElementSubset:
    def build():
        M = ring.mul_table
        return ElementSubset.from_mask(ring, (M == M.T).all(axis=1))
    return _cached(ring, "center", build)


def left_annihilator(ring: FiniteRing, a: int) -> ElementSubset:
    """``{r : r a = 0}``."""
    return ElementSubset.from_mask(ring, ring.mul_table[:, a] == ring.zero)


def right_annihilator(ring: FiniteRing, a: int) -> ElementSubset:
    """``{r : a r = 0}``."""
    return ElementSubset.from_mask(ring, ring.mul_table[a, :] == ring.zero)


def multiples(ring: FiniteRing, g: int) -> list[int]:
    """The cyclic additive subgroup generated by ``g``."""
    out = [ring.zero]
    x = g
    while x != ring.zero:
        out.append(x)
        x = int(ring.add_table[x, g])
    return out


def additive_span(ring: FiniteRing, generators: Iterable[int]) -> np.ndarray:
    """Mask of the additive subgroup generated by ``generators``."""
    mask = np.zeros(ring.order, dtype=bool)
    mask[ring.zero] = True
    members = np.array([ring.zero])
    for g in generators:
        if mask[g]:
            continue
        cyc = np.array(multiples(ring, int(g)))
        mask[ring.add_table[np.ix_(members, cyc)].ravel()] = True
        members = np.flatnonzero(mask)
    return mask


def _products(ring: FiniteRing, gens: np.ndarray, side: str) -> np.ndarray:
    M = ring.mul_table
    if side == "right":
        return M[gens, :].ravel()
    if side == "left":
        return M[:, gens].ravel()
    if side == "two-sided":
        return M[M[:, gens].ravel(), :].ravel()
    raise ValueError(f"side must be one of {SIDES}, got {side!r}")


def ideal_generated_by(ring: FiniteRing, generators: Iterable[int],
                       side: str = "two-sided") -> ElementSubset:
    gens = np.array(sorted({int(g) for g in generators}), dtype=np.int64)
    if gens.size == 0:
        return ElementSubset.of(ring, [ring.zero])
    prods = np.unique(_products(ring, gens, side))
    return ElementSubset.from_mask(ring, additive_span(ring, prods))


def is_ideal(ring: FiniteRing, members: Iterable[int], side: str = "two-sided") -> bool:
    mask = np.zeros(ring.order, dtype=bool)
    mask[list(members)] = True
    idx = np.flatnonzero(mask)
    if not mask[ring.zero] or idx.size == 0:
        return False
    if not mask[ring.add_table[np.ix_(idx, idx)]].all():
        return False
    if not mask[ring.neg_table[idx]].all():
        return False
    M = ring.mul_table
    if side in ("right", "two-sided") and not mask[M[idx, :]].all():
        return False
    if side in ("left", "two-sided") and not mask[M[:, idx]].all():
        return False
    return True


def ideal_lattice(ring: FiniteRing, side: str = "two-sided",
                  budget: int = DEFAULT_IDEAL_BUDGET) -> IdealLattice:
    """Every ideal of the given side, by closing principal ideals under sums.

    Any ideal is the sum of the principal ideals of its elements, so the
    closure of ``{0}`` under ``I -> I + P`` reaches the whole lattice.  An
    ideal is maximal exactly when every such step leads to itself or ``R``.
    """
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")
    key = ("lattice", side)
    if key in ring.cache:
        return ring.cache[key]

    n = ring.order
    principal: dict[bytes, np.ndarray] = {}
    for a in range(n):
        mask = ideal_generated_by(ring, [a], side).mask
        principal.setdefault(mask.tobytes(), np.flatnonzero(mask))
    gens = list(principal.values())

    zero_mask = np.zeros(n, dtype=bool)
    zero_mask[ring.zero] = True
    found: dict[bytes, np.ndarray] = {zero_mask.tobytes(): zero_mask}
    queue = [zero_mask]
    maximal = []
    full = n
    while queue:
        current = queue.pop()
        members = np.flatnonzero(current)
        grows_properly = False
        for gen in gens:
            if current[gen].all():
                continue
            nxt = np.zeros(n, dtype=bool)
            nxt[ring.add_table[np.ix_(members, gen)].ravel()] = True
            count = int(nxt.sum())
            if count < full:
                grows_properly = True
            k = nxt.tobytes()
            if k not in found:
                found[k] = nxt
                if len(found) > budget:
                    raise BudgetExceeded(ring, side, budget)
                queue.append(nxt)
        if len(members) < full and not grows_properly:
            maximal.append(current)

    def order_key(mask):
        return (int(mask.sum()), tuple(np.flatnonzero(mask)))

    ideals = tuple(ElementSubset.from_mask(ring, m) for m in sorted(found.values(), key=order_key))
    maxi = tuple(ElementSubset.from_mask(ring, m) for m in sorted(maximal, key=order_key))
    lattice = IdealLattice(ring, side, ideals, maxi)
    ring.cache[key] = lattice
    return lattice


def radical_from_lattice(ring: FiniteRing, side: str = "right",
                         budget: int = DEFAULT_IDEAL_BUDGET) -> ElementSubset:
    """Intersection of the maximal ideals of one side (cross-check for J)."""
    lattice = ideal_lattice(ring, side, budget)
    mask = np.ones(ring.order, dtype=bool)
    for ideal in lattice.maximal:
        mask &= ideal.mask
    return ElementSubset.from_mask(ring, mask)
