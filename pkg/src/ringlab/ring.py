"""Table-backed finite unital rings.

Elements are the dense indices ``0 .. order-1``; addition and multiplication
are ``order x order`` lookup tables.  Everything else in the package is brute
force over these tables.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .config import max_order as _max_order


class RingError(ValueError):
    """Base class for construction failures."""


class AxiomError(RingError):
    """A ring axiom fails; ``witness`` is the offending index tuple."""

    def __init__(self, axiom: str, witness: tuple[int, ...], label: str = ""):
        self.axiom = axiom
        self.witness = tuple(int(w) for w in witness)
        where = f" in {label}" if label else ""
        super().__init__(f"axiom {axiom!r} fails{where} at {self.witness}")


class OrderError(RingError):
    """A construction would exceed the configured maximum order."""

    def __init__(self, order: int, limit: int, what: str = "ring"):
        self.order = order
        self.limit = limit
        super().__init__(f"{what} of order {order} exceeds max order {limit}")


def check_order(order: int, limit: int | None = None, what: str = "ring") -> None:
    limit = _max_order(limit)
    if order > limit:
        raise OrderError(order, limit, what)


def _frozen(table) -> np.ndarray:
    arr = np.array(table, dtype=np.int64)
    arr.setflags(write=False)
    return arr


class FiniteRing:
    """A finite associative ring with identity.

    ``names`` optionally gives a printable form for every element; it is how
    composite constructions let reports decode their mixed-radix indices.
    """

    __slots__ = ("order", "add_table", "mul_table", "zero", "one", "label",
                 "names", "neg_table", "cache")

    def __init__(self, order: int, add_table, mul_table, zero: int, one: int,
                 label: str = "", names: Sequence[str] | None = None):
        self.order = int(order)
        self.add_table = _frozen(add_table)
        self.mul_table = _frozen(mul_table)
        self.zero = int(zero)
        self.one = int(one)
        self.label = label or f"R{self.order}"
        self.names = tuple(names) if names is not None else None
        # additive inverses: position of zero in each row
        neg = np.argmax(self.add_table == self.zero, axis=1) if self.order else np.zeros(0)
        self.neg_table = _frozen(neg)
        self.cache: dict = {}

    def __repr__(self) -> str:
        return f"FiniteRing({self.label!r}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def power(self, a: int, k: int) -> int:
        result = self.one
        for _ in range(k):
            result = int(self.mul_table[result, a])
        return result

    def elements(self) -> range:
        return range(self.order)

    def name(self, a: int) -> str:
        if self.names is None:
            return str(int(a))
        return self.names[a]

    def integer(self, k: int) -> int:
        """The element ``k * 1`` (``k`` may be negative)."""
        acc = self.zero
        step = self.one if k >= 0 else self.neg(self.one)
        for _ in range(abs(k)):
            acc = int(self.add_table[acc, step])
        return acc

    def relabel(self, label: str) -> "FiniteRing":
        ring = FiniteRing.__new__(FiniteRing)
        for slot in FiniteRing.__slots__:
            setattr(ring, slot, getattr(self, slot))
        ring.label = label
        # cached subsets are tied to the ring object; plain maps survive
        ring.cache = {k: v for k, v in self.cache.items() if k == "augmentation"}
        return ring


def add(ring: FiniteRing, a: int, b: int) -> int:
    return ring.add(a, b)


def neg(ring: FiniteRing, a: int) -> int:
    return ring.neg(a)


def mul(ring: FiniteRing, a: int, b: int) -> int:
    return ring.mul(a, b)


def _first_mismatch(lhs: np.ndarray, rhs: np.ndarray):
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        return tuple(int(v) for v in bad[0])
    return None


def validate(ring: FiniteRing) -> None:
    """Check every ring axiom exhaustively; raise :class:`AxiomError`.

    Cost is O(order^3) table lookups, done one row slice at a time.
    """
    n = ring.order
    A, M = ring.add_table, ring.mul_table
    label = ring.label
    if A.shape != (n, n) or M.shape != (n, n):
        raise AxiomError("table-shape", (n,), label)
    if n == 0:
        raise AxiomError("nonempty", (), label)
    for name, table in (("add-closure", A), ("mul-closure", M)):
        bad = np.argwhere((table < 0) | (table >= n))
        if bad.size:
            raise AxiomError(name, tuple(bad[0]), label)
    if not (0 <= ring.zero < n and 0 <= ring.one < n):
        raise AxiomError("distinguished-elements", (ring.zero, ring.one), label)

    idx = np.arange(n)
    hit = _first_mismatch(A, A.T)
    if hit:
        raise AxiomError("additive-commutativity", hit, label)
    hit = _first_mismatch(A[ring.zero], idx)
    if hit:
        raise AxiomError("additive-identity", (ring.zero, hit[0]), label)
    missing = np.flatnonzero(~(A == ring.zero).any(axis=1))
    if missing.size:
        raise AxiomError("additive-inverse", (int(missing[0]),), label)
    hit = _first_mismatch(M[ring.one], idx) or _first_mismatch(M[:, ring.one], idx)
    if hit:
        raise AxiomError("multiplicative-identity", (ring.one, hit[0]), label)
    if n > 1 and ring.zero == ring.one:
        raise AxiomError("zero-one-distinct", (ring.zero,), label)

    for a in range(n):
        # (a+b)+c == a+(b+c) over all b, c
        hit = _first_mismatch(A[A[a]], A[a][A])
        if hit:
            raise AxiomError("additive-associativity", (a, *hit), label)
        hit = _first_mismatch(M[M[a]], M[a][M])
        if hit:
            raise AxiomError("multiplicative-associativity", (a, *hit), label)
        row = M[a]
        hit = _first_mismatch(row[A], A[row[:, None], row[None, :]])
        if hit:
            raise AxiomError("left-distributivity", (a, *hit), label)
        col = M[:, a]
        hit = _first_mismatch(col[A], A[col[:, None], col[None, :]])
        if hit:
            raise AxiomError("right-distributivity", (a, *hit), label)


def make_ring(order: int, add_table, mul_table, zero: int, one: int,
              validate_axioms: bool = True, label: str = "",
              names: Sequence[str] | None = None,
              max_order: int | None = None) -> FiniteRing:
    """Build a ring from explicit tables, validating the axioms by default."""
    check_order(order, max_order)
    add_arr = np.asarray(add_table)
    mul_arr = np.asarray(mul_table)
    for what, arr in (("add", add_arr), ("mul", mul_arr)):
        if arr.shape != (order, order):
            raise AxiomError("table-shape", (order,), f"{label} {what}".strip())
        if arr.size and (arr.min() < 0 or arr.max() >= order):
            bad = np.argwhere((arr < 0) | (arr >= order))[0]
            raise AxiomError(f"{what}-closure", tuple(bad), label)
    ring = FiniteRing(order, add_arr, mul_arr, zero, one, label=label, names=names)
    if validate_axioms:
        validate(ring)
    return ring


def is_commutative(ring: FiniteRing) -> bool:
    return bool(np.array_equal(ring.mul_table, ring.mul_table.T))
