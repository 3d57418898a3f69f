"""Plain-Python recomputations used as the independent side of biconditional
checks.

Nothing here touches :mod:`ringlab.subsets` or :mod:`ringlab.classifiers`; an
oracle ring is just an element list with ``add``/``mul``/``neg`` callables,
so a defect in the vectorized code path cannot leak into both sides of a
comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Hashable


@dataclass
class NaiveRing:
    elements: list
    add: Callable
    mul: Callable
    neg: Callable
    zero: Hashable
    one: Hashable
    memo: dict = field(default_factory=dict)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def _memo(self, key, build):
        if key not in self.memo:
            self.memo[key] = build()
        return self.memo[key]


def from_tables(ring) -> NaiveRing:
    """Wrap a table-backed ring using plain list lookups."""
    A = ring.add_table.tolist()
    M = ring.mul_table.tolist()
    n = ring.order
    neg = [next(b for b in range(n) if A[a][b] == ring.zero) for a in range(n)]
    return NaiveRing(list(range(n)), lambda a, b: A[a][b], lambda a, b: M[a][b],
                     lambda a: neg[a], ring.zero, ring.one)


def triangular(base: NaiveRing, n: int) -> NaiveRing:
    """Upper triangular n x n matrices over ``base`` as tuples of rows."""
    cells = [(i, j) for i in range(n) for j in range(i, n)]
    elements = []
    for values in product(base.elements, repeat=len(cells)):
        mat = [[base.zero] * n for _ in range(n)]
        for (i, j), v in zip(cells, values):
            mat[i][j] = v
        elements.append(tuple(tuple(row) for row in mat))

    def add(x, y):
        return tuple(tuple(base.add(x[i][j], y[i][j]) for j in range(n)) for i in range(n))

    def neg(x):
        return tuple(tuple(base.neg(x[i][j]) for j in range(n)) for i in range(n))

    def mul(x, y):
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = base.zero
                for k in range(i, j + 1):
                    acc = base.add(acc, base.mul(x[i][k], y[k][j]))
                row.append(acc)
            out.append(tuple(row))
        return tuple(out)

    zero = tuple(tuple(base.zero for _ in range(n)) for _ in range(n))
    one = tuple(tuple(base.one if i == j else base.zero for j in range(n)) for i in range(n))
    return NaiveRing(elements, add, mul, neg, zero, one)


def units(R: NaiveRing) -> set:
    def build():
        found = set()
        for a in R.elements:
            for b in R.elements:
                if R.mul(a, b) == R.one and R.mul(b, a) == R.one:
                    found.add(a)
                    break
        return found
    return R._memo("units", build)


def idempotents(R: NaiveRing) -> list:
    return R._memo("idempotents", lambda: [e for e in R.elements if R.mul(e, e) == e])


def nilpotents(R: NaiveRing) -> set:
    def build():
        found = set()
        for a in R.elements:
            seen = set()
            x = a
            while x != R.zero and x not in seen:
                seen.add(x)
                x = R.mul(x, a)
            if x == R.zero:
                found.add(a)
        return found
    return R._memo("nilpotents", build)


def delta(R: NaiveRing) -> set:
    def build():
        U = units(R)
        return {x for x in R.elements
                if all(R.sub(R.one, R.mul(x, u)) in U for u in U)}
    return R._memo("delta", build)


def jacobson(R: NaiveRing) -> set:
    def build():
        U = units(R)
        return {x for x in R.elements
                if all(R.sub(R.one, R.mul(r, x)) in U for r in R.elements)}
    return R._memo("jacobson", build)


def one_minus_units(R: NaiveRing) -> set:
    U = units(R)
    return {x for x in R.elements if R.sub(R.one, x) in U}


def _representations(R: NaiveRing, a, part: set, strong: bool) -> list:
    reps = []
    for e in idempotents(R):
        d = R.sub(a, e)
        if d in part and (not strong or R.mul(e, d) == R.mul(d, e)):
            reps.append(e)
    return reps


def strongly_clean(R: NaiveRing) -> bool:
    U = units(R)
    return all(_representations(R, a, U, True) for a in R.elements)


def strongly_delta_clean(R: NaiveRing) -> bool:
    def build():
        D = delta(R)
        return all(_representations(R, a, D, True) for a in R.elements)
    return R._memo("sdc", build)


def uniquely_clean(R: NaiveRing) -> bool:
    U = units(R)
    return all(len(_representations(R, a, U, False)) == 1 for a in R.elements)


def abelian(R: NaiveRing) -> bool:
    return all(R.mul(e, r) == R.mul(r, e) for e in idempotents(R) for r in R.elements)


def is_local(R: NaiveRing) -> bool:
    if len(R.elements) == 1:
        return False
    U = units(R)
    non = [a for a in R.elements if a not in U]
    return all(R.add(a, b) not in U for a in non for b in non)


def residue_is_F2(R: NaiveRing) -> bool:
    return len(R.elements) == 2 * len(jacobson(R))


def bleached(R: NaiveRing) -> bool:
    U, J = units(R), jacobson(R)
    size = len(R.elements)
    for a in U:
        for b in J:
            left = {R.sub(R.mul(a, x), R.mul(x, b)) for x in R.elements}
            right = {R.sub(R.mul(b, x), R.mul(x, a)) for x in R.elements}
            if len(left) != size or len(right) != size:
                return False
    return True
