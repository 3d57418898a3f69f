"""Finite groups as Cayley tables, plus the small catalog used for group rings."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Callable, Hashable, Sequence

import numpy as np


class GroupError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    order: int
    mul: np.ndarray
    identity: int
    label: str
    names: tuple = ()

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label!r}, order={self.order})"

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity:
            x = int(self.mul[x, g])
            k += 1
        return k

    def inverse(self, g: int) -> int:
        return int(np.flatnonzero(self.mul[g] == self.identity)[0])

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def subgroup_orders(self) -> set[int]:
        """Orders of all subgroups, by closing generated subgroups under joins."""
        seen: set[frozenset] = set()
        frontier = [frozenset([self.identity])]
        while frontier:
            sub = frontier.pop()
            if sub in seen:
                continue
            seen.add(sub)
            for g in range(self.order):
                if g not in sub:
                    frontier.append(self._generate(sub | {g}))
        return {len(s) for s in seen}

    def _generate(self, gens) -> frozenset:
        members = set(gens) | {self.identity}
        grew = True
        while grew:
            grew = False
            for a, b in product(list(members), repeat=2):
                c = int(self.mul[a, b])
                if c not in members:
                    members.add(c)
                    grew = True
        return frozenset(members)


def validate_group(group: FiniteGroup) -> None:
    n = group.order
    T = group.mul
    if T.shape != (n, n) or T.min() < 0 or T.max() >= n:
        raise GroupError(f"{group.label}: malformed table")
    idx = np.arange(n)
    if not (np.array_equal(T[group.identity], idx) and np.array_equal(T[:, group.identity], idx)):
        raise GroupError(f"{group.label}: identity fails")
    for a in range(n):
        if not np.array_equal(T[T[a]], T[a][T]):
            raise GroupError(f"{group.label}: associativity fails at {a}")
        if not (T[a] == group.identity).any():
            raise GroupError(f"{group.label}: {a} has no inverse")


def group_from_elements(elements: Sequence[Hashable], op: Callable, identity, label: str,
                        names: Sequence[str] | None = None) -> FiniteGroup:
    index = {x: i for i, x in enumerate(elements)}
    n = len(elements)
    table = np.array([[index[op(a, b)] for b in elements] for a in elements], dtype=np.int64)
    table.setflags(write=False)
    group = FiniteGroup(n, table, index[identity], label,
                        tuple(names) if names else tuple(str(x) for x in elements))
    validate_group(group)
    return group


def cyclic(n: int) -> FiniteGroup:
    names = ["e"] + [f"g^{k}" if k > 1 else "g" for k in range(1, n)]
    return group_from_elements(list(range(n)), lambda a, b: (a + b) % n, 0, f"C{n}", names)


def direct_product_groups(g: FiniteGroup, h: FiniteGroup, label: str | None = None) -> FiniteGroup:
    pairs = [(a, b) for a in range(g.order) for b in range(h.order)]
    names = [f"({g.names[a]},{h.names[b]})" for a, b in pairs]
    return group_from_elements(
        pairs, lambda x, y: (int(g.mul[x[0], y[0]]), int(h.mul[x[1], y[1]])),
        (g.identity, h.identity), label or f"{g.label}x{h.label}", names)


def symmetric(n: int) -> FiniteGroup:
    perms = sorted(permutations(range(n)))
    compose = lambda p, q: tuple(p[q[i]] for i in range(n))  # noqa: E731
    return group_from_elements(perms, compose, tuple(range(n)), f"S{n}",
                               ["".join(map(str, p)) for p in perms])


def dihedral_square() -> FiniteGroup:
    """Symmetries of a square (order 8) as permutations of its corners."""
    r = (1, 2, 3, 0)
    s = (0, 3, 2, 1)
    compose = lambda p, q: tuple(p[q[i]] for i in range(4))  # noqa: E731
    members = {tuple(range(4))}
    grew = True
    while grew:
        grew = False
        for p in list(members):
            for gen in (r, s):
                c = compose(p, gen)
                if c not in members:
                    members.add(c)
                    grew = True
    return group_from_elements(sorted(members), compose, tuple(range(4)), "D4",
                               ["".join(map(str, p)) for p in sorted(members)])


def quaternion() -> FiniteGroup:
    # units of the quaternions as (sign, basis) with basis in 1, i, j, k
    table = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }

    def op(x, y):
        sign, basis = table[(x[1], y[1])]
        return (x[0] * y[0] * sign, basis)

    elements = [(s, b) for s in (1, -1) for b in "1ijk"]
    names = [("" if s > 0 else "-") + b for s, b in elements]
    return group_from_elements(elements, op, (1, "1"), "Q8", names)


@lru_cache(maxsize=None)
def standard_groups() -> dict[str, FiniteGroup]:
    """The catalog: C1, C2, C3, C4, C2xC2, C5, S3, C8, D4, Q8."""
    c2 = cyclic(2)
    return {
        "C1": cyclic(1),
        "C2": c2,
        "C3": cyclic(3),
        "C4": cyclic(4),
        "C2xC2": direct_product_groups(c2, c2, "C2xC2"),
        "C5": cyclic(5),
        "S3": symmetric(3),
        "C8": cyclic(8),
        "D4": dihedral_square(),
        "Q8": quaternion(),
    }


def get_group(name: str) -> FiniteGroup:
    catalog = standard_groups()
    for key, group in catalog.items():
        if key.lower() == name.lower():
            return group
    raise GroupError(f"unknown group {name!r}; known: {', '.join(catalog)}")


def is_p_group(group: FiniteGroup, p: int) -> bool:
    for g in range(group.order):
        k = group.element_order(g)
        while k % p == 0:
            k //= p
        if k != 1:
            return False
    return True
