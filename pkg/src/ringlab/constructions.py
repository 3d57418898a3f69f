"""Ring constructions: residue rings, finite fields, products, matrix and
triangular rings, quotients, corners, trivial extensions, Morita contexts
and group rings.

Composite rings encode an element as the mixed-radix index of its
coordinate tuple (first coordinate most significant), so
``np.unravel_index`` recovers the components.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

import numpy as np

from .groups import FiniteGroup, validate_group
from .ring import AxiomError, FiniteRing, RingError, check_order, make_ring, validate
from .subsets import ElementSubset, is_ideal, idempotents


class NotAnIdealError(RingError):
    pass


class NotIdempotentError(RingError):
    pass


class BimoduleError(RingError):
    pass


# -- basic rings -------------------------------------------------------------

def zmod(n: int, max_order: int | None = None) -> FiniteRing:
    if n < 1:
        raise RingError(f"Z(n) needs n >= 1, got {n}")
    check_order(n, max_order)
    idx = np.arange(n)
    return make_ring(n, (idx[:, None] + idx[None, :]) % n, (idx[:, None] * idx[None, :]) % n,
                     0, 1 % n, validate_axioms=False, label=f"Z{n}", max_order=max_order)


def zero_ring() -> FiniteRing:
    return zmod(1).relabel("0")


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            d, rest = 0, q
            while rest % p == 0:
                rest //= p
                d += 1
            if rest != 1:
                break
            return p, d
    raise RingError(f"F(q) needs a prime power q, got {q}")


def _poly_mod_ring(p: int, modulus: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    """Tables of F_p[x]/(f) for a monic ``f`` given low-to-high without the lead 1."""
    d = len(modulus)
    q = p ** d
    coeffs = np.array([[(i // p ** k) % p for k in range(d)] for i in range(q)])
    weights = p ** np.arange(d)
    add = ((coeffs[:, None, :] + coeffs[None, :, :]) % p) @ weights
    mul = np.zeros((q, q), dtype=np.int64)
    for a in range(q):
        for b in range(q):
            prod = np.convolve(coeffs[a], coeffs[b]) % p
            # reduce with x^d = -sum(modulus_k x^k)
            for top in range(len(prod) - 1, d - 1, -1):
                c = prod[top]
                if c:
                    prod[top] = 0
                    for k, m in enumerate(modulus):
                        prod[top - d + k] = (prod[top - d + k] - c * m) % p
            mul[a, b] = int(prod[:d] @ weights)
    return add, mul


def galois_field(q: int, max_order: int | None = None) -> FiniteRing:
    """The field with ``q`` elements, element ``i`` being the polynomial with
    base-``p`` digits of ``i`` as coefficients (so F(p) has Z(p)'s tables)."""
    p, d = _prime_power(q)
    check_order(q, max_order)
    if d == 1:
        return zmod(p, max_order).relabel(f"F{p}")
    for code in range(p ** d):
        modulus = [(code // p ** k) % p for k in range(d)]
        if modulus[0] == 0:
            continue
        add, mul = _poly_mod_ring(p, modulus)
        # every nonzero element must be invertible
        nonzero = mul[1:, 1:]
        if (nonzero == 1).any(axis=1).all():
            return make_ring(q, add, mul, 0, 1, validate_axioms=False, label=f"F{q}")
    raise RingError(f"no irreducible polynomial of degree {d} over F{p}")  # pragma: no cover


# -- coordinate rings ----------------------------------------------------------

def _coords(sizes: Sequence[int]) -> np.ndarray:
    """All coordinate tuples in mixed-radix order, shape (N, k)."""
    if not sizes:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.indices(tuple(sizes)).reshape(len(sizes), -1)
    return grids.T.astype(np.int64)


def _encode(parts: Sequence[np.ndarray], sizes: Sequence[int]) -> np.ndarray:
    if not sizes:
        return np.zeros(np.shape(parts[0]) if parts else (), dtype=np.int64)
    return np.ravel_multi_index(tuple(parts), tuple(sizes))


def _outer(table: np.ndarray, left: np.ndarray, right: np.ndarray) -> np.ndarray:
    return table[left[:, None], right[None, :]]


def structure_ring(base: FiniteRing, k: int, terms: Sequence[tuple[int, int, int]],
                   one_coords: Sequence[int], label: str,
                   namer=None, max_order: int | None = None) -> FiniteRing:
    """Free R-module of rank ``k`` with product ``(x y)_t = sum x_i y_j`` over
    ``(i, j, t)`` in ``terms``.  Covers matrix, triangular and group rings."""
    order = base.order ** k
    check_order(order, max_order)
    sizes = [base.order] * k
    C = _coords(sizes)
    add_parts = [_outer(base.add_table, C[:, i], C[:, i]) for i in range(k)]
    mul_parts = [np.full((order, order), base.zero, dtype=np.int64) for _ in range(k)]
    for i, j, t in terms:
        mul_parts[t] = base.add_table[mul_parts[t], _outer(base.mul_table, C[:, i], C[:, j])]
    one = [base.zero] * k
    for c in one_coords:
        one[c] = base.one
    zero_idx = int(_encode([np.array(base.zero)] * k, sizes)) if k else 0
    one_idx = int(_encode([np.array(v) for v in one], sizes)) if k else 0
    names = [namer(row) for row in C] if namer else None
    return FiniteRing(order, _encode(add_parts, sizes), _encode(mul_parts, sizes),
                      zero_idx, one_idx, label=label, names=names)


def direct_product(rings: Sequence[FiniteRing], max_order: int | None = None,
                   label: str | None = None) -> FiniteRing:
    rings = list(rings)
    if not rings:
        raise RingError("direct product needs at least one factor")
    if len(rings) == 1:
        return rings[0]
    order = reduce(lambda a, r: a * r.order, rings, 1)
    check_order(order, max_order)
    sizes = [r.order for r in rings]
    C = _coords(sizes)
    add = _encode([_outer(r.add_table, C[:, i], C[:, i]) for i, r in enumerate(rings)], sizes)
    mul = _encode([_outer(r.mul_table, C[:, i], C[:, i]) for i, r in enumerate(rings)], sizes)
    zero = int(_encode([np.array(r.zero) for r in rings], sizes))
    one = int(_encode([np.array(r.one) for r in rings], sizes))
    names = ["(" + ",".join(r.name(c) for r, c in zip(rings, row)) + ")" for row in C]
    return FiniteRing(order, add, mul, zero, one,
                      label=label or " x ".join(r.label for r in rings), names=names)


def matrix_ring(base: FiniteRing, n: int, max_order: int | None = None) -> FiniteRing:
    if n < 1:
        raise RingError(f"matrix size must be >= 1, got {n}")
    if n == 1:
        return base.relabel(f"M(1, {base.label})")
    check_order(base.order ** (n * n), max_order)
    pos = {(i, j): i * n + j for i in range(n) for j in range(n)}
    terms = [(pos[i, m], pos[m, j], pos[i, j]) for i in range(n) for j in range(n) for m in range(n)]

    def namer(row):
        return "[" + "; ".join(" ".join(base.name(row[pos[i, j]]) for j in range(n))
                               for i in range(n)) + "]"

    return structure_ring(base, n * n, terms, [pos[i, i] for i in range(n)],
                          f"M({n}, {base.label})", namer, max_order)


def upper_triangular_ring(base: FiniteRing, n: int, max_order: int | None = None) -> FiniteRing:
    if n < 1:
        raise RingError(f"matrix size must be >= 1, got {n}")
    if n == 1:
        return base.relabel(f"T({1}, {base.label})")
    cells = [(i, j) for i in range(n) for j in range(i, n)]
    check_order(base.order ** len(cells), max_order)
    pos = {c: k for k, c in enumerate(cells)}
    terms = [(pos[i, m], pos[m, j], pos[i, j]) for (i, j) in cells for m in range(i, j + 1)]

    def namer(row):
        return "[" + "; ".join(
            " ".join(base.name(row[pos[i, j]]) if j >= i else "0" for j in range(n))
            for i in range(n)) + "]"

    return structure_ring(base, len(cells), terms, [pos[i, i] for i in range(n)],
                          f"T({n}, {base.label})", namer, max_order)


def triangular_coordinates(n: int) -> list[tuple[int, int]]:
    """Cell order used by :func:`upper_triangular_ring`."""
    return [(i, j) for i in range(n) for j in range(i, n)]


def decode(ring_sizes: Sequence[int], index: int) -> tuple[int, ...]:
    return tuple(int(v) for v in np.unravel_index(index, tuple(ring_sizes)))


# -- substructures -------------------------------------------------------------

def _restrict(ring: FiniteRing, members: np.ndarray, one: int, label: str,
              names=None) -> FiniteRing:
    lookup = np.full(ring.order, -1, dtype=np.int64)
    lookup[members] = np.arange(len(members))
    add = lookup[ring.add_table[np.ix_(members, members)]]
    mul = lookup[ring.mul_table[np.ix_(members, members)]]
    if (add < 0).any() or (mul < 0).any():
        raise RingError(f"{label}: subset is not closed")
    return FiniteRing(len(members), add, mul, int(lookup[ring.zero]), int(lookup[one]),
                      label=label, names=names)


def quotient_ring(ring: FiniteRing, ideal, label: str | None = None):
    """``R/I`` on canonical (smallest-index) coset representatives.

    Returns ``(quotient, projection)`` where ``projection[a]`` is the coset
    index of ``a``.
    """
    members = sorted(ideal.members if isinstance(ideal, ElementSubset) else set(ideal))
    if not is_ideal(ring, members, "two-sided"):
        raise NotAnIdealError(f"{sorted(members)} is not a two-sided ideal of {ring.label}")
    I = np.array(members)
    rep = ring.add_table[:, I].min(axis=1)
    reps = np.unique(rep)
    lookup = np.full(ring.order, -1, dtype=np.int64)
    lookup[reps] = np.arange(len(reps))
    projection = lookup[rep]
    add = projection[ring.add_table[np.ix_(reps, reps)]]
    mul = projection[ring.mul_table[np.ix_(reps, reps)]]
    names = [f"{ring.name(r)}+I" for r in reps]
    quotient = FiniteRing(len(reps), add, mul, int(projection[ring.zero]),
                          int(projection[ring.one]),
                          label=label or f"{ring.label}/I{len(members)}", names=names)
    projection.setflags(write=False)
    return quotient, projection


def corner_ring(ring: FiniteRing, e: int, label: str | None = None):
    """``eRe`` with identity ``e``; returns ``(corner, embedding)``."""
    if int(ring.mul_table[e, e]) != e:
        raise NotIdempotentError(f"{ring.name(e)} is not idempotent in {ring.label}")
    M = ring.mul_table
    members = np.unique(M[M[e, :], e])
    names = [ring.name(m) for m in members]
    corner = _restrict(ring, members, e, label or f"{ring.label}[e={e}]", names)
    members.setflags(write=False)
    return corner, members


# -- bimodules and Morita contexts -----------------------------------------------

@dataclass(frozen=True, eq=False)
class Bimodule:
    """An (A, B)-bimodule: abelian group with left A-action and right B-action."""

    left_ring: FiniteRing
    right_ring: FiniteRing
    order: int
    add: np.ndarray
    zero: int
    left_action: np.ndarray   # [a, m] -> a m
    right_action: np.ndarray  # [m, b] -> m b
    label: str = "M"
    names: tuple = ()

    def name(self, m: int) -> str:
        return self.names[m] if self.names else str(m)

    def neg(self) -> np.ndarray:
        return np.argmax(self.add == self.zero, axis=1)

    def validate(self) -> None:
        A, B = self.left_ring, self.right_ring
        T, L, R = self.add, self.left_action, self.right_action
        n = self.order
        idx = np.arange(n)
        if T.shape != (n, n) or L.shape != (A.order, n) or R.shape != (n, B.order):
            raise BimoduleError(f"{self.label}: malformed tables")
        if not np.array_equal(T, T.T) or not np.array_equal(T[self.zero], idx):
            raise BimoduleError(f"{self.label}: not an abelian group")
        if not (T == self.zero).any(axis=1).all():
            raise BimoduleError(f"{self.label}: missing additive inverse")
        for m in range(n):
            if not np.array_equal(T[T[m]], T[m][T]):
                raise BimoduleError(f"{self.label}: addition not associative at {m}")
        if not np.array_equal(L[A.one], idx) or not np.array_equal(R[:, B.one], idx):
            raise BimoduleError(f"{self.label}: actions not unital")
        # biadditivity
        if not np.array_equal(L[:, T], T[L[:, :, None], L[:, None, :]]):
            raise BimoduleError(f"{self.label}: left action not additive in the module")
        if not np.array_equal(L[A.add_table], T[L[:, None, :], L[None, :, :]]):
            raise BimoduleError(f"{self.label}: left action not additive in the ring")
        if not np.array_equal(R[T], T[R[:, None, :], R[None, :, :]]):
            raise BimoduleError(f"{self.label}: right action not additive in the module")
        if not np.array_equal(R[:, B.add_table], T[R[:, :, None], R[:, None, :]]):
            raise BimoduleError(f"{self.label}: right action not additive in the ring")
        # (a a') m = a (a' m), (m b) b' = m (b b'), (a m) b = a (m b)
        if not np.array_equal(L[A.mul_table], L[:, L]):
            raise BimoduleError(f"{self.label}: left action not associative")
        if not np.array_equal(R[:, B.mul_table], R[R]):
            raise BimoduleError(f"{self.label}: right action not associative")
        if not np.array_equal(R[L], L[:, R]):
            raise BimoduleError(f"{self.label}: actions do not commute")


def regular_bimodule(ring: FiniteRing) -> Bimodule:
    return Bimodule(ring, ring, ring.order, ring.add_table, ring.zero,
                    ring.mul_table, ring.mul_table, label=ring.label,
                    names=tuple(ring.name(a) for a in range(ring.order)))


def ideal_bimodule(ring: FiniteRing, members, label: str | None = None) -> Bimodule:
    """An additive subgroup of ``ring`` closed under both multiplications,
    viewed as an (R, R)-bimodule with the inherited actions (e.g. 2Z4)."""
    members = np.array(sorted(set(int(m) for m in members)))
    if not is_ideal(ring, members, "two-sided"):
        raise BimoduleError(f"{members.tolist()} is not a two-sided ideal of {ring.label}")
    lookup = np.full(ring.order, -1, dtype=np.int64)
    lookup[members] = np.arange(len(members))
    module = Bimodule(
        ring, ring, len(members), lookup[ring.add_table[np.ix_(members, members)]],
        int(lookup[ring.zero]), lookup[ring.mul_table[:, members]],
        lookup[ring.mul_table[members, :]],
        label=label or f"I({ring.label})", names=tuple(ring.name(m) for m in members))
    return module


def zero_bimodule(left: FiniteRing, right: FiniteRing) -> Bimodule:
    return Bimodule(left, right, 1, np.zeros((1, 1), dtype=np.int64), 0,
                    np.zeros((left.order, 1), dtype=np.int64),
                    np.zeros((1, right.order), dtype=np.int64), label="0", names=("0",))


def direct_sum_bimodule(modules: Sequence[Bimodule], label: str | None = None) -> Bimodule:
    """Sum of bimodules sharing left and right rings."""
    first = modules[0]
    sizes = [m.order for m in modules]
    C = _coords(sizes)
    A, B = first.left_ring, first.right_ring
    add = _encode([_outer(m.add, C[:, i], C[:, i]) for i, m in enumerate(modules)], sizes)
    left = _encode([m.left_action[:, C[:, i]] for i, m in enumerate(modules)], sizes)
    right = _encode([m.right_action[C[:, i], :] for i, m in enumerate(modules)], sizes)
    names = tuple("(" + ",".join(m.name(c) for m, c in zip(modules, row)) + ")" for row in C)
    zero = int(_encode([np.array(m.zero) for m in modules], sizes))
    return Bimodule(A, B, int(np.prod(sizes)), add, zero, left, right,
                    label or " + ".join(m.label for m in modules), names)


def trivial_extension(ring: FiniteRing, module: Bimodule, label: str | None = None,
                      max_order: int | None = None) -> FiniteRing:
    """``T(R, M)``: pairs ``(r, m)`` with ``(r, m)(s, n) = (rs, rn + ms)``."""
    if module.left_ring is not ring or module.right_ring is not ring:
        raise BimoduleError("trivial extension needs an (R, R)-bimodule")
    order = ring.order * module.order
    check_order(order, max_order)
    sizes = [ring.order, module.order]
    C = _coords(sizes)
    r, m = C[:, 0], C[:, 1]
    add = _encode([_outer(ring.add_table, r, r), _outer(module.add, m, m)], sizes)
    rn = _outer(module.left_action, r, m)
    ms = _outer(module.right_action, m, r)
    mul = _encode([_outer(ring.mul_table, r, r), module.add[rn, ms]], sizes)
    names = [f"({ring.name(a)},{module.name(b)})" for a, b in C]
    return FiniteRing(order, add, mul, int(_encode([np.array(ring.zero), np.array(module.zero)], sizes)),
                      int(_encode([np.array(ring.one), np.array(module.zero)], sizes)),
                      label=label or f"T({ring.label}, {module.label})", names=names)


@dataclass(frozen=True, eq=False)
class MoritaSpec:
    """Data of a Morita context ``(A M; N B)`` with pairings
    ``phi: M x N -> A`` and ``psi: N x M -> B``."""

    A: FiniteRing
    B: FiniteRing
    M: Bimodule  # (A, B)
    N: Bimodule  # (B, A)
    phi: np.ndarray
    psi: np.ndarray
    label: str = "Morita"

    def is_trivial(self) -> bool:
        return bool((self.phi == self.A.zero).all() and (self.psi == self.B.zero).all())

    def validate(self) -> None:
        A, B, M, N, phi, psi = self.A, self.B, self.M, self.N, self.phi, self.psi
        if M.left_ring is not A or M.right_ring is not B:
            raise BimoduleError("M must be an (A, B)-bimodule")
        if N.left_ring is not B or N.right_ring is not A:
            raise BimoduleError("N must be a (B, A)-bimodule")
        M.validate()
        N.validate()
        if phi.shape != (M.order, N.order) or psi.shape != (N.order, M.order):
            raise BimoduleError("pairing tables have the wrong shape")
        # biadditive
        if not np.array_equal(phi[M.add], A.add_table[phi[:, None, :], phi[None, :, :]]):
            raise BimoduleError("phi is not additive in M")
        if not np.array_equal(phi[:, N.add], A.add_table[phi[:, :, None], phi[:, None, :]]):
            raise BimoduleError("phi is not additive in N")
        if not np.array_equal(psi[N.add], B.add_table[psi[:, None, :], psi[None, :, :]]):
            raise BimoduleError("psi is not additive in N")
        if not np.array_equal(psi[:, M.add], B.add_table[psi[:, :, None], psi[:, None, :]]):
            raise BimoduleError("psi is not additive in M")
        # (m n) m' = m (n m') and (n m) n' = n (m n')
        lhs = M.left_action[phi[:, :, None], np.arange(M.order)[None, None, :]]
        rhs = M.right_action[np.arange(M.order)[:, None, None], psi[None, :, :]]
        if not np.array_equal(lhs, rhs):
            bad = tuple(int(v) for v in np.argwhere(lhs != rhs)[0])
            raise BimoduleError(f"(mn)m' != m(nm') at (m, n, m') = {bad}")
        lhs = N.left_action[psi[:, :, None], np.arange(N.order)[None, None, :]]
        rhs = N.right_action[np.arange(N.order)[:, None, None], phi[None, :, :]]
        if not np.array_equal(lhs, rhs):
            bad = tuple(int(v) for v in np.argwhere(lhs != rhs)[0])
            raise BimoduleError(f"(nm)n' != n(mn') at (n, m, n') = {bad}")


MORITA_SIZES_DOC = "Morita elements are (a, m, n, b) in mixed radix over |A|, |M|, |N|, |B|."


def morita_sizes(spec: MoritaSpec) -> list[int]:
    return [spec.A.order, spec.M.order, spec.N.order, spec.B.order]


def morita_ring(spec: MoritaSpec, max_order: int | None = None,
                validate_axioms: bool = True) -> FiniteRing:
    """The ring of 2x2 blocks ``(a m; n b)`` with matrix-style operations."""
    A, B, M, N = spec.A, spec.B, spec.M, spec.N
    sizes = morita_sizes(spec)
    order = int(np.prod(sizes))
    check_order(order, max_order)
    spec.validate()
    C = _coords(sizes)
    a, m, n, b = C[:, 0], C[:, 1], C[:, 2], C[:, 3]
    add = _encode([_outer(A.add_table, a, a), _outer(M.add, m, m),
                   _outer(N.add, n, n), _outer(B.add_table, b, b)], sizes)
    a_out = A.add_table[_outer(A.mul_table, a, a), _outer(spec.phi, m, n)]
    m_out = M.add[_outer(M.left_action, a, m), _outer(M.right_action, m, b)]
    n_out = N.add[_outer(N.left_action, b, n), _outer(N.right_action, n, a)]
    b_out = B.add_table[_outer(spec.psi, n, m), _outer(B.mul_table, b, b)]
    mul = _encode([a_out, m_out, n_out, b_out], sizes)
    zero = int(_encode([np.array(A.zero), np.array(M.zero), np.array(N.zero), np.array(B.zero)], sizes))
    one = int(_encode([np.array(A.one), np.array(M.zero), np.array(N.zero), np.array(B.one)], sizes))
    names = [f"({A.name(w)} {M.name(x)}; {N.name(y)} {B.name(z)})" for w, x, y, z in C]
    ring = FiniteRing(order, add, mul, zero, one, label=spec.label, names=names)
    if validate_axioms:
        validate(ring)
    return ring


def ring_pairing(ring: FiniteRing, left: Bimodule, right: Bimodule,
                 left_members, right_members) -> np.ndarray:
    """Pairing given by ring multiplication of two ideals, landing in ``ring``."""
    lm = np.array(sorted(left_members))
    rm = np.array(sorted(right_members))
    return ring.mul_table[np.ix_(lm, rm)]


def morita_from_ideals(ring: FiniteRing, m_members, n_members, products: bool,
                       label: str) -> MoritaSpec:
    """Context ``(R I; J R)`` for ideals ``I, J`` of a commutative-style ring,
    with pairings either ring multiplication or zero."""
    M = ideal_bimodule(ring, m_members, label=_ideal_label(ring, m_members))
    N = ideal_bimodule(ring, n_members, label=_ideal_label(ring, n_members))
    if products:
        phi = ring_pairing(ring, M, N, m_members, n_members)
        psi = ring_pairing(ring, N, M, n_members, m_members)
    else:
        phi = np.full((M.order, N.order), ring.zero, dtype=np.int64)
        psi = np.full((N.order, M.order), ring.zero, dtype=np.int64)
    return MoritaSpec(ring, ring, M, N, phi, psi, label)


def _ideal_label(ring: FiniteRing, members) -> str:
    members = sorted(members)
    if len(members) == ring.order:
        return ring.label
    if len(members) == 1:
        return "0"
    return "{" + ",".join(ring.name(m) for m in members) + "}"


def named_morita(name: str) -> MoritaSpec:
    """Built-in Morita contexts.

    R1, R2: trivial contexts (Z4 2Z4; 2Z4 Z4) and (Z4 2Z4; 0 Z4).
    R1J, R2J: (Z4 2Z4; Z4 Z4) and (Z4 Z4; 2Z4 Z4) with Z4 multiplication
    as pairings, so MN and NM lie in J(Z4).
    T2F2, T2F3: formal triangular contexts (F F; 0 F).
    F2F2: trivial context (F2 F2; F2 F2).
    FULLZ4: (Z4 Z4; Z4 Z4) with Z4 multiplication, i.e. M(2, Z4).
    SPLITZ4: (Z4 0; 0 Z4), i.e. Z4 x Z4.
    """
    key = name.upper()
    z4 = zmod(4)
    two, full, zero = [0, 2], list(range(4)), [0]
    if key == "R1":
        spec = morita_from_ideals(z4, two, two, True, "R1")
    elif key == "R2":
        spec = morita_from_ideals(z4, two, zero, True, "R2")
    elif key == "R1J":
        spec = morita_from_ideals(z4, two, full, True, "R1J")
    elif key == "R2J":
        spec = morita_from_ideals(z4, full, two, True, "R2J")
    elif key == "FULLZ4":
        spec = morita_from_ideals(z4, full, full, True, "FULLZ4")
    elif key == "SPLITZ4":
        spec = morita_from_ideals(z4, zero, zero, True, "SPLITZ4")
    elif key in ("T2F2", "T2F3"):
        field = galois_field(int(key[-1]))
        spec = morita_from_ideals(field, range(field.order), [0], False, key)
    elif key == "F2F2":
        f2 = galois_field(2)
        spec = morita_from_ideals(f2, [0, 1], [0, 1], False, "F2F2")
    else:
        raise RingError(f"unknown Morita example {name!r}; known: {', '.join(MORITA_NAMES)}")
    return spec


MORITA_NAMES = ("R1", "R2", "R1J", "R2J", "T2F2", "T2F3", "F2F2", "FULLZ4", "SPLITZ4")


def trivial_morita_as_extension(spec: MoritaSpec, max_order: int | None = None) -> FiniteRing:
    """``T(A x B, M + N)`` with ``(a, b)(m, n) = (am, bn)`` and
    ``(m, n)(a, b) = (mb, na)``; isomorphic to a trivial context ring."""
    A, B, M, N = spec.A, spec.B, spec.M, spec.N
    base = direct_product([A, B], max_order=max_order)
    bs = [A.order, B.order]
    ms = [M.order, N.order]
    Cb = _coords(bs)
    Cm = _coords(ms)
    left = _encode([M.left_action[Cb[:, 0][:, None], Cm[:, 0][None, :]],
                    N.left_action[Cb[:, 1][:, None], Cm[:, 1][None, :]]], ms)
    right = _encode([M.right_action[Cm[:, 0][:, None], Cb[:, 1][None, :]],
                     N.right_action[Cm[:, 1][:, None], Cb[:, 0][None, :]]], ms)
    add = _encode([_outer(M.add, Cm[:, 0], Cm[:, 0]), _outer(N.add, Cm[:, 1], Cm[:, 1])], ms)
    names = tuple(f"({M.name(x)},{N.name(y)})" for x, y in Cm)
    module = Bimodule(base, base, M.order * N.order, add,
                      int(_encode([np.array(M.zero), np.array(N.zero)], ms)),
                      left, right, f"{M.label}+{N.label}", names)
    module.validate()
    return trivial_extension(base, module, label=f"T({base.label}, {module.label})",
                             max_order=max_order)


# -- group rings -----------------------------------------------------------------

def group_ring(base: FiniteRing, group: FiniteGroup, max_order: int | None = None,
               label: str | None = None):
    """``RG`` as functions ``G -> R`` under convolution.

    Returns ``(ring, augmentation)`` where ``augmentation[x]`` is the sum of
    the coefficients of ``x`` as an index of ``base``.
    """
    validate_group(group)
    k = group.order
    check_order(base.order ** k, max_order)
    terms = [(g, h, int(group.mul[g, h])) for g in range(k) for h in range(k)]

    def namer(row):
        parts = [f"{base.name(c)}{group.names[g]}" for g, c in enumerate(row) if c != base.zero]
        return " + ".join(parts) if parts else base.name(base.zero)

    ring = structure_ring(base, k, terms, [group.identity],
                          label or f"{base.label}[{group.label}]", namer, max_order)
    C = _coords([base.order] * k)
    aug = np.full(ring.order, base.zero, dtype=np.int64)
    for g in range(k):
        aug = base.add_table[aug, C[:, g]]
    aug.setflags(write=False)
    ring.cache["augmentation"] = (base, aug)
    return ring, aug


def check_homomorphism(source: FiniteRing, target: FiniteRing, image: np.ndarray) -> None:
    """Raise :class:`AxiomError` unless ``image`` is a unital ring homomorphism."""
    if int(image[source.one]) != target.one:
        raise AxiomError("homomorphism-unital", (source.one,), source.label)
    for name, s_tab, t_tab in (("homomorphism-additive", source.add_table, target.add_table),
                               ("homomorphism-multiplicative", source.mul_table, target.mul_table)):
        lhs = image[s_tab]
        rhs = t_tab[image[:, None], image[None, :]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            raise AxiomError(name, tuple(bad[0]), source.label)


def augmentation_ideal(base: FiniteRing, group: FiniteGroup,
                       max_order: int | None = None) -> ElementSubset:
    ring, aug = group_ring(base, group, max_order)
    return ElementSubset.from_mask(ring, aug == base.zero)


def idempotent_list(ring: FiniteRing) -> list[int]:
    return idempotents(ring).sorted()
