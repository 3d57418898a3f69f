from itertools import combinations, product
from math import gcd

import numpy as np
import pytest

from ringlab import constructions as C
from ringlab.expr import eval_expr
from ringlab.groups import get_group
from ringlab.subsets import (BudgetExceeded, ElementSubset, center, delta, delta_left,
                             ideal_generated_by, ideal_lattice, idempotents, is_ideal,
                             jacobson_radical, left_annihilator, lower_nilradical, nilpotents,
                             radical_from_lattice, right_annihilator, units)
from ringlab.theorems import oracles as O

SMALL = ["Z(1)", "F(2)", "F(4)", "Z(4)", "Z(6)", "Z(8)", "Z(9)", "prod(F(2), Z(4))",
         "T(2, F(2))", "M(2, F(2))", "TE(Z(4))", "GR(F(2), C3)", "GR(Z(4), C2)",
         "quot(Z(8), [4])", "morita(R2)"]


@pytest.mark.parametrize("text", SMALL)
def test_subsets_match_naive_enumeration(text):
    R = eval_expr(text)
    N = O.from_tables(R)
    assert units(R).units.members == O.units(N)
    assert idempotents(R).members == set(O.idempotents(N))
    assert nilpotents(R).members == O.nilpotents(N)
    assert jacobson_radical(R).members == O.jacobson(N)
    assert delta(R).members == O.delta(N)
    naive_center = {a for a in N.elements if all(N.mul(a, r) == N.mul(r, a) for r in N.elements)}
    assert center(R).members == naive_center


@pytest.mark.parametrize("n", range(2, 25))
def test_zn_subsets_by_number_theory(n):
    R = C.zmod(n)
    rad = 1
    for p in range(2, n + 1):
        if n % p == 0 and all(p % q for q in range(2, p)):
            rad *= p
    assert units(R).units.members == {a for a in range(n) if gcd(a, n) == 1}
    # nilpotents and J of Z/n are the multiples of rad(n); Delta = J for commutative rings
    assert nilpotents(R).members == set(range(0, n, rad))
    assert jacobson_radical(R).members == set(range(0, n, rad))
    assert delta(R) == jacobson_radical(R)
    # idempotents of Z/n: 2^(number of distinct primes)
    k = sum(1 for p in range(2, n + 1) if n % p == 0 and all(p % q for q in range(2, p)))
    assert len(idempotents(R)) == 2 ** k


def test_unit_inverses():
    R = eval_expr("M(2, Z(4))")
    table = units(R)
    assert len(table.units) == 96  # |GL2(Z/4)| = 16 * |GL2(F2)|
    for u, v in table.inverse.items():
        assert R.mul(u, v) == R.one == R.mul(v, u)


def test_matrix_counts_over_f2():
    R = eval_expr("M(2, F(2))")
    assert len(units(R).units) == 6
    assert len(idempotents(R)) == 8
    assert len(nilpotents(R)) == 4
    assert jacobson_radical(R).members == {R.zero}
    assert delta(R).members == {R.zero}


def test_delta_of_z4():
    R = C.zmod(4)
    assert delta(R).sorted() == [0, 2]


def test_delta_of_t2f2_is_strictly_upper():
    R = C.upper_triangular_ring(C.galois_field(2), 2)
    cells = C.triangular_coordinates(2)
    strictly_upper = {a for a in R.elements()
                      if all(v == 0 for (i, j), v in zip(cells, C.decode([2] * 3, a)) if i == j)}
    assert delta(R).members == strictly_upper
    assert len(strictly_upper) == 2


def test_delta_of_product_is_product_of_deltas():
    A, B = C.galois_field(2), C.zmod(4)
    P = C.direct_product([A, B])
    expected = {int(np.ravel_multi_index((a, b), (2, 4))) for a in delta(A) for b in delta(B)}
    assert delta(P).members == expected
    F = C.direct_product([A, A])
    assert delta(F).members == {F.zero}


def test_jacobson_of_z4_c2_via_augmentation():
    R, aug = C.group_ring(C.zmod(4), get_group("C2"))
    J = jacobson_radical(R)
    assert len(J) == 8
    assert J.members == {int(x) for x in np.flatnonzero(np.isin(aug, [0, 2]))}


def test_delta_left_equals_delta():
    for text in ("T(2, Z(4))", "M(2, F(2))", "GR(F(2), S3)"):
        R = eval_expr(text)
        assert delta_left(R) == delta(R)


def test_lower_nilradical_is_jacobson_for_finite_rings():
    R = eval_expr("T(2, Z(4))")
    assert lower_nilradical(R) == jacobson_radical(R)


def test_annihilators():
    R = C.zmod(12)
    assert left_annihilator(R, 4).members == {0, 3, 6, 9}
    assert right_annihilator(R, 4) == left_annihilator(R, 4)
    T = C.upper_triangular_ring(C.galois_field(2), 2)
    for a in T.elements():
        assert left_annihilator(T, a).members == {r for r in T.elements() if T.mul(r, a) == T.zero}
        assert right_annihilator(T, a).members == {r for r in T.elements() if T.mul(a, r) == T.zero}


def test_element_subset_semantics():
    R = C.zmod(4)
    S = ElementSubset.of(R, [2, 0])
    assert 2 in S and 1 not in S and len(S) == 2
    assert list(S) == [0, 2] and S.sorted() == [0, 2]
    assert S == ElementSubset.from_mask(R, np.array([True, False, True, False]))
    assert S <= ElementSubset.of(R, [0, 1, 2])
    other = C.zmod(4)
    assert S != ElementSubset.of(other, [0, 2])


def _naive_ideals(R, side):
    """Every additive subgroup closed under the requested multiplications."""
    A, M = R.add_table, R.mul_table
    found = []
    rest = [x for x in R.elements() if x != R.zero]
    for k in range(len(rest) + 1):
        for chosen in combinations(rest, k):
            S = {R.zero, *chosen}
            if any(int(A[x, R.neg(y)]) not in S for x, y in product(S, S)):
                continue
            if side in ("left", "two-sided") and any(int(M[r, x]) not in S for r in R.elements() for x in S):
                continue
            if side in ("right", "two-sided") and any(int(M[x, r]) not in S for r in R.elements() for x in S):
                continue
            found.append(frozenset(S))
    return found


@pytest.mark.parametrize("text", ["Z(4)", "Z(6)", "prod(F(2), F(2))", "T(2, F(2))", "Z(8)",
                                  "GR(F(2), C2)", "TE(F(2))"])
@pytest.mark.parametrize("side", ["left", "right", "two-sided"])
def test_ideal_lattice_matches_subset_enumeration(text, side):
    R = eval_expr(text)
    naive = _naive_ideals(R, side)
    lattice = ideal_lattice(R, side)
    assert {i.members for i in lattice.ideals} == set(naive)
    proper = [I for I in naive if len(I) < R.order]
    naive_max = {I for I in proper if not any(I < K for K in proper)}
    assert {i.members for i in lattice.maximal} == naive_max


def test_matrix_ring_lattices():
    R = eval_expr("M(2, F(2))")
    assert len(ideal_lattice(R, "two-sided").ideals) == 2
    assert len(ideal_lattice(R, "right").ideals) == 5
    assert len(ideal_lattice(R, "left").maximal) == 3


def test_lattice_budget():
    R = eval_expr("prod(F(2), F(2), F(2), F(2))")
    with pytest.raises(BudgetExceeded):
        ideal_lattice(R, "two-sided", budget=3)


def test_radical_from_lattice_agrees():
    for text in ("T(2, Z(4))", "GR(F(2), S3)", "morita(R1)", "Z(1)"):
        R = eval_expr(text)
        for side in ("left", "right"):
            assert radical_from_lattice(R, side) == jacobson_radical(R)


def test_generated_ideals():
    R = C.zmod(12)
    assert ideal_generated_by(R, [8]).members == {0, 4, 8}
    assert is_ideal(R, [0, 6])
    assert not is_ideal(R, [0, 1])
    T = C.upper_triangular_ring(C.galois_field(2), 2)
    e11 = next(a for a in T.elements() if T.name(a) == "[1 0; 0 0]")
    assert len(ideal_generated_by(T, [e11], "right")) == 4
    assert len(ideal_generated_by(T, [e11], "left")) == 2
    with pytest.raises(ValueError):
        ideal_lattice(T, "middle")
