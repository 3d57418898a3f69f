import random

import numpy as np
import pytest

from ringlab import classifiers as K
from ringlab import constructions as C
from ringlab.expr import eval_expr
from ringlab.groups import GroupError, get_group, is_p_group, standard_groups
from ringlab.ring import AxiomError, RingError, is_commutative, validate
from ringlab.subsets import idempotents, jacobson_radical, units


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_galois_fields(q):
    F = C.galois_field(q)
    validate(F)
    assert F.order == q
    assert len(units(F).units) == q - 1
    assert is_commutative(F)
    p = min(d for d in range(2, q + 1) if q % d == 0)
    assert F.integer(p) == F.zero


def test_galois_field_rejects_non_prime_powers():
    with pytest.raises(RingError):
        C.galois_field(6)


def test_direct_product_is_componentwise():
    A, B = C.zmod(3), C.zmod(4)
    P = C.direct_product([A, B])
    validate(P)
    rng = random.Random(1)
    for _ in range(50):
        x, y = rng.randrange(12), rng.randrange(12)
        (a1, b1), (a2, b2) = np.unravel_index(x, (3, 4)), np.unravel_index(y, (3, 4))
        expect = np.ravel_multi_index(((a1 * a2) % 3, (b1 * b2) % 4), (3, 4))
        assert P.mul(x, y) == expect
    assert P.label == "Z3 x Z4"


def test_matrix_ring_matches_numpy_matmul():
    M = C.matrix_ring(C.zmod(4), 2)
    validate(M)
    assert M.order == 256 and M.label == "M(2, Z4)"

    def mat(i):
        return np.array(np.unravel_index(i, [4] * 4)).reshape(2, 2)

    rng = random.Random(2)
    for _ in range(100):
        x, y = rng.randrange(256), rng.randrange(256)
        prod = (mat(x) @ mat(y)) % 4
        assert np.array_equal(mat(M.mul(x, y)), prod)


def test_triangular_ring_layout():
    T = C.upper_triangular_ring(C.zmod(4), 2)
    assert T.order == 64
    assert C.triangular_coordinates(2) == [(0, 0), (0, 1), (1, 1)]
    assert T.name(16) == "[1 0; 0 0]"
    assert C.decode([4, 4, 4], 16) == (1, 0, 0)
    assert len(idempotents(T)) == 10


def test_t3_f2_counts():
    T = eval_expr("T(3, F(2))")
    assert T.order == 64
    assert len(units(T).units) == 8
    assert len(idempotents(T)) == 26


def test_quotient_ring():
    R = C.zmod(8)
    ideal = {0, 4}
    Q, proj = C.quotient_ring(R, ideal)
    validate(Q)
    assert Q.order == 4
    for a in range(8):
        for b in range(8):
            assert proj[R.mul(a, b)] == Q.mul(proj[a], proj[b])
    with pytest.raises(C.NotAnIdealError):
        C.quotient_ring(R, {0, 3})


def test_corner_ring():
    T = C.upper_triangular_ring(C.zmod(4), 2)
    corner, embed = C.corner_ring(T, 16)
    validate(corner)
    assert corner.order == 4 and corner.one == list(embed).index(16)
    assert K.flag_signature(K.classify(corner)) == K.flag_signature(K.classify(C.zmod(4)))
    with pytest.raises(C.NotIdempotentError):
        C.corner_ring(T, 2)


def test_trivial_extension_by_regular_module():
    F2 = C.galois_field(2)
    T = C.trivial_extension(F2, C.regular_bimodule(F2))
    validate(T)
    # (r, m)(s, n) = (rs, rn + ms); (0, 1)^2 = 0
    assert T.mul(1, 1) == T.zero
    assert len(jacobson_radical(T)) == 2
    two = C.direct_sum_bimodule([C.regular_bimodule(F2)] * 2)
    T2 = C.trivial_extension(F2, two)
    validate(T2)
    assert T2.order == 8 and len(jacobson_radical(T2)) == 4


def test_ideal_bimodule_and_validation():
    Z4 = C.zmod(4)
    M = C.ideal_bimodule(Z4, [0, 2])
    M.validate()
    assert M.order == 2
    broken = C.Bimodule(Z4, Z4, 2, M.add, M.zero, np.zeros((4, 2), dtype=np.int64),
                        M.right_action, "broken")
    with pytest.raises(C.BimoduleError):
        broken.validate()


@pytest.mark.parametrize("name, order", [("R1", 64), ("R2", 32), ("R1J", 128), ("R2J", 128),
                                         ("T2F2", 8), ("T2F3", 27), ("F2F2", 16),
                                         ("FULLZ4", 256), ("SPLITZ4", 16)])
def test_named_morita_orders(name, order):
    spec = C.named_morita(name)
    R = C.morita_ring(spec)
    assert R.order == order
    assert R.name(R.one).startswith("(1 ")


def test_morita_matches_known_rings():
    full = C.morita_ring(C.named_morita("FULLZ4"))
    M2 = C.matrix_ring(C.zmod(4), 2)
    a, b = K.classify(full), K.classify(M2)
    assert a.sizes == b.sizes and K.flag_signature(a) == K.flag_signature(b)
    split = C.morita_ring(C.named_morita("SPLITZ4"))
    P = C.direct_product([C.zmod(4), C.zmod(4)])
    assert K.flag_signature(K.classify(split)) == K.flag_signature(K.classify(P))
    tri = C.morita_ring(C.named_morita("T2F2"))
    T = C.upper_triangular_ring(C.galois_field(2), 2)
    assert K.classify(tri).sizes == K.classify(T).sizes


def test_morita_rejects_non_associative_pairing():
    spec = C.named_morita("F2F2")
    bad = C.MoritaSpec(spec.A, spec.B, spec.M, spec.N, np.array([[0, 0], [0, 1]]),
                       spec.psi, "bad")
    with pytest.raises(C.BimoduleError):
        C.morita_ring(bad)
    with pytest.raises(RingError):
        C.named_morita("R9")


def test_trivial_morita_as_extension():
    for name in ("R1", "R2", "T2F2", "F2F2"):
        spec = C.named_morita(name)
        ext = C.trivial_morita_as_extension(spec)
        ring = C.morita_ring(spec)
        assert ext.order == ring.order
        assert K.flag_signature(K.classify(ext)) == K.flag_signature(K.classify(ring))
        assert K.classify(ext).sizes == K.classify(ring).sizes


def test_group_ring_and_augmentation():
    G = get_group("S3")
    R, aug = C.group_ring(C.galois_field(2), G)
    validate(R)
    assert R.order == 64 and R.label == "F2[S3]"
    C.check_homomorphism(R, C.galois_field(2), aug)
    assert len(C.augmentation_ideal(C.galois_field(2), G)) == 32
    # F2[C2] is F2[x]/(x^2), the same ring as T(F2, F2)
    a = K.classify(C.group_ring(C.galois_field(2), get_group("C2"))[0])
    b = K.classify(eval_expr("TE(F(2))"))
    assert K.flag_signature(a) == K.flag_signature(b)


def test_check_homomorphism_rejects_non_maps():
    R, aug = C.group_ring(C.zmod(4), get_group("C2"))
    bad = aug.copy()
    bad[R.one] = 0
    with pytest.raises(AxiomError, match="unital"):
        C.check_homomorphism(R, C.zmod(4), bad)


def test_groups():
    groups = standard_groups()
    assert {g.order for g in groups.values()} == {1, 2, 3, 4, 5, 6, 8}
    assert not groups["S3"].is_abelian() and not groups["Q8"].is_abelian()
    assert groups["C2xC2"].is_abelian()
    assert sorted(groups["Q8"].element_order(g) for g in range(8)) == [1, 2, 4, 4, 4, 4, 4, 4]
    assert sorted(groups["D4"].element_order(g) for g in range(8)) == [1, 2, 2, 2, 2, 2, 4, 4]
    assert is_p_group(groups["D4"], 2) and not is_p_group(groups["S3"], 2)
    assert get_group("c2XC2").label == "C2xC2"
    with pytest.raises(GroupError):
        get_group("A5")
