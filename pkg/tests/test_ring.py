import numpy as np
import pytest

from ringlab import constructions as C
from ringlab.config import ConfigError, DEFAULT_MAX_ORDER, ENV_MAX_ORDER, max_order
from ringlab.ring import (AxiomError, FiniteRing, OrderError, check_order, is_commutative,
                          make_ring, validate)


def zn_tables(n):
    idx = np.arange(n)
    return (idx[:, None] + idx[None, :]) % n, (idx[:, None] * idx[None, :]) % n


def test_zmod_tables_are_modular_arithmetic():
    for n in (1, 2, 5, 12):
        R = C.zmod(n)
        add, mul = zn_tables(n)
        assert np.array_equal(R.add_table, add)
        assert np.array_equal(R.mul_table, mul)
        assert R.zero == 0 and R.one == 1 % n


def test_tables_are_read_only():
    R = C.zmod(4)
    with pytest.raises(ValueError):
        R.mul_table[1, 1] = 3


def test_element_helpers():
    R = C.zmod(7)
    assert R.sub(2, 5) == 4
    assert R.neg(3) == 4
    assert R.power(3, 6) == 1
    assert R.integer(9) == 2
    assert R.integer(-1) == 6
    assert list(R.elements()) == list(range(7))


def test_relabel_shares_tables_but_not_subset_cache():
    from ringlab.subsets import units
    R = C.zmod(4)
    units(R)
    S = R.relabel("other")
    assert S.label == "other" and S.add_table is R.add_table
    assert not S.cache


@pytest.mark.parametrize("table, pos, value, axiom", [
    ("mul", (2, 3), 1, "multiplicative-associativity"),
    ("mul", (1, 2), 0, "multiplicative-identity"),
    ("add", (0, 2), 3, "additive-commutativity"),
    ("mul", (0, 0), 1, "multiplicative-associativity"),
])
def test_validate_names_the_failing_axiom(table, pos, value, axiom):
    add, mul = (t.copy() for t in zn_tables(4))
    (mul if table == "mul" else add)[pos] = value
    with pytest.raises(AxiomError) as info:
        make_ring(4, add, mul, 0, 1)
    assert info.value.axiom == axiom
    assert all(0 <= w < 4 for w in info.value.witness)


def test_associativity_witness_is_a_real_counterexample():
    add, mul = zn_tables(5)
    mul = mul.copy()
    # keep identity row/column intact, break only an interior entry
    mul[2, 3] = mul[3, 2] = 0
    with pytest.raises(AxiomError) as info:
        make_ring(5, add, mul, 0, 1)
    err = info.value
    assert err.axiom == "multiplicative-associativity"
    a, b, c = err.witness
    assert mul[mul[a, b], c] != mul[a, mul[b, c]]


def test_make_ring_rejects_bad_shapes_and_values():
    add, mul = zn_tables(3)
    with pytest.raises(AxiomError, match="table-shape"):
        make_ring(4, add, mul, 0, 1)
    bad = mul.copy()
    bad[1, 1] = 7
    with pytest.raises(AxiomError, match="closure"):
        make_ring(3, add, bad, 0, 1)


def test_zero_ring_is_valid():
    Z = C.zero_ring()
    validate(Z)
    assert Z.order == 1 and Z.zero == Z.one


def test_zero_equal_one_rejected_when_nontrivial():
    add, mul = zn_tables(2)
    ring = FiniteRing(2, add, mul, 0, 0)
    with pytest.raises(AxiomError):
        validate(ring)


def test_order_limits(monkeypatch):
    check_order(10, 10)
    with pytest.raises(OrderError):
        check_order(11, 10)
    with pytest.raises(OrderError):
        C.matrix_ring(C.zmod(4), 2, max_order=100)


def test_config_precedence(monkeypatch):
    monkeypatch.delenv(ENV_MAX_ORDER, raising=False)
    assert max_order() == DEFAULT_MAX_ORDER
    monkeypatch.setenv(ENV_MAX_ORDER, "64")
    assert max_order() == 64
    assert max_order(8) == 8
    monkeypatch.setenv(ENV_MAX_ORDER, "lots")
    with pytest.raises(ConfigError):
        max_order()
    monkeypatch.setenv(ENV_MAX_ORDER, "0")
    with pytest.raises(ConfigError):
        max_order()
    with pytest.raises(ConfigError):
        max_order(-3)


def test_commutativity():
    assert is_commutative(C.zmod(6))
    assert not is_commutative(C.matrix_ring(C.galois_field(2), 2))
    assert not is_commutative(C.upper_triangular_ring(C.galois_field(2), 2))
