import pytest
from hypothesis import given, strategies as st

from gmdcodes.gf import (
    FieldError, elements, field_of_size, is_irreducible, make_field, parse_element, parse_field,
    smallest_irreducible,
)
from oracles import naive_add, naive_mul

SMALL_Q = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


def test_prime_field_gf2():
    F = make_field(2, 1)
    assert F.q == 2
    assert [e.value for e in elements(F)] == [0, 1]
    assert F.add(1, 1) == 0


def test_gf4_modulus_and_root():
    F = make_field(2, 2)
    assert F.modulus == (1, 1, 1)
    a = F("a")
    assert a * a == a + F.one
    assert F.format(a.value) == "a" and F.format(3) == "a+1"


def test_non_prime_characteristic_rejected():
    with pytest.raises(FieldError):
        make_field(4, 1)


def test_smallest_irreducible_choices():
    assert smallest_irreducible(3, 2) == (1, 0, 1)
    assert smallest_irreducible(2, 4) == (1, 1, 0, 0, 1)
    assert not is_irreducible((1, 0, 1), 2)


def test_gf3_elements():
    assert [e.value for e in elements(make_field(3))] == [0, 1, 2]


def test_gf4_closed_under_mul():
    F = make_field(2, 2)
    els = elements(F)
    assert len({e.value for e in els}) == 4
    assert {(x * y).value for x in els for y in els} <= {e.value for e in els}


@pytest.mark.parametrize("q", SMALL_Q)
def test_tables_match_schoolbook(q):
    F = field_of_size(q)
    for x in range(q):
        for y in range(q):
            assert F.add(x, y) == naive_add(F, x, y)
            assert F.mul(x, y) == naive_mul(F, x, y)


@pytest.mark.parametrize("q", SMALL_Q)
def test_multiplicative_group_order_and_frobenius(q):
    F = field_of_size(q)
    for x in range(1, q):
        assert F.pow(x, q - 1) == 1
    g = F.primitive
    x, n = g, 1
    while x != 1:
        x, n = F.mul(x, g), n + 1
    assert n == q - 1
    # Frobenius x -> x^p is additive
    for x in range(q):
        for y in range(q):
            assert F.pow(F.add(x, y), F.p) == F.add(F.pow(x, F.p), F.pow(y, F.p))


@given(st.sampled_from(SMALL_Q), st.data())
def test_field_axioms(q, data):
    F = field_of_size(q)
    el = st.integers(0, q - 1)
    x, y, z = data.draw(el), data.draw(el), data.draw(el)
    assert F.add(x, y) == F.add(y, x)
    assert F.mul(x, y) == F.mul(y, x)
    assert F.add(F.add(x, y), z) == F.add(x, F.add(y, z))
    assert F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z))
    assert F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z))
    assert F.add(x, 0) == x and F.mul(x, 1) == x
    assert F.add(x, F.neg(x)) == 0
    if x:
        assert F.mul(x, F.inv(x)) == 1


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        make_field(3).inv(0)


def test_parse_element_forms():
    F = make_field(2, 2)
    assert parse_element(F, "10") == 2  # digit string
    assert parse_element(F, "a+1") == 3
    G = make_field(3, 2)
    assert parse_element(G, "2a^1+1") == G.add(G.mul(2, 3), 1)
    assert parse_element(make_field(7), "5") == 5
    with pytest.raises(FieldError):
        parse_element(make_field(5), "a")


def test_parse_field():
    assert parse_field("2^2").q == 4
    assert parse_field("9").k == 2
    with pytest.raises(FieldError):
        parse_field("6")


def test_element_operators():
    F = make_field(5)
    x, y = F(3), F(4)
    assert (x + y).value == 2 and (x - y).value == 4 and (x * y).value == 2
    assert (x / y * y) == x
    assert (x ** 4).value == 1
