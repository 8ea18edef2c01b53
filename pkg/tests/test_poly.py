import pytest
from hypothesis import given, strategies as st

from gmdcodes import make_field
from gmdcodes.poly import (
    MonomialOrder, ParseError, Polynomial, divide, mono_divides, mono_mul, parse_polynomial,
    parse_priority,
)

ORDERS = [MonomialOrder(k, p) for k in ("lex", "grlex", "grevlex")
          for p in [(0, 1, 2), (2, 1, 0), (1, 2, 0)]]

mono3 = st.tuples(*[st.integers(0, 4)] * 3)


def test_lex_priority_comparison():
    order = MonomialOrder("lex", (2, 1, 0))
    assert order.compare((1, 2, 0), (2, 1, 0)) == 1


def test_graded_orders_degree_dominates():
    for kind in ("grlex", "grevlex"):
        order = MonomialOrder(kind)
        assert order.compare((0, 0, 3), (2, 0, 0)) == 1


def test_grevlex_vs_lex_differ():
    # t1 t3^2 vs t2^3 in degree 3: grevlex with t1>t2>t3 prefers t2^3 (smaller t3 power)
    assert MonomialOrder("grevlex").compare((0, 3, 0), (1, 0, 2)) == 1
    assert MonomialOrder("lex").compare((0, 3, 0), (1, 0, 2)) == -1


@given(st.sampled_from(ORDERS), mono3, mono3, mono3)
def test_order_axioms(order, a, b, n):
    c = order.compare(a, b)
    assert order.compare(a, a) == 0
    assert order.compare(b, a) == -c
    if c < 0:
        assert order.compare(mono_mul(a, n), mono_mul(b, n)) < 0
    assert order.compare((0, 0, 0), a) <= 0  # 1 is the minimum


@given(st.sampled_from(ORDERS), mono3, mono3, mono3)
def test_order_transitive(order, a, b, c):
    if order.compare(a, b) <= 0 and order.compare(b, c) <= 0:
        assert order.compare(a, c) <= 0


def test_parse_priority():
    assert parse_priority("t3,t2,t1") == (2, 1, 0)
    with pytest.raises(ValueError):
        parse_priority("t1,t1,t2")


def test_bad_order_kind():
    with pytest.raises(ValueError):
        MonomialOrder("deglex-ish")


def test_leading_terms():
    F = make_field(2, 2)
    f = parse_polynomial("t1*t2^2-t1^2*t2", F, 3)
    mono, coeff = f.leading_term(MonomialOrder("lex", (2, 1, 0)))
    assert mono == (1, 2, 0) and coeff.value == 1
    g = parse_polynomial("a*t3", F, 3)
    assert g.leading_term(MonomialOrder())[1].value == 2
    c = Polynomial.constant(F, 3, 3)
    assert c.leading_term(MonomialOrder()) == ((0, 0, 0), F(3))


def test_divide_by_self_and_one_step():
    F = make_field(3)
    f = parse_polynomial("t1^2 + 2*t1*t2 + t3^2", F, 3)
    (qs, r) = divide(f, [f], MonomialOrder())
    assert qs[0] == Polynomial.constant(F, 3, 1) and r.is_zero()
    g = parse_polynomial("t1^2", F, 2)
    (_, r) = divide(g, [parse_polynomial("t1^2 - t2", F, 2)], MonomialOrder("lex"))
    assert r == parse_polynomial("t2", F, 2)


polys = st.lists(st.tuples(mono3, st.integers(1, 2)), min_size=1, max_size=5)


@given(st.sampled_from(ORDERS), polys, st.lists(polys, min_size=1, max_size=3))
def test_division_reconstruction(order, f_terms, divisor_terms):
    F = make_field(3)
    f = Polynomial(F, 3, dict(f_terms))
    divs = [Polynomial(F, 3, dict(t)) for t in divisor_terms]
    qs, r = divide(f, divs, order)
    total = r
    for q_, g in zip(qs, divs):
        total = total + q_ * g
    assert total == f
    lms = [g.leading_monomial(order) for g in divs]
    for m in r.terms:
        assert not any(mono_divides(lm, m) for lm in lms)


@given(polys, polys, st.tuples(*[st.integers(0, 2)] * 3))
def test_evaluation_is_a_ring_map(a, b, pt):
    F = make_field(3)
    f, g = Polynomial(F, 3, dict(a)), Polynomial(F, 3, dict(b))
    assert (f * g).eval_int(pt) == F.mul(f.eval_int(pt), g.eval_int(pt))
    assert (f + g).eval_int(pt) == F.add(f.eval_int(pt), g.eval_int(pt))


def test_example_form_vanishes_off_e3(ex71):
    X, _ = ex71
    f = parse_polynomial("t3*(t3^3-t2^3-t1^3+t1^2*t2)", X.field, 3)
    values = {pt: f.eval_int(pt) for pt in X.coords}
    assert values[(0, 0, 1)] == 1
    assert all(v == 0 for pt, v in values.items() if pt != (0, 0, 1))
    assert parse_polynomial("t1-t2", X.field, 3).eval_int((1, 1, 0)) == 0


def test_parse_errors_carry_position():
    F = make_field(2)
    with pytest.raises(ParseError) as exc:
        parse_polynomial("t1 + * t2", F, 3)
    assert exc.value.pos == 5
    with pytest.raises(ParseError):
        parse_polynomial("t4", F, 3)
    with pytest.raises(ParseError):
        parse_polynomial("(t1 + t2", F, 3)


def test_parse_roundtrip_and_homogeneity():
    F = make_field(2, 2)
    f = parse_polynomial("a*t1^2*t2 + (a+1)*t3^3 + t1 t2 t3", F, 3)
    assert f.is_homogeneous() and f.degree() == 3
    assert parse_polynomial(f.to_str(), F, 3) == f
    assert not parse_polynomial("t1 + t2^2", F, 3).is_homogeneous()
    assert Polynomial.zero(F, 3).terms == {}
    assert (f - f).terms == {}
