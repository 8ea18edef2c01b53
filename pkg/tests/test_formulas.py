import itertools

import pytest
from hypothesis import given, strategies as st

from gmdcodes import make_field
from gmdcodes.formulas import (
    RangeError, bounded_tuples, conjecture52_value, consistency_triangle, cor84_torus_delta2,
    degree_decomposition, lemma53_check, lemma91_count, lemma91_witness, lemma92_degree, pi,
    smallest_prime_power, thm55_bound, thm62_rhs, thm83_delta2, thm85_min, verify_lemma63,
    verify_thm62,
)
from gmdcodes.geometry import affine_cartesian_set, nested_cartesian_set
from gmdcodes.gmdfun import delta_fn
from gmdcodes.groebner import MonomialIdeal, degree_and_regularity
from oracles import generic_lemma92_degree


def test_pi_examples():
    assert pi((1, 2), (2, 1)) == 3
    assert pi((2, 3), (2, 3)) == 6
    assert pi((1, 1, 1), (2, 3, 4)) == 24
    with pytest.raises(ValueError):
        pi((0, 1), (1, 1))


def test_thm62_small_boxes():
    for e in [(2, 2), (2, 3, 4), (1, 3, 3), (3, 3, 3, 3)]:
        rep = verify_thm62(e)
        assert rep["violations"] == [] and rep["checked"] > 0
    assert verify_thm62((2, 2))["checked"] == 1  # only {(1,2), (2,1)}


def test_thm62_last_k_uses_unit_tail():
    e = (2, 3, 4)
    a = (1, 2, 3)
    assert thm62_rhs(a, e, 2) == (6 - 4 - 0) * 4 - 1
    with pytest.raises(RangeError):
        thm62_rhs(a, e, 3)


@given(st.lists(st.integers(1, 4), min_size=2, max_size=3).map(sorted))
def test_thm62_matches_pure_python(e):
    e = tuple(e)
    boxes = [range(1, x + 1) for x in e]
    bad = 0
    n = 0
    for a, b in itertools.combinations(itertools.product(*boxes), 2):
        if sum(a) != sum(b):
            continue
        n += 1
        if any(pi(a, b) < thm62_rhs(a, e, k) for k in range(1, len(e))):
            bad += 1
    rep = verify_thm62(e)
    assert rep["checked"] == n and len(rep["violations"]) == bad == 0


def test_lemma53():
    rep = lemma53_check((2, 2, 2))
    # b ranges over {0, 1}^3 and k over 1..3
    assert rep["violations"] == [] and rep["checked"] == 8 * 3
    assert lemma53_check((3, 4), b=(0, 0))["violations"] == []
    assert lemma53_check((5,))["violations"] == []


def test_lemma63():
    rep = verify_lemma63(12)
    assert rep["violations"] == [] and rep["checked"] > 0


def test_bounded_tuples():
    ts = list(bounded_tuples(8, 3, minimum=2))
    assert (2, 2, 2) in ts and (2, 4) in ts and (3, 3) not in ts
    assert all(list(t) == sorted(t) for t in ts)


def test_lemma92_examples():
    assert lemma92_degree((2, 3), (1, 1, 0)) == 4
    assert lemma92_degree((2, 3, 4), (1, 2, 3)) == 23
    with pytest.raises(RangeError):
        lemma92_degree((2, 3), (0, 0, 2))


@given(st.lists(st.integers(2, 4), min_size=1, max_size=3).map(sorted), st.data(),
       st.integers(0, 2))
def test_lemma92_against_hilbert_series(sizes, data, a_last):
    a = [data.draw(st.integers(0, d - 1)) for d in sizes]
    if not any(a):
        return
    n = len(sizes)
    gens = [tuple(d if j == i else 0 for j in range(n + 1)) for i, d in enumerate(sizes)]
    gens.append(tuple(a) + (a_last,))
    L = MonomialIdeal.of(n + 1, gens)
    want = lemma92_degree(sizes, a + [a_last])
    assert degree_and_regularity(L)[0] == want
    assert generic_lemma92_degree(sizes, a, a_last) == want


def test_degree_decomposition():
    assert degree_decomposition(3, (2, 2, 4)) == degree_decomposition(3, [2, 2, 4])
    dec = degree_decomposition(3, (2, 2, 4))
    assert (dec.k, dec.ell) == (2, 1)
    assert (degree_decomposition(1, (3, 5)).k, degree_decomposition(1, (3, 5)).ell) == (0, 1)
    dec = degree_decomposition(6, (3, 5))
    assert (dec.k, dec.ell) == (1, 4)
    with pytest.raises(RangeError):
        degree_decomposition(7, (3, 5))


def test_thm83_values():
    assert [thm83_delta2((2, 2, 4), d) for d in range(1, 8)] == [12, 7, 4, 3, 2, 2, 2]
    with pytest.raises(RangeError):
        thm83_delta2((4, 2), 1)


def test_thm85_matches_thm83():
    for sizes in [(2, 2, 4), (2, 3), (3, 3, 3), (2, 2, 2, 2)]:
        for d in range(1, sum(x - 1 for x in sizes) + 1):
            value, (a, b) = thm85_min(sizes, d)
            assert value == thm83_delta2(sizes, d)
            assert sum(a) == sum(b) == d and a != b
    with pytest.raises(RangeError):
        thm85_min((3,), 1)


def test_cor84_examples():
    assert cor84_torus_delta2(3, 3, 1) == 3
    assert cor84_torus_delta2(3, 3, 2) == 2
    assert cor84_torus_delta2(4, 3, 2) == 5
    # the torus is the cartesian set with all factors of size q-1
    for q, s in [(4, 3), (5, 3), (4, 4)]:
        sizes = (q - 1,) * (s - 1)
        for d in range(1, (q - 2) * (s - 1) + 1):
            assert cor84_torus_delta2(q, s, d) == thm83_delta2(sizes, d)


def test_conjecture_and_bound(ex71):
    assert [conjecture52_value((2, 2, 4), d) for d in range(1, 6)] == [8, 4, 3, 2, 1]
    X, order = ex71
    assert delta_fn(X, 4, 1, order) == 1
    # in range: d = (d_2 - 1) + l with 1 <= l <= d_1 - 1, i.e. d = 2 only
    assert thm55_bound((2, 2, 4), 2) == 2 <= delta_fn(X, 2, 1, order)
    with pytest.raises(RangeError):
        thm55_bound((2, 2, 4), 5)


def _witness_case(sizes, d):
    q = smallest_prime_power(max(sizes))
    F = make_field(*q)
    factors = [list(range(x)) for x in sizes]
    Fp, Gp, predicted = lemma91_witness(F, factors, d)
    X = affine_cartesian_set(F, factors)
    from gmdcodes.geometry import count_zeros
    zeros, _ = count_zeros(X, [Fp, Gp])
    return Fp, Gp, predicted, zeros, X


@pytest.mark.parametrize("sizes", [(2, 2, 4), (2, 3), (3, 3, 3), (2, 2, 2, 3), (2, 4)])
def test_lemma91_witnesses(sizes):
    for d in range(1, sum(x - 1 for x in sizes) + 1):
        Fp, Gp, predicted, zeros, X = _witness_case(sizes, d)
        assert zeros == predicted == lemma91_count(sizes, d)
        assert Fp.degree() == Gp.degree() == d
        # independent: G is not a scalar multiple of F
        assert all(Fp.scale(c) != Gp for c in range(1, X.field.q))
        # the witness bound is the closed form
        assert len(X) - zeros == thm83_delta2(sizes, d)


def test_lemma91_first_case_count():
    assert lemma91_count((2, 2, 4), 1) == 4


def test_consistency_triangle_small():
    for sizes in [(2, 2), (2, 3), (2, 2, 4)]:
        rows = consistency_triangle(sizes)
        assert all(r["ok"] for r in rows)


def test_smallest_prime_power():
    assert smallest_prime_power(4) == (2, 2)
    assert smallest_prime_power(6) == (7, 1)
    assert smallest_prime_power(2) == (2, 1)


def test_nested_first_column_beats_conjecture(gf4):
    X = nested_cartesian_set(gf4, [[0, 1], [0, 1], "all"])
    assert delta_fn(X, 4, 1) == 1
