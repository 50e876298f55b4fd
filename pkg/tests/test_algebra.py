from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from qrspin.algebra import (
    Poly, RationalFunction, USeries, decompose, delta_q_power, diff_coeff,
    lagrange_interpolate, normalized_delta, pochhammer_inv, pochhammer_inv_rf,
    q_poly, residue_at, stirling_poly, stirling_second,
)

small = st.integers(-6, 6)
polys = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7),
                 max_size=5).map(Poly)


def test_decompose_examples():
    d = decompose(7, 3)
    assert (d.floor, d.frac) == (2, 1)
    assert decompose(-1, 3).floor == -1 and decompose(-1, 3).frac == 2
    with pytest.raises(ValueError):
        decompose(3, 0)


@given(st.integers(-200, 200), st.integers(1, 12))
def test_decompose_roundtrip(mu, a):
    d = decompose(mu, a)
    assert d.value() == mu and 0 <= d.frac < a


@given(polys, polys, polys)
def test_poly_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Poly()


@given(polys, st.fractions(-3, 3, max_denominator=4), st.fractions(-3, 3, max_denominator=4))
def test_shift_composes(p, h1, h2):
    assert p.shift(h1).shift(h2) == p.shift(h1 + h2)
    assert p.shift(h1)(0) == p(h1)


@given(polys, polys.filter(lambda p: not p.is_zero()))
def test_divmod(a, b):
    quo, rem = a.divmod(b)
    assert quo * b + rem == a
    assert rem.degree < b.degree


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=6, unique=True), st.data())
def test_lagrange_reproduces_nodes(xs, data):
    ys = data.draw(st.lists(st.integers(-50, 50), min_size=len(xs), max_size=len(xs)))
    p = lagrange_interpolate(xs, ys)
    assert all(p(x) == y for x, y in zip(xs, ys))
    assert p.degree < len(xs)


def test_lagrange_rejects_repeats():
    with pytest.raises(ValueError):
        lagrange_interpolate([1, 1], [2, 3])


@pytest.mark.parametrize("mu,r", [(1, 1), (3, 2), (5, 3), (2, 4)])
def test_q_poly_definition(mu, r):
    Q = q_poly(mu, r)
    for l in range(-3, 4):
        assert Q(l) == Fraction((l + mu) ** (r + 1) - l ** (r + 1), mu * (r + 1))
    assert Q.lead == 1 and Q.degree == r


def test_delta_kills_high_order():
    f = Poly((1, 2, 3))
    assert delta_q_power(f, 2, 3).is_zero()
    assert normalized_delta(Poly.monomial(4), 3, 4) == Poly.const(1)


@given(st.integers(0, 6), st.integers(0, 6))
def test_stirling_poly_matches_table(t, x):
    assert stirling_poly(t)(x) == stirling_second(x + t, x)


@pytest.mark.parametrize("p,m,a,q", [(4, 1, 1, 1), (5, 2, 0, 2), (6, 1, 2, 3), (3, 0, 3, 1)])
def test_diff_coeff_against_direct_difference(p, m, a, q):
    poly = diff_coeff(p, m, a, q)
    for x in range(0, 4):
        direct = normalized_delta(Poly.monomial(p + x), q, x + m)
        assert poly(x) == direct[a]


def test_diff_coeff_vanishes_past_top():
    assert diff_coeff(3, 2, 2, 1).is_zero()


@given(st.integers(0, 8), st.integers(-8, 8))
def test_pochhammer_rf_agrees(fl, s):
    rf = pochhammer_inv_rf(s)
    if s < -fl:
        assert pochhammer_inv(fl, s) == 0
    else:
        assert rf(fl) == pochhammer_inv(fl, s)


def test_residue_simple_pole():
    # 1/((x+1)(x-2)) has residue -1/3 at -1
    f = RationalFunction(Poly.const(1), Poly.from_roots([-1, 2]))
    assert residue_at(f, -1) == Fraction(-1, 3)
    assert residue_at(f, 5) == 0


def test_useries_truncation():
    a = USeries({-1: 1, 0: 2}, order=3)
    b = USeries({1: 1}, order=2)
    c = a * b
    assert c[0] == 1 and c[1] == 2
    with pytest.raises(IndexError):
        c[c.order + 1]
