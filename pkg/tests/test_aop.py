from fractions import Fraction
from math import factorial

import pytest

from qrspin.algebra import Poly, q_poly, residue_at
from qrspin.aop import (
    a_inverse, a_operator, allowed_poles, compose_matrices, conjugation_O,
    disconnected_a_correlator, hurwitz_prefactor, residue_check,
    symbolic_correlator, symbolic_entry, verify_hurw_aop,
)
from qrspin.fock import BandOperator, FockVector, apply_band, fn_eigenvalue, partitions


def test_conjugation_low_orders():
    tab = conjugation_O(3, 1, 2, 2)
    assert tab.entries[(0, -3)] == Poly.const(1)
    assert tab.shift(-3) == -3
    assert tab.entries[(2, -3)] == q_poly(3, 2) * 3


@pytest.mark.parametrize("mu,q,r", [(2, 1, 1), (3, 1, 2), (3, 2, 1), (4, 2, 2)])
def test_conjugation_against_f_conjugation(mu, q, r):
    """``e^{u^r F/(r+1)} alpha_{-mu} e^{-u^r F/(r+1)}`` computed on basis vectors."""
    tab = conjugation_O(mu, q, r, 3 * r)
    for lam in list(partitions(3)) + [()]:
        v = FockVector.basis(lam)
        plain = apply_band(BandOperator(-mu, Poly.const(1)), v)
        f0 = fn_eigenvalue(lam, r + 1) / (r + 1)
        for s in range(4):
            expected = {nu: c * (fn_eigenvalue(nu, r + 1) / (r + 1) - f0) ** s / factorial(s)
                        for nu, c in plain.terms.items()}
            got = FockVector()
            for (p, i), poly in tab.entries.items():
                if p == r * s:
                    got = got + apply_band(BandOperator(tab.shift(i), poly), v)
            assert got == FockVector(expected)


def test_a_operator_identity_example():
    tab = a_operator(1, 1, 2, 0)
    assert tab.scalars[0] == 1


def test_identity_part_needs_q_dividing_mu():
    for mu in (1, 3, 5):
        assert not a_operator(mu, 2, 1, 4).scalars


@pytest.mark.parametrize("lam,q,r", [(1, 1, 1), (2, 1, 2), (3, 2, 1), (5, 2, 2), (4, 1, 3)])
def test_a_times_inverse_is_identity(lam, q, r):
    order = 6
    # tables are built past the comparison order: A starts at u^(-r[lam])
    build = order + r * (lam // (q * r))
    prod = compose_matrices(a_operator(lam, q, r, build), a_inverse(lam, q, r, build), order)
    assert prod == {(0, 0): Poly.const(1)}


def test_correlator_examples():
    assert disconnected_a_correlator((2,), 1, 1, -1) == Fraction(1, 4)
    assert disconnected_a_correlator((1,), 1, 2, 0) == 1
    assert disconnected_a_correlator((1,), 1, 1, 1) == 0
    assert hurwitz_prefactor((2,), 1, 1) == 2


@pytest.mark.parametrize("mu,q,r", [((1,), 1, 1), ((2, 1), 1, 1), ((3, 1), 2, 1), ((2, 2), 1, 2),
                                    ((3, 2, 1), 2, 2)])
def test_route_equality(mu, q, r):
    assert verify_hurw_aop(mu, q, r, 4).ok


def test_route_harness_detects_corruption():
    assert not verify_hurw_aop((2,), 1, 1, 2, corrupt=True).ok


@pytest.mark.parametrize("eta,q,r", [(0, 1, 1), (1, 2, 1), (1, 1, 2), (3, 2, 2)])
def test_symbolic_entries_specialise(eta, q, r):
    for nu in range(0, 3):
        mu = q * r * nu + eta
        if mu < 1:
            continue
        tab = a_operator(mu, q, r, 2 * r)
        fl_q = mu // q
        for s in range(0, 3):
            if r * s > 2 * r:
                break
            for i in range(-fl_q, r * (s + nu) + 1):
                sym = symbolic_entry(eta, q, r, s, i)
                conc = tab.entries.get((r * s, i), Poly())
                for k in range(max(len(sym), conc.degree + 1)):
                    val = sym[k](Fraction(nu)) if k < len(sym) else 0
                    assert val == conc[k], (nu, s, i, k)


def test_symbolic_correlator_specialises():
    for nu in range(1, 5):
        rf = symbolic_correlator((0,), (), 1, 1, 1)
        assert rf(nu) == disconnected_a_correlator((nu,), 1, 1, 1)


def test_residue_examples():
    assert residue_check(0, 1, 1, 1, 3).ok
    rep = residue_check(1, 1, 2, 1, 2)
    assert rep.ok and rep.rows


def test_allowed_poles():
    assert allowed_poles(0, 1, 1, Poly.from_roots([-1, -2]))
    assert not allowed_poles(0, 1, 1, Poly.from_roots([Fraction(1, 2)]))
