from fractions import Fraction

import pytest

from qrspin.unstable import (
    XSeries, bergman_check, dz_power_identity_check, f01_check, f01_coefficient,
    f02_check, f02_coefficient, functional_equation_residual, y_route_check, z_series,
)

QR = [(1, 1), (1, 2), (2, 1), (2, 2)]


@pytest.mark.parametrize("q,r", QR + [(3, 1)])
def test_lagrange_inversion(q, r):
    assert not functional_equation_residual(q, r, 12).support()


def test_z_series_leading_terms():
    z = z_series(1, 1, 4)
    assert [z[k] for k in range(5)] == [0, 1, 1, Fraction(3, 2), Fraction(8, 3)]
    with pytest.raises(IndexError):
        z[5]


def test_xseries_exp_log_pair():
    x = XSeries.from_dict({1: 1}, 6)
    e = x.exp()
    assert e[3] == Fraction(1, 6)
    with pytest.raises(ValueError):
        e.exp()


def test_f01_closed_form_values():
    assert f01_coefficient(1, 1, 0) == 1
    assert f01_coefficient(1, 2, 2) == Fraction(1, 2)
    with pytest.raises(ValueError):
        f01_coefficient(1, 1, -1)


@pytest.mark.parametrize("q,r", QR)
def test_unstable_suites(q, r):
    assert f01_check(q, r, 2).ok
    assert y_route_check(q, r, 4).ok
    assert f02_check(q, r, 8).ok
    assert bergman_check(q, r, 6).ok


def test_f02_symmetric_and_selective():
    assert f02_coefficient(2, 1, 1, 2) == 0
    assert f02_coefficient(1, 2, 1, 3) == f02_coefficient(1, 2, 3, 1)


@pytest.mark.parametrize("q,r,i", [(1, 1, 1), (1, 2, 1), (1, 2, 2), (2, 2, 3), (2, 2, 4)])
def test_dz_power_identity(q, r, i):
    assert dz_power_identity_check(q, r, i, 10).ok


def test_dz_power_rejects_out_of_range():
    with pytest.raises(ValueError):
        dz_power_identity_check(1, 2, 3, 5)
