from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qrspin.polynomiality import (
    InadmissibleResidues, admissible_residues, admissible_tuples, evaluate_multi,
    interpolate_tensor, sample_P, verify_polynomiality,
)


def test_admissibility():
    assert admissible_residues(1, 1, 1, 1, (0,)) == 1
    assert admissible_residues(1, 1, 2, 2, (2,)) == 1
    with pytest.raises(InadmissibleResidues):
        admissible_residues(1, 1, 2, 2, (0,))
    with pytest.raises(ValueError):
        admissible_residues(0, 3, 1, 1, (0, 0))


def test_admissible_tuples_are_sorted_and_admissible():
    for g, n, q, r in [(0, 3, 2, 2), (1, 2, 1, 2), (1, 1, 2, 1)]:
        tuples = admissible_tuples(g, n, q, r)
        assert tuples
        for t in tuples:
            assert list(t) == sorted(t, reverse=True)
            admissible_residues(g, n, q, r, t)


@pytest.mark.parametrize("g,n,q,r,res,floors", [
    (1, 1, 1, 1, (0,), (2,)), (0, 3, 1, 2, (1, 0, 0), (0, 1, 1)),
    (1, 2, 2, 1, (1, 1), (1, 0)), (1, 1, 2, 2, (2,), (1,)),
])
def test_routes_agree(g, n, q, r, res, floors):
    assert sample_P(g, n, q, r, res, floors) == sample_P(g, n, q, r, res, floors, route="fock")


@settings(max_examples=25, deadline=None)
@given(st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)),
                       st.fractions(-4, 4, max_denominator=5), max_size=6))
def test_interpolation_recovers_polynomials(poly):
    poly = {k: v for k, v in poly.items() if v}
    axes = [range(0, 3), range(1, 4)]
    values = {(a, b): evaluate_multi(poly, (a, b)) for a in axes[0] for b in axes[1]}
    assert interpolate_tensor(axes, values) == poly


def test_one_one_simple_case():
    rep = verify_polynomiality(1, 1, 1, 1, (0,), 4)
    assert rep.ok
    assert rep.poly == {(0,): Fraction(-1, 24), (1,): Fraction(1, 24)}


def test_genus_zero_three_points_is_one():
    rep = verify_polynomiality(0, 3, 1, 1, (0, 0, 0), 4)
    assert rep.ok and rep.poly == {(0, 0, 0): 1}


@pytest.mark.parametrize("g,n,q,r,res", [(1, 1, 1, 2, (1,)), (1, 1, 2, 2, (2,)),
                                         (0, 3, 2, 1, (1, 1, 0))])
def test_grid_offset_invariance(g, n, q, r, res):
    """The interpolant does not depend on where the grid starts."""
    bound = 2 * (2 * g - 2 + n)
    a = verify_polynomiality(g, n, q, r, res, bound + 2)
    b = verify_polynomiality(g, n, q, r, res, bound + 2, origin=3)
    assert a.ok and b.ok and a.poly == b.poly


def test_grid_too_small():
    with pytest.raises(ValueError):
        verify_polynomiality(1, 1, 1, 1, (0,), 2)
