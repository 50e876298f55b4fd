import pytest

from qrspin import tr


def test_branch_points():
    assert tr.branch_points(1, 1) == [1]
    curve = tr.CurveData(1, 2)
    pts = tr.branch_points(1, 2, curve=curve)
    root = 1 / curve.ctx.sqrt(2)
    assert len(pts) == 2
    assert abs(pts[0] - root) < 1e-70 and abs(pts[1] + root) < 1e-70
    assert len(tr.branch_points(2, 3)) == 6


def test_curve_validation():
    with pytest.raises(ValueError):
        tr.CurveData(1, 1, 64)
    with pytest.raises(ValueError):
        tr.CurveData(0, 1)


@pytest.mark.parametrize("q,r,j", [(1, 1, 0), (1, 2, 1), (2, 2, 3)])
def test_local_data(q, r, j):
    curve = tr.CurveData(q, r)
    loc = tr.local_data(j, 16, curve)
    assert loc.back_substitution_residual() < curve.tol
    assert abs(loc.sigma[0] - loc.a) == 0
    assert loc.sigma_derivative() == -1
    with pytest.raises(ValueError):
        tr.local_data(j, 1, curve)


def test_basis_principal_part():
    curve = tr.CurveData(1, 2)
    for m in (0, 2, 4):
        e = tr.basis_expansion(curve, 1, 1, m, 4)
        assert e.val == -(m + 2)
        assert abs(e.coeff(-(m + 2)) - 1) < curve.tol
        # no other polar terms, in particular no residue
        assert all(abs(e.coeff(k)) < curve.tol for k in range(-(m + 1), 0))
        far = tr.basis_expansion(curve, 0, 1, m, 4)
        assert far.val == 0


def test_omega11_pole_order():
    tensor = tr.tr_omega(1, 1, tr.CurveData(2, 1))
    assert max(m for ((_, m),) in tensor) + 2 <= 4


def test_omega03_symmetry_and_branch_order():
    assert tr.symmetry_check(0, 3, 1, 2).ok
    a = tr.conjecture_check(0, 3, 1, 1, 3)
    b = tr.conjecture_check(0, 3, 2, 1, 3, reverse_branch_order=True)
    c = tr.conjecture_check(0, 3, 2, 1, 3)
    assert a.status == "pass" and b.status == "pass"
    assert [i.actual for i in b.items] == [i.actual for i in c.items]


def test_unstable_ties():
    assert tr.omega01_check(2, 2, 4).ok
    assert tr.omega02_check(1, 2, 8).ok
    assert tr.omega02_check(2, 2, 8).ok


def test_evidence_gating():
    rep = tr.conjecture_check(0, 3, 1, 2, 3)
    assert rep.status == "evidence"
    assert all(it.status == "evidence" for it in rep.items)
    assert rep.params["agreement"] is True
    assert tr.proven_regime(3, 1) and not tr.proven_regime(1, 2)


def test_beyond_acceptance_range():
    assert tr.conjecture_check(0, 4, 1, 1, 3).ok
    assert tr.conjecture_check(1, 2, 1, 1, 2).ok


def test_precision_doubling():
    assert tr.precision_doubling_check(0, 3, 1, 2, 3).ok


def test_rejects_unstable():
    with pytest.raises(ValueError):
        tr.conjecture_check(0, 2, 1, 1, 3)
