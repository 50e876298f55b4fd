import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from qrspin import _kernels_py, kernels
from qrspin.algebra import Poly
from qrspin.fock import (
    Alpha, BandOperator, EnergyCapError, FockVector, apply_alpha, apply_band,
    commutator_rhs, fn_eigenvalue, partitions, vev,
)

partition_st = st.integers(0, 7).flatmap(lambda n: st.sampled_from(list(partitions(n))))


def test_partition_counts():
    assert [sum(1 for _ in partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


@pytest.mark.parametrize("a", range(1, 11))
def test_heisenberg_pairing(a):
    assert vev([Alpha(a), Alpha(-a)]) == a
    assert vev([Alpha(-a), Alpha(a)]) == 0


def test_energy_cap_is_enforced():
    with pytest.raises(EnergyCapError):
        apply_alpha(-3, FockVector.vacuum(cap=2))


def test_fn_eigenvalues():
    assert fn_eigenvalue((), 3) == 0
    # f_1 is the size
    assert fn_eigenvalue((3, 1), 1) == 4
    # f_2 is twice the content sum
    assert fn_eigenvalue((2,), 2) == 2


def _apply(op, v):
    return apply_band(op, v)


@settings(max_examples=60, deadline=None)
@given(partition_st, st.integers(-3, 3), st.integers(-3, 3),
       st.lists(st.integers(-2, 2), min_size=1, max_size=3),
       st.lists(st.integers(-2, 2), min_size=1, max_size=3))
def test_band_commutator(lam, a, b, gc, fc):
    g, f = Poly(gc), Poly(fc)
    G, F = BandOperator(a, g), BandOperator(b, f)
    v = FockVector.basis(lam)
    lhs = _apply(G, _apply(F, v)) - _apply(F, _apply(G, v))
    assert lhs == _apply(commutator_rhs(g, a, f, b), v)


@settings(max_examples=80, deadline=None)
@given(partition_st, st.integers(-5, 5).filter(bool))
def test_backends_agree_on_band_moves(lam, a):
    if kernels.BACKEND != "cython":
        pytest.skip("compiled kernels not built")
    from qrspin import _kernels
    assert _kernels.band_moves(lam, a) == _kernels_py.band_moves(lam, a)
    assert _kernels.diagonal_support(lam) == _kernels_py.diagonal_support(lam)
    assert _kernels.hook_position(lam) == _kernels_py.hook_position(lam)
    assert _kernels.fn_eigen_scaled(lam, 3) == _kernels_py.fn_eigen_scaled(lam, 3)


@settings(max_examples=80, deadline=None)
@given(partition_st, st.integers(-6, 6), st.integers(-6, 6))
def test_backends_agree_on_moves(lam, src, dst):
    if kernels.BACKEND != "cython":
        pytest.skip("compiled kernels not built")
    assume(src != dst)
    from qrspin import _kernels
    assert _kernels.move(lam, src, dst) == _kernels_py.move(lam, src, dst)


def test_pure_python_switch():
    env = dict(os.environ, QRSPIN_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import qrspin; print(qrspin.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
