from fractions import Fraction

import pytest

from qrspin.fock import partitions
from qrspin.hurwitz import (
    HurwitzKey, character_oracle, completed_cycle_count, connected_hurwitz,
    disconnected_hurwitz, free_energy_coeff, mn_character, transposition_count_hurwitz,
)


@pytest.mark.parametrize("g,q,r,mu,b", [
    (0, 1, 1, (2,), 1), (0, 2, 1, (2,), 0), (0, 1, 2, (2,), None), (0, 2, 1, (3,), None),
])
def test_completed_cycle_count(g, q, r, mu, b):
    assert completed_cycle_count(HurwitzKey(g, q, r, mu)) == b


def test_key_validation():
    with pytest.raises(ValueError):
        HurwitzKey(0, 0, 1, (1,))
    with pytest.raises(ValueError):
        HurwitzKey(0, 1, 1, (0,))


@pytest.mark.parametrize("key,value", [
    (HurwitzKey(0, 1, 1, (1,)), Fraction(1)),
    (HurwitzKey(0, 1, 1, (2,)), Fraction(1, 2)),
    (HurwitzKey(0, 1, 2, (1, 1)), Fraction(7, 6)),
])
def test_disconnected_examples(key, value):
    assert disconnected_hurwitz(key) == value


@pytest.mark.parametrize("key,value", [
    (HurwitzKey(0, 1, 2, (1, 1)), Fraction(1)),
    (HurwitzKey(0, 1, 1, (1, 1)), Fraction(1, 2)),
])
def test_connected_examples(key, value):
    assert connected_hurwitz(key) == value
    assert free_energy_coeff(key.g, key.n, key.q, key.r, key.mu) == value


def test_single_part_connected_equals_disconnected():
    for q, r in [(1, 1), (2, 1), (1, 2)]:
        for d in range(1, 6):
            key = HurwitzKey(1, q, r, (d,))
            assert connected_hurwitz(key) == disconnected_hurwitz(key)


def test_characters():
    assert mn_character((2,), (2,)) == 1
    assert mn_character((1, 1), (2,)) == -1
    assert mn_character((2, 1), (1, 1, 1)) == 2
    # column orthogonality for S_4
    for rho in partitions(4):
        for sigma in partitions(4):
            s = sum(mn_character(lam, rho) * mn_character(lam, sigma) for lam in partitions(4))
            assert (s != 0) == (rho == sigma)


@pytest.mark.parametrize("q,r", [(1, 1), (2, 1), (1, 2), (3, 1), (2, 2)])
def test_character_oracle_small(q, r):
    for size in range(1, 6):
        for mu in partitions(size):
            for g in range(2):
                key = HurwitzKey(g, q, r, mu)
                assert character_oracle(key) == disconnected_hurwitz(key), key


def test_q_must_divide_size():
    assert character_oracle(HurwitzKey(0, 2, 1, (3,))) == 0
    assert disconnected_hurwitz(HurwitzKey(0, 2, 1, (3,))) == 0


@pytest.mark.parametrize("mu", [(1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1), (2, 2)])
def test_transposition_count(mu):
    for g in range(2):
        key = HurwitzKey(g, 1, 1, mu)
        if sum(mu) + 2 * g - 2 + len(mu) > 5:
            continue
        assert transposition_count_hurwitz(g, mu, connected=False) == disconnected_hurwitz(key)
        assert transposition_count_hurwitz(g, mu, connected=True) == connected_hurwitz(key)
