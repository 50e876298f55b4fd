"""q-orbifold r-spin Hurwitz numbers.

Disconnected numbers are vacuum expectations on the wedge space; connected
numbers follow by inclusion-exclusion over set partitions of the marked
points.  Two independent oracles are provided: a character sum
(Murnaghan-Nakayama) and, for simple Hurwitz numbers, a direct count of
transposition factorizations.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial, prod
from typing import Iterator, Sequence

from .fock import FockVector, apply_alpha, fn_eigenvalue, make_partition, partitions


@dataclass(frozen=True)
class HurwitzKey:
    g: int
    q: int
    r: int
    mu: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mu", tuple(int(m) for m in self.mu))
        if self.q < 1 or self.r < 1:
            raise ValueError("q and r must be positive")
        if any(m < 1 for m in self.mu):
            raise ValueError("profile entries must be positive")

    @property
    def n(self) -> int:
        return len(self.mu)

    @property
    def size(self) -> int:
        return sum(self.mu)


def completed_cycle_count(key: HurwitzKey) -> int | None:
    """Number b of completed (r+1)-cycles, or None when there are no covers."""
    if key.size % key.q:
        return None
    num = 2 * key.g - 2 + key.n + key.size // key.q
    if num < 0 or num % key.r:
        return None
    return num // key.r


# --------------------------------------------------------------------------
# vacuum-expectation route
# --------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _profile_vector(mu: tuple[int, ...]) -> FockVector:
    """``prod alpha_{-mu_i} / mu_i |0>`` (order-independent, mu sorted)."""
    v = FockVector.vacuum(sum(mu))
    for m in mu:
        v = apply_alpha(-m, v) * Fraction(1, m)
    return v


@lru_cache(maxsize=None)
def _disconnected(q: int, r: int, b: int, mu: tuple[int, ...]) -> Fraction:
    d = sum(mu)
    k = d // q
    v = _profile_vector(mu)
    weight = Fraction(1, factorial(b) * (r + 1) ** b)
    v = FockVector({lam: c * fn_eigenvalue(lam, r + 1) ** b * weight
                    for lam, c in v.terms.items()}, v.cap)
    for _ in range(k):
        v = apply_alpha(q, v)
        if v.is_zero():
            return Fraction(0)
    return v.vacuum_coefficient() / (q ** k * factorial(k))


def disconnected_hurwitz(key: HurwitzKey) -> Fraction:
    b = completed_cycle_count(key)
    if b is None:
        return Fraction(0)
    return _disconnected(key.q, key.r, b, tuple(sorted(key.mu, reverse=True)))


def set_partitions(items: Sequence) -> Iterator[list[list]]:
    """All set partitions of ``items`` (blocks keep the input order)."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def _compositions(total: int, k: int) -> Iterator[tuple[int, ...]]:
    if k == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, k - 1):
            yield (first,) + rest


def _connected_from(disc, g: int, q: int, r: int, mu: tuple[int, ...], memo: dict) -> Fraction:
    key = (g, tuple(sorted(mu, reverse=True)))
    if key in memo:
        return memo[key]
    if g < 0:
        return Fraction(0)
    value = disc(HurwitzKey(g, q, r, mu))
    n = len(mu)
    if n > 1:
        for blocks in set_partitions(range(n)):
            k = len(blocks)
            if k == 1:
                continue
            sub = [tuple(mu[i] for i in blk) for blk in blocks]
            if any(sum(s) % q for s in sub):
                continue
            for gs in _compositions(g + k - 1, k):
                term = Fraction(1)
                for gi, s in zip(gs, sub):
                    term *= _connected_from(disc, gi, q, r, s, memo)
                    if not term:
                        break
                value -= term
    memo[key] = value
    return value


_CONNECTED_MEMO: dict = {}


def connected_hurwitz(key: HurwitzKey) -> Fraction:
    """Connected number via inclusion-exclusion over the wedge-space route."""
    memo = _CONNECTED_MEMO.setdefault((key.q, key.r), {})
    return _connected_from(disconnected_hurwitz, key.g, key.q, key.r, key.mu, memo)


def free_energy_coeff(g: int, n: int, q: int, r: int, mu: Sequence[int]) -> Fraction:
    """Coefficient of ``exp(sum mu_i x_i)`` in the free energy ``F_{g,n}``."""
    if len(mu) != n:
        raise ValueError("profile length must equal n")
    return connected_hurwitz(HurwitzKey(g, q, r, tuple(mu)))


# --------------------------------------------------------------------------
# character oracle
# --------------------------------------------------------------------------

def _beta(lam: tuple[int, ...], length: int) -> tuple[int, ...]:
    return tuple(lam[i] + length - 1 - i if i < len(lam) else length - 1 - i
                 for i in range(length))


@lru_cache(maxsize=None)
def _mn(beta: tuple[int, ...], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1
    k, rest = rho[0], rho[1:]
    beads = set(beta)
    total = 0
    for x in beta:
        y = x - k
        if y < 0 or y in beads:
            continue
        height = sum(1 for z in beta if y < z < x)
        new = tuple(sorted((beads - {x}) | {y}, reverse=True))
        total += (-1) ** height * _mn(new, rest)
    return total


def mn_character(lam: Sequence[int], rho: Sequence[int]) -> int:
    """Irreducible character ``chi^lam`` at cycle type ``rho``."""
    lam, rho = make_partition(lam), make_partition(rho)
    if sum(lam) != sum(rho):
        raise ValueError("partitions of different sizes")
    return _mn(_beta(lam, len(lam)), rho)


def _content_power_sum(lam: tuple[int, ...], n: int) -> Fraction:
    # f_n(lam) written with explicit half-integers, independent of fock
    h = Fraction(1, 2)
    return sum(((lam[k - 1] - k + h) ** n - (-k + h) ** n
                for k in range(1, len(lam) + 1)), Fraction(0))


def character_oracle(key: HurwitzKey) -> Fraction:
    b = completed_cycle_count(key)
    if b is None:
        return Fraction(0)
    d, q = key.size, key.q
    k = d // q
    orb = (q,) * k
    total = Fraction(0)
    for lam in partitions(d):
        chi_mu = mn_character(lam, key.mu)
        if not chi_mu:
            continue
        chi_q = mn_character(lam, orb)
        if not chi_q:
            continue
        f = _content_power_sum(lam, key.r + 1) / (key.r + 1)
        total += Fraction(chi_q, q ** k * factorial(k)) * f ** b / factorial(b) * chi_mu
    return total / prod(key.mu)


# --------------------------------------------------------------------------
# transposition-factorization count (q = r = 1)
# --------------------------------------------------------------------------

def _compose(p: tuple[int, ...], s: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p[i] for i in s)


def _cycle_type(p: tuple[int, ...]) -> tuple[int, ...]:
    seen, out = set(), []
    for i in range(len(p)):
        if i in seen:
            continue
        j, c = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            c += 1
        out.append(c)
    return tuple(sorted(out, reverse=True))


def _orbits(p: tuple[int, ...]) -> frozenset:
    seen, blocks = set(), []
    for i in range(len(p)):
        if i in seen:
            continue
        blk, j = set(), i
        while j not in blk:
            blk.add(j)
            j = p[j]
        seen |= blk
        blocks.append(frozenset(blk))
    return frozenset(blocks)


def transposition_count_hurwitz(g: int, mu: Sequence[int], connected: bool = True) -> Fraction:
    """Simple Hurwitz number from counting ``tau_1 ... tau_b sigma = 1``.

    sigma runs over permutations of cycle type mu with cycles labelled by the
    entries of mu; connected numbers keep only transitive tuples.
    """
    mu = tuple(mu)
    d = sum(mu)
    b = 2 * g - 2 + len(mu) + d
    if b < 0:
        return Fraction(0)
    target = tuple(sorted(mu, reverse=True))
    transpositions = []
    for i in range(d):
        for j in range(i + 1, d):
            t = list(range(d))
            t[i], t[j] = j, i
            transpositions.append((tuple(t), i, j))
    states: dict = {}
    for sigma in permutations(range(d)):
        if _cycle_type(sigma) == target:
            key = (sigma, _orbits(sigma))
            states[key] = states.get(key, 0) + 1
    for _ in range(b):
        nxt: dict = {}
        for (perm, orbs), cnt in states.items():
            for t, i, j in transpositions:
                np_ = _compose(t, perm)
                bi = next(o for o in orbs if i in o)
                bj = next(o for o in orbs if j in o)
                no = orbs if bi == bj else (orbs - {bi, bj}) | {bi | bj}
                k2 = (np_, no)
                nxt[k2] = nxt.get(k2, 0) + cnt
        states = nxt
    ident = tuple(range(d))
    count = sum(c for (p, o), c in states.items()
                if p == ident and (not connected or len(o) == 1))
    labelings = prod(factorial(mu.count(m)) for m in set(mu))
    return Fraction(count * labelings, factorial(d) * factorial(b))


__all__ = [
    "HurwitzKey", "completed_cycle_count", "disconnected_hurwitz", "set_partitions",
    "connected_hurwitz", "free_energy_coeff", "mn_character", "character_oracle",
    "transposition_count_hurwitz",
]
