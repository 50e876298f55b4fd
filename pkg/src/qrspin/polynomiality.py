"""Empirical quasi-polynomiality of connected q-orbifold r-spin Hurwitz numbers.

For a fixed residue tuple the normalised number ``P = h / prod(mu^[mu]/[mu]!)``
is sampled on a tensor grid of floors, interpolated exactly, and then checked
on points that were held out of the grid.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from .aop import disconnected_a_correlator, hurwitz_prefactor
from .algebra import lagrange_interpolate
from .hurwitz import HurwitzKey, completed_cycle_count, connected_hurwitz, set_partitions


class InadmissibleResidues(ValueError):
    """The residue tuple admits no covers for the requested (g, n)."""


def admissible_residues(g: int, n: int, q: int, r: int, residues: Sequence[int]) -> int:
    """Floor-independent part of the number of completed cycles.

    ``b = sum [mu_i] + offset`` with ``offset = (2g - 2 + n + sum <mu_i>/q) / r``.
    Raises ``InadmissibleResidues`` when that offset is not an integer.
    """
    residues = tuple(residues)
    if len(residues) != n:
        raise ValueError("need exactly n residues")
    if any(not 0 <= e < q * r for e in residues):
        raise ValueError("residues must lie in [0, qr)")
    total = sum(residues)
    if total % q:
        raise InadmissibleResidues(f"{residues}: sum not divisible by q={q}")
    num = 2 * g - 2 + n + total // q
    if num % r:
        raise InadmissibleResidues(f"{residues}: 2g-2+n+sum/q = {num} not divisible by r={r}")
    return num // r


def admissible_tuples(g: int, n: int, q: int, r: int) -> list[tuple[int, ...]]:
    """All admissible residue tuples, up to reordering (sorted decreasingly)."""
    out = []
    for tup in product(range(q * r), repeat=n):
        if list(tup) != sorted(tup, reverse=True):
            continue
        try:
            admissible_residues(g, n, q, r, tup)
        except InadmissibleResidues:
            continue
        out.append(tup)
    return out


def _block_floor(block_res: Sequence[int], q: int) -> Fraction:
    # smallest u-power of a connected block (genus zero)
    return Fraction(len(block_res) - 2) + Fraction(sum(block_res), q)


def connected_a_correlator(mu: Sequence[int], q: int, r: int, u_power: int,
                           memo: dict | None = None) -> Fraction:
    """Cumulant of A-operator correlators at ``u^u_power``.

    Equals the connected Hurwitz number divided by the usual prefactor.
    """
    memo = {} if memo is None else memo
    mu = tuple(sorted(mu, reverse=True))
    key = (mu, u_power)
    if key in memo:
        return memo[key]
    if sum(mu) % q or u_power % r:
        memo[key] = Fraction(0)
        return memo[key]
    qr = q * r
    value = disconnected_a_correlator(mu, q, r, u_power)
    n = len(mu)
    if n > 1:
        for blocks in set_partitions(range(n)):
            if len(blocks) == 1:
                continue
            sub = [tuple(mu[i] for i in blk) for blk in blocks]
            if any(sum(s) % q for s in sub):
                continue
            lows = [_block_floor([m % qr for m in s], q) for s in sub]
            value -= _split(sub, lows, u_power, q, r, memo)
    memo[key] = value
    return value


def _split(sub, lows, budget, q, r, memo) -> Fraction:
    """Sum over u-power splits ``p_1 + ... + p_k = budget`` of products."""
    if len(sub) == 1:
        if budget < lows[0]:
            return Fraction(0)
        return connected_a_correlator(sub[0], q, r, budget, memo)
    total = Fraction(0)
    rest_low = sum(lows[1:])
    p = -(-lows[0] // 1)
    p += (-p) % r
    while p <= budget - rest_low:
        c = connected_a_correlator(sub[0], q, r, p, memo)
        if c:
            total += c * _split(sub[1:], lows[1:], budget - p, q, r, memo)
        p += r
    return total


def _mus(q: int, r: int, residues, floors) -> tuple[int, ...]:
    mus = tuple(q * r * f + e for f, e in zip(floors, residues))
    if any(m < 1 for m in mus):
        raise ValueError(f"floors {floors} give a non-positive part")
    return mus


def sample_P(g: int, n: int, q: int, r: int, residues: Sequence[int],
             floors: Sequence[int], route: str = "aop") -> Fraction:
    """Connected number divided by ``prod mu_i^[mu_i]/[mu_i]!``.

    ``route="aop"`` reads it off the connected A-operator correlator (fast for
    large parts); ``route="fock"`` divides the wedge-space connected number.
    """
    offset = admissible_residues(g, n, q, r, residues)
    mus = _mus(q, r, residues, floors)
    if route == "fock":
        key = HurwitzKey(g, q, r, mus)
        return connected_hurwitz(key) / hurwitz_prefactor(mus, q, r)
    if route != "aop":
        raise ValueError(f"unknown route {route!r}")
    return connected_a_correlator(mus, q, r, r * offset)


def _sample_job(args) -> Fraction:
    return sample_P(*args)


# --------------------------------------------------------------------------
# multivariate interpolation on tensor grids
# --------------------------------------------------------------------------

def interpolate_tensor(axes: Sequence[Sequence[int]], values: dict) -> dict:
    """Exact polynomial through ``values[point]`` on the grid ``prod(axes)``.

    Returns ``{exponent tuple: coefficient}``.  Works one variable at a time:
    interpolate in the last variable for each prefix, then recurse on the
    resulting coefficient families.
    """
    n = len(axes)
    if n == 0:
        v = values[()]
        return {(): Fraction(v)} if v else {}
    last = list(axes[-1])
    families: dict = {}
    for prefix in product(*axes[:-1]):
        poly = lagrange_interpolate(last, [values[prefix + (x,)] for x in last])
        for k in range(len(last)):
            families.setdefault(k, {})[prefix] = poly[k]
    out: dict = {}
    for k, fam in families.items():
        for exps, c in interpolate_tensor(axes[:-1], fam).items():
            if c:
                out[exps + (k,)] = c
    return out


def evaluate_multi(poly: dict, point: Sequence) -> Fraction:
    total = Fraction(0)
    for exps, c in poly.items():
        term = Fraction(c)
        for x, e in zip(point, exps):
            term *= Fraction(x) ** e
        total += term
    return total


@dataclass
class PolyReport:
    g: int
    n: int
    q: int
    r: int
    residues: tuple
    offset: int
    grid: list
    poly: dict
    holdouts: list = field(default_factory=list)   # (floors, interpolated, sampled)
    symmetric: bool = True

    @property
    def degree_bound(self) -> int:
        return 2 * (2 * self.g - 2 + self.n)

    @property
    def per_variable_degree(self) -> tuple[int, ...]:
        return tuple(max((e[i] for e in self.poly), default=0) for i in range(self.n))

    @property
    def total_degree(self) -> int:
        return max((sum(e) for e in self.poly), default=0)

    @property
    def conjectured_degree(self) -> int:
        return 3 * self.g - 3 + self.n

    @property
    def holdouts_ok(self) -> bool:
        return bool(self.holdouts) and all(a == b for _, a, b in self.holdouts)

    @property
    def ok(self) -> bool:
        return (self.holdouts_ok and self.symmetric
                and all(d <= self.degree_bound for d in self.per_variable_degree))

    def describe(self) -> str:
        terms = []
        for exps, c in sorted(self.poly.items(), reverse=True):
            mono = "*".join(f"n{i + 1}^{e}" if e > 1 else f"n{i + 1}"
                            for i, e in enumerate(exps) if e)
            terms.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(terms) or "0"


def _symmetric(poly: dict, residues: tuple) -> bool:
    n = len(residues)
    for i in range(n):
        for j in range(i + 1, n):
            if residues[i] != residues[j]:
                continue
            for exps, c in poly.items():
                sw = list(exps)
                sw[i], sw[j] = sw[j], sw[i]
                if poly.get(tuple(sw), 0) != c:
                    return False
    return True


def grid_origin(q: int, r: int, residues: Sequence[int]) -> int:
    """Smallest common floor making every part positive."""
    return 0 if all(e > 0 for e in residues) else 1


def verify_polynomiality(g: int, n: int, q: int, r: int, residues: Sequence[int],
                         grid_size: int, holdout_count: int = 2, *, origin: int | None = None,
                         threads: int = 1, route: str = "aop") -> PolyReport:
    """Interpolate P on floors ``{f0..f0+D}^n`` and test it off the grid."""
    residues = tuple(residues)
    if 2 * g - 2 + n <= 0:
        raise ValueError("need 2g - 2 + n > 0")
    offset = admissible_residues(g, n, q, r, residues)
    bound = 2 * (2 * g - 2 + n)
    if grid_size < bound + 2:
        raise ValueError(f"grid size must be at least {bound + 2}")
    f0 = grid_origin(q, r, residues) if origin is None else origin
    axis = list(range(f0, f0 + grid_size + 1))
    points = list(product(axis, repeat=n))
    extra = [tuple(f0 + grid_size + 1 + h + (i * (h + 1)) % 3 for i in range(n))
             for h in range(holdout_count)]
    for pt in points + extra:
        key = HurwitzKey(g, q, r, _mus(q, r, residues, pt))
        # b is integral for every point once the residues are admissible
        assert completed_cycle_count(key) is not None, key
    jobs = [(g, n, q, r, residues, pt, route) for pt in points + extra]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_sample_job, jobs, chunksize=4))
    else:
        results = [_sample_job(j) for j in jobs]
    values = dict(zip(points, results[:len(points)]))
    poly = interpolate_tensor([axis] * n, values)
    holdouts = [(pt, evaluate_multi(poly, pt), val)
                for pt, val in zip(extra, results[len(points):])]
    return PolyReport(g, n, q, r, residues, offset, axis, poly, holdouts,
                      _symmetric(poly, residues))


__all__ = [
    "InadmissibleResidues", "admissible_residues", "admissible_tuples",
    "connected_a_correlator", "sample_P", "interpolate_tensor", "evaluate_multi",
    "PolyReport", "grid_origin", "verify_polynomiality",
]
