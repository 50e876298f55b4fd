"""Charge-zero semi-infinite wedge space.

Basis vectors ``v_lambda`` are keyed by partitions (tuples of positive
integers in non-increasing order).  Half-integers ``i`` are passed around as
``Fraction`` (or anything ``Fraction`` accepts); internally they become
integer positions ``i + 1/2``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import kernels
from .algebra import Poly

Partition = tuple[int, ...]
HALF = Fraction(1, 2)


class EnergyCapError(ArithmeticError):
    """An intermediate vector left the allowed energy window."""


def make_partition(parts: Iterable[int]) -> Partition:
    p = tuple(sorted((int(x) for x in parts), reverse=True))
    if p and p[-1] < 1:
        raise ValueError(f"partition parts must be positive: {p}")
    return p


def energy(lam: Partition) -> int:
    return sum(lam)


def partitions(n: int, max_part: int | None = None):
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def _pos(i) -> int:
    p = Fraction(i) + HALF
    if p.denominator != 1:
        raise ValueError(f"{i} is not a half-integer")
    return int(p)


def _half(p: int) -> Fraction:
    return Fraction(2 * p - 1, 2)


@dataclass(frozen=True)
class FockVector:
    terms: dict = field(default_factory=dict)
    cap: int | None = None

    def __post_init__(self):
        clean = {}
        for lam, c in self.terms.items():
            if c:
                if self.cap is not None and sum(lam) > self.cap:
                    raise EnergyCapError(
                        f"|{lam}| = {sum(lam)} exceeds energy cap {self.cap}")
                clean[lam] = Fraction(c)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def vacuum(cls, cap: int | None = None) -> "FockVector":
        return cls({(): Fraction(1)}, cap)

    @classmethod
    def basis(cls, lam: Sequence[int], cap: int | None = None) -> "FockVector":
        return cls({make_partition(lam): Fraction(1)}, cap)

    def coefficient(self, lam: Sequence[int]) -> Fraction:
        return self.terms.get(make_partition(lam), Fraction(0))

    def vacuum_coefficient(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def _new(self, terms) -> "FockVector":
        return FockVector(terms, self.cap)

    def __add__(self, other: "FockVector") -> "FockVector":
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        cap = self.cap if other.cap is None else (
            other.cap if self.cap is None else max(self.cap, other.cap))
        return FockVector(out, cap)

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + other * -1

    def __mul__(self, c) -> "FockVector":
        return self._new({lam: v * c for lam, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, FockVector) and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self) -> str:
        inner = ", ".join(f"{lam}: {c}" for lam, c in sorted(self.terms.items()))
        return f"FockVector({{{inner}}})"


def _add(out: dict, lam: Partition, c) -> None:
    v = out.get(lam, 0) + c
    if v:
        out[lam] = v
    else:
        out.pop(lam, None)


# --------------------------------------------------------------------------
# operator actions
# --------------------------------------------------------------------------

def apply_E(i, j, v: FockVector) -> FockVector:
    """Projective action of ``E_{i,j}``."""
    pi, pj = _pos(i), _pos(j)
    out: dict = {}
    if pi == pj:
        for lam, c in v.terms.items():
            pos = kernels.positions(lam, len(lam))
            occupied = pi in pos or pi <= -len(lam)
            if pi >= 1 and occupied:
                _add(out, lam, c)
            elif pi <= 0 and not occupied:
                _add(out, lam, -c)
        return v._new(out)
    for lam, c in v.terms.items():
        res = kernels.move(lam, pj, pi)
        if res is not None:
            _add(out, res[0], res[1] * c)
    return v._new(out)


def fn_eigenvalue(lam: Partition, n: int) -> Fraction:
    """``f_n(lam) = sum_k (lam_k - k + 1/2)^n - (-k + 1/2)^n``."""
    return Fraction(kernels.fn_eigen_scaled(lam, n), 2 ** n)


def apply_F(n: int, v: FockVector) -> FockVector:
    return v._new({lam: c * fn_eigenvalue(lam, n) for lam, c in v.terms.items()})


@dataclass(frozen=True)
class BandOperator:
    """``sum_l g(l) E_{l-a, l} + scalar * Id`` with polynomial ``g``."""

    a: int
    g: Poly
    scalar: Fraction = Fraction(0)

    @property
    def energy(self) -> int:
        return self.a


def _band_terms(g: Poly, a: int, lam: Partition):
    if g.is_zero():
        return
    if a == 0:
        plus, minus = kernels.diagonal_support(lam)
        val = sum((g(_half(p)) for p in plus), Fraction(0)) - sum(
            (g(_half(p)) for p in minus), Fraction(0))
        if val:
            yield lam, val
        return
    for new, sign, src in kernels.band_moves(lam, a):
        val = g(_half(src))
        if val:
            yield new, sign * val


def apply_band(op: BandOperator, v: FockVector) -> FockVector:
    out: dict = {}
    for lam, c in v.terms.items():
        for new, val in _band_terms(op.g, op.a, lam):
            _add(out, new, c * val)
        if op.scalar:
            _add(out, lam, c * op.scalar)
    return v._new(out)


def apply_alpha(n: int, v: FockVector) -> FockVector:
    if n == 0:
        raise ValueError("alpha_0 is not used (charge-zero sector)")
    return apply_band(BandOperator(n, Poly.const(1)), v)


# --------------------------------------------------------------------------
# operator words and vacuum expectations
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Alpha:
    n: int

    @property
    def energy(self) -> int:
        return self.n

    def apply(self, v: FockVector) -> FockVector:
        return apply_alpha(self.n, v)


@dataclass(frozen=True)
class F:
    n: int
    energy = 0

    def apply(self, v: FockVector) -> FockVector:
        return apply_F(self.n, v)


@dataclass(frozen=True)
class E:
    i: Fraction
    j: Fraction

    @property
    def energy(self) -> int:
        return int(Fraction(self.j) - Fraction(self.i))

    def apply(self, v: FockVector) -> FockVector:
        return apply_E(self.i, self.j, v)


@dataclass(frozen=True)
class Scalar:
    c: Fraction
    energy = 0

    def apply(self, v: FockVector) -> FockVector:
        return v * self.c


@dataclass(frozen=True)
class Band:
    op: BandOperator

    @property
    def energy(self) -> int:
        return self.op.a

    def apply(self, v: FockVector) -> FockVector:
        return apply_band(self.op, v)


def _as_op(op):
    if isinstance(op, BandOperator):
        return Band(op)
    return op


def apply_word(ops: Sequence, v: FockVector) -> FockVector:
    """Apply ``ops[0] ops[1] ... ops[-1]`` to v (rightmost first)."""
    for op in reversed(ops):
        v = _as_op(op).apply(v)
        if v.is_zero():
            break
    return v


def vev(ops: Sequence, cap: int | None = None) -> Fraction:
    """Vacuum expectation ``<0| ops[0] ... ops[-1] |0>``.

    Operators with nonzero total energy give exactly 0.  If ``cap`` is None
    the cap is the largest energy the word can reach from the vacuum.
    """
    ops = [_as_op(op) for op in ops]
    if sum(op.energy for op in ops) != 0:
        return Fraction(0)
    if cap is None:
        level = cap = 0
        for op in reversed(ops):
            level -= op.energy
            cap = max(cap, level)
    return apply_word(ops, FockVector.vacuum(cap)).vacuum_coefficient()


def commutator_rhs(g: Poly, a: int, f: Poly, b: int) -> BandOperator:
    """Right-hand side of ``[sum g_l E_{l-a,l}, sum f_k E_{k-b,k}]``.

    The band part is ``g(l-b) f(l) - g(l) f(l-a)`` at shift ``a+b``.  When
    ``a + b = 0`` the central term is ``+sum_{l=1/2}^{a-1/2} g_l f_{l-a}``
    for ``a > 0`` and ``-sum_{l=1/2-b}^{-1/2} g_l f_{l+b}`` for ``b > 0``.
    """
    band = g.shift(-b) * f - g * f.shift(-a)
    scalar = Fraction(0)
    if a + b == 0 and a > 0:
        scalar = sum((g(_half(p)) * f(_half(p) - a) for p in range(1, a + 1)), Fraction(0))
    elif a + b == 0 and b > 0:
        scalar = -sum((g(_half(p)) * f(_half(p) + b) for p in range(1 - b, 1)), Fraction(0))
    return BandOperator(a + b, band, scalar)


__all__ = [
    "Partition", "EnergyCapError", "make_partition", "energy", "partitions",
    "FockVector", "apply_E", "fn_eigenvalue", "apply_F", "BandOperator",
    "apply_band", "apply_alpha", "Alpha", "F", "E", "Scalar", "Band",
    "apply_word", "vev", "commutator_rhs",
]
