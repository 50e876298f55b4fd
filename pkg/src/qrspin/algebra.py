"""Exact arithmetic substrate.

Dense univariate polynomials and rational functions over ``Fraction``,
truncated Laurent series in a formal variable, integer division helpers,
the backward q-difference calculus and Stirling polynomials.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gcd
from typing import Iterable, Sequence

Number = int | Fraction


# --------------------------------------------------------------------------
# integer division
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class FloorFracPair:
    floor: int
    frac: int
    base: int

    def value(self) -> int:
        return self.base * self.floor + self.frac


def decompose(mu: int, a: int) -> FloorFracPair:
    """Split ``mu = a*floor + frac`` with ``0 <= frac < a``."""
    if a < 1:
        raise ValueError("base must be positive")
    fl, fr = divmod(mu, a)
    return FloorFracPair(fl, fr, a)


# --------------------------------------------------------------------------
# univariate polynomials
# --------------------------------------------------------------------------

def _strip(coeffs: Iterable[Number]) -> tuple[Fraction, ...]:
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Poly:
    """Dense polynomial with ``Fraction`` coefficients, lowest degree first.

    Instances are immutable and hashable.  The zero polynomial has an empty
    coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        object.__setattr__(self, "coeffs", _strip(coeffs))

    def __setattr__(self, *_):
        raise AttributeError("Poly is immutable")

    # constructors
    @classmethod
    def const(cls, c: Number) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> "Poly":
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[Number]) -> "Poly":
        p = cls.const(1)
        for r in roots:
            p = p * cls((-Fraction(r), 1))
        return p

    # basic protocol
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*x^{k}")
        return "Poly(" + " + ".join(terms) + ")"

    # arithmetic
    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Poly":
        return _as_poly(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power")
        result = Poly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c: Number) -> "Poly":
        return self * Fraction(c)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            if c:
                quot[k - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * b
        return Poly(quot), Poly(rem[:dq] if dq > 0 else [])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, h: Number) -> "Poly":
        """Return ``p(x + h)``."""
        h = Fraction(h)
        out = [Fraction(0)] * len(self.coeffs)
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            hp = Fraction(1)
            for j in range(k, -1, -1):
                out[j] += c * comb(k, j) * hp
                hp *= h
        return Poly(out)

    def compose_linear(self, a: Number, b: Number = 0) -> "Poly":
        """Return ``p(a*x + b)``."""
        scaled = Poly(c * Fraction(a) ** k for k, c in enumerate(self.coeffs))
        return scaled.shift(Fraction(b) / Fraction(a)) if a else Poly.const(self(b))

    def derivative(self) -> "Poly":
        return Poly(k * c for k, c in enumerate(self.coeffs) if k)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * (1 / self.coeffs[-1])

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)


def _as_poly(p) -> Poly:
    if isinstance(p, Poly):
        return p
    if isinstance(p, (int, Fraction)):
        return Poly.const(p)
    raise TypeError(f"cannot treat {type(p).__name__} as Poly")


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


def lagrange_interpolate(xs: Sequence[Number], ys: Sequence[Number]) -> Poly:
    """Unique polynomial of degree < len(xs) through the given points."""
    if len(xs) != len(ys):
        raise ValueError("length mismatch")
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    # Newton divided differences
    xs = [Fraction(x) for x in xs]
    dd = [Fraction(y) for y in ys]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    p = Poly.const(dd[-1]) if n else Poly()
    for i in range(n - 2, -1, -1):
        p = p * Poly((-xs[i], 1)) + dd[i]
    return p


# --------------------------------------------------------------------------
# difference calculus
# --------------------------------------------------------------------------

def delta_q(f: Poly, q: int) -> Poly:
    """Backward difference ``f(l) - f(l - q)``."""
    return f - f.shift(-q)


def delta_q_power(f: Poly, q: int, t: int) -> Poly:
    if t < 0:
        raise ValueError("t must be non-negative")
    if t > f.degree:
        return Poly()
    for _ in range(t):
        f = delta_q(f, q)
    return f


def normalized_delta(f: Poly, q: int, t: int) -> Poly:
    """``Delta_q^t f / (q^t t!)``."""
    return delta_q_power(f, q, t) * Fraction(1, q ** t * factorial(t))


@lru_cache(maxsize=None)
def q_poly(mu: int, r: int) -> Poly:
    """``((l+mu)^(r+1) - l^(r+1)) / (mu (r+1))``, monic of degree r in l."""
    return Poly(Fraction(comb(r + 1, r - k + 1) * mu ** (r - k), r + 1)
                for k in range(r + 1))


@lru_cache(maxsize=None)
def stirling_second(n: int, k: int) -> int:
    if n < 0 or k < 0:
        return 0
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling_second(n - 1, k) + stirling_second(n - 1, k - 1)


@lru_cache(maxsize=None)
def stirling_poly(t: int) -> Poly:
    """The degree-2t polynomial ``f_t`` with ``f_t(x) = S(x+t, x)``.

    Built from ``f_t(x) - f_t(x-1) = x f_{t-1}(x)`` and ``f_t(0) = [t == 0]``,
    by summing the right-hand side and interpolating on 2t+1 nodes.
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    if t == 0:
        return Poly.const(1)
    prev = stirling_poly(t - 1)
    values = [Fraction(0)]
    for x in range(1, 2 * t + 1):
        values.append(values[-1] + x * prev(x))
    return lagrange_interpolate(range(2 * t + 1), values)


def falling_binomial_poly(shift: int, a: int) -> Poly:
    """``binom(x + shift, a)`` as a polynomial in x."""
    p = Poly.const(Fraction(1, factorial(a)))
    for j in range(a):
        p = p * Poly((shift - j, 1))
    return p


@lru_cache(maxsize=None)
def diff_coeff(p: int, m: int, a: int, q: int) -> Poly:
    """Coefficient of ``l^a`` in ``Delta_q^(x+m) l^(p+x) / (q^(x+m) (x+m)!)``.

    Equals ``(-q)^(p-m-a) binom(p+x, a) S(x+p-a, x+m)``, a polynomial in x of
    degree ``2p - a - 2m``.  Identically zero when ``a > p - m``.
    """
    t = p - m - a
    if a < 0 or t < 0:
        return Poly()
    stir = stirling_poly(t).shift(m)
    return falling_binomial_poly(p, a) * stir * (-q) ** t


def pochhammer_inv(floor_mu: int, s: int) -> Fraction:
    """``1 / (floor_mu + 1)_s`` continued to all integers s.

    For negative s this is ``Gamma(floor_mu+1) / Gamma(floor_mu+1+s)``, which
    vanishes once ``s < -floor_mu``.
    """
    if s >= 0:
        d = 1
        for k in range(1, s + 1):
            d *= floor_mu + k
        return Fraction(1, d)
    if s < -floor_mu:
        return Fraction(0)
    n = 1
    for k in range(floor_mu + 1 + s, floor_mu + 1):
        n *= k
    return Fraction(n)


def pochhammer_inv_rf(s: int) -> "RationalFunction":
    """``1/(nu+1)_s`` as a rational function of nu (any integer s)."""
    if s >= 0:
        return RationalFunction(Poly.const(1), Poly.from_roots(-k for k in range(1, s + 1)))
    return RationalFunction(Poly.from_roots(-k for k in range(s + 1, 1)), Poly.const(1))


# --------------------------------------------------------------------------
# rational functions
# --------------------------------------------------------------------------

class RationalFunction:
    """Quotient of two polynomials, kept reduced with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly | Number, den: Poly | Number = 1):
        num, den = _as_poly(num), _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = Poly(), Poly.const(1)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
            lc = den.lead
            num, den = num * (1 / lc), den * (1 / lc)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *_):
        raise AttributeError("RationalFunction is immutable")

    @staticmethod
    def _coerce(o) -> "RationalFunction":
        if isinstance(o, RationalFunction):
            return o
        return RationalFunction(_as_poly(o))

    def __add__(self, other):
        o = self._coerce(other)
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalFunction(self.num * other, self.den)
        o = self._coerce(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / d

    def __repr__(self):
        return f"RationalFunction({self.num!r} / {self.den!r})"

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def pole_order(self, pole: Number) -> int:
        k, d = 0, self.den
        while d.degree > 0 and d(pole) == 0:
            d = d.divmod(Poly((-Fraction(pole), 1)))[0]
            k += 1
        return k

    def is_squarefree_den(self) -> bool:
        return poly_gcd(self.den, self.den.derivative()).degree <= 0


def residue_at(f: RationalFunction, pole: Number) -> Fraction:
    """Residue of f at a point where it has at most a simple pole."""
    order = f.pole_order(pole)
    if order == 0:
        return Fraction(0)
    if order > 1:
        raise ValueError(f"pole of order {order} at {pole}")
    return f.num(Fraction(pole)) / f.den.derivative()(Fraction(pole))


# --------------------------------------------------------------------------
# truncated Laurent series in u
# --------------------------------------------------------------------------

class USeries:
    """Truncated Laurent series ``sum c_k u^k`` for ``k <= order``.

    Coefficients above the truncation order are unknown and never exposed.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: dict[int, Number] | None = None, order: int = 0):
        self.order = order
        self.coeffs = {k: Fraction(v) for k, v in (coeffs or {}).items()
                       if v and k <= order}

    @property
    def valuation(self) -> int | None:
        return min(self.coeffs) if self.coeffs else None

    def __getitem__(self, k: int) -> Fraction:
        if k > self.order:
            raise IndexError(f"u^{k} lies beyond truncation order {self.order}")
        return self.coeffs.get(k, Fraction(0))

    def __add__(self, other: "USeries") -> "USeries":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return USeries(out, min(self.order, other.order))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return USeries({k: v * other for k, v in self.coeffs.items()}, self.order)
        vs = self.valuation if self.coeffs else 0
        vo = other.valuation if other.coeffs else 0
        order = min(self.order + vo, other.order + vs)
        out: dict[int, Fraction] = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                if i + j <= order:
                    out[i + j] = out.get(i + j, 0) + a * b
        return USeries(out, order)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, USeries) and self.order == other.order
                and self.coeffs == other.coeffs)

    def __repr__(self):
        body = " + ".join(f"{v}*u^{k}" for k, v in sorted(self.coeffs.items()))
        return f"USeries({body or 0}; O(u^{self.order + 1}))"


__all__ = [
    "FloorFracPair", "decompose", "Poly", "poly_gcd", "lagrange_interpolate",
    "delta_q", "delta_q_power", "normalized_delta", "q_poly", "stirling_second",
    "stirling_poly", "falling_binomial_poly", "diff_coeff", "pochhammer_inv",
    "pochhammer_inv_rf", "RationalFunction", "residue_at", "USeries",
]
