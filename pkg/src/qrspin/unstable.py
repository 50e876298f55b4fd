"""Unstable sectors (0,1) and (0,2) and the spectral-curve series behind them.

The curve is ``X = z exp(-z^(qr))``, ``y = z^q``.  Everything here is exact
rational series arithmetic in ``X`` (one or two variables).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .aop import hurwitz_prefactor
from .hurwitz import HurwitzKey, connected_hurwitz
from .report import Report


# --------------------------------------------------------------------------
# series in X
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class XSeries:
    """Truncated power series ``sum c_k X^k`` with ``k <= order``."""

    coeffs: tuple          # dense, index = exponent
    order: int

    @classmethod
    def from_dict(cls, d: dict, order: int) -> "XSeries":
        dense = [Fraction(0)] * (order + 1)
        for k, v in d.items():
            if 0 <= k <= order:
                dense[k] = Fraction(v)
        return cls(tuple(dense), order)

    @classmethod
    def one(cls, order: int) -> "XSeries":
        return cls.from_dict({0: 1}, order)

    def __getitem__(self, k: int) -> Fraction:
        if k > self.order:
            raise IndexError(f"X^{k} lies beyond truncation order {self.order}")
        return self.coeffs[k] if k >= 0 else Fraction(0)

    def __add__(self, other: "XSeries") -> "XSeries":
        n = min(self.order, other.order)
        return XSeries(tuple(self.coeffs[k] + other.coeffs[k] for k in range(n + 1)), n)

    def __sub__(self, other: "XSeries") -> "XSeries":
        return self + other.scale(-1)

    def scale(self, c) -> "XSeries":
        return XSeries(tuple(v * c for v in self.coeffs), self.order)

    def __mul__(self, other: "XSeries") -> "XSeries":
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[:n + 1]):
            if a:
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return XSeries(tuple(out), n)

    def __pow__(self, e: int) -> "XSeries":
        result = XSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def euler(self) -> "XSeries":
        """``X d/dX``, the derivative in ``x = log X``."""
        return XSeries(tuple(k * c for k, c in enumerate(self.coeffs)), self.order)

    def exp(self) -> "XSeries":
        """exp of a series without constant term."""
        if self.coeffs[0]:
            raise ValueError("exp needs a series with zero constant term")
        total = XSeries.one(self.order)
        term = XSeries.one(self.order)
        for k in range(1, self.order + 1):
            term = (term * self).scale(Fraction(1, k))
            total = total + term
        return total

    def support(self) -> list[int]:
        return [k for k, c in enumerate(self.coeffs) if c]


def z_series(q: int, r: int, order: int) -> XSeries:
    """Lagrange inversion of ``X = z exp(-z^(qr))``."""
    if order < 1:
        raise ValueError("order must be at least 1")
    qr = q * r
    d = {m * qr + 1: Fraction(m * qr + 1) ** (m - 1) / factorial(m)
         for m in range((order - 1) // qr + 1)}
    return XSeries.from_dict(d, order)


def functional_equation_residual(q: int, r: int, order: int) -> XSeries:
    """``z exp(-z^(qr)) - X``; identically zero up to the order when z is right."""
    z = z_series(q, r, order)
    lhs = z * (z ** (q * r)).scale(-1).exp()
    return lhs - XSeries.from_dict({1: 1}, order)


# --------------------------------------------------------------------------
# (0,1)
# --------------------------------------------------------------------------

def f01_coefficient(q: int, r: int, n: int) -> Fraction:
    """Coefficient of ``exp(x (nr+1) q)`` in F_{0,1}."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return q * Fraction(q * (n * r + 1)) ** (n - 2) / factorial(n)


def f01_check(q: int, r: int, N: int) -> Report:
    rep = Report("check f01", {"q": q, "r": r, "N": N})
    special = {q * (n * r + 1): n for n in range(N + 1)}
    for d in range(1, q * (N * r + 1) + 1):
        engine = connected_hurwitz(HurwitzKey(0, q, r, (d,)))
        if d in special:
            n = special[d]
            rep.add(f"n={n} mu={d}", f01_coefficient(q, r, n), engine,
                    f01_coefficient(q, r, n) == engine)
        else:
            rep.add(f"mu={d}", 0, engine, engine == 0)
    return rep


def y_route_check(q: int, r: int, M: int) -> Report:
    """``[X^(q(mr+1))] z^q`` against ``q(mr+1) * f01_coefficient`` (dF = y dx)."""
    rep = Report("check y-route", {"q": q, "r": r, "M": M})
    order = q * (M * r + 1)
    zq = z_series(q, r, order) ** q
    for m in range(M + 1):
        k = q * (m * r + 1)
        closed = q ** m * Fraction(m * r + 1) ** (m - 1) / factorial(m)
        via_f01 = k * f01_coefficient(q, r, m)
        rep.add(f"m={m}", via_f01, zq[k], zq[k] == via_f01 == closed)
    others = [k for k in zq.support() if (k % q or (k // q - 1) % r)]
    rep.add("support", "exponents q(mr+1) only", others or "ok", not others)
    return rep


# --------------------------------------------------------------------------
# (0,2)
# --------------------------------------------------------------------------

def f02_coefficient(q: int, r: int, mu1: int, mu2: int) -> Fraction:
    """Coefficient of ``X1^mu1 X2^mu2`` in F_{0,2}."""
    if mu1 < 1 or mu2 < 1:
        raise ValueError("mu1, mu2 must be positive")
    qr = q * r
    if (mu1 + mu2) % qr:
        return Fraction(0)
    pref = hurwitz_prefactor((mu1, mu2), q, r)
    if mu1 % qr == 0:
        return pref / (mu1 + mu2)
    return qr * pref / (mu1 + mu2)


def f02_check(q: int, r: int, max_total: int) -> Report:
    rep = Report("check f02", {"q": q, "r": r, "max_total": max_total})
    for total in range(2, max_total + 1):
        for mu1 in range(total - 1, (total - 1) // 2, -1):
            mu2 = total - mu1
            closed = f02_coefficient(q, r, mu1, mu2)
            engine = connected_hurwitz(HurwitzKey(0, q, r, (mu1, mu2)))
            rep.add(f"mu=({mu1},{mu2})", closed, engine, closed == engine)
            if mu1 != mu2:
                rep.add(f"mu=({mu2},{mu1}) symmetric", closed,
                        f02_coefficient(q, r, mu2, mu1), closed == f02_coefficient(q, r, mu2, mu1))
    return rep


def dz_power_identity_check(q: int, r: int, i: int, order: int) -> Report:
    """``d/dx (z^i / i)`` for ``i < qr`` and ``d/dx z^(qr)`` against the sums.

    Both right-hand sides are ``sum mu^[mu]/[mu]! X^mu`` over the matching
    residue class of mu mod qr.
    """
    qr = q * r
    if not 1 <= i <= qr:
        raise ValueError("need 1 <= i <= qr")
    rep = Report("check dz-power", {"q": q, "r": r, "i": i, "order": order})
    zi = z_series(q, r, order) ** i
    lhs = zi.euler().scale(Fraction(1, i) if i < qr else 1)
    for mu in range(1, order + 1):
        expected = Fraction(0)
        if (mu - i) % qr == 0:
            f = mu // qr
            expected = Fraction(mu ** f, factorial(f))
        rep.add(f"X^{mu}", expected, lhs[mu], lhs[mu] == expected)
    return rep


# --------------------------------------------------------------------------
# bivariate series and the Bergman kernel
# --------------------------------------------------------------------------

def _bi_mul(a: list, b: list, order: int) -> list:
    """Product of dense triangular arrays ``a[i][j]`` (i + j <= order)."""
    out = [[Fraction(0)] * (order + 1 - i) for i in range(order + 1)]
    nz_b = [(k, l, v) for k in range(order + 1) for l, v in enumerate(b[k]) if v]
    for i in range(order + 1):
        for j, x in enumerate(a[i]):
            if not x:
                continue
            room = order - i - j
            for k, l, v in nz_b:
                if k + l <= room:
                    out[i + k][j + l] += x * v
    return out


def bergman_lhs(q: int, r: int, order: int) -> list:
    """``d1 d2 log((z(X1) - z(X2)) / (X1 - X2))`` up to total degree ``order``."""
    z = z_series(q, r, order + 1)
    # (z1 - z2)/(X1 - X2) = sum_k c_k sum_{a+b=k-1} X1^a X2^b
    w = [[Fraction(0)] * (order + 1 - i) for i in range(order + 1)]
    for k in range(2, order + 2):
        c = z[k]
        if c:
            for a in range(k):
                w[a][k - 1 - a] += c
    # log(1 + w) with w of positive total degree
    logs = [[Fraction(0)] * (order + 1 - i) for i in range(order + 1)]
    power = [row[:] for row in w]
    for j in range(1, order + 1):
        sign = Fraction((-1) ** (j + 1), j)
        for a in range(order + 1):
            for b, v in enumerate(power[a]):
                if v:
                    logs[a][b] += sign * v
        power = _bi_mul(power, w, order)
    return [[a * b * logs[a][b] for b in range(order + 1 - a)] for a in range(order + 1)]


def bergman_check(q: int, r: int, order: int) -> Report:
    if order < 2:
        raise ValueError("order must be at least 2")
    rep = Report("check bergman", {"q": q, "r": r, "order": order})
    lhs = bergman_lhs(q, r, order)
    for a in range(1, order):
        for b in range(1, order + 1 - a):
            expected = a * b * f02_coefficient(q, r, a, b)
            rep.add(f"X1^{a} X2^{b}", expected, lhs[a][b], lhs[a][b] == expected)
    return rep


__all__ = [
    "XSeries", "z_series", "functional_equation_residual", "f01_coefficient",
    "f01_check", "y_route_check", "f02_coefficient", "f02_check",
    "dz_power_identity_check", "bergman_lhs", "bergman_check",
]
