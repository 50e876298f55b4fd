"""A-operators: conjugated alpha-operators carrying the polynomial part.

A table ``ATermTable`` stores an operator as a truncated series in ``u``
whose coefficients are finite sums of bands ``sum_l c(l) E_{l + base - q*i, l}``
(keyed by ``(u_power, i)``) plus multiples of the identity.  ``base`` is
the residue mod q of the alpha-index being conjugated.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd
from typing import Iterable, Sequence

from . import kernels
from .algebra import Poly, decompose, pochhammer_inv, q_poly
from .hurwitz import HurwitzKey, _disconnected, completed_cycle_count


def general_q_poly(m: int, r: int) -> Poly:
    """``((l+m)^(r+1) - l^(r+1)) / (m (r+1))`` for any nonzero integer m."""
    if m > 0:
        return q_poly(m, r)
    lp = Poly((0, 1))
    return ((lp + m) ** (r + 1) - lp ** (r + 1)) * Fraction(1, m * (r + 1))


@dataclass
class ATermTable:
    q: int
    r: int
    eta: int
    base: int
    entries: dict = field(default_factory=dict)   # (u_power, i) -> Poly in l
    scalars: dict = field(default_factory=dict)   # u_power -> Fraction
    u_order: int = 0

    def shift(self, i: int) -> int:
        """Band shift ``a`` for offset i (the entry is ``sum c(l) E_{l-a,l}``)."""
        return self.q * i - self.base

    def u_powers(self) -> list[int]:
        return sorted({k[0] for k in self.entries} | set(self.scalars))

    def offsets(self, u_power: int) -> list[int]:
        return sorted(i for (p, i) in self.entries if p == u_power)

    def add(self, u_power: int, i: int, poly: Poly) -> None:
        if poly.is_zero():
            return
        key = (u_power, i)
        cur = self.entries.get(key)
        new = poly if cur is None else cur + poly
        if new.is_zero():
            self.entries.pop(key, None)
        else:
            self.entries[key] = new

    def add_scalar(self, u_power: int, c: Fraction) -> None:
        v = self.scalars.get(u_power, 0) + c
        if v:
            self.scalars[u_power] = Fraction(v)
        else:
            self.scalars.pop(u_power, None)

    def by_shift(self) -> dict:
        """``a -> [(u_power, poly), ...]``."""
        out: dict = {}
        for (p, i), poly in self.entries.items():
            out.setdefault(self.shift(i), []).append((p, poly))
        return out


def _int_shift(coeffs: list, h: int) -> list:
    """Integer Taylor shift: coefficients of ``F(y + h)``."""
    out = list(coeffs)
    n = len(out)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] += h * out[j + 1]
    return out


def _difference_tower(f: Poly, q: int, tmax: int) -> list[Poly]:
    """``[Delta_q^t f / (q^t t!) for t = 0..tmax]``.

    Works on the integer polynomial ``F(y) = D f(y/2)`` so that each backward
    difference is a pure integer Taylor shift by ``-2q``.
    """
    coeffs = f.coeffs
    den = 1
    for k, c in enumerate(coeffs):
        den = den * c.denominator // gcd(den, c.denominator)
    big = [int(c * den) << (len(coeffs) - 1 - k) for k, c in enumerate(coeffs)]
    scale = den << max(len(coeffs) - 1, 0)      # F(y) = scale * f(y/2)
    out = []
    norm = 1
    for t in range(tmax + 1):
        if t:
            norm *= q * t
        if not any(big):
            out.append(Poly())
        else:
            out.append(Poly(Fraction(c << k, scale * norm) for k, c in enumerate(big)))
        shifted = _int_shift(big, -2 * q)
        big = [a - b for a, b in zip(big, shifted)]
    return out


def conjugation_O(mu: int, q: int, r: int, u_order: int) -> ATermTable:
    """``exp(u^r F_{r+1}/(r+1)) alpha_{-mu} exp(-u^r F_{r+1}/(r+1))``."""
    fq = decompose(mu, q)
    tab = ATermTable(q, r, mu % (q * r), fq.frac, u_order=u_order)
    Q = q_poly(mu, r)
    for s in range(u_order // r + 1):
        tab.add(r * s, -fq.floor, Q ** s * Fraction(mu ** s, factorial(s)))
    return tab


@lru_cache(maxsize=None)
def _a_operator(mu: int, q: int, r: int, u_order: int) -> ATermTable:
    qr = q * r
    fl = mu // qr
    fq = decompose(mu, q)
    tab = ATermTable(q, r, mu % qr, fq.frac, u_order=u_order)
    Q = q_poly(mu, r)
    s = -fl
    while r * s <= u_order:
        e = s + fl
        pre = pochhammer_inv(fl, s) / mu * (Fraction(mu) ** s)
        Qe = Q ** e
        tower = _difference_tower(Qe, q, r * e)
        for t, d in enumerate(tower):
            tab.add(r * s, t - fq.floor, d * pre)
        if fq.frac == 0:
            T = fq.floor - 1
            if T <= r * e:
                dT = tower[T] * Fraction(1, q * fq.floor)
                val = sum((dT(Fraction(1, 2) - j) for j in range(1, q + 1)), Fraction(0))
                tab.add_scalar(r * s, val * pre)
        s += 1
    return tab


def a_operator(mu: int, q: int, r: int, u_order: int) -> ATermTable:
    """Table of the A-operator for a concrete positive integer ``mu``.

    u-powers run from ``-r*[mu]`` to ``u_order``.
    """
    if mu < 1:
        raise ValueError("mu must be positive")
    return _a_operator(mu, q, r, u_order)


@lru_cache(maxsize=None)
def _a_inverse(lam: int, q: int, r: int, u_order: int) -> ATermTable:
    qr = q * r
    fl = lam // qr
    base = (-lam) % q
    tab = ATermTable(q, r, lam % qr, base, u_order=u_order)
    Qm = general_q_poly(-lam, r) * -1          # ((l-lam)^(r+1) - l^(r+1)) / (lam (r+1))
    s = 0
    while r * (s + fl) <= u_order:
        pre = Fraction(lam ** (s + fl + 1), factorial(s) * factorial(fl))
        tower = _difference_tower(Qm ** s, q, r * s)
        for t, d in enumerate(tower):
            # E_{l - lam - q t, l} = E_{l + base - q i, l}
            i = t + (lam + base) // q
            tab.add(r * (s + fl), i, d * pre)
        s += 1
    return tab


def a_inverse(lam: int, q: int, r: int, u_order: int) -> ATermTable:
    if lam < 1:
        raise ValueError("argument must be positive")
    return _a_inverse(lam, q, r, u_order)


def compose_matrices(left: ATermTable, right: ATermTable, u_order: int) -> dict:
    """Product of the band parts as matrices acting on the one-particle space.

    Returns ``{(u_power, shift): Poly}`` for ``sum_k c(k) E_{k-shift, k}``.
    Identity parts are ignored (they come from the central extension).
    """
    out: dict = {}
    for (pl, il), gl in left.entries.items():
        al = left.shift(il)
        for (pr, ir), gr in right.entries.items():
            p = pl + pr
            if p > u_order:
                continue
            ar = right.shift(ir)
            # E_{l-al,l} E_{k-ar,k} = delta_{l,k-ar} E_{k-ar-al,k}
            term = gl.shift(-ar) * gr
            key = (p, al + ar)
            cur = out.get(key, Poly()) + term
            if cur.is_zero():
                out.pop(key, None)
            else:
                out[key] = cur
    return out


# --------------------------------------------------------------------------
# correlators
# --------------------------------------------------------------------------

def _half(p: int) -> Fraction:
    return Fraction(2 * p - 1, 2)


class _Evaluator:
    """Values of polynomials at half-integer positions ``p - 1/2``.

    Each polynomial is rescaled once to integer coefficients in ``y = 2l``,
    so evaluation is an integer Horner scheme followed by one division.
    """

    def __init__(self):
        self.cache: dict = {}
        self.scaled: dict = {}

    def _scaled(self, poly: Poly):
        key = id(poly)
        hit = self.scaled.get(key)
        if hit is None or hit[0] is not poly:
            coeffs = poly.coeffs
            den = 1
            for c in coeffs:
                den = den * c.denominator // gcd(den, c.denominator)
            top = len(coeffs) - 1
            ints = [int(c * den) << (top - k) for k, c in enumerate(coeffs)]
            hit = (poly, ints, den << max(top, 0))
            self.scaled[key] = hit
        return hit

    def __call__(self, poly: Poly, p: int) -> Fraction:
        key = (id(poly), p)
        v = self.cache.get(key)
        if v is None:
            _, ints, scale = self._scaled(poly)
            y = 2 * p - 1
            acc = 0
            for c in reversed(ints):
                acc = acc * y + c
            v = Fraction(acc, scale)
            self.cache[key] = v
        return v


def _apply_table(tab: ATermTable, vec: dict, max_power: int, ev: _Evaluator,
                 cap: int, prune: tuple | None = None) -> dict:
    """Apply a table to ``{parts: {u_power: coeff}}`` truncating at max_power.

    ``prune = (u_total, q, slack_left)`` drops terms that the operators still
    to the left cannot bring back to the vacuum: an operator term at u-power p
    lowers the energy by at most ``q p - slack`` (see ``lowering_slack``), so a
    state of energy e at power p survives only if
    ``q (u_total - p) >= e + slack_left``.
    """
    out: dict = {}
    shifts = tab.by_shift()

    if prune is None:
        def limit(energy):
            return max_power
    else:
        u_total, q, slack = prune

        def limit(energy):
            return min(max_power, u_total - (-(-(energy + slack) // q)))

    def put(parts, lim, val, p_op, series):
        slot = out.get(parts)
        if slot is None:
            slot = out[parts] = {}
        for p_w, c_w in series.items():
            p = p_op + p_w
            if p <= lim:
                slot[p] = slot.get(p, 0) + val * c_w

    for parts, series in vec.items():
        low = min(series)
        energy = sum(parts)
        lim0 = limit(energy)
        for p_op, c_op in tab.scalars.items():
            if p_op + low <= lim0:
                put(parts, lim0, c_op, p_op, series)
        for a, terms in shifts.items():
            lim = limit(energy - a)
            terms = [(p, g) for p, g in terms if p + low <= lim]
            if not terms:
                continue
            if a == 0:
                plus, minus = kernels.diagonal_support(parts)
                for p_op, g in terms:
                    val = sum((ev(g, x) for x in plus), Fraction(0)) - sum(
                        (ev(g, x) for x in minus), Fraction(0))
                    if val:
                        put(parts, lim, val, p_op, series)
                continue
            if energy - a > cap:
                raise ArithmeticError("energy cap exceeded")
            for new, sign, src in kernels.band_moves(parts, a):
                for p_op, g in terms:
                    val = ev(g, src)
                    if val:
                        put(new, lim, -val if sign < 0 else val, p_op, series)
    cleaned = {}
    for parts, slot in out.items():
        slot = {p: c for p, c in slot.items() if c}
        if slot:
            cleaned[parts] = slot
    return cleaned


def lowering_slack(tab: ATermTable) -> int:
    """Largest c with ``shift <= q * u_power - c`` for every term of the table.

    For A-operators this is ``<mu>_{qr}`` unless an identity part at negative
    u-power forces it lower.
    """
    q = tab.q
    vals = [q * p - tab.shift(i) for (p, i) in tab.entries]
    vals += [q * p for p in tab.scalars]
    return min(vals) if vals else 0


def _vacuum_pairing(tab: ATermTable, vec: dict, u_power: int, ev: _Evaluator) -> Fraction:
    """``<0| tab |vec>`` at ``u^u_power``."""
    total = Fraction(0)
    vac = vec.get((), {})
    for p_op, c in tab.scalars.items():
        total += c * vac.get(u_power - p_op, 0)
    shifts = tab.by_shift()
    for parts, series in vec.items():
        if not parts:
            continue
        hook = kernels.hook_position(parts)
        if hook is None:
            continue
        src, dst, sign = hook
        a = dst - src
        for p_op, g in shifts.get(a, ()):
            c_w = series.get(u_power - p_op)
            if c_w:
                total += sign * ev(g, dst) * c_w
    return total


def correlator_series(tables: Sequence[ATermTable], min_powers: Sequence[int],
                      u_power: int, ev: _Evaluator | None = None) -> Fraction:
    """Coefficient of ``u^u_power`` in ``<tables[0] ... tables[-1]>``.

    ``min_powers[k]`` is the lowest u-power present in ``tables[k]``.
    """
    ev = ev or _Evaluator()
    n = len(tables)
    cap = 0
    vec: dict = {(): {0: Fraction(1)}}
    for k in range(n - 1, 0, -1):
        budget = u_power - sum(min_powers[:k])
        cap += max(0, max((-tables[k].shift(i) for (_, i) in tables[k].entries), default=0))
        prune = (u_power, tables[k].q, sum(lowering_slack(t) for t in tables[:k]))
        vec = _apply_table(tables[k], vec, budget, ev, cap, prune)
        if not vec:
            return Fraction(0)
    return _vacuum_pairing(tables[0], vec, u_power, ev)


def floor_qr(mu: int, q: int, r: int) -> int:
    return mu // (q * r)


def disconnected_a_correlator(mu: Sequence[int], q: int, r: int, u_power: int) -> Fraction:
    """``[u^u_power] < prod_i A(u, mu_i) >``."""
    mu = tuple(mu)
    mins = [-r * floor_qr(m, q, r) for m in mu]
    tables = []
    for k, m in enumerate(mu):
        order = u_power - (sum(mins) - mins[k])
        if order < mins[k]:
            return Fraction(0)
        tables.append(a_operator(m, q, r, order))
    return correlator_series(tables, mins, u_power)


def hurwitz_prefactor(mu: Sequence[int], q: int, r: int) -> Fraction:
    """``prod mu_i^[mu_i] / [mu_i]!`` with ``[.]`` the quotient by qr."""
    out = Fraction(1)
    for m in mu:
        f = floor_qr(m, q, r)
        out *= Fraction(m ** f, factorial(f))
    return out


def hurwitz_series_coefficient(mu: Sequence[int], q: int, r: int, power: int) -> Fraction:
    """``[u^power] H^{bullet}(mu, u)`` straight from the wedge-space vev."""
    if power % r or power < 0 or sum(mu) % q:
        return Fraction(0)
    return _disconnected(q, r, power // r, tuple(sorted(mu, reverse=True)))


@dataclass
class RouteReport:
    mu: tuple
    q: int
    r: int
    rows: list            # (u_power, hurwitz_route, a_operator_route)

    @property
    def ok(self) -> bool:
        return all(h == a for _, h, a in self.rows)


def verify_hurw_aop(mu: Sequence[int], q: int, r: int, max_u: int,
                    corrupt: bool = False) -> RouteReport:
    """Compare both sides of the A-operator representation power by power.

    With ``corrupt`` set, the A-route values are perturbed (harness self-test).
    """
    mu = tuple(mu)
    low = -r * sum(floor_qr(m, q, r) for m in mu)
    pref = hurwitz_prefactor(mu, q, r)
    rows = []
    for p in range(low, max_u + 1):
        lhs = hurwitz_series_coefficient(mu, q, r, p - low) / pref
        rhs = disconnected_a_correlator(mu, q, r, p)
        if corrupt and p == low:
            rhs += 1
        rows.append((p, lhs, rhs))
    return RouteReport(mu, q, r, rows)



# --------------------------------------------------------------------------
# symbolic floor: coefficients as rational functions of nu = [mu]
# --------------------------------------------------------------------------

def _nu_poly(coeffs) -> Poly:
    return Poly(coeffs)


@lru_cache(maxsize=None)
def _q_expansion(eta: int, q: int, r: int, s: int, a: int) -> Poly:
    """Coefficient of ``l^(r(nu+s) - a)`` in ``Q_mu(l)^(nu+s)`` as a polynomial in nu.

    Sums over partitions lam of a with parts at most r of
    ``falling(nu+s, len(lam)) / prod(m_j!) * prod binom(r+1, lam_i+1)/(r+1)``,
    times ``mu^a`` where ``mu = q r nu + eta``.
    """
    from .fock import partitions
    from math import comb

    mu = Poly((eta, q * r))
    total = Poly()
    for lam in partitions(a, r):
        mult = Fraction(1)
        for part in set(lam):
            mult /= factorial(lam.count(part))
        for part in lam:
            mult *= Fraction(comb(r + 1, part + 1), r + 1)
        falling = Poly.from_roots(j - s for j in range(len(lam)))
        total = total + falling * mult
    return total * mu ** a


@lru_cache(maxsize=None)
def symbolic_entry(eta: int, q: int, r: int, s: int, i: int) -> tuple:
    """Coefficients (by power of l) of the entry at ``(u^(rs), offset i)``.

    Each coefficient is a ``RationalFunction`` of nu; together they describe
    the band ``sum_l c(l) E_{l + <eta>_q - q i, l}`` of the operator with
    ``mu = q r nu + eta``.
    """
    from .algebra import RationalFunction, diff_coeff, pochhammer_inv_rf

    ip = i + eta // q
    top = r * s - ip
    if top < 0:
        return ()
    mu = Poly((eta, q * r))
    pre = pochhammer_inv_rf(s) * RationalFunction(Poly.const(1), mu) * _mu_power(eta, q, r, s)
    out = []
    for k in range(top + 1):
        acc = Poly()
        for a in range(top - k + 1):
            c = diff_coeff(r * s - a, ip, k, q)
            if c.is_zero():
                continue
            acc = acc + c.compose_linear(r) * _q_expansion(eta, q, r, s, a)
        out.append(pre * RationalFunction(acc))
    return tuple(out)


def _mu_power(eta: int, q: int, r: int, s: int):
    from .algebra import RationalFunction

    mu = Poly((eta, q * r))
    if s >= 0:
        return RationalFunction(mu ** s)
    return RationalFunction(Poly.const(1), mu ** (-s))


@lru_cache(maxsize=None)
def symbolic_scalar(eta: int, q: int, r: int, s: int):
    """Identity-part coefficient at ``u^(rs)`` as a rational function of nu."""
    from .algebra import RationalFunction, diff_coeff, pochhammer_inv_rf

    if eta % q:
        return RationalFunction(0)
    m = eta // q - 1
    top = r * s - m
    if top < 0:
        return RationalFunction(0)
    mu = Poly((eta, q * r))
    acc = Poly()
    for k in range(top + 1):
        powsum = sum((Fraction(1, 2) - j) ** k for j in range(1, q + 1))
        if not powsum:
            continue
        for a in range(top - k + 1):
            c = diff_coeff(r * s - a, m, k, q)
            if c.is_zero():
                continue
            acc = acc + c.compose_linear(r) * _q_expansion(eta, q, r, s, a) * powsum
    pre = pochhammer_inv_rf(s) * RationalFunction(Poly.const(1), mu ** 2) * _mu_power(eta, q, r, s)
    return pre * RationalFunction(acc)


def evaluate_entry(entry: tuple, l) :
    """``sum_k entry[k] * l^k`` (a RationalFunction of nu)."""
    from .algebra import RationalFunction

    total = RationalFunction(0)
    lp = Fraction(1)
    for c in entry:
        if not c.is_zero():
            total = total + c * lp
        lp *= l
    return total


def symbolic_a_operator(eta: int, q: int, r: int, u_order: int,
                        offsets: Iterable[int]) -> ATermTable:
    """Table with RationalFunction coefficients for u-powers ``0..u_order``.

    Only non-negative s are built (the only ones a leftmost operator can
    use); entries are tuples of coefficients indexed by the power of l.
    """
    if not 0 <= eta < q * r:
        raise ValueError("eta must lie in [0, qr)")
    tab = ATermTable(q, r, eta, eta % q, u_order=u_order)
    offsets = list(offsets)
    for s in range(u_order // r + 1):
        for i in offsets:
            e = symbolic_entry(eta, q, r, s, i)
            if any(not c.is_zero() for c in e):
                tab.entries[(r * s, i)] = e
        sc = symbolic_scalar(eta, q, r, s)
        if not sc.is_zero():
            tab.scalars[r * s] = sc
    return tab


def _concrete_tail(mus: Sequence[int], q: int, r: int, budget: int) -> dict:
    """``A(mu_2) ... A(mu_n)|0>`` as ``{parts: {u_power: coeff}}`` up to budget."""
    vec: dict = {(): {0: Fraction(1)}}
    if not mus:
        return vec
    mins = [-r * floor_qr(m, q, r) for m in mus]
    ev = _Evaluator()
    cap = sum(mus) + q * r * (budget + 1)
    for k in range(len(mus) - 1, -1, -1):
        # operators further left (other than the symbolic one) only add >= mins
        b = budget - sum(mins[:k])
        tab = a_operator(mus[k], q, r, b - sum(mins[k + 1:]))
        vec = _apply_table(tab, vec, b, ev, cap)
        if not vec:
            break
    return vec


def symbolic_correlator(residues: Sequence[int], floors: Sequence[int], q: int, r: int,
                        u_power: int):
    """``[u^u_power] < A(mu_1) ... A(mu_n) >`` as a RationalFunction of nu = [mu_1].

    ``residues`` are the classes of all mu_i mod qr; ``floors`` fix [mu_2..mu_n].
    """
    from .algebra import RationalFunction

    residues = tuple(residues)
    floors = tuple(floors)
    qr = q * r
    if len(floors) != len(residues) - 1:
        raise ValueError("need one floor for each of mu_2..mu_n")
    if any(not 0 <= e < qr for e in residues):
        raise ValueError("residues must lie in [0, qr)")
    if sum(residues) % q:
        raise ValueError(f"inadmissible residues {residues}: sum not divisible by q")
    mus = [qr * f + e for f, e in zip(floors, residues[1:])]
    if any(m < 1 for m in mus):
        raise ValueError("all mu_i must be positive")
    eta = residues[0]
    base = eta % q
    # band entries of the symbolic factor need s >= 0, its identity part s >= -1,
    # and the tail reaches down to -r*sum[mu_i]
    vec = _concrete_tail(mus, q, r, u_power + r)
    s_max = (u_power + r * sum(floor_qr(m, q, r) for m in mus)) // r
    total = RationalFunction(0)
    vac = vec.get((), {})
    # the identity part is nonzero down to s = -1 (this happens for r = 1)
    for s in range(-1, s_max + 1):
        c = vac.get(u_power - r * s)
        if c:
            total = total + symbolic_scalar(eta, q, r, s) * c
    for parts, series in vec.items():
        if not parts:
            continue
        hook = kernels.hook_position(parts)
        if hook is None:
            continue
        src, dst, sign = hook
        a = dst - src
        if (a + base) % q:
            continue
        i = (a + base) // q
        l = _half(dst)
        for s in range(s_max + 1):
            c = series.get(u_power - r * s)
            if not c:
                continue
            entry = symbolic_entry(eta, q, r, s, i)
            if entry:
                total = total + evaluate_entry(entry, l) * (sign * c)
    return total


def allowed_poles(eta: int, q: int, r: int, den: Poly) -> bool:
    """True when every root of ``den`` is a negative integer or ``-eta/qr``."""
    from .algebra import RationalFunction

    d = den
    allowed = Fraction(-eta, q * r)
    if d.degree > 0 and d(allowed) == 0:
        d = d.divmod(Poly((-allowed, 1)))[0]
    k = 1
    while d.degree > 0:
        if d(-k) == 0:
            d = d.divmod(Poly((k, 1)))[0]
        else:
            k += 1
            if k > 10 ** 4:
                return False
    return True


@dataclass
class ResidueReport:
    eta: int
    m: int
    q: int
    r: int
    rows: list        # (u_power, offset i, l-power k, lhs residue, rhs)

    @property
    def ok(self) -> bool:
        return all(lhs == rhs for *_, lhs, rhs in self.rows)

    @property
    def mismatches(self) -> list:
        return [row for row in self.rows if row[-1] != row[-2]]


def residue_check(eta: int, m: int, q: int, r: int, max_u: int) -> ResidueReport:
    """Residue of the symbolic table at ``nu = -m`` against the inverse operator.

    For eta != 0 the comparison target is ``u^r/lam * A^{-1}(u, lam)`` with
    ``lam = m q r - eta``; for eta = 0 it is ``A^{-1}(u, m q r) / (m q^2 r^2)``.
    Compared per (u-power, offset, power of l); the identity part must have
    zero residue.
    """
    from .algebra import residue_at

    if m < 1:
        raise ValueError("m must be positive")
    if not 0 <= eta < q * r:
        raise ValueError("eta must lie in [0, qr)")
    lam = m * q * r - eta
    if eta:
        scale, ushift = Fraction(1, lam), r
    else:
        scale, ushift = Fraction(1, m * q * q * r * r), 0
    inv = a_inverse(lam, q, r, max(max_u - ushift, 0))
    rows = []
    lo = -(m * r + 2)
    for s in range(max_u // r + 1):
        up = r * s
        hi = up + 1
        for i in range(lo, hi + 1):
            entry = symbolic_entry(eta, q, r, s, i)
            target = inv.entries.get((up - ushift, i), Poly()) * scale
            width = max(len(entry), target.degree + 1)
            for k in range(width):
                lhs = residue_at(entry[k], -m) if k < len(entry) else Fraction(0)
                rows.append((up, i, k, lhs, target[k]))
        sc = symbolic_scalar(eta, q, r, s)
        rows.append((up, None, 0, residue_at(sc, -m), Fraction(0)))
    return ResidueReport(eta, m, q, r, rows)

__all__ = [
    "general_q_poly", "ATermTable", "conjugation_O", "a_operator", "a_inverse",
    "compose_matrices", "correlator_series", "disconnected_a_correlator",
    "hurwitz_prefactor", "hurwitz_series_coefficient", "RouteReport",
    "verify_hurw_aop", "symbolic_entry", "symbolic_scalar", "symbolic_a_operator",
    "evaluate_entry", "symbolic_correlator", "allowed_poles", "ResidueReport",
    "residue_check",
]
