"""Command-line entry point: ``qrspin compute | check <suite> | table``.

Exit codes: 0 when every item passes (evidence items count as passing),
1 on any hard failure, 2 on invalid input.
"""
from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence

from . import tr, unstable
from .aop import residue_check, verify_hurw_aop
from .fock import partitions
from .hurwitz import HurwitzKey, completed_cycle_count, connected_hurwitz, disconnected_hurwitz
from .polynomiality import InadmissibleResidues, admissible_tuples, verify_polynomiality
from .report import FAIL, INVALID, Report

SUITES = ("hurw-aop", "f01", "f02", "bergman", "residue", "polynomiality", "tr")


class InvalidInput(ValueError):
    pass


def _int_list(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def _positive(name: str, value: int, minimum: int = 1) -> None:
    if value < minimum:
        raise InvalidInput(f"--{name} must be at least {minimum}")


def _map(fn: Callable, jobs: list, threads: int) -> list:
    """Order-preserving map, optionally over a process pool."""
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, jobs))
    return [fn(j) for j in jobs]


# --------------------------------------------------------------------------
# compute / table
# --------------------------------------------------------------------------

def cmd_compute(args) -> Report:
    _positive("q", args.q)
    _positive("r", args.r)
    _positive("g", args.g, 0)
    if any(m < 1 for m in args.mu):
        raise InvalidInput("--mu entries must be positive")
    key = HurwitzKey(args.g, args.q, args.r, tuple(sorted(args.mu, reverse=True)))
    rep = Report("compute", {"g": args.g, "q": args.q, "r": args.r,
                             "mu": ",".join(map(str, key.mu)),
                             "connected": args.connected})
    b = completed_cycle_count(key)
    if b is None:
        if key.size % key.q:
            reason = f"|mu| = {key.size} not divisible by q"
        else:
            reason = "b non-integral"
        rep.params["reason"] = reason
        rep.add("hurwitz", "0", "0", True)
        return rep
    value = connected_hurwitz(key) if args.connected else disconnected_hurwitz(key)
    rep.params["b"] = b
    rep.add("hurwitz", str(value), str(value), True)
    return rep


def _table_row(job):
    g, q, r, mu = job
    key = HurwitzKey(g, q, r, mu)
    if completed_cycle_count(key) is None:
        return mu, None
    return mu, connected_hurwitz(key)


def cmd_table(args) -> Report:
    _positive("q", args.q)
    _positive("r", args.r)
    _positive("g", args.g, 0)
    _positive("mu-max", args.mu_max)
    _positive("n", args.n)
    profiles = []
    for size in range(1, args.n * args.mu_max + 1):
        for lam in partitions(size, args.mu_max):
            if len(lam) <= args.n:
                profiles.append(tuple(lam))
    profiles.sort()
    rep = Report("table", {"g": args.g, "q": args.q, "r": args.r, "mu_max": args.mu_max,
                           "n_max": args.n})
    rows = _map(_table_row, [(args.g, args.q, args.r, mu) for mu in profiles], args.threads)
    for mu, value in rows:
        rep.add(",".join(map(str, mu)), "", "0" if value is None else str(value), True)
    return rep


# --------------------------------------------------------------------------
# check suites
# --------------------------------------------------------------------------

def _hurw_aop_job(job):
    mu, q, r, max_u = job
    return verify_hurw_aop(mu, q, r, max_u)


def check_hurw_aop(args) -> Report:
    _positive("max-size", args.max_size)
    rep = Report("check hurw-aop", {"q": args.q, "r": args.r, "max_size": args.max_size,
                                    "max_u": args.max_u})
    jobs = [(tuple(mu), args.q, args.r, args.max_u)
            for size in range(1, args.max_size + 1) for mu in partitions(size)]
    for route in _map(_hurw_aop_job, jobs, args.threads):
        for p, lhs, rhs in route.rows:
            rep.add(f"mu={','.join(map(str, route.mu))} u^{p}", lhs, rhs, lhs == rhs)
    return rep


def check_residue(args) -> Report:
    qr = args.q * args.r
    etas = range(qr) if args.eta is None else [args.eta]
    if args.eta is not None and not 0 <= args.eta < qr:
        raise InvalidInput("--eta must lie in [0, qr)")
    _positive("m-max", args.m_max)
    rep = Report("check residue", {"q": args.q, "r": args.r, "m_max": args.m_max,
                                   "max_u": args.max_u})
    for eta in etas:
        for m in range(1, args.m_max + 1):
            res = residue_check(eta, m, args.q, args.r, args.max_u)
            bad = res.mismatches
            rep.add(f"eta={eta} m={m}", f"{len(res.rows)} coefficients agree",
                    "all agree" if not bad else f"{len(bad)} mismatches, first {bad[0]}",
                    not bad)
    return rep


def check_polynomiality(args) -> Report:
    _positive("n", args.n)
    if 2 * args.g - 2 + args.n <= 0:
        raise InvalidInput("need 2g - 2 + n > 0")
    bound = 2 * (2 * args.g - 2 + args.n)
    grid = args.grid if args.grid is not None else bound + 2
    if grid < bound + 2:
        raise InvalidInput(f"--grid must be at least {bound + 2}")
    if args.residues is not None:
        if len(args.residues) != args.n:
            raise InvalidInput("--residues needs exactly n entries")
        tuples = [tuple(args.residues)]
    else:
        tuples = admissible_tuples(args.g, args.n, args.q, args.r)
    rep = Report("check polynomiality", {"g": args.g, "n": args.n, "q": args.q, "r": args.r,
                                         "grid": grid, "holdouts": args.holdouts})
    for res in tuples:
        try:
            pr = verify_polynomiality(args.g, args.n, args.q, args.r, res, grid,
                                      args.holdouts, threads=args.threads)
        except InadmissibleResidues as exc:
            raise InvalidInput(str(exc)) from exc
        for pt, interp, sampled in pr.holdouts:
            rep.add(f"residues={res} holdout={pt}", sampled, interp, interp == sampled)
        rep.add(f"residues={res} degree", f"<= {pr.degree_bound} per variable",
                f"{pr.per_variable_degree} total {pr.total_degree}",
                all(d <= pr.degree_bound for d in pr.per_variable_degree))
        rep.add(f"residues={res} symmetry", "symmetric in equal residues",
                "symmetric" if pr.symmetric else "asymmetric", pr.symmetric)
        rep.add(f"residues={res} polynomial", "", pr.describe(), True)
    return rep


def check_tr(args) -> Report:
    _positive("n", args.n)
    _positive("mu-max", args.mu_max)
    if 2 * args.g - 2 + args.n <= 0:
        raise InvalidInput("need 2g - 2 + n > 0")
    if args.prec < 128:
        raise InvalidInput("--prec must be at least 128")
    return tr.conjecture_check(args.g, args.n, args.q, args.r, args.mu_max, args.prec)


def cmd_check(args) -> Report:
    _positive("q", args.q)
    _positive("r", args.r)
    suite = args.suite
    if suite == "hurw-aop":
        return check_hurw_aop(args)
    if suite == "f01":
        _positive("n", args.n, 0)
        return unstable.f01_check(args.q, args.r, args.n)
    if suite == "f02":
        _positive("max", args.max, 2)
        return unstable.f02_check(args.q, args.r, args.max)
    if suite == "bergman":
        _positive("order", args.order, 2)
        rep = unstable.bergman_check(args.q, args.r, args.order)
        if args.dz_order:
            for i in range(1, args.q * args.r + 1):
                sub = unstable.dz_power_identity_check(args.q, args.r, i, args.dz_order)
                for it in sub.items:
                    rep.items.append(type(it)(f"dz i={i} {it.key}", it.expected, it.actual,
                                              it.status))
            rep.params["dz_order"] = args.dz_order
        return rep
    if suite == "residue":
        return check_residue(args)
    if suite == "polynomiality":
        return check_polynomiality(args)
    return check_tr(args)


# --------------------------------------------------------------------------
# argument parsing
# --------------------------------------------------------------------------

def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                   help="worker processes (default: all cores)")
    p.add_argument("--no-timing", action="store_true",
                   help="report elapsed_ms as 0 for byte-identical output")
    p.add_argument("--seed", type=int, default=None, help="accepted and ignored; nothing is random")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qrspin",
                                     description="q-orbifold r-spin Hurwitz numbers and checks")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="one Hurwitz number")
    c.add_argument("--g", type=int, required=True)
    c.add_argument("--q", type=int, default=1)
    c.add_argument("--r", type=int, default=1)
    c.add_argument("--mu", type=_int_list, required=True)
    grp = c.add_mutually_exclusive_group()
    grp.add_argument("--connected", dest="connected", action="store_true", default=True)
    grp.add_argument("--disconnected", dest="connected", action="store_false")
    _common(c)

    k = sub.add_parser("check", help="run a verification suite")
    k.add_argument("suite", choices=SUITES)
    k.add_argument("--q", type=int, default=1)
    k.add_argument("--r", type=int, default=1)
    k.add_argument("--g", type=int, default=0)
    k.add_argument("--n", type=int, default=3, help="number of points (f01: largest n)")
    k.add_argument("--max", type=int, default=10, help="f02: largest mu1 + mu2")
    k.add_argument("--order", type=int, default=8, help="bergman: total order")
    k.add_argument("--dz-order", type=int, default=10, help="bergman: order of the dz identities")
    k.add_argument("--max-size", type=int, default=6, help="hurw-aop: largest |mu|")
    k.add_argument("--max-u", type=int, default=6, help="hurw-aop/residue: largest u-power")
    k.add_argument("--eta", type=int, default=None, help="residue: one residue (default all)")
    k.add_argument("--m-max", type=int, default=3, help="residue: largest m")
    k.add_argument("--residues", type=_int_list, default=None,
                   help="polynomiality: one residue tuple (default all admissible)")
    k.add_argument("--grid", type=int, default=None, help="polynomiality: grid size D")
    k.add_argument("--holdouts", type=int, default=2)
    k.add_argument("--mu-max", type=int, default=4, help="tr: largest part")
    k.add_argument("--prec", type=int, default=256, help="tr: working precision in bits")
    _common(k)

    t = sub.add_parser("table", help="connected numbers for all small profiles")
    t.add_argument("--g", type=int, required=True)
    t.add_argument("--q", type=int, default=1)
    t.add_argument("--r", type=int, default=1)
    t.add_argument("--mu-max", type=int, required=True)
    t.add_argument("--n", type=int, default=3, help="largest number of parts")
    _common(t)
    return parser


def render(rep: Report, fmt: str) -> str:
    if fmt == "json":
        return rep.to_json() + "\n"
    if fmt == "csv":
        return rep.to_csv()
    return rep.to_text() + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    args.threads = max(1, args.threads)
    handler = {"compute": cmd_compute, "check": cmd_check, "table": cmd_table}[args.command]
    start = time.perf_counter()
    try:
        rep = handler(args)
    except (InvalidInput, InadmissibleResidues, ValueError) as exc:
        rep = Report(args.command, {"error": str(exc)}, mode=INVALID)
        sys.stdout.write(render(rep, args.format))
        print(f"qrspin: invalid input: {exc}", file=sys.stderr)
        return 2
    rep.elapsed_ms = 0 if args.no_timing else int((time.perf_counter() - start) * 1000)
    sys.stdout.write(render(rep, args.format))
    return 1 if rep.status == FAIL else 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
