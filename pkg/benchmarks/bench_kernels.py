"""Compare the compiled wedge kernels with the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Runs each kernel over every partition of size <= 9 and reports the best of
N timings per backend, then times one end-to-end A-operator correlator in a
subprocess per backend (the backend is fixed at import time).
"""
import argparse
import os
import subprocess
import sys
import timeit

from qrspin import _kernels_py
from qrspin.fock import partitions

try:
    from qrspin import _kernels as _compiled
except ImportError:  # pragma: no cover
    _compiled = None

LAMS = [lam for n in range(10) for lam in partitions(n)]

WORKLOADS = {
    "band_moves": lambda k: [k.band_moves(lam, a) for lam in LAMS for a in (-3, -1, 2, 4)],
    "move": lambda k: [k.move(lam, s, d) for lam in LAMS for s, d in ((1, -2), (-1, 3), (0, 5))],
    "diagonal_support": lambda k: [k.diagonal_support(lam) for lam in LAMS],
    "fn_eigen_scaled": lambda k: [k.fn_eigen_scaled(lam, 4) for lam in LAMS],
}

# a genus-one three-point A-operator correlator with parts (19, 18, 18)
END_TO_END = (
    "from qrspin.polynomiality import sample_P;"
    "sample_P(1, 3, 1, 2, (1, 0, 0), (9, 9, 9))"
)


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def end_to_end(pure: bool) -> float:
    env = dict(os.environ)
    env.pop("QRSPIN_PURE_PYTHON", None)
    if pure:
        env["QRSPIN_PURE_PYTHON"] = "1"
    code = f"import time; t = time.perf_counter(); {END_TO_END}; print(time.perf_counter() - t)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True)
    return float(out.stdout)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    print(f"{len(LAMS)} partitions, best of {args.repeat}")
    print(f"{'kernel':<18}{'python ms':>12}{'cython ms':>12}{'speed-up':>10}")
    for name, work in WORKLOADS.items():
        py = best(lambda: work(_kernels_py), args.repeat)
        if _compiled is None:
            print(f"{name:<18}{py * 1e3:>12.2f}{'n/a':>12}{'':>10}")
            continue
        assert work(_compiled) == work(_kernels_py), name
        cy = best(lambda: work(_compiled), args.repeat)
        print(f"{name:<18}{py * 1e3:>12.2f}{cy * 1e3:>12.2f}{py / cy:>9.1f}x")
    py = end_to_end(True)
    cy = end_to_end(False) if _compiled is not None else float("nan")
    print(f"{'sample_P g=1 n=3':<18}{py * 1e3:>12.1f}{cy * 1e3:>12.1f}{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()
