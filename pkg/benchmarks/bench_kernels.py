"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--points N] [--repeat R]

Times each kernel on exact (Fraction) and float64 inputs drawn from the
default parameter grid, then the end-to-end per-point geometry pipeline with
each backend selected through ACBGEOM_PURE_PYTHON in a fresh interpreter.
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import timeit

from acbgeom import _pykernels
from acbgeom.algebra import make_family_lee, standard_structure
from acbgeom.analysis import DEFAULT_GRID

try:
    from acbgeom import _ckernels
except ImportError:
    _ckernels = None

PIPELINE_SNIPPET = """
import time
from acbgeom import BACKEND
from acbgeom.analysis import DEFAULT_GRID, geometry_for
pts = DEFAULT_GRID.points()[:{n}]
geometry_for(pts[0], "{mode}")  # warm caches and lazy imports
t0 = time.perf_counter()
for p in pts:
    geometry_for(p, "{mode}")
print(BACKEND, (time.perf_counter() - t0) / len(pts) * 1e3)
"""


def kernel_cases(n_points: int, exact: bool):
    S = standard_structure() if exact else standard_structure().to_float()
    for p in DEFAULT_GRID.points()[:n_points]:
        L = make_family_lee(p) if exact else make_family_lee(p).to_float()
        G = _pykernels.koszul(L.C, S.g, S.g_inv)
        yield {
            "koszul": (L.C, S.g, S.g_inv),
            "riemann": (L.C, G, S.g),
            "nabla_endomorphism": (G, S.phi),
            "jacobi": (L.C,),
        }


def time_kernels(mod, cases, repeat: int) -> dict[str, float]:
    out = {}
    for name in cases[0]:
        fn = getattr(mod, name)
        calls = [c[name] for c in cases]
        t = min(timeit.repeat(lambda: [fn(*a) for a in calls], number=1, repeat=repeat))
        out[name] = t / len(calls) * 1e6
    return out


def pipeline_ms(pure: bool, n: int, mode: str) -> tuple[str, float]:
    env = dict(os.environ)
    env.pop("ACBGEOM_PURE_PYTHON", None)
    if pure:
        env["ACBGEOM_PURE_PYTHON"] = "1"
    res = subprocess.run(
        [sys.executable, "-c", PIPELINE_SNIPPET.format(n=n, mode=mode)],
        env=env, capture_output=True, text=True, check=True,
    )
    backend, ms = res.stdout.split()
    return backend, float(ms)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=200)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    if _ckernels is None:
        print("compiled extension not built; only the pure backend is available")
    for exact in (True, False):
        cases = list(kernel_cases(args.points, exact))
        label = "exact" if exact else "float"
        py = time_kernels(_pykernels, cases, args.repeat)
        cy = time_kernels(_ckernels, cases, args.repeat) if _ckernels else None
        print(f"\n[{label} kernels, {len(cases)} points, microseconds per call]")
        print(f"{'kernel':<20}{'python':>12}{'cython':>12}{'speedup':>10}")
        for name, t in py.items():
            if cy:
                print(f"{name:<20}{t:>12.1f}{cy[name]:>12.1f}{t / cy[name]:>9.1f}x")
            else:
                print(f"{name:<20}{t:>12.1f}{'-':>12}{'-':>10}")

    print(f"\n[end-to-end geometry per point, {args.points} points, milliseconds]")
    for mode in ("exact", "float"):
        rows = [pipeline_ms(pure, args.points, mode) for pure in (True, False)]
        cells = "  ".join(f"{b}={ms:.2f}" for b, ms in rows)
        print(f"{mode:<6} {cells}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
