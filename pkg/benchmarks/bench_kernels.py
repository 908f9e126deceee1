"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each case runs both backends on the same inputs, reports the best wall time
of ``--repeat`` runs and the largest absolute difference between outputs.
"""

import argparse
import time

import numpy as np

from uniqrecall import _kernels
from uniqrecall.evolution import MIXTURE_TOL
from uniqrecall.families import LayerPowerLaw, ZipfRank, materialize
from uniqrecall.spectra import rho_from_alpha


def best_of(fn, repeat):
    times = []
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def cases():
    for k_max in (10**3, 10**4):
        spec = materialize(LayerPowerLaw(1.0), k_max)
        for r in (0.2, 0.5):
            yield (f"binomial_mixture k_max={k_max} r={r}",
                   lambda b, s=spec, r=r: _kernels.binomial_mixture(s.ks, s.mass, s.k_max, r, MIXTURE_TOL,
                                                                    backend=b))
    for a_u in (10**4, 10**5):
        prof = rho_from_alpha(materialize(ZipfRank(1.0), 10**4), a_u, strict=False)
        rhos, _ = prof.distinct()
        b_draw = prof.a // 5
        yield (f"miss_ratios a={prof.a} distinct={rhos.size}",
               lambda b, rh=rhos, a=prof.a, d=b_draw: _kernels.miss_ratios(rh, a, d, backend=b))


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if _kernels.BACKEND != "cython":
        parser.exit(1, "compiled extension not available; build with pip install -e .\n")
    print(f"{'case':<48}{'python s':>10}{'cython s':>10}{'speedup':>9}{'max diff':>11}")
    for name, fn in cases():
        t_py, out_py = best_of(lambda: fn("python"), args.repeat)
        t_cy, out_cy = best_of(lambda: fn("cython"), args.repeat)
        diff = float(np.max(np.abs(out_py - out_cy)))
        print(f"{name:<48}{t_py:>10.4f}{t_cy:>10.4f}{t_py / t_cy:>8.0f}x{diff:>11.1e}")


if __name__ == "__main__":
    main()
