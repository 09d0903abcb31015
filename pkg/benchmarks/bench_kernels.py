"""Compare the numba and numpy backends of the two hot kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--quick]

Both backends are called in the same process through the ``backend=``
argument, so ``SPLITCM_DISABLE_JIT`` must not be set. The first numba call
(compilation) is timed separately and excluded from the steady-state numbers.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from splitcm._accel import HAVE_NUMBA, polymatroidal_masks, rank_mod_p
from splitcm.monomial import RingContext


def best_of(fn, repeat):
    times = []
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def bench_rank(sizes, p, repeat, rng):
    rows = []
    for m in sizes:
        a = rng.integers(0, 3, size=(m, m + m // 2))
        t_np, r_np = best_of(lambda: rank_mod_p(a, p, backend="numpy"), repeat)
        t_nb, r_nb = best_of(lambda: rank_mod_p(a, p, backend="numba"), repeat)
        assert r_np == r_nb, (m, r_np, r_nb)
        rows.append((f"rank_mod_p {m}x{a.shape[1]} GF({p})", t_np, t_nb))
    return rows


def bench_polymatroid(cases, repeat):
    rows = []
    for n, d, k in cases:
        exps = np.array([u.exponents for u in RingContext(n).monomials_of_degree(d)], dtype=np.int64)
        t_np, m_np = best_of(lambda: polymatroidal_masks(exps, k, backend="numpy"), repeat)
        t_nb, m_nb = best_of(lambda: polymatroidal_masks(exps, k, backend="numba"), repeat)
        assert np.array_equal(m_np, m_nb), (n, d, k)
        rows.append((f"polymatroid scan n={n} d={d} <={k} gens ({len(m_nb)} hits)", t_np, t_nb))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="small sizes only")
    args = ap.parse_args()
    if not HAVE_NUMBA:
        raise SystemExit("numba is unavailable (or SPLITCM_DISABLE_JIT is set); nothing to compare")

    t0 = time.perf_counter()
    rank_mod_p(np.eye(3, dtype=np.int64), 2, backend="numba")
    polymatroidal_masks(np.eye(2, dtype=np.int64), 1, backend="numba")
    print(f"numba warm-up (compile or cache load): {time.perf_counter() - t0:.2f} s\n")

    rng = np.random.default_rng(0)
    sizes = [16, 64] if args.quick else [16, 64, 128, 256]
    cases = [(3, 2, 6), (4, 2, 8)] if args.quick else [(3, 2, 6), (4, 2, 8), (3, 3, 8), (4, 3, 6)]
    rows = bench_rank(sizes, 32003, args.repeat, rng) + bench_polymatroid(cases, args.repeat)

    width = max(len(r[0]) for r in rows)
    print(f"{'kernel':<{width}}  {'numpy [s]':>10}  {'numba [s]':>10}  {'speedup':>8}")
    for name, t_np, t_nb in rows:
        print(f"{name:<{width}}  {t_np:10.4f}  {t_nb:10.4f}  {t_np / t_nb:7.1f}x")


if __name__ == "__main__":
    main()
