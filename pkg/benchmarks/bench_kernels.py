"""Compare the compiled and pure-Python kernels on free (worst-case) inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from su2free import _kernels_py
from su2free.goursat import build_goursat, quintuple_from_descriptors
from su2free.groups import ONE_ID, build_group

try:
    from su2free import _kernels as _compiled
except ImportError:
    _compiled = None


def cases():
    b, z = build_group("BD(200)"), build_group("Z(401)")
    yield "scan_product BD(200) x BD(200) x Z(401)", "scan_product", (b.rp_ids, b.rp_ids, z.rp_ids, ONE_ID)
    c = build_goursat(quintuple_from_descriptors("BD(300)", "Z(1)", "BD(300)", "Z(1)", "id"))
    pa, pb = c.g1.rp_ids[c.a], c.g2.rp_ids[c.b]
    d = build_group("Z(601)")
    yield "scan_pairs graph(id on BD(300)) x Z(601)", "scan_pairs", (pa, pb, d.rp_ids, ONE_ID)
    a = build_group("BD(60)")
    fa = a.all % 2
    yield "fiber_pairs BD(60) over Z2", "fiber_pairs", (fa, fa, 2)


def best(fn, args, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'case':44s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, kernel, data in cases():
        tp = best(getattr(_kernels_py, kernel), data, args.repeat)
        if _compiled is None:
            print(f"{name:44s} {tp:10.4f} {'n/a':>10s}")
            continue
        tc = best(getattr(_compiled, kernel), data, args.repeat)
        print(f"{name:44s} {tp:10.4f} {tc:10.4f} {tp / tc:8.1f}x")


if __name__ == "__main__":
    main()
