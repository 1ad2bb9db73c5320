"""Time the compiled enumeration kernel against the pure-Python one.

    python bench/bench_kernels.py [--repeat 3] [--json]

Both kernels get identical prepared input (LLL basis, float Cholesky data)
and must return identical results; only the enumeration itself is timed.
"""
import argparse
import json
import time

from latkit import _enum_py
from latkit import shortvec as sv
from latkit.atlas import atlas

WORKLOADS = [
    ("E8", 2, True),
    ("E8", 6, False),
    ("K12", 6, False),
    ("BW16", 4, True),
    ("LEECH", 4, False),
]


def time_kernel(kernel, L, norm, want, repeat):
    best, result = None, None
    for _ in range(repeat):
        t0 = time.perf_counter()
        _, out = sv._run(L, 0 if not want else norm, norm, want, kernel)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
        result = out
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    try:
        from latkit import _enum
    except ImportError:
        raise SystemExit("compiled kernel not built; run `pip install -e . --no-build-isolation`")
    rows = []
    for name, norm, want in WORKLOADS:
        L = atlas(name).lattice
        sv._prepare(L)
        tc, rc = time_kernel(_enum, L, norm, want, args.repeat)
        tp, rp = time_kernel(_enum_py, L, norm, want, 1 if name == "LEECH" else args.repeat)
        same = sorted(map(tuple, rc)) == sorted(map(tuple, rp)) if want else rc == rp
        if not same:
            raise SystemExit("kernels disagree on %s norm %s" % (name, norm))
        size = len(rc) * 2 if want else 2 * sum(rc.values())
        rows.append({"lattice": name, "norm": norm, "mode": "vectors" if want else "counts up to",
                     "found": size, "cython_s": round(tc, 4), "python_s": round(tp, 4),
                     "speedup": round(tp / tc, 1) if tc else None})
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print("%-6s %4s  %-12s %8s %10s %10s %8s" % ("lattice", "norm", "mode", "found", "cython s", "python s", "speedup"))
    for r in rows:
        print("%-7s %4s  %-12s %8d %10.4f %10.4f %7.1fx" % (
            r["lattice"], r["norm"], r["mode"], r["found"], r["cython_s"], r["python_s"], r["speedup"]))


if __name__ == "__main__":
    main()
