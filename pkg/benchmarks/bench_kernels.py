"""Compare the compiled and NumPy kernel backends on level-3 tuple groups.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--json out.json]

Both backends run on identical inputs; outputs are compared before timing.
"""

import argparse
import json
import sys
import timeit

import numpy as np

from xmod import catalog
from xmod.bar import bar_gn_level, bar_nn_level
from xmod import kernels
from xmod.kernels import backends
from xmod.realization import realize, verify_roundtrip


def cases():
    for name in ("identity-S3", "inner-D4", "inner-Q8"):
        nm = catalog.get(name).build()
        yield f"BarNN_3(N of {name})", bar_nn_level(nm.N, 3)
        yield f"BarGN_3({name})", bar_gn_level(nm, 3)


def workloads(level, mod):
    L = level
    xs = np.arange(L.order, dtype=np.int64)
    rng = np.random.default_rng(0)
    ys = rng.integers(0, L.order, size=L.order, dtype=np.int64)
    hmul = L.head.table
    nmul = L.tail.table
    act = np.ascontiguousarray(L.act)
    phi = np.ascontiguousarray(L.phi)
    args = (hmul, nmul, act, phi, L.head.order, L.tail.order, L.m)
    return {
        "mul": lambda: mod.bar_mul(xs, ys, *args),
        "face0": lambda: mod.bar_face(xs, 0, hmul, nmul, phi, L.head.order, L.tail.order, L.m),
        "degen1": lambda: mod.bar_degen(xs, 1, L.tail.identity, L.head.order, L.tail.order, L.m),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", default=None)
    args = ap.parse_args(argv)

    mods = backends()
    if "cython" not in mods:
        print("compiled backend not built; only the NumPy fallback is available", file=sys.stderr)
    rows = []
    for label, level in cases():
        per = {name: workloads(level, mod) for name, mod in mods.items()}
        for op in per["numpy"]:
            ref = per["numpy"][op]()
            row = {"case": label, "order": level.order, "op": op}
            for name, ops in per.items():
                assert np.array_equal(ops[op](), ref), (label, op, name)
                row[name] = min(timeit.repeat(ops[op], number=1, repeat=args.repeat))
            if "cython" in row:
                row["speedup"] = row["numpy"] / row["cython"]
            rows.append(row)

    print(f"{'case':28s} {'order':>7s} {'op':7s} {'numpy ms':>9s} {'cython ms':>10s} {'speedup':>8s}")
    for r in rows:
        cy = f"{1e3 * r['cython']:10.3f}" if "cython" in r else f"{'-':>10s}"
        sp = f"{r['speedup']:8.1f}" if "speedup" in r else f"{'-':>8s}"
        print(f"{r['case']:28s} {r['order']:7d} {r['op']:7s} {1e3 * r['numpy']:9.3f} {cy} {sp}")
    print()
    print("end to end: realize + round trip, K = 3")
    for name in ("identity-S3", "inner-D4", "inner-Q8"):
        nm = catalog.get(name).build()
        times = {}
        for bname, mod in mods.items():
            kernels._impl = mod
            times[bname] = min(timeit.repeat(lambda: verify_roundtrip(nm, 3, realize(nm, 3)), number=1, repeat=2))
        kernels._impl = mods.get("cython", mods["numpy"])
        line = "  ".join(f"{b} {t:.3f}s" for b, t in times.items())
        print(f"  {name:14s} {line}")
        rows.append({"case": name, "op": "pipeline", **times})
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
