"""Time the census kernels with and without numba.

Each backend runs in its own interpreter because the switch is read at import
time. Usage::

    python benchmarks/bench_kernels.py --surface torus --max-length 9 --repeat 3
"""

import argparse
import json
import os
import subprocess
import sys

CHILD = r"""
import json, sys, time
from geolab import kernels
from geolab._jit import backend
from geolab.chart import rank_tables

surface, L_max, repeat = sys.argv[1], int(sys.argv[2]), int(sys.argv[3])
first, after = rank_tables(surface)
words = [kernels.canonical_words(L) for L in range(1, L_max + 1)]
# warm-up so the numba timing excludes compilation
kernels.batch_self_intersection(words[0], first, after)
best = float("inf")
total = 0
for _ in range(repeat):
    t0 = time.perf_counter()
    total = 0
    for codes in words:
        total += int(kernels.batch_self_intersection(codes, first, after).sum())
    best = min(best, time.perf_counter() - t0)
t0 = time.perf_counter()
for L in range(1, L_max + 1):
    kernels.canonical_words(L)
gen = time.perf_counter() - t0
print(json.dumps({"backend": backend(), "classes": sum(len(w) for w in words), "checksum": total, "count_s": best, "generate_s": gen}))
"""


def run(flag: str, surface: str, L_max: int, repeat: int) -> dict:
    env = dict(os.environ, GEOLAB_NUMBA=flag)
    res = subprocess.run(
        [sys.executable, "-c", CHILD, surface, str(L_max), str(repeat)],
        env=env, capture_output=True, text=True, check=True,
    )
    return json.loads(res.stdout.strip().splitlines()[-1])


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--surface", default="torus", choices=["pants", "torus"])
    ap.add_argument("--max-length", type=int, default=8)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    fast = run("1", args.surface, args.max_length, args.repeat)
    slow = run("0", args.surface, args.max_length, 1)
    if fast["checksum"] != slow["checksum"]:
        print("backends disagree:", fast, slow, file=sys.stderr)
        return 1
    print(f"{args.surface}, L <= {args.max_length}, {fast['classes']} classes, sum of i = {fast['checksum']}")
    for r in (fast, slow):
        print(f"  {r['backend']:>6}: count {r['count_s']:.4f} s, generate {r['generate_s']:.4f} s")
    print(f"  speedup (count): {slow['count_s'] / fast['count_s']:.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
