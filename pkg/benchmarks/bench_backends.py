"""Compare the numba kernels with the pure-Python fallback.

Each backend runs in its own interpreter because the choice is made at
import time from JPS4GRID_DISABLE_NUMBA. Counters must match exactly;
wall times are reported per algorithm.

    python3 benchmarks/bench_backends.py [--size 128] [--problems 10]
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
import numpy as np
from jps4grid import SearchProblem, astar, jps4, backend_name, generate_rooms

size, problems, seed = (int(v) for v in sys.argv[1:4])
grid = generate_rooms(size, size, 16, seed)
free = grid.free_cells()
rng = np.random.default_rng(seed)
pairs = [(free[rng.integers(len(free))], free[rng.integers(len(free))]) for _ in range(problems)]
jps4(SearchProblem(grid, *pairs[0]))  # compile / warm up
astar(SearchProblem(grid, *pairs[0]))
out = {"backend": backend_name(), "time": {}, "counters": {}}
for name, fn in (("astar", astar), ("jps4", jps4)):
    t = time.perf_counter()
    results = [fn(SearchProblem(grid, a, b)) for a, b in pairs]
    out["time"][name] = time.perf_counter() - t
    out["counters"][name] = [[r.length] + list(r.metrics.counters()) for r in results]
print(json.dumps(out))
"""


def run(disable, args):
    env = dict(os.environ)
    env.pop("JPS4GRID_DISABLE_NUMBA", None)
    if disable:
        env["JPS4GRID_DISABLE_NUMBA"] = "1"
    proc = subprocess.run(
        [sys.executable, "-c", WORKER, str(args.size), str(args.problems), str(args.seed)],
        env=env, capture_output=True, text=True, check=True,
    )
    return json.loads(proc.stdout)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--size", type=int, default=128)
    parser.add_argument("--problems", type=int, default=10)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    fast = run(False, args)
    slow = run(True, args)
    print(f"rooms {args.size}x{args.size}, {args.problems} problems")
    print(f"{'algorithm':<10}{fast['backend']:>12}{slow['backend']:>12}{'ratio':>10}")
    for name in ("astar", "jps4"):
        tf, ts = fast["time"][name], slow["time"][name]
        print(f"{name:<10}{tf:>11.4f}s{ts:>11.4f}s{ts / tf:>9.1f}x")
    same = fast["counters"] == slow["counters"]
    print("counters identical" if same else "COUNTERS DIFFER")
    return 0 if same else 1


if __name__ == "__main__":
    sys.exit(main())
