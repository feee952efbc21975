"""Time the numba kernels against the pure-numpy fallback.

Each backend runs in its own interpreter because the backend is fixed at
import time by ORELAB_NO_JIT.  JIT compilation is excluded by a warmup
call before timing.

    python benchmarks/bench_kernels.py --repeat 3
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
import numpy as np
from orelab import kernels
from orelab.constructions import cover_family, hilton_milner
from orelab.hypergraph import Hypergraph, ore_degree
from orelab.matching import max_matching

repeat = int(sys.argv[1])
rng = np.random.default_rng(0)

def timed(fn):
    fn()  # warmup, includes compilation
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best

dense = Hypergraph.from_ranks(24, 4, np.flatnonzero(rng.random(10626) < 0.3).tolist())
sparse = Hypergraph.from_ranks(30, 3, np.flatnonzero(rng.random(4060) < 0.05).tolist())
cover = cover_family(15, 3, [1, 2, 3])
out = {
    "backend": kernels.BACKEND,
    "ore_degree n=24 r=4": timed(lambda: ore_degree(dense)),
    "ore_degree hm n=36 r=3": timed(lambda: ore_degree(hilton_milner(36, 3))),
    "max_matching cover n=15 s=4": timed(lambda: max_matching(cover)),
    "max_matching sparse n=30 r=3": timed(lambda: max_matching(sparse)),
    "graph_scan n=6": timed(lambda: kernels.graph_scan(6, 0, 1 << 15)),
    "graph_scan n=7 (1/16)": timed(lambda: kernels.graph_scan(7, 0, 1 << 17)),
}
print(json.dumps(out))
"""


def run_backend(no_jit: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("ORELAB_NO_JIT", None)
    if no_jit:
        env["ORELAB_NO_JIT"] = "1"
    res = subprocess.run([sys.executable, "-c", WORKER, str(repeat)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="timed runs per case (best is kept)")
    args = parser.parse_args(argv)

    jit = run_backend(False, args.repeat)
    ref = run_backend(True, args.repeat)
    if jit.pop("backend") != "numba":
        print("numba is unavailable; only the numpy backend was timed", file=sys.stderr)
    ref.pop("backend")
    width = max(map(len, jit))
    print(f"{'case':<{width}}  {'numba s':>10}  {'numpy s':>10}  {'speedup':>8}")
    for case in jit:
        a, b = jit[case], ref[case]
        print(f"{case:<{width}}  {a:10.4f}  {b:10.4f}  {b / a if a else float('inf'):8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
