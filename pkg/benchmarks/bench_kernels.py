"""Time the compiled and pure-Python homology kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 5]

Workloads are the link complexes and restrictions that the Betti and
Cohen-Macaulay routines hand to the kernel, plus one full theorem sweep per
backend (run in a subprocess so the backend switch takes effect at import).
"""

import argparse
import os
import subprocess
import sys
import time

from bicm import _pykernels
from bicm.graph import complement, complete_graph, path_graph
from bicm.homology import stanley_reisner
from bicm.ideal import matching_power, squarefree_veronese

try:
    from bicm import _ckernels
except ImportError:
    _ckernels = None


def workloads():
    cases = {
        "SR(I(K8)^[2])": stanley_reisner(matching_power(complete_graph(8), 2)),
        "SR(I(P9c)^[2])": stanley_reisner(matching_power(complement(path_graph(9)), 2)),
        "SR(m^[5] in 10 vars)": stanley_reisner(squarefree_veronese(10, 5)),
        "SR(m^[6] in 12 vars)": stanley_reisner(squarefree_veronese(12, 6)),
    }
    return {name: cx.faces() for name, cx in cases.items()}


def bench(fn, faces, p, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(faces, p)
        best = min(best, time.perf_counter() - t0)
    return best, out


def sweep_time(pure):
    env = dict(os.environ)
    if pure:
        env["BICM_PURE_PYTHON"] = "1"
    else:
        env.pop("BICM_PURE_PYTHON", None)
    code = ("import time; from bicm.verify import verify_main_theorem; t=time.perf_counter(); "
            "v=verify_main_theorem(6); print(time.perf_counter()-t, v.passed)")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    secs, passed = out.stdout.split()
    return float(secs), passed == "True"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; only the Python backend is available")
    print(f"{'workload':24} {'faces':>7} {'p':>3} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, faces in workloads().items():
        for p in (2, 3):
            tp, hp = bench(_pykernels.reduced_homology, faces, p, args.repeat)
            if _ckernels is None:
                print(f"{name:24} {len(faces):7} {p:3} {tp:10.4f} {'-':>10} {'-':>8}")
                continue
            tc, hc = bench(_ckernels.reduced_homology, faces, p, args.repeat)
            assert hp == hc, (name, p, hp, hc)
            print(f"{name:24} {len(faces):7} {p:3} {tp:10.4f} {tc:10.4f} {tp / tc:7.1f}x")
    tp, okp = sweep_time(pure=True)
    line = f"theorem sweep n=6: python {tp:.2f}s"
    if _ckernels is not None:
        tc, okc = sweep_time(pure=False)
        line += f", cython {tc:.2f}s, speedup {tp / tc:.1f}x"
        assert okc
    assert okp
    print(line)


if __name__ == "__main__":
    main()
