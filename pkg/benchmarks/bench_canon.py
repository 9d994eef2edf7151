"""Compare the compiled and pure-Python canonical labeling kernels.

Usage::

    python benchmarks/bench_canon.py [--repeat 3] [--enumerate-size 5]

Part one labels fixed workloads in-process with each kernel and checks that
both produce identical certificates.  Part two times a whole ternary
enumeration in a subprocess, once per backend (the backend is chosen at
import time through ``TERNARITY_PURE_PYTHON``).
"""

import argparse
import os
import random
import subprocess
import sys
import time
from itertools import combinations

from ternarity.hypergraph import enumerate_classes
from ternarity.hypergraph.canon import kernels, label


def workloads(seed=0):
    rng = random.Random(seed)
    loads = {}
    classes = enumerate_classes(3, 5)
    loads["k3 size-5 classes (361)"] = [(3, *h.integer_form()) for h in classes]
    rand = []
    for _ in range(200):
        n = rng.randint(6, 12)
        triples = list(combinations(range(n), 3))
        edges = rng.sample(triples, rng.randint(n // 2, min(len(triples), 2 * n)))
        used = sorted({v for e in edges for v in e})
        idx = {v: i for i, v in enumerate(used)}
        rand.append((3, len(used), [tuple(idx[v] for v in e) for e in edges]))
    loads["random 3-uniform, 6-12 vertices (200)"] = rand
    # regular, highly symmetric inputs stress individualization
    cyc = []
    for n in range(6, 30):
        cyc.append((3, n, [(i, (i + 1) % n, (i + 2) % n) for i in range(n)]))
    loads["cyclic 3-uniform, 6-29 vertices (24)"] = cyc
    loads["complete 3-uniform K(7,3)"] = [(3, 7, list(combinations(range(7), 3)))]
    return loads


def time_kernel(kernel, graphs, repeat):
    best, certs = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = [label(k, n, edges, kernel=kernel).cert for k, n, edges in graphs]
        best = min(best, time.perf_counter() - t0)
        certs = out
    return best, certs


def time_enumeration(size, pure):
    env = dict(os.environ)
    if pure:
        env["TERNARITY_PURE_PYTHON"] = "1"
    else:
        env.pop("TERNARITY_PURE_PYTHON", None)
    code = (
        "import time; from ternarity.hypergraph import enumerate_classes; "
        "from ternarity.hypergraph.canon import BACKEND; "
        f"t = time.perf_counter(); n = len(enumerate_classes(3, {size})); "
        "print(BACKEND, n, time.perf_counter() - t)"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    backend, count, secs = out.stdout.split()
    return backend, int(count), float(secs)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--enumerate-size", type=int, default=5)
    args = ap.parse_args(argv)

    ks = kernels()
    if "cython" not in ks:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation` first")
    print(f"{'workload':42s} " + " ".join(f"{name:>10s}" for name in ks) + "   speedup")
    for name, graphs in workloads().items():
        results = {kname: time_kernel(kern, graphs, args.repeat) for kname, kern in ks.items()}
        certs = {kname: r[1] for kname, r in results.items()}
        assert len({repr(c) for c in certs.values()}) == 1, f"kernels disagree on {name}"
        cells = " ".join(f"{results[k][0]:9.3f}s" for k in ks)
        speed = results["python"][0] / results["cython"][0] if "cython" in results else float("nan")
        print(f"{name:42s} {cells}   {speed:6.1f}x")

    print(f"\nfull enumeration, k=3 size {args.enumerate_size}:")
    for pure in (True, False):
        backend, count, secs = time_enumeration(args.enumerate_size, pure)
        print(f"  {backend:8s} {count:6d} classes  {secs:8.2f}s")


if __name__ == "__main__":
    main()
