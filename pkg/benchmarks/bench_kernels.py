"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Workloads are the constraint matrices and principal graphs of the shipped
examples, so the timings reflect what the library actually solves.  Both
backends must agree on every result before a timing is reported.
"""
import argparse
import sys
import timeit

import numpy as np

from tpckit import _kernels_py, kernels
from tpckit.examples import make_cyclic, make_free_monoid_fusion, make_tl_path
from tpckit.exact import _csr
from tpckit.weights import FULL, assemble_constraints


def rref_workload(system):
    cons = assemble_constraints(system, FULL)
    col = {v: j for j, v in enumerate(cons.variables)}
    rows = [{col[v]: k for v, k in r.items()} for r in cons.rows]
    return (*_csr(rows), len(cons.variables))


def graph_workload(n):
    graphs = make_tl_path(n)[0]
    verts, edges, _ = graphs.side("plus")
    pos = {x: i for i, x in enumerate(verts)}
    adj = [dict() for _ in verts]
    for (v, u), m in edges.items():
        adj[pos[v]][pos[u]] = m
        adj[pos[u]][pos[v]] = m
    indptr, indices, weights = [0], [], []
    for row in adj:
        for j in sorted(row):
            indices.append(j)
            weights.append(float(row[j]))
        indptr.append(len(indices))
    return (np.asarray(indptr, dtype=np.int64), np.asarray(indices, dtype=np.int64),
            np.asarray(weights), len(verts), 1e-12, 1_000_000)


def best_of(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)
    if kernels._compiled is None:
        print("compiled extension not built; only the Python fallback is available", file=sys.stderr)
        return 1
    compiled = kernels._compiled
    cases = [
        ("rref  Z/40 table", "rref_int", rref_workload(make_cyclic(40))),
        ("rref  A_60 table", "rref_int", rref_workload(make_tl_path(60)[1])),
        ("rref  free monoid L=6", "rref_int", rref_workload(make_free_monoid_fusion(6))),
        ("power A_30 graph", "power_iterate", graph_workload(30)),
        ("power A_120 graph", "power_iterate", graph_workload(120)),
    ]
    print(f"{'workload':<24}{'python (s)':>12}{'compiled (s)':>14}{'speedup':>10}")
    for label, name, work in cases:
        py, cy = getattr(_kernels_py, name), getattr(compiled, name)
        a, b = py(*work), cy(*work)
        if name == "rref_int":
            assert a == (list(b[0]), [list(r) for r in b[1]]), label
        else:
            assert abs(a[0] - b[0]) < 1e-10 and np.allclose(a[1], b[1], atol=1e-9), label
        t_py = best_of(lambda: py(*work), args.repeat)
        t_cy = best_of(lambda: cy(*work), args.repeat)
        print(f"{label:<24}{t_py:>12.4f}{t_cy:>14.4f}{t_py / t_cy:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
