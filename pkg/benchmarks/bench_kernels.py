"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N] [--seed S]

Each workload runs through both backends, the outputs are checked for
equality, and the best-of-N wall time is reported.
"""

from __future__ import annotations

import argparse
import random
import time

from extremal_betti import _pykernels
from extremal_betti.canonical import vertex_cells
from extremal_betti.families import cycle, random_complex, skeleton

try:
    from extremal_betti import _ckernels
except ImportError:  # pragma: no cover
    _ckernels = None


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def workloads(seed):
    rng = random.Random(seed)
    rows = [rng.getrandbits(300) for _ in range(300)]
    yield "rank_gf2 300x300", lambda k: k.rank_gf2(rows)

    complexes = [random_complex(rng.randint(4, 8), rng) for _ in range(100)]
    cells = [vertex_cells(K) for K in complexes]

    def canon(k):
        return [tuple(k.canonical_relabel(K.facets, c)[0]) for K, c in zip(complexes, cells)]

    yield "canonical_relabel x100", canon

    for name, K in (("bigraded_gf2 C12", cycle(12)), ("bigraded_gf2 Δ_(2)^[12]", skeleton(12, 2))):
        faces = [f for f in K.faces if f]
        yield name, (lambda k, faces=faces, m=K.m: k.bigraded_gf2(faces, m, 0, 1 << m))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled extension not built; nothing to compare")
        return 1
    print(f"{'workload':28s} {'python (s)':>11s} {'compiled (s)':>13s} {'speedup':>8s}")
    for name, fn in workloads(args.seed):
        tp, out_p = best_of(lambda: fn(_pykernels), args.repeat)
        tc, out_c = best_of(lambda: fn(_ckernels), args.repeat)
        if out_p != out_c:
            raise SystemExit(f"backends disagree on {name}")
        print(f"{name:28s} {tp:11.4f} {tc:13.4f} {tp / tc:7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
