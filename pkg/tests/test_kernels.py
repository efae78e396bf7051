from __future__ import annotations

import random

import pytest

from extremal_betti import _pykernels, kernels
from extremal_betti.canonical import vertex_cells
from extremal_betti.families import random_complex

compiled = pytest.importorskip("extremal_betti._ckernels")


def test_backend_selected():
    assert kernels.BACKEND == "compiled"


def test_rank_parity():
    rng = random.Random(0)
    for _ in range(300):
        width = rng.choice([5, 40, 64, 65, 130])
        rows = [rng.getrandbits(width) for _ in range(rng.randint(0, 40))]
        assert compiled.rank_gf2(rows) == _pykernels.rank_gf2(rows)


def test_canonical_parity():
    rng = random.Random(1)
    for _ in range(200):
        K = random_complex(rng.randint(1, 8), rng)
        cells = vertex_cells(K)
        a_key, a_perm = compiled.canonical_relabel(K.facets, cells)
        b_key, b_perm = _pykernels.canonical_relabel(K.facets, cells)
        assert tuple(a_key) == tuple(b_key)
        # minimising labelings may differ, but each must realise the key
        for perm in (a_perm, b_perm):
            mapped = sorted(sum(1 << perm[v] for v in range(K.m) if f >> v & 1) for f in K.facets)
            assert tuple(mapped) == tuple(a_key)


def test_bigraded_parity():
    rng = random.Random(2)
    for _ in range(40):
        K = random_complex(rng.randint(1, 9), rng)
        faces = [f for f in K.faces if f]
        total = 1 << K.m
        cut = rng.randint(0, total)
        full_c = compiled.bigraded_gf2(faces, K.m, 0, total)
        assert full_c == _pykernels.bigraded_gf2(faces, K.m, 0, total)
        parts = [compiled.bigraded_gf2(faces, K.m, 0, cut), compiled.bigraded_gf2(faces, K.m, cut, total)]
        merged = [[a + b for a, b in zip(r, s)] for r, s in zip(*parts)]
        assert merged == full_c


def test_pure_fallback_is_selectable():
    import os
    import subprocess
    import sys

    code = (
        "from extremal_betti import kernels, d_total, scan;"
        "from extremal_betti.families import cycle;"
        "print(kernels.BACKEND, d_total(cycle(5)), scan(5, 1, 'D_MIN').extremal_value)"
    )
    env = dict(os.environ, EXTREMAL_BETTI_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "12", "12"]
