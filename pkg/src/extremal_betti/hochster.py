"""Bigraded Betti numbers of the Stanley–Reisner ring via Hochster's formula.

``β^{-i,2j}`` is the sum over all j-subsets J of [m] of ``β̃_{j-i-1}(K|_J)``.
The sweep over the 2^m subsets runs in Gray-code order and is a
commutative-monoid reduction, so chunked or parallel evaluation gives
bit-identical tables.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, prod
from typing import Dict, List, Tuple

from . import kernels
from .canonical import DEFAULT_PERMUTATION_LIMIT, canonical_form, vertex_cells
from .complex import Complex, popcount, restrict, restrict_mask
from .errors import CapacityError, DomainError
from .homology import betti_of_faces
from .linalg import F2, FieldSpec

SWEEP_CAPACITY = 24
MEMO_THRESHOLD = 12
# canonical keys are only worth computing when the labeling search is small
MEMO_LABELING_BUDGET = 720


@dataclass(frozen=True)
class BigradedTable:
    """Nonzero entries ``(i, j) -> β^{-i,2j}``."""

    entries: Dict[Tuple[int, int], int]
    m: int
    field: FieldSpec = field(default=F2)

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        return self.entries.get(ij, 0)

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def to_dict(self) -> dict:
        return {
            "field": self.field.tag,
            "m": self.m,
            "entries": [[i, j, b] for (i, j), b in sorted(self.entries.items())],
            "total": self.total,
        }


def _check(K: Complex) -> None:
    if K.m > SWEEP_CAPACITY:
        raise CapacityError(f"Hochster sweep limited to m <= {SWEEP_CAPACITY}, got m = {K.m}")
    if not K.full_support:
        raise DomainError("Hochster sweep requires every vertex of [m] to be a face")


def _sweep_python(K: Complex, F: FieldSpec, start: int, stop: int) -> List[List[int]]:
    m = K.m
    table = [[0] * (m + 1) for _ in range(m + 1)]
    # above the threshold, small restrictions repeat up to isomorphism often
    # enough that canonicalising them beats recomputing
    memo: Dict = {}
    use_memo = m > MEMO_THRESHOLD
    for idx in range(start, stop):
        J = idx ^ (idx >> 1)
        nj = popcount(J)
        if use_memo and nj <= DEFAULT_PERMUTATION_LIMIT:
            sub = restrict(K, J)
            betti = memo.get(sub)
            if betti is None:
                cells = vertex_cells(sub)
                key = sub
                if prod(factorial(len(c)) for c in cells) <= MEMO_LABELING_BUDGET:
                    key = canonical_form(sub)
                    betti = memo.get(key)
                if betti is None:
                    betti = betti_of_faces(sub.faces, F)
                    memo[key] = betti
                memo[sub] = betti
        else:
            betti = betti_of_faces(restrict_mask(K, J).faces, F)
        for deg, b in betti.items():
            if b:
                table[nj - deg - 1][nj] += b
    return table


def _sweep(args) -> List[List[int]]:
    K, F, start, stop = args
    if F.p == 2 and K.m <= 20:
        faces = [f for f in K.faces if f]
        return kernels.bigraded_gf2(faces, K.m, start, stop)
    return _sweep_python(K, F, start, stop)


def _table(K: Complex, F: FieldSpec, threads: int = 1) -> List[List[int]]:
    _check(K)
    total = 1 << K.m
    if threads <= 1 or total < 64:
        return _sweep((K, F, 0, total))
    chunks = max(threads * 4, 1)
    step = -(-total // chunks)
    jobs = [(K, F, a, min(a + step, total)) for a in range(0, total, step)]
    m = K.m
    out = [[0] * (m + 1) for _ in range(m + 1)]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for part in pool.map(_sweep, jobs):
            for i in range(m + 1):
                for j in range(m + 1):
                    out[i][j] += part[i][j]
    return out


def bigraded(K: Complex, F: FieldSpec = F2, threads: int = 1) -> BigradedTable:
    t = _table(K, F, threads)
    entries = {(i, j): t[i][j] for i in range(K.m + 1) for j in range(K.m + 1) if t[i][j]}
    return BigradedTable(entries, K.m, F)


def d_total(K: Complex, F: FieldSpec = F2, threads: int = 1) -> int:
    """D̃(K) = Σ_J t̃b(K|_J), the sum of all bigraded Betti numbers."""
    return bigraded(K, F, threads).total


def tau(K: Complex, F: FieldSpec, i: int) -> Fraction:
    """τ_i(K) = (1/(m+1)) Σ_J β̃_i(K|_J) / C(m, |J|), as an exact rational."""
    if i < -1:
        raise DomainError("tau is defined for i >= -1")
    t = _table(K, F)
    m = K.m
    acc = Fraction(0)
    for j in range(m + 1):
        hom = j - i - 1
        if 0 <= hom <= m and t[hom][j]:
            acc += Fraction(t[hom][j], comb(m, j))
    return acc / (m + 1)
