"""Pure-Python implementations of the hot kernels.

These are the reference semantics; the compiled module ``_ckernels`` must
return identical results for identical inputs.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import List, Sequence, Tuple


def rank_gf2(rows: Sequence[int]) -> int:
    """Rank over GF(2) of the matrix whose rows are the given bit vectors."""
    basis = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            pivot = basis.get(top)
            if pivot is None:
                basis[top] = r
                break
            r ^= pivot
    return len(basis)


def _relabel(facets: Sequence[int], perm: Sequence[int]) -> Tuple[int, ...]:
    out = []
    for f in facets:
        g = 0
        while f:
            low = f & -f
            g |= 1 << perm[low.bit_length() - 1]
            f ^= low
        out.append(g)
    out.sort()
    return tuple(out)


def canonical_relabel(
    facets: Sequence[int], cells: Sequence[Sequence[int]]
) -> Tuple[Tuple[int, ...], List[int]]:
    """Minimise the sorted relabelled facet tuple over cell-respecting labelings.

    ``cells`` is an ordered partition of the vertex indices; the vertices of
    the t-th cell receive the consecutive new labels reserved for that cell.
    Returns ``(key, perm)`` with ``perm[old] = new`` for a minimising labeling.
    """
    m = sum(len(c) for c in cells)
    offsets = []
    pos = 0
    for c in cells:
        offsets.append(pos)
        pos += len(c)
    best = None
    best_perm: List[int] = list(range(m))
    perm = [0] * m
    for choice in product(*(permutations(c) for c in cells)):
        for off, arrangement in zip(offsets, choice):
            for k, v in enumerate(arrangement):
                perm[v] = off + k
        key = _relabel(facets, perm)
        if best is None or key < best:
            best = key
            best_perm = perm[:]
    return best if best is not None else (), best_perm


def bigraded_gf2(
    faces: Sequence[int], m: int, start: int = 0, stop: int = -1
) -> List[List[int]]:
    """Hochster sweep over GF(2).

    ``faces`` are the nonempty faces of the complex as bit masks.  Subsets J
    are visited in reflected Gray-code order for Gray indices in
    ``[start, stop)``; the result is the table ``t[i][j]`` of bigraded Betti
    numbers restricted to those subsets.
    """
    if stop < 0:
        stop = 1 << m
    by_size: List[List[int]] = [[] for _ in range(m + 2)]
    for f in faces:
        by_size[f.bit_count()].append(f)
    table = [[0] * (m + 1) for _ in range(m + 1)]
    for idx in range(start, stop):
        J = idx ^ (idx >> 1)
        nj = J.bit_count()
        notJ = ~J
        counts = [1]
        ranks = [0]
        prev = {0: 0}
        s = 1
        while s <= nj:
            cur = [f for f in by_size[s] if not f & notJ]
            if not cur:
                break
            counts.append(len(cur))
            if s == 1:
                ranks.append(1)
            else:
                rows = []
                for f in cur:
                    row = 0
                    g = f
                    while g:
                        low = g & -g
                        row |= 1 << prev[f ^ low]
                        g ^= low
                    rows.append(row)
                ranks.append(rank_gf2(rows))
            prev = {f: k for k, f in enumerate(cur)}
            s += 1
        ranks.append(0)
        for s in range(len(counts)):
            b = counts[s] - ranks[s] - ranks[s + 1]
            if b:
                table[nj - s][nj] += b
    return table
