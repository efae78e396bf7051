"""Isomorphism-grade canonical forms for small complexes.

The canonical key is the lexicographically smallest sorted tuple of facet
masks over all relabelings of [m].  Vertices are first split into cells by an
isomorphism-invariant colouring (facet-size profile, refined through shared
facets), and only labelings that send cell t to the t-th block of labels are
tried.  Because the colouring is invariant, the minimum over that restricted
set is still an isomorphism invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from . import kernels
from .complex import Complex, from_masks, iter_bits, popcount
from .errors import CapacityError

DEFAULT_PERMUTATION_LIMIT = 10


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """``key = (m, sorted facet masks)`` of the canonical relabeling."""

    key: Tuple[int, Tuple[int, ...]]

    @property
    def m(self) -> int:
        return self.key[0]

    def complex(self) -> Complex:
        return from_masks(self.key[0], self.key[1])


def vertex_cells(K: Complex) -> List[List[int]]:
    """Ordered partition of the 0-based vertex indices by refined colour."""
    m = K.m
    if m == 0:
        return []
    facets = K.facets
    # initial colour: number of facets of each size through the vertex
    sig = []
    for v in range(m):
        bit = 1 << v
        prof = [0] * (m + 1)
        for f in facets:
            if f & bit:
                prof[popcount(f)] += 1
        sig.append(tuple(prof))
    colours = _ranks(sig)
    n_cells = len(set(colours))
    while n_cells < m:
        sig = []
        for v in range(m):
            bit = 1 << v
            around = sorted(
                tuple(sorted(colours[u.bit_length() - 1] for u in iter_bits(f ^ bit)))
                for f in facets
                if f & bit
            )
            sig.append((colours[v], tuple(around)))
        new = _ranks(sig)
        count = len(set(new))
        colours = new
        if count == n_cells:
            break
        n_cells = count
    cells: List[List[int]] = [[] for _ in range(n_cells)]
    for v, c in enumerate(colours):
        cells[c].append(v)
    return cells


def _ranks(signatures: Sequence) -> List[int]:
    order = {s: k for k, s in enumerate(sorted(set(signatures)))}
    return [order[s] for s in signatures]


def canonical_labeling(
    K: Complex, limit: int = DEFAULT_PERMUTATION_LIMIT
) -> Tuple[CanonicalForm, List[int]]:
    """Canonical form plus a minimising map ``perm[old_index] = new_index`` (0-based)."""
    if K.m > limit:
        raise CapacityError(f"canonical form limited to m <= {limit}, got m = {K.m}")
    cells = vertex_cells(K)
    key, perm = kernels.canonical_relabel(K.facets, cells)
    return CanonicalForm((K.m, tuple(key))), list(perm)


def canonical_form(K: Complex, limit: int = DEFAULT_PERMUTATION_LIMIT) -> CanonicalForm:
    return canonical_labeling(K, limit)[0]


def is_isomorphic(K: Complex, L: Complex, limit: int = DEFAULT_PERMUTATION_LIMIT) -> bool:
    """Simplicial isomorphism test; ghost vertices are discarded first."""
    from .complex import compact

    if not (K.full_support and L.full_support):
        K, L = compact(K), compact(L)
    if K.m != L.m or len(K.facets) != len(L.facets):
        return False
    if sorted(map(popcount, K.facets)) != sorted(map(popcount, L.facets)):
        return False
    return canonical_form(K, limit) == canonical_form(L, limit)
