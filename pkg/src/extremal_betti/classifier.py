"""Tightness: numeric (D̃ = 2^{m-d-1}) and structural (simplex-sphere joins).

A complex with full support is ``Δ^C * ∂Δ^{N_1} * ... * ∂Δ^{N_k}`` exactly
when its minimal non-faces are the pairwise disjoint sets ``N_1, ..., N_k``;
C is then the set of vertices covered by no minimal non-face.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .complex import Complex, minimal_non_faces, popcount, restrict, vertices_of
from .errors import DomainError
from .extremal import tight_bound
from .hochster import d_total
from .linalg import F2, FieldSpec


@dataclass(frozen=True)
class JoinDecomposition:
    cone_vertices: int
    sphere_factors: Tuple[int, ...]
    residual: bool

    def to_dict(self) -> dict:
        return {
            "cone_vertices": list(vertices_of(self.cone_vertices)),
            "sphere_factors": [list(vertices_of(n)) for n in self.sphere_factors],
            "residual": self.residual,
        }


def decompose(K: Complex) -> JoinDecomposition:
    if not K.full_support:
        raise DomainError("decomposition requires full support")
    mnf = sorted(minimal_non_faces(K), key=lambda n: (popcount(n), vertices_of(n)))
    covered = 0
    for n in mnf:
        if covered & n:
            return JoinDecomposition(0, tuple(mnf), True)
        covered |= n
    cone = ((1 << K.m) - 1) & ~covered
    return JoinDecomposition(cone, tuple(mnf), False)


def is_tight_structural(K: Complex) -> bool:
    return not decompose(K).residual


def is_tight_numeric(K: Complex, F: FieldSpec = F2) -> bool:
    if not K.full_support:
        raise DomainError("tightness is defined on complexes with full support")
    if K.m == 0:
        # the void and {∅} complexes on no vertices: tight by convention
        return True
    return d_total(K, F) == 2 ** (K.m - K.dim - 1)


def tightness_necessary_dim(m: int) -> int:
    """Smallest dimension a tight complex on m vertices can have."""
    if m < 1:
        raise DomainError("m must be positive")
    return (m - 1) // 2


def factor_check(K: Complex, dec: JoinDecomposition) -> bool:
    """Each sphere factor N satisfies K|_N = ∂Δ^N."""
    from .families import boundary

    return all(restrict(K, n) == boundary(popcount(n)) for n in dec.sphere_factors)


def classify(K: Complex, F: FieldSpec = F2) -> dict:
    dec = decompose(K)
    d = d_total(K, F)
    bound = tight_bound(K.m, K.dim)
    return {
        "m": K.m,
        "dim": K.dim,
        "field": F.tag,
        "d_total": d,
        "tight_bound": bound,
        "tight_numeric": d == bound,
        "tight_structural": not dec.residual,
        "decomposition": dec.to_dict(),
    }
