"""Reduced simplicial homology over a field.

Works on the augmented chain complex: ``C_{-1}`` is spanned by the empty face,
so the empty complex ``{∅}`` has ``β̃_{-1} = 1`` and every other complex has
``β̃_{-1} = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List

from . import kernels
from .complex import Complex, iter_bits, popcount, vertices_of
from .errors import RangeError
from .linalg import F2, FieldSpec, SparseMatrix, rank


@dataclass(frozen=True)
class BettiTable:
    by_degree: Dict[int, int]
    field: FieldSpec = field(default=F2)

    def __getitem__(self, i: int) -> int:
        return self.by_degree.get(i, 0)

    @property
    def total(self) -> int:
        """Reduced total Betti number (includes degree -1)."""
        return sum(self.by_degree.values())

    def as_list(self) -> List[int]:
        """``[β̃_{-1}, β̃_0, ..., β̃_dim]``."""
        return [self.by_degree[i] for i in sorted(self.by_degree)]

    def to_dict(self) -> dict:
        return {"field": self.field.tag, "reduced_betti": {str(i): b for i, b in sorted(self.by_degree.items())}}


def _faces_by_size(faces) -> Dict[int, List[int]]:
    out: Dict[int, List[int]] = {}
    for f in faces:
        out.setdefault(popcount(f), []).append(f)
    for v in out.values():
        v.sort(key=vertices_of)
    return out


def boundary_matrix(K: Complex, i: int, F: FieldSpec = F2) -> SparseMatrix:
    """Matrix of ∂_i : C_i → C_{i-1}, faces in lexicographic order.

    The sign of the entry for deleting the vertex in position ``k`` (0-based)
    of a face is ``(-1)^k``; over GF(2) all entries are 1.
    """
    if i < -1 or i > K.dim + 1:
        raise RangeError(f"degree {i} outside -1..{K.dim + 1}")
    sizes = _faces_by_size(K.faces)
    cols = sizes.get(i + 1, [])
    rows = sizes.get(i, []) if i >= 0 else []
    index = {f: k for k, f in enumerate(rows)}
    triples = []
    for c, face in enumerate(cols):
        for pos, v in enumerate(iter_bits(face)):
            sign = 1 if F.p == 2 or pos % 2 == 0 else -1
            triples.append((index[face ^ v], c, sign))
    return SparseMatrix.from_triples(len(rows), len(cols), triples)


def _ranks_f2(sizes: Dict[int, List[int]], top: int) -> Dict[int, int]:
    ranks = {0: 0}
    if top >= 1:
        ranks[1] = 1
    for s in range(2, top + 1):
        index = {f: k for k, f in enumerate(sizes[s - 1])}
        rows = []
        for f in sizes[s]:
            row = 0
            for v in iter_bits(f):
                row |= 1 << index[f ^ v]
            rows.append(row)
        ranks[s] = kernels.rank_gf2(rows)
    return ranks


def betti_of_faces(faces, F: FieldSpec = F2) -> Dict[int, int]:
    """Reduced Betti numbers of the complex with the given (downward-closed) face set."""
    sizes = _faces_by_size(faces)
    sizes.setdefault(0, [0])
    top = max(sizes)
    if F.p == 2:
        ranks = _ranks_f2(sizes, top)
    else:
        ranks = {0: 0}
        for s in range(1, top + 1):
            index = {f: k for k, f in enumerate(sizes[s - 1])}
            triples = []
            for c, face in enumerate(sizes[s]):
                for pos, v in enumerate(iter_bits(face)):
                    triples.append((index[face ^ v], c, 1 if pos % 2 == 0 else -1))
            ranks[s] = rank(SparseMatrix.from_triples(len(sizes[s - 1]), len(sizes[s]), triples), F)
    ranks[top + 1] = 0
    return {s - 1: len(sizes[s]) - ranks[s] - ranks[s + 1] for s in range(top + 1)}


def reduced_betti(K: Complex, F: FieldSpec = F2) -> BettiTable:
    return BettiTable(betti_of_faces(K.faces, F), F)


def tb_reduced(K: Complex, F: FieldSpec = F2) -> int:
    return reduced_betti(K, F).total


def tb_unreduced(K: Complex, F: FieldSpec = F2) -> int:
    if K.is_void:
        return 0
    return tb_reduced(K, F) + 1


def reduced_euler(K: Complex) -> int:
    """Σ_{i ≥ -1} (-1)^i f_i, from the face counts alone."""
    chi = 0
    for f in K.faces:
        chi += 1 if popcount(f) % 2 == 1 else -1
    return chi
