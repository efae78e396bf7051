"""Closed-form extremal values and the complexes attaining them.

All integers are exact; witness lists are generated complexes and are
re-measured by the homology or Hochster engine when an
:class:`ExtremalAnswer` is built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Callable, List, Tuple

from .complex import Complex
from .errors import DomainError, RangeError
from .families import simplex, skeleton, skeleton_ext
from .linalg import F2, FieldSpec


def _check_md(m: int, d: int) -> None:
    if not (isinstance(m, int) and isinstance(d, int)) or not 0 <= d < m:
        raise RangeError(f"need 0 <= d < m, got m={m}, d={d}")


def g(m: int, d: int) -> int:
    """g(m, d) = Σ_{j=d+1}^{m} C(m, j) C(j-1, d)."""
    _check_md(m, d)
    return sum(comb(m, j) * comb(j - 1, d) for j in range(d + 1, m + 1))


def g_recurrence_check(m: int) -> bool:
    """g(m,d) + g(m,d-1) = 2^{m-d} C(m,d) for every 1 <= d < m."""
    return all(g(m, d) + g(m, d - 1) == 2 ** (m - d) * comb(m, d) for d in range(1, m))


def g_maximizers(m: int) -> List[int]:
    values = [g(m, d) for d in range(m)]
    top = max(values)
    return [d for d, v in enumerate(values) if v == top]


def g_argmax(m: int) -> int:
    """The maximiser of d -> g(m, d) by direct evaluation; ties raise."""
    if m < 1:
        raise RangeError("m must be positive")
    best = g_maximizers(m)
    if len(best) != 1:
        raise DomainError(f"g({m}, .) has several maximisers {best}")
    return best[0]


def tb_upper_bound(m: int, d: int) -> int:
    """Largest reduced total Betti number of a d-dimensional complex on [m]."""
    _check_md(m, d)
    h = m // 2
    if d == m - 1:
        return 0
    if d <= h - 1:
        return comb(m - 1, d + 1)
    return comb(m - 1, h) - comb(d, h)


def d_skeleton_value(m: int, d: int) -> int:
    """D̃ of the d-skeleton of Δ^[m]: g(m, d+1) + 1 (the g-sum is empty for d = m-1)."""
    _check_md(m, d)
    return (g(m, d + 1) if d + 1 < m else 0) + 1


def tight_bound(m: int, d: int) -> int:
    """The universal lower bound 2^{m-d-1} on D̃ over d-dimensional complexes on [m]."""
    _check_md(m, d)
    return 2 ** (m - d - 1)


@dataclass
class ExtremalAnswer:
    value: int
    witnesses: List[Complex]
    theorem: str
    measure: Callable[[Complex], int] = field(repr=False, default=None)
    checked: bool = False

    def __post_init__(self):
        if self.measure is not None:
            for K in self.witnesses:
                got = self.measure(K)
                if got != self.value:
                    raise AssertionError(f"{self.theorem}: witness {K} measures {got}, expected {self.value}")
            self.checked = True

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "value": self.value,
            "witnesses": [K.to_dict() for K in self.witnesses],
        }


def _ext_or_skeleton(m: int, k: int, d: int) -> Complex:
    return skeleton(m, d) if k >= d else skeleton_ext(m, k, d)


def sigma_tb_complexes(m: int, d: int) -> List[Complex]:
    """The maximisers of t̃b among d-dimensional complexes on [m]."""
    _check_md(m, d)
    h = m // 2
    if d <= h - 1 or d == m - 1:
        return [skeleton(m, d)]
    if d <= m - 3:
        return [skeleton_ext(m, h - 1, d)]
    # d = m - 2
    if m % 2:
        return [_ext_or_skeleton(m, h - 1, d), _ext_or_skeleton(m, h, d)]
    return [_ext_or_skeleton(m, h - 1, d)]


def _tb_measure(F: FieldSpec):
    from .homology import tb_reduced

    return lambda K: tb_reduced(K, F)


def _d_measure(F: FieldSpec):
    from .hochster import d_total

    return lambda K: d_total(K, F)


def sigma_tb_witnesses(m: int, d: int, F: FieldSpec = F2, check: bool = True) -> ExtremalAnswer:
    return ExtremalAnswer(
        tb_upper_bound(m, d),
        sigma_tb_complexes(m, d),
        "SIGMA-2.9",
        _tb_measure(F) if check else None,
    )


def tb_global_max(m: int) -> int:
    if m < 1:
        raise RangeError("m must be positive")
    if m == 1:
        return 0
    return comb(m - 1, (m - 1) // 2)


def sigma_tb_global_degrees(m: int) -> List[int]:
    """Skeleton dimensions maximising t̃b over all complexes on [m]."""
    if m < 1:
        raise RangeError("m must be positive")
    if m == 1:
        return [0]
    if m % 2:
        return [(m - 3) // 2] if m >= 3 else [0]
    return [k for k in (m // 2 - 1, m // 2 - 2) if k >= 0]


def sigma_tb_global(m: int, F: FieldSpec = F2, check: bool = True) -> ExtremalAnswer:
    """Maximisers of t̃b over all complexes with vertex set [m].

    For m = 1 the single point is returned with value 0; for m = 3 the odd
    formula gives the three discrete points.
    """
    ks = sigma_tb_global_degrees(m)
    return ExtremalAnswer(
        tb_global_max(m),
        [skeleton(m, k) for k in sorted(ks, reverse=True)],
        "TB-2.2",
        _tb_measure(F) if check else None,
    )


def d_max_value(m: int) -> int:
    if m < 1:
        raise RangeError("m must be positive")
    return g(m, (m - 1) // 3) + 1


def d_max(m: int, F: FieldSpec = F2, check: bool = True) -> ExtremalAnswer:
    """Largest D̃ over all complexes on [m] and its unique maximiser.

    Restricted to m >= 4: below that the maximising skeleton index
    ⌊(m-1)/3⌋ - 1 is negative.
    """
    if m < 4:
        raise RangeError("d_max is stated for m >= 4; smaller m need manual interpretation")
    a = (m - 1) // 3
    return ExtremalAnswer(d_max_value(m), [skeleton(m, a - 1)], "DMAX-4.2", _d_measure(F) if check else None)


def tight_witness_min_dim(m: int) -> Complex:
    """A tight complex on [m] of the smallest possible dimension ⌊(m-1)/2⌋."""
    from .families import simplex_sphere_join, sphere_join

    if m < 1:
        raise RangeError("m must be positive")
    if m == 1:
        return simplex(1)
    if m % 2 == 0:
        return sphere_join([2] * (m // 2))
    return simplex_sphere_join(1, [2] * (m // 2))


def summary_table(m_max: int) -> List[Tuple[int, List[int], int]]:
    """Rows ``(m, [g(m,0), ..., g(m,m-1)], argmax)`` for m = 1..m_max."""
    rows = []
    for m in range(1, m_max + 1):
        vals = [g(m, d) for d in range(m)]
        rows.append((m, vals, g_argmax(m)))
    return rows
