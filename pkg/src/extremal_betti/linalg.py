"""Exact rank of sparse matrices over GF(2), GF(p) and the rationals."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt
from typing import Dict, Iterable, List, Tuple

from . import kernels
from .errors import RangeError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``p = 2`` for GF(2), an odd prime for GF(p), ``0`` for Q."""

    p: int = 2

    def __post_init__(self):
        if self.p != 0 and not (is_prime(self.p) and self.p < 2**31):
            raise RangeError(f"field characteristic must be 0 or a prime below 2^31, got {self.p}")

    @classmethod
    def f2(cls) -> "FieldSpec":
        return cls(2)

    @classmethod
    def fp(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(0)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``f2``, ``f3``, ``f5``, ... or ``q``."""
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls(0)
        if t.startswith("f") and t[1:].isdigit():
            return cls(int(t[1:]))
        raise RangeError(f"unknown field {text!r}; expected f2, f<p> or q")

    @property
    def tag(self) -> str:
        return "q" if self.p == 0 else f"f{self.p}"

    def __str__(self) -> str:
        return self.tag


F2 = FieldSpec(2)
QQ = FieldSpec(0)


@dataclass
class SparseMatrix:
    """Sparse matrix with at most one entry per position; zeros are not stored."""

    rows: int
    cols: int
    entries: Dict[Tuple[int, int], object] = field(default_factory=dict)

    @classmethod
    def from_triples(cls, rows: int, cols: int, triples: Iterable[Tuple[int, int, object]]) -> "SparseMatrix":
        entries: Dict[Tuple[int, int], object] = {}
        for r, c, v in triples:
            if not (0 <= r < rows and 0 <= c < cols):
                raise RangeError(f"entry ({r}, {c}) outside a {rows}x{cols} matrix")
            if (r, c) in entries:
                raise RangeError(f"duplicate entry at ({r}, {c})")
            if v:
                entries[(r, c)] = v
        return cls(rows, cols, entries)

    @classmethod
    def from_dense(cls, dense: List[List[object]]) -> "SparseMatrix":
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        return cls.from_triples(rows, cols, ((r, c, v) for r, row in enumerate(dense) for c, v in enumerate(row)))

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    def to_dense(self) -> List[List[object]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols


def rank(M: SparseMatrix, F: FieldSpec = F2) -> int:
    if not M.entries:
        return 0
    if F.p == 2:
        return _rank_f2(M)
    if F.p == 0:
        return _rank_q(M)
    return _rank_fp(M, F.p)


def _row_dicts(M: SparseMatrix) -> List[Dict[int, object]]:
    rows: List[Dict[int, object]] = [dict() for _ in range(M.rows)]
    for (r, c), v in M.entries.items():
        rows[r][c] = v
    return [r for r in rows if r]


def _rank_f2(M: SparseMatrix) -> int:
    bits = [0] * M.rows
    for (r, c), v in M.entries.items():
        if _parity(v):
            bits[r] |= 1 << c
    return kernels.rank_gf2([b for b in bits if b])


def _parity(v) -> int:
    if isinstance(v, Fraction):
        if v.denominator % 2 == 0:
            raise RangeError("entry is not defined in GF(2)")
        return v.numerator & 1
    return int(v) & 1


def _rank_fp(M: SparseMatrix, p: int) -> int:
    rows = []
    for row in _row_dicts(M):
        red = {}
        for c, v in row.items():
            if isinstance(v, Fraction):
                if v.denominator % p == 0:
                    raise RangeError(f"entry is not defined in GF({p})")
                x = v.numerator * pow(v.denominator, -1, p) % p
            else:
                x = int(v) % p
            if x:
                red[c] = x
        if red:
            rows.append(red)
    pivots: Dict[int, Dict[int, int]] = {}
    for row in rows:
        while row:
            c = max(row)
            prow = pivots.get(c)
            if prow is None:
                inv = pow(row[c], -1, p)
                pivots[c] = {k: x * inv % p for k, x in row.items()}
                break
            factor = row[c]
            for k, x in prow.items():
                y = (row.get(k, 0) - factor * x) % p
                if y:
                    row[k] = y
                else:
                    row.pop(k, None)
    return len(pivots)


def _rank_q(M: SparseMatrix) -> int:
    # fraction-free elimination: rows are scaled to primitive integer vectors
    rows = []
    for row in _row_dicts(M):
        den = 1
        for v in row.values():
            if isinstance(v, Fraction):
                den = den * v.denominator // gcd(den, v.denominator)
        ints = {c: int(Fraction(v) * den) for c, v in row.items()}
        rows.append(_primitive(ints))
    pivots: Dict[int, Dict[int, int]] = {}
    for row in rows:
        while row:
            c = max(row)
            prow = pivots.get(c)
            if prow is None:
                pivots[c] = row
                break
            a, b = prow[c], row[c]
            new = {k: a * x for k, x in row.items()}
            for k, x in prow.items():
                y = new.get(k, 0) - b * x
                if y:
                    new[k] = y
                else:
                    new.pop(k, None)
            row = _primitive(new)
    return len(pivots)


def _primitive(row: Dict[int, int]) -> Dict[int, int]:
    g = 0
    for x in row.values():
        g = gcd(g, x)
    if g > 1:
        return {k: x // g for k, x in row.items()}
    return row
