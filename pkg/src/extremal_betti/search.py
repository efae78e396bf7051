"""Isomorphism-reduced enumeration of Σ(m, d) and extremal scans.

Enumeration is orderly generation by canonical augmentation.  Every complex
with full support on [m] is reached from the discrete complex by adding faces
one at a time.  A child ``K + σ`` is kept only when deleting its *canonical
removable face* (the largest facet of size >= 2 in its canonical relabeling)
gives back the parent's isomorphism class, so each class has exactly one
parent and no global table of seen classes is needed.
"""

from __future__ import annotations

import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Union

from .canonical import CanonicalForm, canonical_form, canonical_labeling
from .classifier import is_tight_numeric
from .complex import Complex, _make, iter_bits, popcount
from .errors import CapacityError, RangeError
from .hochster import d_total
from .homology import tb_reduced
from .linalg import F2, FieldSpec

EXHAUSTIVE_CAPACITY = 6
LONG_RUNNING_FROM = 6
PROGRESS_EVERY = 10_000

OBJECTIVES = ("TB_MAX", "D_MIN", "D_MAX", "TIGHT_ALL")


def _check_capacity(m: int, allow_long: bool) -> None:
    if m < 1:
        raise RangeError("m must be positive")
    if m > EXHAUSTIVE_CAPACITY:
        raise CapacityError(f"exhaustive enumeration is limited to m <= {EXHAUSTIVE_CAPACITY}")
    if m >= LONG_RUNNING_FROM and not allow_long:
        raise CapacityError(f"m = {m} is long-running; pass allow_long=True (CLI: --long)")


def _canonical_complex(K: Complex):
    cf, perm = canonical_labeling(K)
    return cf, _make(K.m, cf.key[1])


def _canonical_deletion(Kc: Complex) -> Complex:
    """Parent of a canonically labelled complex: drop its largest removable facet."""
    removable = [f for f in Kc.facets if popcount(f) >= 2]
    f = max(removable)
    rest = [g for g in Kc.facets if g != f]
    rest.extend(f ^ v for v in iter_bits(f))
    return _make(Kc.m, rest)


def _addable(K: Complex) -> List[int]:
    faces = K.faces
    out = []
    for sigma in range(1 << K.m):
        if popcount(sigma) < 2 or sigma in faces:
            continue
        if all(sigma ^ v in faces for v in iter_bits(sigma)):
            out.append(sigma)
    return out


def enumerate_complexes(
    m: int, d: Optional[int] = None, allow_long: bool = False
) -> Iterator[Complex]:
    """One canonical representative per isomorphism class of Σ(m, d).

    ``d=None`` enumerates all of Σ(m).  Representatives carry their canonical
    labeling, so equal classes give equal :class:`Complex` values.
    """
    _check_capacity(m, allow_long)
    if d is not None and not 0 <= d < m:
        raise RangeError(f"need 0 <= d < m, got m={m}, d={d}")
    root_cf, root = _canonical_complex(_make(m, [1 << i for i in range(m)]))
    stack = [(root_cf, root)]
    while stack:
        cf, K = stack.pop()
        if d is None or K.dim == d:
            yield K
        children = []
        seen = set()
        for sigma in _addable(K):
            child = _make(m, K.facets + (sigma,))
            if d is not None and child.dim > d:
                continue
            ccf, Kc = _canonical_complex(child)
            if ccf in seen:
                continue
            seen.add(ccf)
            parent_cf, _ = canonical_labeling(_canonical_deletion(Kc))
            if parent_cf == cf:
                children.append((ccf, Kc))
        # push in reverse so the smallest key is expanded first
        children.sort(key=lambda t: t[0], reverse=True)
        stack.extend(children)


def count_classes(m: int, d: Optional[int] = None, allow_long: bool = False) -> int:
    return sum(1 for _ in enumerate_complexes(m, d, allow_long))


# -- scans -------------------------------------------------------------------


@dataclass
class ScanReport:
    m: int
    d: Union[int, str]
    objective: str
    extremal_value: int
    witnesses: List[CanonicalForm]
    enumerated: int
    field: FieldSpec = field(default=F2)
    elapsed: float = 0.0

    def witness_complexes(self) -> List[Complex]:
        return [w.complex() for w in self.witnesses]

    def to_dict(self, timing: bool = False) -> dict:
        doc = {
            "m": self.m,
            "d": self.d,
            "objective": self.objective,
            "field": self.field.tag,
            "extremal_value": self.extremal_value,
            "enumerated": self.enumerated,
            "witnesses": [w.complex().to_dict() for w in self.witnesses],
        }
        if timing:
            doc["elapsed"] = round(self.elapsed, 3)
        return doc


def evaluate(K: Complex, objective: str, F: FieldSpec) -> int:
    if objective == "TB_MAX":
        return tb_reduced(K, F)
    if objective in ("D_MIN", "D_MAX"):
        return d_total(K, F)
    if objective == "TIGHT_ALL":
        return int(is_tight_numeric(K, F))
    raise RangeError(f"unknown objective {objective!r}")


def _evaluate_batch(args):
    batch, objective, F = args
    return [evaluate(K, objective, F) for K in batch]


def scan(
    m: int,
    d: Optional[int],
    objective: str,
    F: FieldSpec = F2,
    threads: int = 1,
    allow_long: bool = False,
    progress: bool = False,
) -> ScanReport:
    """Evaluate ``objective`` on every class of Σ(m, d) and report the extremal set.

    TIGHT_ALL reports the tight classes; its value is how many there are.
    """
    objective = objective.upper()
    if objective not in OBJECTIVES:
        raise RangeError(f"unknown objective {objective!r}; expected one of {OBJECTIVES}")
    t0 = time.perf_counter()
    classes: List[Complex] = []
    values: List[int] = []
    batch: List[Complex] = []

    def flush(pool):
        if not batch:
            return
        if pool is None:
            values.extend(evaluate(K, objective, F) for K in batch)
        else:
            step = max(1, len(batch) // (threads * 4))
            parts = [batch[i:i + step] for i in range(0, len(batch), step)]
            for res in pool.map(_evaluate_batch, [(p, objective, F) for p in parts]):
                values.extend(res)
        classes.extend(batch)
        batch.clear()

    pool = ProcessPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        for K in enumerate_complexes(m, d, allow_long):
            batch.append(K)
            if len(batch) >= 1024:
                flush(pool)
            n = len(classes) + len(batch)
            if progress and n % PROGRESS_EVERY == 0:
                print(f"scan m={m} d={d}: {n} classes", file=sys.stderr)
        flush(pool)
    finally:
        if pool is not None:
            pool.shutdown()

    if objective == "TIGHT_ALL":
        chosen = [K for K, v in zip(classes, values) if v]
        value = len(chosen)
    else:
        pick = max if objective in ("TB_MAX", "D_MAX") else min
        value = pick(values)
        chosen = [K for K, v in zip(classes, values) if v == value]
    witnesses = sorted(canonical_form(K) for K in chosen)
    return ScanReport(
        m=m,
        d="all" if d is None else d,
        objective=objective,
        extremal_value=value,
        witnesses=witnesses,
        enumerated=len(classes),
        field=F,
        elapsed=time.perf_counter() - t0,
    )
