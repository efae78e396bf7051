"""Finite simplicial complexes on the vertex universe [m].

A face is a bit mask: vertex ``i`` (1-based) is present iff bit ``i - 1`` is
set.  A :class:`Complex` stores its facets only; the face set and all other
derived data are computed on demand.  The empty complex ``{∅}`` (a single
empty face) is a legal value; a complex with no faces at all is not.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .errors import FormatError, NotAFaceError, RangeError

MAX_VERTICES = 64

VertexSet = Union[int, Iterable[int]]


def popcount(x: int) -> int:
    return x.bit_count()


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def vertices_of(mask: int) -> Tuple[int, ...]:
    """Sorted 1-based vertices of a face mask."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the single-bit masks of ``mask`` from low to high."""
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def compress(mask: int, support: int) -> int:
    """Re-index the bits of ``mask`` lying in ``support`` to 0..|support|-1."""
    out = 0
    k = 0
    while support:
        low = support & -support
        if mask & low:
            out |= 1 << k
        k += 1
        support ^= low
    return out


def expand(mask: int, support: int) -> int:
    """Inverse of :func:`compress`."""
    out = 0
    k = 0
    while support:
        low = support & -support
        if mask >> k & 1:
            out |= low
        k += 1
        support ^= low
    return out


def _face_key(mask: int) -> Tuple[int, Tuple[int, ...]]:
    return popcount(mask), vertices_of(mask)


def _as_mask(m: int, J: VertexSet) -> int:
    if isinstance(J, int):
        if J < 0 or J >> m:
            raise RangeError(f"vertex mask {J:#x} is not a subset of [{m}]")
        return J
    mask = 0
    for v in J:
        if not isinstance(v, int) or v < 1 or v > m:
            raise RangeError(f"vertex {v!r} is not in [{m}]")
        mask |= 1 << (v - 1)
    return mask


def _antichain(masks: Iterable[int]) -> Tuple[int, ...]:
    """Inclusion-maximal elements, sorted by (size, vertex tuple)."""
    uniq = sorted(set(masks), key=popcount, reverse=True)
    kept: List[int] = []
    for f in uniq:
        if not any(f & g == f for g in kept):
            kept.append(f)
    return tuple(sorted(kept, key=_face_key))


@dataclass(frozen=True)
class Complex:
    """Simplicial complex on universe [m] given by its facet antichain.

    Construct through :func:`build` (or the generators in
    :mod:`extremal_betti.families`) rather than directly.
    """

    m: int
    facets: Tuple[int, ...]
    full_support: bool = field(compare=False)

    # -- derived data -------------------------------------------------

    @cached_property
    def faces(self) -> FrozenSet[int]:
        """Every face, including the empty one."""
        out = set()
        for f in self.facets:
            if f in out:
                continue
            sub = f
            while True:
                out.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        return frozenset(out)

    @cached_property
    def support(self) -> int:
        """Mask of vertices that are faces."""
        s = 0
        for f in self.facets:
            s |= f
        return s

    @property
    def dim(self) -> int:
        return max(popcount(f) for f in self.facets) - 1

    @property
    def mdim(self) -> int:
        return min(popcount(f) for f in self.facets) - 1

    @property
    def is_void(self) -> bool:
        """True for the empty complex ``{∅}``."""
        return self.facets == (0,)

    def faces_of_dim(self, i: int) -> List[int]:
        """Faces of dimension ``i`` in lexicographic order of vertex tuples."""
        return sorted((f for f in self.faces if popcount(f) == i + 1), key=vertices_of)

    def f_vector(self) -> Tuple[int, ...]:
        d = self.dim
        counts = [0] * (d + 1)
        for f in self.faces:
            if f:
                counts[popcount(f) - 1] += 1
        return tuple(counts)

    def __contains__(self, face) -> bool:
        mask = face if isinstance(face, int) else mask_of(face)
        return any(mask & f == mask for f in self.facets)

    def facet_lists(self) -> List[List[int]]:
        return [list(vertices_of(f)) for f in self.facets]

    def __repr__(self) -> str:
        return f"Complex(m={self.m}, facets={self.facet_lists()})"

    # -- serialization ------------------------------------------------

    def to_dict(self) -> dict:
        return {"m": self.m, "facets": self.facet_lists()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _make(m: int, facets: Iterable[int]) -> Complex:
    fs = _antichain(facets)
    if not fs:
        fs = (0,)
    support = 0
    for f in fs:
        support |= f
    return Complex(m, fs, support == (1 << m) - 1)


def build(m: int, facets: Iterable[Iterable[int]], strict: bool = False) -> Complex:
    """Complex on [m] whose faces are the subsets of the listed faces.

    Dominated input faces are dropped; with ``strict=True`` they raise instead.
    An empty face list gives the empty complex ``{∅}``.
    """
    if not isinstance(m, int) or m < 0 or m > MAX_VERTICES:
        raise RangeError(f"universe size must lie in 0..{MAX_VERTICES}, got {m!r}")
    masks = []
    for face in facets:
        face = list(face)
        if m == 0 and face:
            raise RangeError("m = 0 admits no vertices")
        masks.append(_as_mask(m, face))
    cx = _make(m, masks)
    if strict:
        given = set(masks)
        if len(given) != len(masks) or set(cx.facets) != (given or {0}):
            raise RangeError("input faces do not form an antichain")
    return cx


def from_masks(m: int, masks: Iterable[int]) -> Complex:
    """Like :func:`build` but the faces are already bit masks."""
    if m < 0 or m > MAX_VERTICES:
        raise RangeError(f"universe size must lie in 0..{MAX_VERTICES}")
    limit = 1 << m
    masks = list(masks)
    for f in masks:
        if f < 0 or f >= limit:
            raise RangeError(f"face mask {f:#x} is not a subset of [{m}]")
    return _make(m, masks)


def empty_complex(m: int = 0) -> Complex:
    return _make(m, [0])


def loads(text: str) -> Complex:
    """Parse the JSON interchange format ``{"m": int, "facets": [[v, ...], ...]}``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return from_dict(doc)


def from_dict(doc) -> Complex:
    if not isinstance(doc, dict):
        raise FormatError("document root must be an object")
    if "m" not in doc or "facets" not in doc:
        raise FormatError("document needs keys 'm' and 'facets'")
    m = doc["m"]
    if not isinstance(m, int) or isinstance(m, bool):
        raise FormatError("'m' must be an integer")
    facets = doc["facets"]
    if not isinstance(facets, list):
        raise FormatError("'facets' must be a list")
    for k, face in enumerate(facets):
        if not isinstance(face, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in face):
            raise FormatError(f"facets[{k}] must be a list of integers")
    try:
        return build(m, facets)
    except RangeError as exc:
        raise FormatError(str(exc)) from None


def load(path) -> Complex:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def dump(cx: Complex, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(cx.to_json() + "\n")


# -- structural operations ---------------------------------------------


def restrict(K: Complex, J: VertexSet) -> Complex:
    """Full subcomplex on J, re-indexed to 1..|J| in the order inherited from [m]."""
    Jm = _as_mask(K.m, J)
    return _make(popcount(Jm), (compress(f & Jm, Jm) for f in K.facets))


def restrict_mask(K: Complex, J: int) -> Complex:
    """Full subcomplex on J kept in the original universe (no re-indexing)."""
    return _make(K.m, (f & J for f in K.facets))


def delete_vertex(K: Complex, w: int) -> Complex:
    if not isinstance(w, int) or w < 1 or w > K.m:
        raise RangeError(f"vertex {w!r} is not in [{K.m}]")
    return restrict(K, ((1 << K.m) - 1) ^ (1 << (w - 1)))


def _face_mask(K: Complex, sigma: VertexSet) -> int:
    s = _as_mask(K.m, sigma)
    if s not in K:
        raise NotAFaceError(f"{list(vertices_of(s))} is not a face")
    return s


def link(K: Complex, sigma: VertexSet) -> Complex:
    """Link of a face, on the universe [m] minus the face (re-indexed)."""
    s = _face_mask(K, sigma)
    rest = ((1 << K.m) - 1) ^ s
    return _make(popcount(rest), (compress(f ^ s, rest) for f in K.facets if f & s == s))


def star(K: Complex, sigma: VertexSet) -> Complex:
    s = _face_mask(K, sigma)
    return _make(K.m, (f for f in K.facets if f & s == s))


def join(K: Complex, L: Complex) -> Complex:
    """Join; L's vertices are shifted past K's universe."""
    if K.m + L.m > MAX_VERTICES:
        raise RangeError("join exceeds the vertex capacity")
    return _make(K.m + L.m, (f | (g << K.m) for f in K.facets for g in L.facets))


def union(K: Complex, L: Complex) -> Complex:
    if K.m != L.m:
        raise RangeError("complexes live on different universes")
    return _make(K.m, K.facets + L.facets)


def intersection(K: Complex, L: Complex) -> Complex:
    if K.m != L.m:
        raise RangeError("complexes live on different universes")
    return _make(K.m, (f & g for f in K.facets for g in L.facets))


def compact(K: Complex) -> Complex:
    """Drop ghost vertices, re-indexing the support to 1..n."""
    if K.full_support:
        return K
    sup = K.support
    return _make(popcount(sup), (compress(f, sup) for f in K.facets))


def relabel(K: Complex, perm: Sequence[int]) -> Complex:
    """Apply the vertex map ``i -> perm[i - 1]`` (both 1-based)."""
    if sorted(perm) != list(range(1, K.m + 1)):
        raise RangeError("not a permutation of [m]")
    out = []
    for f in K.facets:
        g = 0
        for low in iter_bits(f):
            g |= 1 << (perm[low.bit_length() - 1] - 1)
        out.append(g)
    return _make(K.m, out)


def minimal_non_faces(K: Complex) -> FrozenSet[int]:
    """Inclusion-minimal subsets of [m] that are not faces."""
    faces = K.faces
    out = set()
    for sigma in faces:
        free = ((1 << K.m) - 1) & ~sigma
        for v in iter_bits(free):
            tau = sigma | v
            if tau in faces or tau in out:
                continue
            if all(tau ^ u in faces for u in iter_bits(tau)):
                out.add(tau)
    return frozenset(out)


def metrics(K: Complex) -> Tuple[int, int, Tuple[int, ...]]:
    """``(dim, mdim, f_vector)``."""
    return K.dim, K.mdim, K.f_vector()


# -- predicates -----------------------------------------------------------


def is_pure(K: Complex) -> bool:
    return K.mdim == K.dim


def is_connected(K: Complex) -> bool:
    """Connectedness of the geometric realization; ``{∅}`` is not connected."""
    sup = K.support
    if not sup:
        return False
    reached = sup & -sup
    changed = True
    while changed:
        changed = False
        for f in K.facets:
            if f & reached and f & ~reached:
                reached |= f
                changed = True
    return reached == sup


def is_pseudomanifold(K: Complex) -> bool:
    n = K.dim
    if n < 0 or not is_pure(K):
        return False
    ridges: Dict[int, List[int]] = {}
    for k, f in enumerate(K.facets):
        for v in iter_bits(f):
            ridges.setdefault(f ^ v, []).append(k)
    if any(len(owners) != 2 for owners in ridges.values()):
        return False
    # strong connectivity through codimension-one faces
    seen = {0}
    stack = [0]
    while stack:
        k = stack.pop()
        f = K.facets[k]
        for v in iter_bits(f):
            for other in ridges[f ^ v]:
                if other not in seen:
                    seen.add(other)
                    stack.append(other)
    return len(seen) == len(K.facets)


def all_subsets(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def k_subsets(ground: int, k: int) -> Iterator[int]:
    bits = list(iter_bits(ground))
    for combo in combinations(bits, k):
        yield sum(combo)
