"""Sperner families, near-cones and shifted complexes.

Vertex 1 is the apex of every near-cone; families produced by
:func:`b_delta` live on the ground set {2, ..., m}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import FrozenSet, Iterable, Optional

from .complex import Complex, _make, all_subsets, iter_bits, mask_of, popcount, vertices_of
from .errors import DomainError, FormatError, RangeError


@dataclass(frozen=True)
class SpernerFamily:
    """Members and optional ``over`` set are bit masks inside ``ground``."""

    ground: int
    members: FrozenSet[int]
    over: Optional[int] = None

    @classmethod
    def of(cls, ground: Iterable[int], members: Iterable[Iterable[int]], over: Optional[Iterable[int]] = None):
        return cls(mask_of(ground), frozenset(mask_of(s) for s in members), None if over is None else mask_of(over))

    def __len__(self) -> int:
        return len(self.members)

    def member_lists(self):
        return sorted((list(vertices_of(s)) for s in self.members), key=lambda s: (len(s), s))

    def to_dict(self) -> dict:
        doc = {"ground": list(vertices_of(self.ground)), "members": self.member_lists()}
        if self.over is not None:
            doc["over"] = list(vertices_of(self.over))
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def family_from_dict(doc) -> SpernerFamily:
    if not isinstance(doc, dict) or "ground" not in doc or "members" not in doc:
        raise FormatError("Sperner family document needs keys 'ground' and 'members'")
    try:
        fam = SpernerFamily.of(doc["ground"], doc["members"], doc.get("over"))
    except TypeError:
        raise FormatError("'ground', 'members' and 'over' must hold integer lists") from None
    _check_members(fam)
    return fam


def family_loads(text: str) -> SpernerFamily:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return family_from_dict(doc)


def _check_members(F: SpernerFamily) -> None:
    for s in F.members:
        if s & ~F.ground:
            raise RangeError(f"member {list(vertices_of(s))} is not inside the ground set")
    if F.over is not None and F.over & ~F.ground:
        raise RangeError("'over' set is not inside the ground set")


def is_antichain(members: Iterable[int]) -> bool:
    ms = list(members)
    for a in ms:
        for b in ms:
            if a != b and a & b == a:
                return False
    return True


def is_sperner(F: SpernerFamily) -> bool:
    _check_members(F)
    return is_antichain(F.members)


def is_sperner_over(F: SpernerFamily, Y: Optional[int] = None) -> bool:
    """Antichain whose members all meet ``Y`` (defaults to ``F.over``)."""
    if Y is None:
        Y = F.over
    if Y is None:
        raise DomainError("no 'over' set given")
    if not isinstance(Y, int):
        Y = mask_of(Y)
    if Y & ~F.ground:
        raise RangeError("'over' set is not inside the ground set")
    return is_sperner(F) and all(s & Y for s in F.members)


def sperner_max(n: int) -> int:
    """Largest antichain in the subsets of an n-set: C(n, ⌊n/2⌋)."""
    if n < 0:
        raise RangeError("n must be non-negative")
    return comb(n, n // 2)


def f_bound(n: int, k: int) -> int:
    """Largest antichain of subsets of an n-set all meeting a fixed k-subset."""
    if not 1 <= k <= n:
        raise RangeError(f"f_bound needs 1 <= k <= n, got n={n}, k={k}")
    h = (n + 1) // 2
    return comb(n, h) - comb(n - k, h)


# -- near-cones --------------------------------------------------------------


def is_near_cone(D: Complex) -> bool:
    """Replacing any vertex j >= 2 of a face avoiding 1 by vertex 1 gives a face."""
    if D.m < 1:
        raise DomainError("near-cones need vertex 1 in the universe")
    faces = D.faces
    for S in faces:
        if S & 1:
            continue
        for j in iter_bits(S):
            if (S ^ j) | 1 not in faces:
                return False
    return True


def is_shifted(D: Complex) -> bool:
    """Closed under replacing a vertex by any smaller unused vertex."""
    faces = D.faces
    for S in faces:
        for v in iter_bits(S):
            w = v >> 1
            if w and not S & w and (S ^ v) | w not in faces:
                return False
    return True


def b_delta(D: Complex) -> SpernerFamily:
    """B(Δ) = {S ∈ Δ : S ∪ {1} ∉ Δ}, as a family on {2, ..., m}."""
    if not is_near_cone(D):
        raise DomainError("B(Δ) is only defined for near-cones")
    faces = D.faces
    ground = ((1 << D.m) - 1) & ~1
    return SpernerFamily(ground, frozenset(S for S in faces if S | 1 not in faces))


def generated_complex_faces(members: Iterable[int]) -> set:
    """Face set of E(F), the downward closure of the family."""
    out = set()
    for s in members:
        out.update(all_subsets(s))
    return out


def near_cone_from_family(F: SpernerFamily, spine: Iterable[int], m: int) -> Complex:
    """Near-cone Δ = [1 * (E(F) \\ F)] ∪ F ∪ Δ^{{1} ∪ spine} with B(Δ) = F.

    ``F`` must be a Sperner family on a subset of {2..m}; no subset of the
    spine may be a member, and every member has at most ``|spine| + 1``
    elements.  The result may miss vertices of [m].
    """
    if m < 1:
        raise RangeError("m must be positive")
    allowed = ((1 << m) - 1) & ~1
    sp = spine if isinstance(spine, int) else mask_of(spine)
    if sp & ~allowed:
        raise RangeError("spine must lie in {2..m}")
    for s in F.members:
        if s & ~allowed:
            raise RangeError(f"member {list(vertices_of(s))} is not inside {{2..{m}}}")
    if not is_antichain(F.members):
        raise DomainError("family is not an antichain")
    d = popcount(sp)
    for s in sorted(F.members, key=lambda s: (popcount(s), vertices_of(s))):
        if s & sp == s:
            raise DomainError(f"member {list(vertices_of(s))} is a subset of the spine")
        if popcount(s) > d + 1:
            raise DomainError(f"member {list(vertices_of(s))} has more than {d + 1} elements")
    cone_base = generated_complex_faces(F.members) - set(F.members)
    faces = [S | 1 for S in cone_base]
    faces.extend(F.members)
    faces.append(sp | 1)
    return _make(m, faces)


def max_antichain_size(sets: Iterable[int]) -> int:
    """Width of ``sets`` under inclusion, by Dilworth and bipartite matching.

    The width equals the number of elements minus a maximum matching in the
    strict-containment graph (Kuhn's augmenting paths).
    """
    elems = sorted(set(sets))
    n = len(elems)
    above = [[j for j in range(n) if i != j and elems[i] & elems[j] == elems[i]] for i in range(n)]
    match_of = [-1] * n

    def augment(i, seen):
        for j in above[i]:
            if j in seen:
                continue
            seen.add(j)
            if match_of[j] < 0 or augment(match_of[j], seen):
                match_of[j] = i
                return True
        return False

    matched = sum(1 for i in range(n) if augment(i, set()))
    return n - matched
