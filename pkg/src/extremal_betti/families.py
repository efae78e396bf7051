"""Generators for the named complexes, plus random sampling for property tests."""

from __future__ import annotations

import random
from typing import Sequence

from .complex import Complex, _make, empty_complex, join, k_subsets
from .errors import RangeError


def simplex(m: int) -> Complex:
    """Δ^[m]: the full (m-1)-simplex."""
    if m < 1:
        raise RangeError("simplex needs m >= 1")
    return _make(m, [(1 << m) - 1])


def skeleton(m: int, k: int) -> Complex:
    """Δ_(k)^[m]: all faces of Δ^[m] of dimension <= k."""
    if m < 1 or not 0 <= k < m:
        raise RangeError(f"skeleton needs 0 <= k < m, got m={m}, k={k}")
    return _make(m, k_subsets((1 << m) - 1, k + 1))


def skeleton_ext(m: int, k: int, d: int) -> Complex:
    """Δ_(k)^[m]⟨d⟩: the k-skeleton together with the d-simplex on {1, ..., d+1}."""
    if not 0 <= k < d < m:
        raise RangeError(f"skeleton_ext needs 0 <= k < d < m, got m={m}, k={k}, d={d}")
    top = (1 << (d + 1)) - 1
    return _make(m, [top, *k_subsets((1 << m) - 1, k + 1)])


def boundary(n: int) -> Complex:
    """∂Δ^[n]; by convention ∂Δ^[1] is the empty complex on no vertices."""
    if n < 1:
        raise RangeError("boundary needs n >= 1")
    if n == 1:
        return empty_complex(0)
    full = (1 << n) - 1
    return _make(n, [full ^ (1 << i) for i in range(n)])


def sphere_join(ns: Sequence[int]) -> Complex:
    """∂Δ^[n1] * ... * ∂Δ^[nk]."""
    if not ns:
        raise RangeError("sphere_join needs at least one factor")
    out = boundary(ns[0])
    for n in ns[1:]:
        out = join(out, boundary(n))
    return out


def simplex_sphere_join(r: int, ns: Sequence[int]) -> Complex:
    """Δ^[r] * ∂Δ^[n1] * ... * ∂Δ^[nk]."""
    out = simplex(r)
    for n in ns:
        out = join(out, boundary(n))
    return out


def cycle(m: int) -> Complex:
    """C_m with edges {i, i+1} and {m, 1}."""
    if m < 3:
        raise RangeError("cycle needs m >= 3")
    return _make(m, [(1 << i) | (1 << ((i + 1) % m)) for i in range(m)])


def complete_bipartite(a: int, b: int) -> Complex:
    """K_{a,b} with parts {1..a} and {a+1..a+b}."""
    if a < 1 or b < 1:
        raise RangeError("complete_bipartite needs a, b >= 1")
    return _make(a + b, [(1 << i) | (1 << (a + j)) for i in range(a) for j in range(b)])


GENERATORS = {
    "simplex": (simplex, "m"),
    "skeleton": (skeleton, "m k"),
    "skeleton_ext": (skeleton_ext, "m k d"),
    "boundary": (boundary, "n"),
    "sphere_join": (lambda *ns: sphere_join(ns), "n1 ... nk"),
    "simplex_sphere_join": (lambda r, *ns: simplex_sphere_join(r, ns), "r n1 ... nk"),
    "cycle": (cycle, "m"),
    "complete_bipartite": (complete_bipartite, "a b"),
}


def generate(kind: str, *params: int) -> Complex:
    try:
        fn, _ = GENERATORS[kind]
    except KeyError:
        raise RangeError(f"unknown generator {kind!r}") from None
    try:
        return fn(*params)
    except TypeError as exc:
        raise RangeError(f"{kind}: bad parameters {params}: {exc}") from None


def random_complex(m: int, rng: random.Random, full_support: bool = True, max_facets: int = 6) -> Complex:
    """A random complex on [m]; with ``full_support`` every vertex is a face."""
    n = rng.randint(0 if not full_support else 1, max_facets)
    masks = []
    for _ in range(n):
        size = rng.randint(1, m)
        masks.append(sum(1 << v for v in rng.sample(range(m), size)))
    if full_support:
        masks.extend(1 << i for i in range(m))
    return _make(m, masks)


def fixture(name: str) -> Complex:
    """Load a complex shipped in the package data directory, e.g. ``"rp2_6"``."""
    from importlib import resources

    from .complex import loads

    try:
        text = resources.files("extremal_betti").joinpath("data", f"{name}.json").read_text()
    except FileNotFoundError:
        raise RangeError(f"no fixture named {name!r}") from None
    return loads(text)
