"""Samplers and exhaustive generators shared by the test modules."""

from __future__ import annotations

import random

from extremal_betti.complex import from_masks, k_subsets
from extremal_betti.sperner import SpernerFamily, is_antichain


def all_antichains(m):
    """Every antichain of subsets of [m] (as masks), i.e. every labeled complex."""
    subsets = sorted(range(1, 1 << m), key=lambda s: (-bin(s).count("1"), s))

    def grow(k, chosen):
        yield list(chosen)
        for t in range(k, len(subsets)):
            s = subsets[t]
            # later subsets are never larger, so only "s inside a chosen set" can clash
            if all(s & c != s for c in chosen):
                chosen.append(s)
                yield from grow(t + 1, chosen)
                chosen.pop()

    yield from grow(0, [])


def all_labeled_complexes(m):
    for facets in all_antichains(m):
        yield from_masks(m, facets or [0])


def random_prop26_instance(rng: random.Random):
    """Random ``(F, spine, m)`` meeting the hypotheses of the near-cone construction."""
    m = rng.randint(2, 7)
    others = list(range(2, m + 1))
    d = rng.randint(0, len(others))
    spine = 0
    for v in rng.sample(others, d):
        spine |= 1 << (v - 1)
    ground = ((1 << m) - 1) & ~1
    pool = [s for k in range(1, d + 2) for s in k_subsets(ground, k) if s & spine != s]
    rng.shuffle(pool)
    members = []
    for s in pool[: rng.randint(0, 6)]:
        if is_antichain(members + [s]):
            members.append(s)
    return SpernerFamily(ground, frozenset(members)), spine, m
