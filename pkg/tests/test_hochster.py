from __future__ import annotations

import random
from fractions import Fraction

import pytest

from extremal_betti import complex as cx
from extremal_betti.errors import CapacityError, DomainError
from extremal_betti.extremal import d_skeleton_value, g
from extremal_betti.families import (
    boundary,
    complete_bipartite,
    cycle,
    random_complex,
    simplex,
    skeleton,
    sphere_join,
)
from extremal_betti.hochster import bigraded, d_total, tau
from extremal_betti.linalg import F2, QQ, FieldSpec

import oracles


def test_simplex_single_entry():
    for m in range(1, 7):
        assert bigraded(simplex(m)).entries == {(0, 0): 1}


def test_small_spheres():
    # frozen from the oracle's explicit subset sweep
    assert bigraded(boundary(2)).entries == {(0, 0): 1, (1, 2): 1}
    assert bigraded(boundary(3)).entries == {(0, 0): 1, (1, 3): 1}
    assert oracles.bigraded(2, [[1], [2]]) == {(0, 0): 1, (1, 2): 1}
    assert oracles.bigraded(3, [[1, 2], [1, 3], [2, 3]]) == {(0, 0): 1, (1, 3): 1}


def test_totals():
    assert d_total(cycle(5)) == 12
    assert d_total(complete_bipartite(2, 3)) == 12
    assert d_total(skeleton(5, 0)) == 50
    assert d_total(cx.empty_complex()) == 1


@pytest.mark.parametrize("F", [F2, FieldSpec(3), QQ], ids=lambda F: F.tag)
def test_against_oracle(F):
    rng = random.Random(23 + F.p)
    for _ in range(12):
        K = random_complex(rng.randint(1, 5), rng)
        fl = [list(cx.vertices_of(f)) for f in K.facets]
        assert bigraded(K, F).entries == oracles.bigraded(K.m, fl, F.p)


def test_tau():
    for m in range(1, 6):
        assert tau(simplex(m), F2, -1) == Fraction(1, m + 1)
    assert tau(boundary(2), F2, 0) == Fraction(1, 3)
    rng = random.Random(2)
    for _ in range(20):
        K = random_complex(rng.randint(1, 6), rng)
        assert all(tau(K, F2, i) >= 0 for i in range(-1, K.dim + 1))
    with pytest.raises(DomainError):
        tau(simplex(3), F2, -2)


def test_threads_give_identical_tables():
    K = cx.build(8, [{1, 2, 3}, {3, 4}, {4, 5, 6}, {6, 7}, {7, 8, 1}, {2, 5}])
    assert bigraded(K, F2, threads=3).entries == bigraded(K, F2).entries
    assert bigraded(K, QQ, threads=2).entries == bigraded(K, QQ).entries


def test_memoised_python_sweep():
    # m = 13 in characteristic 3 takes the canonical-form memo path
    assert d_total(skeleton(13, 0), FieldSpec(3)) == g(13, 1) + 1
    assert d_total(cycle(13), FieldSpec(3)) == d_total(cycle(13), F2)


def test_skeleton_values():
    for m in range(1, 9):
        for d in range(m):
            assert d_total(skeleton(m, d)) == d_skeleton_value(m, d)


def test_sphere_join_product():
    assert d_total(sphere_join([2, 3])) == 4
    assert d_total(sphere_join([3, 4, 2])) == 8


def test_preconditions():
    with pytest.raises(DomainError):
        d_total(cx.build(3, [{1, 2}]))
    with pytest.raises(CapacityError):
        d_total(skeleton(25, 0))
