from __future__ import annotations

from math import comb

import pytest

from extremal_betti.canonical import canonical_form
from extremal_betti.errors import DomainError, RangeError
from extremal_betti.extremal import (
    ExtremalAnswer,
    d_max,
    d_max_value,
    d_skeleton_value,
    g,
    g_argmax,
    g_maximizers,
    g_recurrence_check,
    sigma_tb_complexes,
    sigma_tb_global,
    sigma_tb_witnesses,
    summary_table,
    tb_upper_bound,
    tight_bound,
    tight_witness_min_dim,
)
from extremal_betti.families import simplex, skeleton, skeleton_ext
from extremal_betti.hochster import d_total
from extremal_betti.homology import tb_reduced


def test_g_values():
    assert g(5, 1) == 10 + 20 + 15 + 4 == 49
    assert g(4, 1) == 17
    assert g(1, 0) == 1
    with pytest.raises(RangeError):
        g(3, 3)


def test_g_recurrence():
    for m in range(2, 31):
        assert g_recurrence_check(m)


def test_g_argmax():
    assert g_argmax(9) == 2
    for m in range(2, 61):
        assert g_argmax(m) == (m - 1) // 3
    assert g(60, 19) > 2**64


def test_g_argmax_ties_raise(monkeypatch):
    import extremal_betti.extremal as ex

    monkeypatch.setattr(ex, "g_maximizers", lambda m: [1, 2])
    with pytest.raises(DomainError):
        ex.g_argmax(5)


def test_tb_upper_bound():
    assert tb_upper_bound(6, 2) == comb(5, 3) == 10
    assert tb_upper_bound(6, 3) == comb(5, 3) - comb(3, 3) == 9
    for m in range(1, 10):
        assert tb_upper_bound(m, m - 1) == 0
    with pytest.raises(RangeError):
        tb_upper_bound(4, 4)


def test_simple_values():
    assert d_skeleton_value(5, 0) == g(5, 1) + 1 == 50
    assert d_skeleton_value(4, 3) == 1
    assert tight_bound(5, 1) == 8
    assert d_max_value(5) == 50


def test_global_tb():
    ans = sigma_tb_global(5)
    assert ans.value == 6 and ans.witnesses == [skeleton(5, 1)]
    ans = sigma_tb_global(6)
    assert ans.value == comb(5, 2) == 10
    assert ans.witnesses == [skeleton(6, 2), skeleton(6, 1)]
    assert ans.checked
    one = sigma_tb_global(1)
    assert one.value == 0 and one.witnesses == [simplex(1)]


def test_sigma_witness_sets():
    assert sigma_tb_complexes(7, 5) == [skeleton_ext(7, 2, 5), skeleton_ext(7, 3, 5)]
    assert sigma_tb_complexes(6, 2) == [skeleton(6, 2)]
    assert sigma_tb_complexes(6, 3) == [skeleton_ext(6, 2, 3)]
    assert sigma_tb_complexes(6, 5) == [simplex(6)]
    # at (3, 1) the second construction degenerates to the 1-skeleton itself
    assert sigma_tb_complexes(3, 1) == [skeleton_ext(3, 0, 1), skeleton(3, 1)]


def test_witnesses_are_measured():
    for m in range(1, 9):
        for d in range(m):
            ans = sigma_tb_witnesses(m, d)
            assert ans.checked
            assert all(tb_reduced(K) == ans.value for K in ans.witnesses)
            assert len({canonical_form(K) for K in ans.witnesses}) == len(ans.witnesses)


def test_bad_witness_is_rejected():
    with pytest.raises(AssertionError):
        ExtremalAnswer(5, [skeleton(5, 1)], "TB-2.2", tb_reduced)


def test_d_max():
    ans = d_max(5)
    assert ans.value == 50 and ans.witnesses == [skeleton(5, 0)]
    assert d_max(4).value == g(4, 1) + 1 == 18
    assert d_max(10).witnesses == [skeleton(10, 2)]
    with pytest.raises(RangeError):
        d_max(3)


def test_tight_witness():
    for m in range(1, 9):
        K = tight_witness_min_dim(m)
        assert K.m == m and K.dim == (m - 1) // 2
        assert d_total(K) == tight_bound(m, K.dim)


def test_summary_table():
    rows = summary_table(6)
    assert rows[4] == (5, [31, 49, 31, 9, 1], 1)
    assert [r[2] for r in rows] == [0, 0, 0, 1, 1, 1]
    assert g_maximizers(7) == [2]
