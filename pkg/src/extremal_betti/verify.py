"""Desk-scale verifiers, one per theorem identifier.

Each verifier instantiates a statement exhaustively (via enumeration), by
seeded sampling, or by closed-form comparison, and returns a
:class:`VerifyReport` carrying the first counterexample found.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Dict, List, Optional, Sequence

from .canonical import canonical_form
from .classifier import is_tight_numeric, is_tight_structural
from .complex import Complex, compact, intersection, is_connected, is_pure, link, union
from .errors import RangeError
from .extremal import (
    d_max,
    d_skeleton_value,
    g,
    g_maximizers,
    sigma_tb_complexes,
    sigma_tb_global,
    tb_upper_bound,
)
from .families import random_complex, skeleton
from .hochster import d_total
from .homology import reduced_euler, tb_reduced
from .linalg import F2, QQ, FieldSpec
from .search import enumerate_complexes, scan
from .sperner import f_bound, max_antichain_size, sperner_max


@dataclass
class VerifyReport:
    theorem: str
    passed: bool
    checked: int
    params: Dict[str, object] = field(default_factory=dict)
    counterexample: Optional[dict] = None

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "passed": self.passed,
            "checked": self.checked,
            "params": self.params,
            "counterexample": self.counterexample,
        }


def _cx(K: Complex) -> dict:
    return K.to_dict()


def _forms(complexes) -> List:
    return sorted(canonical_form(K) for K in complexes)


def verify_bk(m_max: int = 5, field: FieldSpec = F2, **_) -> VerifyReport:
    """|χ̃| <= t̃b <= C(n, ⌊n/2⌋) on m = n + 1 vertices, with the equality cases."""
    checked = 0
    for m in range(1, m_max + 1):
        n = m - 1
        bound = comb(n, n // 2)
        if n % 2 == 0:
            ks = [n // 2 - 1]
        else:
            ks = [(n - 1) // 2, (n - 3) // 2]
        extremal = {canonical_form(skeleton(m, k)) for k in ks if 0 <= k < m}
        for K in enumerate_complexes(m):
            checked += 1
            tb = tb_reduced(K, field)
            chi = abs(reduced_euler(K))
            eq_tb = tb == bound
            eq_chi = chi == bound
            is_skel = canonical_form(K) in extremal
            if not (chi <= tb <= bound) or not (eq_tb == eq_chi == is_skel):
                return VerifyReport("BK-1.2", False, checked, {"m_max": m_max},
                                    {"complex": _cx(K), "tb": tb, "abs_chi": chi, "bound": bound})
    return VerifyReport("BK-1.2", True, checked, {"m_max": m_max, "field": field.tag})


def verify_tb_global(m_max: int = 5, field: FieldSpec = F2, allow_long: bool = False, **_) -> VerifyReport:
    checked = 0
    for m in range(1, m_max + 1):
        rep = scan(m, None, "TB_MAX", field, allow_long=allow_long)
        ans = sigma_tb_global(m, field)
        checked += rep.enumerated
        if rep.extremal_value != ans.value or rep.witnesses != _forms(ans.witnesses):
            return VerifyReport("TB-2.2", False, checked, {"m_max": m_max},
                                {"m": m, "scan": rep.to_dict(), "expected": ans.to_dict()})
    return VerifyReport("TB-2.2", True, checked, {"m_max": m_max, "field": field.tag})


def _mv(name: str, measure: Callable[[Complex], int], m: int, samples: int, seed: int, full: bool) -> VerifyReport:
    rng = random.Random(seed)
    for k in range(samples):
        K = random_complex(m, rng, full_support=full)
        L = random_complex(m, rng, full_support=full)
        lhs = measure(K) + measure(L)
        rhs = measure(intersection(K, L)) + measure(union(K, L))
        if lhs > rhs:
            return VerifyReport(name, False, k + 1, {"m": m, "samples": samples, "seed": seed},
                                {"K": _cx(K), "L": _cx(L), "lhs": lhs, "rhs": rhs})
    return VerifyReport(name, True, samples, {"m": m, "samples": samples, "seed": seed})


def verify_mv_tb(m: int = 6, samples: int = 1000, seed: int = 0, field: FieldSpec = F2, **_) -> VerifyReport:
    rep = _mv("MV-2.1", lambda K: tb_reduced(K, field), m, samples, seed, full=False)
    rep.params["field"] = field.tag
    return rep


def verify_mv_d(m: int = 5, samples: int = 1000, seed: int = 0, field: FieldSpec = F2, **_) -> VerifyReport:
    rep = _mv("MV-4.1", lambda K: d_total(K, field), m, samples, seed, full=True)
    rep.params["field"] = field.tag
    return rep


def verify_sperner(n_max: int = 6, **_) -> VerifyReport:
    checked = 0
    for n in range(0, n_max + 1):
        ground = (1 << n) - 1
        checked += 1
        got = max_antichain_size(list(range(1 << n)))
        if got != sperner_max(n):
            return VerifyReport("SPERNER-2.8", False, checked, {"n_max": n_max},
                                {"n": n, "brute_force": got, "closed_form": sperner_max(n)})
        for k in range(1, n + 1):
            checked += 1
            Y = (1 << k) - 1
            got = max_antichain_size([s for s in range(ground + 1) if s & Y])
            if got != f_bound(n, k):
                return VerifyReport("SPERNER-2.8", False, checked, {"n_max": n_max},
                                    {"n": n, "k": k, "brute_force": got, "closed_form": f_bound(n, k)})
    return VerifyReport("SPERNER-2.8", True, checked, {"n_max": n_max})


def _sigma_scan(name: str, m_max: int, field: FieldSpec, witnesses: bool) -> VerifyReport:
    checked = 0
    for m in range(1, m_max + 1):
        for d in range(m):
            rep = scan(m, d, "TB_MAX", field)
            checked += rep.enumerated
            bad = rep.extremal_value != tb_upper_bound(m, d)
            if witnesses:
                bad = bad or rep.witnesses != _forms(sigma_tb_complexes(m, d))
            if bad:
                return VerifyReport(name, False, checked, {"m_max": m_max},
                                    {"m": m, "d": d, "scan": rep.to_dict(), "bound": tb_upper_bound(m, d)})
    return VerifyReport(name, True, checked, {"m_max": m_max, "field": field.tag})


def verify_sigma(m_max: int = 5, field: FieldSpec = F2, **_) -> VerifyReport:
    return _sigma_scan("SIGMA-2.9", m_max, field, witnesses=True)


def verify_bounds(m_max: int = 5, field: FieldSpec = F2, **_) -> VerifyReport:
    return _sigma_scan("BOUNDS-2.10", m_max, field, witnesses=False)


DEFAULT_FIELDS = (F2, FieldSpec(3), QQ)


def verify_tight(m_max: int = 5, fields: Sequence[FieldSpec] = DEFAULT_FIELDS, **_) -> VerifyReport:
    checked = 0
    for m in range(1, m_max + 1):
        for K in enumerate_complexes(m):
            structural = is_tight_structural(K)
            for F in fields:
                checked += 1
                if is_tight_numeric(K, F) != structural:
                    return VerifyReport("TIGHT-3.12", False, checked, {"m_max": m_max},
                                        {"complex": _cx(K), "field": F.tag, "structural": structural})
    return VerifyReport("TIGHT-3.12", True, checked,
                        {"m_max": m_max, "fields": [F.tag for F in fields]})


def verify_links(m_max: int = 5, field: FieldSpec = F2, **_) -> VerifyReport:
    """Tight complexes are pure, have tight links, and are connected unless S^0."""
    checked = 0
    for m in range(1, m_max + 1):
        for K in enumerate_complexes(m):
            if not is_tight_numeric(K, field):
                continue
            checked += 1
            problem = None
            if not is_pure(K):
                problem = "not pure"
            elif m >= 3 and not is_connected(K):
                problem = "disconnected"
            else:
                for sigma in K.faces:
                    L = compact(link(K, sigma))
                    if not (is_tight_structural(L) and is_tight_numeric(L, field)):
                        problem = f"link of {list(_verts(sigma))} not tight"
                        break
            if problem:
                return VerifyReport("LINKS-3.10", False, checked, {"m_max": m_max},
                                    {"complex": _cx(K), "problem": problem})
    return VerifyReport("LINKS-3.10", True, checked, {"m_max": m_max, "field": field.tag})


def _verts(mask: int):
    from .complex import vertices_of

    return vertices_of(mask)


def verify_dmax(m_max: int = 5, field: FieldSpec = F2, allow_long: bool = False, **_) -> VerifyReport:
    checked = 0
    for m in range(4, m_max + 1):
        rep = scan(m, None, "D_MAX", field, allow_long=allow_long)
        ans = d_max(m, field)
        a = (m - 1) // 3
        checked += rep.enumerated
        if (
            rep.extremal_value != ans.value
            or rep.witnesses != _forms(ans.witnesses)
            or ans.value != d_skeleton_value(m, a - 1)
        ):
            return VerifyReport("DMAX-4.2", False, checked, {"m_max": m_max},
                                {"m": m, "scan": rep.to_dict(), "expected": ans.to_dict()})
    return VerifyReport("DMAX-4.2", True, checked, {"m_max": m_max, "field": field.tag})


def verify_g(m_max: int = 60, recurrence_max: int = 30, **_) -> VerifyReport:
    checked = 0
    for m in range(4, m_max + 1):
        checked += 1
        best = g_maximizers(m)
        if best != [(m - 1) // 3]:
            return VerifyReport("G-5.1", False, checked, {"m_max": m_max},
                                {"m": m, "maximizers": best, "expected": (m - 1) // 3})
    for m in range(2, recurrence_max + 1):
        for d in range(1, m):
            checked += 1
            if g(m, d) + g(m, d - 1) != 2 ** (m - d) * comb(m, d):
                return VerifyReport("G-5.1", False, checked, {"m_max": m_max},
                                    {"m": m, "d": d, "recurrence": "fails"})
    return VerifyReport("G-5.1", True, checked, {"m_max": m_max, "recurrence_max": recurrence_max})


VERIFIERS: Dict[str, Callable[..., VerifyReport]] = {
    "BK-1.2": verify_bk,
    "TB-2.2": verify_tb_global,
    "MV-2.1": verify_mv_tb,
    "SPERNER-2.8": verify_sperner,
    "SIGMA-2.9": verify_sigma,
    "BOUNDS-2.10": verify_bounds,
    "TIGHT-3.12": verify_tight,
    "LINKS-3.10": verify_links,
    "MV-4.1": verify_mv_d,
    "DMAX-4.2": verify_dmax,
    "G-5.1": verify_g,
}


def verify(theorem_id: str, **params) -> VerifyReport:
    try:
        fn = VERIFIERS[theorem_id.upper()]
    except KeyError:
        raise RangeError(f"unknown theorem id {theorem_id!r}; expected one of {sorted(VERIFIERS)}") from None
    return fn(**params)
