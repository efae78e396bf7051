"""Exact Betti-number computations for small simplicial complexes.

Faces are integer bit masks (vertex ``i`` is bit ``i - 1``); complexes are
immutable :class:`Complex` values stored by their facets.
"""

from __future__ import annotations

from .canonical import CanonicalForm, canonical_form, is_isomorphic
from .classifier import classify, decompose, is_tight_numeric, is_tight_structural
from .complex import (
    Complex,
    build,
    compact,
    delete_vertex,
    dump,
    empty_complex,
    intersection,
    join,
    link,
    load,
    loads,
    minimal_non_faces,
    restrict,
    star,
    union,
)
from .errors import CapacityError, DomainError, ExtremalBettiError, FormatError, NotAFaceError, RangeError
from .extremal import (
    d_max,
    d_skeleton_value,
    g,
    g_argmax,
    sigma_tb_global,
    sigma_tb_witnesses,
    tb_upper_bound,
    tight_bound,
)
from .families import generate
from .hochster import BigradedTable, bigraded, d_total, tau
from .homology import BettiTable, reduced_betti, reduced_euler, tb_reduced, tb_unreduced
from .kernels import BACKEND
from .linalg import F2, QQ, FieldSpec, SparseMatrix, rank
from .search import count_classes, enumerate_complexes, scan
from .sperner import SpernerFamily, b_delta, f_bound, is_near_cone, is_shifted, near_cone_from_family, sperner_max
from .verify import VerifyReport, verify

__version__ = "0.1.0"
