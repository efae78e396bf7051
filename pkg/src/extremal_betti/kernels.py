"""Hot-kernel backend selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module provides the same functions.  Setting the
environment variable ``EXTREMAL_BETTI_PURE=1`` forces the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

BACKEND = "python"

if not os.environ.get("EXTREMAL_BETTI_PURE"):
    try:
        from . import _ckernels as _impl

        BACKEND = "compiled"
    except ImportError:  # pragma: no cover - depends on the build
        _impl = _pykernels
else:
    _impl = _pykernels

rank_gf2 = _impl.rank_gf2
canonical_relabel = _impl.canonical_relabel
_bigraded_gf2 = _impl.bigraded_gf2


def bigraded_gf2(faces, m, start=0, stop=-1):
    # the compiled sweep indexes faces through a 2^m table
    if _impl is not _pykernels and m > 20:
        return _pykernels.bigraded_gf2(faces, m, start, stop)
    return _bigraded_gf2(faces, m, start, stop)


__all__ = ["BACKEND", "rank_gf2", "canonical_relabel", "bigraded_gf2"]
