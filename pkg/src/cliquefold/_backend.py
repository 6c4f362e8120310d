"""Kernel backend selection.

Prefers the compiled extension when it imported cleanly; falls back to the
pure-Python twin otherwise.  Set CLIQUEFOLD_PURE=1 to force the fallback
(useful for benchmarks and parity checks).  The compiled canonical-code
search only handles codes that fit in a 64-bit word (n <= 11) and the
compiled labeled census caps at n <= 7, so those route per-call.
"""

from __future__ import annotations

import os

from . import _kernels_py as _pure

_compiled = None
if not os.environ.get("CLIQUEFOLD_PURE"):
    try:
        from . import _kernels as _compiled  # type: ignore
    except ImportError:
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"

_CANON_COMPILED_MAX = 11
_CENSUS_COMPILED_MAX = 7


def canonical_code(n: int, adj) -> int:
    if _compiled is not None and n <= _CANON_COMPILED_MAX:
        return _compiled.canonical_code(n, adj)
    return _pure.canonical_code(n, adj)


def canonical_code_many(n: int, adjs) -> list:
    if _compiled is not None and n <= _CANON_COMPILED_MAX:
        return _compiled.canonical_code_many(n, adjs)
    return _pure.canonical_code_many(n, adjs)


def clique_count_vector(n: int, adj) -> list:
    if _compiled is not None:
        return _compiled.clique_count_vector(n, adj)
    return _pure.clique_count_vector(n, adj)


def labeled_class_count(n: int) -> int:
    if _compiled is not None and n <= _CENSUS_COMPILED_MAX:
        return _compiled.labeled_class_count(n)
    return _pure.labeled_class_count(n)
