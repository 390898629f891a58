"""Backend selection for the enumeration kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module takes over. Set ``COXEULER_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels
from .signed import rule_arrays

if os.environ.get("COXEULER_PURE_PYTHON", "") not in ("", "0"):
    _compiled = None
else:
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"

#: Highest rank the compiled insertion scan handles (bitmap memory).
COMPILED_INSERTION_LIMIT = 9


def sub_census(n: int, backend: str | None = None) -> list[list[int]]:
    if _use_compiled(backend):
        return _compiled.sub_census(n)
    return _pykernels.sub_census(n)


def eulerian_census(n: int, family: str, backend: str | None = None) -> list[int]:
    if _use_compiled(backend):
        return _compiled.eulerian_census(n, family)
    return _pykernels.eulerian_census(n, family)


def hat_scan(n: int, backend: str | None = None):
    if _use_compiled(backend):
        return _compiled.hat_scan(n)
    return _pykernels.hat_scan(n)


def insertion_scan(n: int, sources=None, backend: str | None = None):
    if sources is None and n <= COMPILED_INSERTION_LIMIT and _use_compiled(backend):
        return _compiled.insertion_scan(n, *rule_arrays())
    return _pykernels.insertion_scan(n, sources)


def _use_compiled(backend: str | None) -> bool:
    if backend is None:
        return _compiled is not None
    if backend == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not available")
        return True
    if backend == "python":
        return False
    raise ValueError(f"unknown backend {backend!r}")
