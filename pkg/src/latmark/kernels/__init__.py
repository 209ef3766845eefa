"""Hot-loop kernels with a compiled fast path.

The Cython module is used when it was built and ``LATMARK_PURE_PYTHON`` is
not set.  Inputs whose magnitudes could overflow int64 arithmetic are always
sent to the pure-Python implementation, which is exact for any size.
"""

from __future__ import annotations

import importlib
import os

from . import _pykernels


def _load_compiled():
    if os.environ.get("LATMARK_PURE_PYTHON", "") in ("1", "true", "yes"):
        return None
    try:
        return importlib.import_module(__name__ + "._ckernels")
    except ImportError:  # extension not built
        return None


_ckernels = _load_compiled()

BACKEND = "cython" if _ckernels is not None else "python"

_SAFE = 1 << 28


def _small(*groups) -> bool:
    for rows in groups:
        for row in rows:
            for x in row:
                if x >= _SAFE or x <= -_SAFE:
                    return False
    return True


def graver_completion(generators, n):
    gens = [tuple(g) for g in generators]
    if _ckernels is not None and _small(gens):
        try:
            return _ckernels.graver_completion(gens, n)
        except OverflowError:
            pass
    return _pykernels.graver_completion(gens, n)


def enumerate_points(u, basis, coeffs, rhs, cap):
    if _ckernels is not None and _small([u], basis, rhs, *coeffs):
        try:
            return _ckernels.enumerate_points(u, basis, coeffs, rhs, cap)
        except OverflowError:
            pass
    return _pykernels.enumerate_points(u, basis, coeffs, rhs, cap)


def component_labels(elements, moves):
    if _ckernels is not None and _small(elements, *moves):
        try:
            return _ckernels.component_labels(elements, moves)
        except OverflowError:
            pass
    return _pykernels.component_labels(elements, moves)


__all__ = ["BACKEND", "graver_completion", "enumerate_points", "component_labels"]
