"""Backend selection for the occurrence/enumeration kernels.

The compiled module is used when it imports and the input fits its fixed
buffers; otherwise calls go to the pure-Python implementation.  Setting
``POGP_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os

from pogp import _pykernels as python_backend

try:
    if os.environ.get("POGP_PURE_PYTHON"):
        raise ImportError("pure python forced")
    from pogp import _ckernels as compiled_backend
except ImportError:
    compiled_backend = None

BACKEND = "cython" if compiled_backend is not None else "python"

if compiled_backend is not None:
    _MAXM = compiled_backend.MAX_LETTERS
    _MAXN = compiled_backend.MAX_LENGTH
    _MAXP = compiled_backend.MAX_PATTERNS
else:
    _MAXM = _MAXN = _MAXP = 0


def _fits(n: int, patterns) -> bool:
    return (
        compiled_backend is not None
        and n <= _MAXN
        and len(patterns) <= _MAXP
        and all(1 <= len(letters) <= _MAXM for letters, _ in patterns)
    )


def _pick(n, patterns):
    return compiled_backend if _fits(n, patterns) else python_backend


def occurs_ending_at(vals, end, letters, adj):
    return _pick(len(vals), [(letters, adj)]).occurs_ending_at(vals, end, letters, adj)


def count_occurrences(vals, letters, adj):
    return _pick(len(vals), [(letters, adj)]).count_occurrences(vals, letters, adj)


def contains(vals, letters, adj):
    return _pick(len(vals), [(letters, adj)]).contains(vals, letters, adj)


def count_avoiders(n, patterns, first=0):
    return _pick(n, patterns).count_avoiders(n, patterns, first)


def list_avoiders(n, patterns):
    return _pick(n, patterns).list_avoiders(n, patterns)


def first_difference(n, pat_a, pat_b):
    return _pick(n, [pat_a, pat_b]).first_difference(n, pat_a, pat_b)
