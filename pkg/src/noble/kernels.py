"""Kernel selection.

The compiled module ``noble._ckernels`` is used when it imports and the
semigroup fits one machine word of mask bits; otherwise the pure-Python
versions in ``noble._purekernels`` run.  Set ``NOBLE_PURE=1`` to force the
fallback.
"""

import os

from . import _purekernels as pure

try:
    if os.environ.get("NOBLE_PURE", "") not in ("", "0"):
        raise ImportError("pure kernels requested")
    from . import _ckernels as compiled
except ImportError:  # pragma: no cover - depends on build
    compiled = None

BACKEND = "cython" if compiled is not None else "python"
WORD_BITS = 64


def _pick(n):
    if compiled is not None and n <= WORD_BITS:
        return compiled
    return pure


def filter_closure(S, seed):
    return _pick(S.n).filter_closure(S.table, S.inv, S.up, seed, S.full_mask)


def enumerate_filter_masks(S, seeds=None):
    return _pick(S.n).enumerate_filters(S.table, S.inv, S.up, S.n, seeds)


def transitive_search(gen_inv, relations, words, max_degree, first_only=True, backend=None):
    mod = {"cython": compiled, "python": pure}.get(backend) if backend else _pick(0)
    if mod is None:
        mod = pure
    return mod.transitive_search(gen_inv, relations, words, max_degree, first_only)
