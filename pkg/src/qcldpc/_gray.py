"""Compiled inner loop for Gray-code codeword enumeration."""

from __future__ import annotations

import numpy as np
from llvmlite import ir
from numba import njit, types
from numba.extending import intrinsic


@intrinsic
def _popcount64(typingctx, x):
    if not isinstance(x, types.Integer):
        return None

    def codegen(context, builder, signature, args):
        return builder.ctpop(args[0])

    return types.uint64(types.uint64), codegen


@intrinsic
def _cttz64(typingctx, x):
    if not isinstance(x, types.Integer):
        return None

    def codegen(context, builder, signature, args):
        return builder.cttz(args[0], ir.Constant(ir.IntType(1), 0))

    return types.uint64(types.uint64), codegen


@njit(nogil=True, cache=True)
def scan_range(basis, word, t0, t1, best, best_t):
    """Visit Gray indices t0 <= t < t1.

    ``word`` must hold the codeword of gray(t0 - 1) and is advanced in place.
    Returns the updated (best weight, index attaining it).
    """
    n_words = word.shape[0]
    for t in range(t0, t1):
        b = _cttz64(np.uint64(t))
        row = basis[b]
        w = 0
        for q in range(n_words):
            word[q] ^= row[q]
            w += _popcount64(word[q])
        if w < best:
            best = w
            best_t = t
    return best, best_t
