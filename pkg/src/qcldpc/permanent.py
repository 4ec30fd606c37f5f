"""Permanents of small square matrices.

Over F2[x]/(x^r - 1) the permanent coincides with the determinant.  Both
routines expand along rows and memoise partial results by the set of columns
already used, which costs O(2^m * m) ring operations instead of O(m!).
"""

from __future__ import annotations

from .matrix import PolyMatrix, WeightMatrix
from .ring import RingPoly

MAX_SIDE = 12


class PermanentSizeError(ValueError):
    """Matrix too large (or not square) for the expansion routines."""


def _check_square(J: int, L: int) -> None:
    if J != L:
        raise PermanentSizeError(f"permanent needs a square matrix, got {J}x{L}")
    if J > MAX_SIDE:
        raise PermanentSizeError(
            f"{J}x{J} permanent exceeds the {MAX_SIDE}x{MAX_SIDE} guard; split the problem first"
        )


def perm_poly(B: PolyMatrix) -> RingPoly:
    """Permanent (= determinant) of a square polynomial matrix."""
    m = B.J
    _check_square(B.J, B.L)
    zero = RingPoly.zero(B.r)
    if any(all(p.is_zero() for p in row) for row in B.entries):
        return zero
    # partial[mask] = permanent of rows 0..popcount(mask)-1 restricted to columns in mask
    partial: dict[int, RingPoly] = {0: RingPoly(B.r, (0,))}
    for j in range(m):
        row = B.entries[j]
        nxt: dict[int, RingPoly] = {}
        for mask, val in partial.items():
            if val.is_zero():
                continue
            for i in range(m):
                if mask >> i & 1 or row[i].is_zero():
                    continue
                key = mask | (1 << i)
                nxt[key] = nxt.get(key, zero) + val * row[i]
        partial = nxt
        if not partial:
            return zero
    return partial.get((1 << m) - 1, zero)


def perm_int(B: WeightMatrix) -> int:
    """Permanent over the integers."""
    m = B.J
    _check_square(B.J, B.L)
    if m == 0:
        return 1
    partial = {0: 1}
    for j in range(m):
        row = B.entries[j]
        nxt: dict[int, int] = {}
        for mask, val in partial.items():
            for i in range(m):
                if mask >> i & 1 or not row[i]:
                    continue
                key = mask | (1 << i)
                nxt[key] = nxt.get(key, 0) + val * row[i]
        partial = nxt
        if not partial:
            return 0
    return partial.get((1 << m) - 1, 0)


__all__ = ["MAX_SIDE", "PermanentSizeError", "perm_int", "perm_poly"]
