"""Regular weight matrices up to row and column permutation.

Two matrices are equivalent when one is obtained from the other by permuting
rows and columns (no transposition).  Each class is represented by its
lexicographically smallest member, read row by row.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .bounds import bound_eq2
from .matrix import WeightMatrix

MAX_ROWS = 6
MAX_COLS = 8

# class counts that the enumeration is expected to reproduce
REFERENCE_COUNTS: dict[tuple[int, int, int, int, int], int] = {
    (3, 4, 3, 4, 2): 5,
    (3, 4, 3, 4, 3): 8,
}


@dataclass(frozen=True)
class WmClass:
    canonical: WeightMatrix
    bound: int | float


def canonicalize_wm(A: WeightMatrix) -> WeightMatrix:
    """Lexicographically smallest row-major form over all row and column permutations.

    For a fixed row order the best column order simply sorts the columns as
    tuples, so only the J! row orders need to be tried.
    """
    if A.J > MAX_ROWS or A.L > MAX_COLS:
        raise ValueError(f"{A.J}x{A.L} exceeds the {MAX_ROWS}x{MAX_COLS} canonicalisation guard")
    best: tuple[tuple[int, ...], ...] | None = None
    for order in itertools.permutations(A.entries):
        cols = sorted(zip(*order))
        cand = tuple(zip(*cols))
        if best is None or cand < best:
            best = cand
    return WeightMatrix(best if best is not None else ())


def _fill(J: int, L: int, row_sum: int, col_left: list[int], max_entry: int, rows: list[tuple[int, ...]]):
    if len(rows) == J:
        if not any(col_left):
            yield tuple(rows)
        return
    for row in _rows(L, row_sum, col_left, max_entry):
        for i, a in enumerate(row):
            col_left[i] -= a
        rows.append(row)
        yield from _fill(J, L, row_sum, col_left, max_entry, rows)
        rows.pop()
        for i, a in enumerate(row):
            col_left[i] += a


def _rows(L: int, total: int, cap: list[int], max_entry: int, prefix: tuple[int, ...] = ()):
    i = len(prefix)
    if i == L:
        if total == 0:
            yield prefix
        return
    for a in range(min(max_entry, cap[i], total) + 1):
        yield from _rows(L, total - a, cap, max_entry, prefix + (a,))


def enumerate_wm(J: int, L: int, col_sum: int, row_sum: int, max_entry: int) -> list[WmClass]:
    """All classes of J x L matrices with the given column/row sums and entries <= max_entry.

    Sorted by decreasing bound, then by canonical form.
    """
    if J < 1 or L < 1 or J * row_sum != L * col_sum:
        return []
    if J > MAX_ROWS or L > MAX_COLS:
        raise ValueError(f"{J}x{L} exceeds the {MAX_ROWS}x{MAX_COLS} canonicalisation guard")
    seen: set[WeightMatrix] = set()
    for rows in _fill(J, L, row_sum, [col_sum] * L, max_entry, []):
        seen.add(canonicalize_wm(WeightMatrix(rows)))
    classes = [WmClass(A, bound_eq2(A).value if J + 1 <= L else math.inf) for A in seen]
    classes.sort(key=lambda c: (-c.bound, c.canonical.entries))
    return classes


__all__ = ["REFERENCE_COUNTS", "WmClass", "canonicalize_wm", "enumerate_wm"]
