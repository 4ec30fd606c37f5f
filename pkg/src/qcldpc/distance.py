"""Dimension and exact minimum distance of the expanded code.

Rows and codewords are Python ints (bit v = column v).  Exhaustive search
walks the 2^k message space in Gray-code order, so consecutive codewords differ
by a single basis vector.
"""

from __future__ import annotations

import math
import threading
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .bounds import PolyVector, bound_eq1
from .matrix import PolyMatrix, ScalarMatrix, expand_scalar

INF = math.inf
DEFAULT_MAX_DIM = 28
CHUNK = 1 << 24

ProgressFn = Callable[[int, int], bool | None]


@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    dmin: int | None
    dmin_upper: int | float
    dmin_status: str  # "exact", "upper-only" or "capped"
    witness: int | None = None

    def __str__(self) -> str:
        if self.dmin is not None:
            return f"[{self.n}, {self.k}, {self.dmin}]"
        if self.k == 0:
            return f"[{self.n}, 0, -]"
        upper = "inf" if self.dmin_upper == INF else str(self.dmin_upper)
        return f"[{self.n}, {self.k}, d ≤ {upper}]"


def rref(M: ScalarMatrix) -> tuple[list[int], list[int]]:
    """Reduced row echelon form: (nonzero rows, pivot column of each row)."""
    rows: list[int] = []
    pivots: list[int] = []
    for row in M.rows:
        for piv, prow in zip(pivots, rows):
            if row >> piv & 1:
                row ^= prow
        if not row:
            continue
        p = (row & -row).bit_length() - 1
        for idx, prow in enumerate(rows):
            if prow >> p & 1:
                rows[idx] = prow ^ row
        rows.append(row)
        pivots.append(p)
    return rows, pivots


def gf2_rank(M: ScalarMatrix) -> int:
    return len(rref(M)[0])


def nullspace_basis(M: ScalarMatrix) -> list[int]:
    """Basis of {c : M c^T = 0}, one vector per free column (ascending)."""
    rows, pivots = rref(M)
    pivot_set = set(pivots)
    basis = []
    for f in range(M.n_cols):
        if f in pivot_set:
            continue
        vec = 1 << f
        for piv, prow in zip(pivots, rows):
            if prow >> f & 1:
                vec |= 1 << piv
        basis.append(vec)
    return basis


def _to_words(vec: int, n_words: int) -> np.ndarray:
    mask = (1 << 64) - 1
    return np.array([(vec >> (64 * q)) & mask for q in range(n_words)], dtype=np.uint64)


def _gray_word(basis: list[int], t: int) -> int:
    g = t ^ (t >> 1)
    out = 0
    b = 0
    while g:
        if g & 1:
            out ^= basis[b]
        g >>= 1
        b += 1
    return out


def _split_ranges(total: int, jobs: int) -> list[tuple[int, int]]:
    """Cut [1, total) into at most ``jobs`` contiguous pieces."""
    jobs = max(1, min(jobs, total - 1))
    step = -(-(total - 1) // jobs)
    return [(lo, min(lo + step, total)) for lo in range(1, total, step)]


def min_weight_gray(
    basis: list[int],
    n: int,
    jobs: int = 1,
    progress: ProgressFn | None = None,
) -> tuple[int | None, int | None, bool]:
    """Minimum weight over all nonzero combinations of ``basis``.

    Returns (weight, lightest codeword, completed).  ``progress(done, total)``
    is called roughly every 2^24 steps; returning False stops the search and
    the result then covers only the part visited.
    """
    from ._gray import scan_range

    k = len(basis)
    if k == 0:
        return None, None, True
    if k > 62:
        raise ValueError(f"dimension {k} too large for exhaustive search")
    n_words = max(1, -(-n // 64))
    B = np.stack([_to_words(v, n_words) for v in basis])
    total = 1 << k
    lock = threading.Lock()
    stop = threading.Event()
    done = [0]

    def run(lo: int, hi: int) -> tuple[int, int]:
        word = _to_words(_gray_word(basis, lo - 1), n_words)
        best, best_t = n + 1, -1
        t = lo
        while t < hi and not stop.is_set():
            t_end = min(t + CHUNK, hi)
            best, best_t = scan_range(B, word, t, t_end, best, best_t)
            with lock:
                done[0] += t_end - t
                if progress is not None and progress(done[0], total - 1) is False:
                    stop.set()
            t = t_end
        return best, best_t

    ranges = _split_ranges(total, jobs)
    if len(ranges) == 1:
        results = [run(*ranges[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(ranges)) as pool:
            results = list(pool.map(lambda r: run(*r), ranges))
    best, best_t = min(results)
    if best_t < 0:
        return None, None, not stop.is_set()
    return int(best), _gray_word(basis, int(best_t)), not stop.is_set()


def dmin_upper_witness(H: PolyMatrix) -> tuple[int | float, PolyVector | None]:
    """Lightest nonzero codeword among the permanent constructions."""
    report = bound_eq1(H)
    return report.value, report.witness


def code_dimension(H: PolyMatrix) -> tuple[int, int]:
    """(n, k) of the expanded code."""
    Hs = expand_scalar(H)
    return Hs.n_cols, Hs.n_cols - gf2_rank(Hs)


def dmin_exhaustive(
    H: PolyMatrix,
    max_dim: int = DEFAULT_MAX_DIM,
    jobs: int = 1,
    progress: ProgressFn | None = None,
) -> CodeParams:
    """Exact minimum distance when k <= max_dim, otherwise an upper bound."""
    Hs = expand_scalar(H)
    n = Hs.n_cols
    basis = nullspace_basis(Hs)
    k = len(basis)
    if k == 0:
        return CodeParams(n, 0, None, INF, "exact")
    upper = bound_eq1(H).value if H.J + 1 <= H.L else INF
    if k > max_dim:
        return CodeParams(n, k, None, upper, "upper-only")
    weight, word, complete = min_weight_gray(basis, n, jobs, progress)
    if complete:
        return CodeParams(n, k, weight, weight, "exact", word)
    if weight is not None and weight < upper:
        return CodeParams(n, k, None, weight, "capped", word)
    return CodeParams(n, k, None, upper, "capped")


__all__ = [
    "CodeParams",
    "DEFAULT_MAX_DIM",
    "code_dimension",
    "dmin_exhaustive",
    "dmin_upper_witness",
    "gf2_rank",
    "min_weight_gray",
    "nullspace_basis",
    "rref",
]
