from __future__ import annotations

import itertools
import random
from pathlib import Path

import pytest

from qcldpc.matrix import PolyMatrix, ScalarMatrix
from qcldpc.ring import RingPoly

DATA = Path(__file__).resolve().parent.parent / "data"

# shortened Tanner code (type I); exponents are read mod r
TANNER_SHORT = [[1, 2, 4, 8], [5, 10, 20, 9], [25, 19, 7, 14]]
# binomial (3,4)-regular code
BINOMIAL = [[(1, 2), None, 4, 8], [5, 9, (10, 20), None], [None, (19, 25), None, (7, 14)]]
# trinomial (3,4)-regular code
TRINOMIAL = [[(2, 4, 8), None, None, 1], [None, (9, 10, 20), None, 5], [None, None, (7, 14, 19), 25]]
# two-row monomial codes; the first has two 4-cycles
TWO_ROW = [[1, 2, 4, 8], [5, 6, 3, 7]]
TWO_ROW_FREE = [[1, 2, 4, 8], [6, 5, 3, 9]]
# introductory 3x4 code at r = 3 and its printed binary expansion
INTRO = [[(0, 1), 0, None, 2], [2, 0, 1, 2], [None, 1, (0, 2), 1]]
INTRO_SCALAR = [
    "101100000010",
    "110010000001",
    "011001000100",
    "010100001010",
    "001010100001",
    "100001010100",
    "000001110001",
    "000100011100",
    "000010101010",
]


def poly_matrix(r: int, rows) -> PolyMatrix:
    return PolyMatrix.from_exponents(r, [[_reduce(e, r) for e in row] for row in rows])


def _reduce(e, r):
    if e is None or isinstance(e, int):
        return e
    return RingPoly.from_exponents(r, e).support


def degenerate_matrix(r: int, f=(), g=(), h=()) -> PolyMatrix:
    """Rank-deficient 3x5 fixture: row 2 is the sum of rows 0 and 1 on the first four columns."""
    return PolyMatrix.from_exponents(
        r,
        [
            [0, 0, 0, 0, tuple(f)],
            [0, 1, 2, 3, tuple(g)],
            [None, (0, 1), (0, 2), (0, 3), tuple(h)],
        ],
    )


def random_poly_matrix(
    rng: random.Random, J: int, L: int, r: int, max_weight: int = 1, p_zero: float = 0.2
) -> PolyMatrix:
    rows = []
    for _ in range(J):
        row = []
        for _ in range(L):
            if rng.random() < p_zero:
                row.append(None)
            else:
                w = rng.randint(1, min(max_weight, r))
                row.append(tuple(sorted(rng.sample(range(r), w))))
        rows.append(row)
    return PolyMatrix.from_exponents(r, rows)


# ---------------------------------------------------------------------------
# independent oracles


def brute_force_perm_poly(B: PolyMatrix) -> RingPoly:
    """Sum over all m! permutations, each term a plain ring product."""
    m = B.J
    total = RingPoly.zero(B.r)
    for perm in itertools.permutations(range(m)):
        term = RingPoly(B.r, (0,))
        for j, i in enumerate(perm):
            term = term * B[j, i]
        total = total + term
    return total


def naive_min_weight(basis: list[int]) -> int | None:
    """Minimum weight of the span by plain subset enumeration (no Gray code)."""
    best = None
    k = len(basis)
    for mask in range(1, 1 << k):
        word = 0
        for b in range(k):
            if mask >> b & 1:
                word ^= basis[b]
        w = word.bit_count()
        if best is None or w < best:
            best = w
    return best


def brute_force_dmin(Hs: ScalarMatrix) -> int | None:
    """Minimum weight of a nonzero word with zero syndrome, by scanning all 2^n words."""
    best = None
    for word in range(1, 1 << Hs.n_cols):
        if Hs.syndrome(word) == 0:
            w = word.bit_count()
            if best is None or w < best:
                best = w
    return best


def simple_cycle_girth(n_vertices: int, edges: list[tuple[int, int]]) -> int | float:
    """Shortest simple cycle by enumerating paths of bounded length, shortest first.

    Each cycle is found from its smallest vertex, walking only through larger ones.
    """
    adj: list[list[int]] = [[] for _ in range(n_vertices)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)

    def closes(start: int, v: int, depth: int, length: int, on_path: set[int]) -> bool:
        for w in adj[v]:
            if w == start and depth == length - 1 and depth >= 2:
                return True
            if w > start and w not in on_path and depth < length - 1:
                on_path.add(w)
                found = closes(start, w, depth + 1, length, on_path)
                on_path.remove(w)
                if found:
                    return True
        return False

    for length in range(3, n_vertices + 1):
        if any(closes(s, s, 0, length, {s}) for s in range(n_vertices)):
            return length
    return float("inf")


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)
