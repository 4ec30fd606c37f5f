"""Minimum-distance upper bounds for QC codes built from permanents.

For every set S of J+1 columns, the vector whose i-th entry is the permanent
of H restricted to the columns S minus {i} is a codeword.  The weights of those
codewords bound d_min from above (``bound_eq1``); replacing each permanent by
the integer permanent of the weight matrix gives an r-independent bound
(``bound_eq2``).  Both take the minimum over the *nonzero* sums only.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterator
from dataclasses import dataclass, field

from .cycles import CycleWitness, equal_products, require_type1
from .matrix import PolyMatrix, WeightMatrix
from .permanent import perm_int, perm_poly
from .ring import RingPoly

INF = math.inf


@dataclass(frozen=True)
class PolyVector:
    """Length-L vector over F2[x]/(x^r - 1); the polynomial form of a length-Lr word."""

    r: int
    entries: tuple[RingPoly, ...]

    @property
    def weight(self) -> int:
        return sum(p.weight for p in self.entries)

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.entries)

    def to_bits(self) -> int:
        """Scalar codeword packed into an int: coefficient s of entry i is bit i*r + s."""
        out = 0
        for i, p in enumerate(self.entries):
            out |= p.to_bits() << (i * self.r)
        return out

    def __str__(self) -> str:
        return "(" + ", ".join(str(p) for p in self.entries) + ")"


@dataclass(frozen=True)
class BoundReport:
    value: int | float
    subset: tuple[int, ...] | None = None
    witness: PolyVector | None = None
    cycle: CycleWitness | None = field(default=None, compare=False)

    @property
    def finite(self) -> bool:
        return self.value != INF


def syndrome(H: PolyMatrix, c: PolyVector) -> tuple[RingPoly, ...]:
    """H(x) c(x)^T computed in the ring."""
    if c.r != H.r or len(c.entries) != H.L:
        raise ValueError("vector does not match the matrix")
    out = []
    for row in H.entries:
        acc = RingPoly.zero(H.r)
        for h, ci in zip(row, c.entries):
            acc = acc + h * ci
        out.append(acc)
    return tuple(out)


def _check_subset(H: PolyMatrix, S: tuple[int, ...]) -> None:
    if H.J + 1 > H.L:
        raise ValueError(f"need J+1 <= L, got J={H.J}, L={H.L}")
    if len(S) != H.J + 1 or len(set(S)) != len(S):
        raise ValueError(f"column set must have {H.J + 1} distinct indices, got {S}")
    if any(not 0 <= i < H.L for i in S):
        raise ValueError(f"column set {S} not inside [0, {H.L})")


def construct_codeword(H: PolyMatrix, S: tuple[int, ...] | list[int]) -> PolyVector:
    """Codeword whose entry i in S is perm(H restricted to S minus {i}), zero elsewhere."""
    S = tuple(sorted(S))
    _check_subset(H, S)
    entries = [RingPoly.zero(H.r)] * H.L
    for i in S:
        entries[i] = perm_poly(H.submatrix(None, [k for k in S if k != i]))
    c = PolyVector(H.r, tuple(entries))
    if any(s for s in syndrome(H, c)):
        raise RuntimeError(f"constructed vector for S={S} is not a codeword")
    return c


def _subsets(L: int, size: int) -> Iterator[tuple[int, ...]]:
    return itertools.combinations(range(L), size)


def eq1_terms(H: PolyMatrix) -> Iterator[tuple[tuple[int, ...], PolyVector]]:
    """(S, codeword) for every size-(J+1) column set, lexicographic order."""
    if H.J + 1 > H.L:
        raise ValueError(f"no column sets of size J+1={H.J + 1} among L={H.L} columns")
    for S in _subsets(H.L, H.J + 1):
        yield S, construct_codeword(H, S)


def eq2_terms(A: WeightMatrix) -> Iterator[tuple[tuple[int, ...], int]]:
    """(S, sum of integer permanents) for every size-(J+1) column set."""
    if A.J + 1 > A.L:
        raise ValueError(f"no column sets of size J+1={A.J + 1} among L={A.L} columns")
    for S in _subsets(A.L, A.J + 1):
        yield S, sum(perm_int(A.submatrix(None, [k for k in S if k != i])) for i in S)


def bound_eq1(H: PolyMatrix) -> BoundReport:
    """Lightest nonzero permanent codeword; +inf if every such codeword vanishes."""
    best = BoundReport(INF)
    for S, c in eq1_terms(H):
        w = c.weight
        if 0 < w < best.value:
            best = BoundReport(w, S, c)
    return best


def bound_eq2(A: WeightMatrix | PolyMatrix) -> BoundReport:
    """Weight-matrix bound: smallest nonzero sum of integer permanents."""
    if isinstance(A, PolyMatrix):
        A = A.weight_matrix()
    best = BoundReport(INF)
    for S, total in eq2_terms(A):
        if 0 < total < best.value:
            best = BoundReport(total, S)
    return best


def bound_factorial(J: int) -> int:
    if J < 1:
        raise ValueError("J must be positive")
    return math.factorial(J + 1)


def girth_refined_value(J: int, R: int) -> int:
    """(J+1)! - 2 (J-R+1)! for a type-I matrix with equal elementary products of order R."""
    return math.factorial(J + 1) - 2 * math.factorial(J - R + 1)


def bound_girth_adjusted(H: PolyMatrix) -> BoundReport:
    """(J+1)! tightened by the smallest R with equal nonzero elementary products.

    R = 2 corresponds to a 4-cycle, R = 3 to a 6-cycle.  Smaller R subtracts
    more, so the search stops at the first R that has a witness.
    """
    require_type1(H)
    if H.J + 1 > H.L:
        raise ValueError(f"need J+1 <= L, got J={H.J}, L={H.L}")
    for R in range(2, min(H.J, H.L, 5) + 1):
        w = equal_products(H, R)
        if w is not None:
            return BoundReport(girth_refined_value(H.J, R), cycle=w)
    return BoundReport(bound_factorial(H.J))


__all__ = [
    "INF",
    "BoundReport",
    "PolyVector",
    "bound_eq1",
    "bound_eq2",
    "bound_factorial",
    "bound_girth_adjusted",
    "construct_codeword",
    "eq1_terms",
    "eq2_terms",
    "girth_refined_value",
    "syndrome",
]
