"""Double covers of a QC code from a split H(x) = H1(x) + H2(x).

Block form:        [[H1, H2], [H2, H1]]
Interleaved form:  every entry h = h1 + h2 becomes [[h1, h2], [h2, h1]] in place.

The two forms differ by the perfect shuffle of block indices,
a -> 2 (a mod J) + a // J for rows (and likewise with L for columns).
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

from .cycles import TannerGraph, build_tanner
from .matrix import PolyMatrix, expand_scalar, parse_matrix
from .ring import RingPoly

FOLD = 2


class SplitError(ValueError):
    """The two parts do not form a valid split of H(x)."""


@dataclass(frozen=True)
class CoverSplit:
    part1: PolyMatrix
    part2: PolyMatrix

    def __post_init__(self) -> None:
        a, b = self.part1, self.part2
        if a.shape != b.shape or a.r != b.r:
            raise SplitError(f"parts differ in shape or modulus: {a.shape}/{a.r} vs {b.shape}/{b.r}")
        for j in range(a.J):
            for i in range(a.L):
                if set(a[j, i].support) & set(b[j, i].support):
                    raise SplitError(f"entry ({j},{i}): parts share terms, so some would cancel")

    def combined(self) -> PolyMatrix:
        a, b = self.part1, self.part2
        return PolyMatrix(a.r, tuple(tuple(a[j, i] + b[j, i] for i in range(a.L)) for j in range(a.J)))


def split_auto(H: PolyMatrix) -> CoverSplit:
    """Lowest exponent of each entry goes to part 1, the rest to part 2."""
    zero = RingPoly.zero(H.r)
    rows1, rows2 = [], []
    for j, row in enumerate(H.entries):
        r1, r2 = [], []
        for i, p in enumerate(row):
            if p.weight > 2:
                raise SplitError(
                    f"entry ({j},{i}) = {p} has weight {p.weight}; "
                    "give the split explicitly with --split-file"
                )
            if p.is_zero():
                r1.append(zero)
                r2.append(zero)
            else:
                r1.append(RingPoly(H.r, p.support[:1]))
                r2.append(RingPoly(H.r, p.support[1:]))
        rows1.append(tuple(r1))
        rows2.append(tuple(r2))
    return CoverSplit(PolyMatrix(H.r, tuple(rows1)), PolyMatrix(H.r, tuple(rows2)))


def split_from_part1(H: PolyMatrix, part1: PolyMatrix) -> CoverSplit:
    """Split where part 1 is given and part 2 is the remaining terms of each entry."""
    if part1.shape != H.shape or part1.r != H.r:
        raise SplitError(
            f"split matrix is {part1.shape[0]}x{part1.shape[1]} with r={part1.r}, "
            f"expected {H.J}x{H.L} with r={H.r}"
        )
    rows2 = []
    for j in range(H.J):
        row = []
        for i in range(H.L):
            whole, p1 = set(H[j, i].support), set(part1[j, i].support)
            if not p1 <= whole:
                raise SplitError(f"entry ({j},{i}): {part1[j, i]} is not part of {H[j, i]}")
            row.append(RingPoly(H.r, tuple(sorted(whole - p1))))
        rows2.append(tuple(row))
    return CoverSplit(part1, PolyMatrix(H.r, tuple(rows2)))


def read_split(H: PolyMatrix, path: str | Path) -> CoverSplit:
    with open(path, encoding="utf-8") as fh:
        return split_from_part1(H, parse_matrix(fh))


def build_cover_block(s: CoverSplit) -> PolyMatrix:
    a, b = s.part1.entries, s.part2.entries
    top = tuple(ra + rb for ra, rb in zip(a, b))
    bottom = tuple(rb + ra for ra, rb in zip(a, b))
    return PolyMatrix(s.part1.r, top + bottom)


def build_cover_interleaved(s: CoverSplit) -> PolyMatrix:
    a, b = s.part1, s.part2
    rows = []
    for j in range(a.J):
        even, odd = [], []
        for i in range(a.L):
            even += [a[j, i], b[j, i]]
            odd += [b[j, i], a[j, i]]
        rows += [tuple(even), tuple(odd)]
    return PolyMatrix(a.r, tuple(rows))


def shuffle_index(a: int, size: int) -> int:
    """Block-form index (0 <= a < 2 size) to its interleaved-form position."""
    return FOLD * (a % size) + a // size


def block_to_interleaved(M: PolyMatrix, J: int, L: int) -> PolyMatrix:
    """Apply the perfect shuffle to rows and columns of a block-form cover."""
    if M.shape != (FOLD * J, FOLD * L):
        raise ValueError(f"expected a {FOLD * J}x{FOLD * L} matrix, got {M.J}x{M.L}")
    rows: list[list[RingPoly]] = [[None] * M.L for _ in range(M.J)]  # type: ignore[list-item]
    for a in range(M.J):
        for c in range(M.L):
            rows[shuffle_index(a, J)][shuffle_index(c, L)] = M[a, c]
    return PolyMatrix(M.r, tuple(tuple(row) for row in rows))


def is_cover_map(
    cover: TannerGraph,
    base: TannerGraph,
    var_map: Sequence[int],
    chk_map: Sequence[int],
    fold: int = FOLD,
) -> bool:
    """Check that the vertex maps form a ``fold``-sheeted covering of ``base``.

    Every fiber must have ``fold`` vertices, and at every cover vertex the
    neighbourhood must map bijectively onto the neighbourhood of its image.
    """
    if cover.n_var != fold * base.n_var or cover.n_chk != fold * base.n_chk:
        return False
    for images, size in ((var_map, base.n_var), (chk_map, base.n_chk)):
        counts = [0] * size
        for b in images:
            counts[b] += 1
        if any(c != fold for c in counts):
            return False
    for v, nbrs in enumerate(cover.var_adj):
        if sorted(chk_map[u] for u in nbrs) != sorted(base.var_adj[var_map[v]]):
            return False
    for u, nbrs in enumerate(cover.chk_adj):
        if sorted(var_map[v] for v in nbrs) != sorted(base.chk_adj[chk_map[u]]):
            return False
    return True


def cover_vertex_maps(cover: PolyMatrix, base: PolyMatrix, layout: str = "block") -> tuple[list[int], list[int]]:
    """Scalar vertex projections (variables, checks) for the given layout."""
    r = base.r
    if layout == "block":
        var_map = [(v // r % base.L) * r + v % r for v in range(cover.L * r)]
        chk_map = [(u // r % base.J) * r + u % r for u in range(cover.J * r)]
    elif layout == "interleaved":
        var_map = [(v // r // FOLD) * r + v % r for v in range(cover.L * r)]
        chk_map = [(u // r // FOLD) * r + u % r for u in range(cover.J * r)]
    else:
        raise ValueError(f"unknown layout {layout!r}")
    return var_map, chk_map


def verify_cover_projection(
    cover: PolyMatrix, base: PolyMatrix, fold: int = FOLD, layout: str = "block"
) -> bool:
    """True iff the Tanner graph of ``cover`` double-covers that of ``base``."""
    if fold != FOLD:
        raise ValueError("only double covers are supported")
    if cover.shape != (FOLD * base.J, FOLD * base.L) or cover.r != base.r:
        raise ValueError(
            f"cover must be {FOLD * base.J}x{FOLD * base.L} with r={base.r}, "
            f"got {cover.J}x{cover.L} with r={cover.r}"
        )
    var_map, chk_map = cover_vertex_maps(cover, base, layout)
    return is_cover_map(
        build_tanner(expand_scalar(cover)), build_tanner(expand_scalar(base)), var_map, chk_map
    )


def cover_distance_bounds(base_dmin: int) -> tuple[int, int]:
    """dmin(C) <= dmin(cover code) <= 2 dmin(C)."""
    if base_dmin < 1:
        raise ValueError("base minimum distance must be positive")
    return base_dmin, FOLD * base_dmin


__all__ = [
    "CoverSplit",
    "SplitError",
    "block_to_interleaved",
    "build_cover_block",
    "build_cover_interleaved",
    "cover_distance_bounds",
    "cover_vertex_maps",
    "is_cover_map",
    "read_split",
    "shuffle_index",
    "split_auto",
    "split_from_part1",
    "verify_cover_projection",
]
