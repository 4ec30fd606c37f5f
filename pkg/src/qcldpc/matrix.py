"""Polynomial parity-check matrices, weight matrices and circulant expansion.

Text format (one matrix per file, ``#`` starts a comment)::

    r 3
    0,1 0 - 2
    2   0 1 2
    -   1 0,2 1

The first line fixes the circulant size r; every following line is one row of
entries, where ``-`` is the zero polynomial and ``e1,e2,...`` (strictly
increasing, each below r) lists the exponents of a nonzero polynomial.
"""

from __future__ import annotations

import io
import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import TextIO

from .ring import RingPoly


class ParseError(ValueError):
    """Malformed matrix text; carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _check_indices(indices: Sequence[int], bound: int, what: str) -> tuple[int, ...]:
    out = tuple(sorted(indices))
    for k in out:
        if not 0 <= k < bound:
            raise IndexError(f"{what} index {k} out of range [0, {bound})")
    if len(set(out)) != len(out):
        raise IndexError(f"repeated {what} index in {indices}")
    return out


@dataclass(frozen=True)
class WeightMatrix:
    """Non-negative integer J x L matrix (the proto-matrix)."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        widths = {len(row) for row in self.entries}
        if len(widths) > 1:
            raise ValueError("ragged weight matrix")
        if any(a < 0 for row in self.entries for a in row):
            raise ValueError("weight matrix entries must be non-negative")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> WeightMatrix:
        return cls(tuple(tuple(int(a) for a in row) for row in rows))

    @property
    def J(self) -> int:
        return len(self.entries)

    @property
    def L(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def shape(self) -> tuple[int, int]:
        return self.J, self.L

    def __getitem__(self, idx: tuple[int, int]) -> int:
        j, i = idx
        return self.entries[j][i]

    def row_sums(self) -> list[int]:
        return [sum(row) for row in self.entries]

    def col_sums(self) -> list[int]:
        return [sum(col) for col in zip(*self.entries)] if self.entries else []

    def max_entry(self) -> int:
        return max((a for row in self.entries for a in row), default=0)

    def submatrix(self, rows: Sequence[int] | None, cols: Sequence[int]) -> WeightMatrix:
        rows = range(self.J) if rows is None else _check_indices(rows, self.J, "row")
        cols = _check_indices(cols, self.L, "column")
        return WeightMatrix(tuple(tuple(self.entries[j][i] for i in cols) for j in rows))

    def transpose(self) -> WeightMatrix:
        return WeightMatrix(tuple(zip(*self.entries)))

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class ScalarMatrix:
    """Dense GF(2) matrix with rows packed into Python ints (bit v = column v)."""

    n_rows: int
    n_cols: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n_rows:
            raise ValueError("row count mismatch")
        limit = 1 << self.n_cols
        if any(row < 0 or row >= limit for row in self.rows):
            raise ValueError(f"row has bits beyond column {self.n_cols}")

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]]) -> ScalarMatrix:
        n_cols = len(dense[0]) if dense else 0
        rows = []
        for row in dense:
            if len(row) != n_cols:
                raise ValueError("ragged matrix")
            rows.append(sum(1 << v for v, bit in enumerate(row) if bit & 1))
        return cls(len(rows), n_cols, tuple(rows))

    def bit(self, u: int, v: int) -> int:
        return (self.rows[u] >> v) & 1

    def to_dense(self) -> list[list[int]]:
        return [[(row >> v) & 1 for v in range(self.n_cols)] for row in self.rows]

    def syndrome(self, word: int) -> int:
        """H * word^T packed as an int (bit u = parity of row u)."""
        out = 0
        for u, row in enumerate(self.rows):
            if (row & word).bit_count() & 1:
                out |= 1 << u
        return out

    def row_weights(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def col_weights(self) -> list[int]:
        return [sum((row >> v) & 1 for row in self.rows) for v in range(self.n_cols)]

    def to_text(self) -> str:
        lines = ["".join("1" if (row >> v) & 1 else "0" for v in range(self.n_cols)) for row in self.rows]
        return "\n".join(lines) + ("\n" if lines else "")


@dataclass(frozen=True)
class PolyMatrix:
    """J x L matrix over F2[x]/(x^r - 1)."""

    r: int
    entries: tuple[tuple[RingPoly, ...], ...]

    def __post_init__(self) -> None:
        if not self.entries or not self.entries[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(self.entries[0])
        for row in self.entries:
            if len(row) != width:
                raise ValueError("ragged polynomial matrix")
            for p in row:
                if p.r != self.r:
                    raise ValueError(f"entry modulus {p.r} differs from matrix modulus {self.r}")

    @classmethod
    def from_exponents(cls, r: int, rows: Sequence[Sequence[Iterable[int] | int | None]]) -> PolyMatrix:
        """Build from nested exponent lists; ``None`` or ``()`` is zero, an int a monomial."""

        def entry(item: Iterable[int] | int | None) -> RingPoly:
            if item is None:
                return RingPoly.zero(r)
            if isinstance(item, int):
                return RingPoly.monomial(r, item)
            return RingPoly.from_exponents(r, item)

        return cls(r, tuple(tuple(entry(s) for s in row) for row in rows))

    @property
    def J(self) -> int:
        return len(self.entries)

    @property
    def L(self) -> int:
        return len(self.entries[0])

    @property
    def n(self) -> int:
        return self.L * self.r

    @property
    def shape(self) -> tuple[int, int]:
        return self.J, self.L

    def __getitem__(self, idx: tuple[int, int]) -> RingPoly:
        j, i = idx
        return self.entries[j][i]

    def submatrix(self, rows: Sequence[int] | None, cols: Sequence[int]) -> PolyMatrix:
        rows = range(self.J) if rows is None else _check_indices(rows, self.J, "row")
        cols = _check_indices(cols, self.L, "column")
        return PolyMatrix(self.r, tuple(tuple(self.entries[j][i] for i in cols) for j in rows))

    def weight_matrix(self) -> WeightMatrix:
        return WeightMatrix(tuple(tuple(p.weight for p in row) for row in self.entries))

    def with_modulus(self, r: int) -> PolyMatrix:
        """Same exponents read in a different ring (exponents reduced mod r)."""
        return PolyMatrix(
            r, tuple(tuple(RingPoly.from_exponents(r, p.support) for p in row) for row in self.entries)
        )

    def to_text(self) -> str:
        cells = [[p.to_text() for p in row] for row in self.entries]
        widths = [max(len(cells[j][i]) for j in range(self.J)) for i in range(self.L)]
        lines = [f"r {self.r}"]
        for row in cells:
            lines.append(" ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        return "\n".join(lines) + "\n"


def parse_matrix(text: str | TextIO) -> PolyMatrix:
    """Parse the QCPM text format into a :class:`PolyMatrix`."""
    stream = io.StringIO(text) if isinstance(text, str) else text
    r: int | None = None
    rows: list[list[RingPoly]] = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if r is None:
            if len(tokens) != 2 or tokens[0] != "r":
                raise ParseError("expected header 'r <positive integer>'", lineno)
            try:
                r = int(tokens[1])
            except ValueError:
                raise ParseError(f"invalid modulus {tokens[1]!r}", lineno) from None
            if r < 1:
                raise ParseError(f"modulus must be positive, got {r}", lineno)
            continue
        row = [_parse_entry(tok, r, lineno) for tok in tokens]
        if rows and len(row) != len(rows[0]):
            raise ParseError(f"row has {len(row)} entries, expected {len(rows[0])}", lineno)
        rows.append(row)
    if r is None:
        raise ParseError("empty input: missing 'r' header")
    if not rows:
        raise ParseError("no matrix rows after header")
    return PolyMatrix(r, tuple(tuple(row) for row in rows))


def _parse_entry(token: str, r: int, lineno: int) -> RingPoly:
    if token == "-":
        return RingPoly.zero(r)
    try:
        exps = [int(t) for t in token.split(",")]
    except ValueError:
        raise ParseError(f"malformed entry {token!r}", lineno) from None
    for e in exps:
        if not 0 <= e < r:
            raise ParseError(f"exponent {e} out of range [0, {r}) in entry {token!r}", lineno)
    for a, b in itertools.pairwise(exps):
        if a == b:
            raise ParseError(f"duplicate exponent {a} in entry {token!r}", lineno)
        if a > b:
            raise ParseError(f"exponents must be increasing in entry {token!r}", lineno)
    return RingPoly(r, tuple(exps))


def read_matrix(path: str | Path) -> PolyMatrix:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(fh)


def serialize_matrix(H: PolyMatrix) -> str:
    return H.to_text()


def weight_matrix(H: PolyMatrix) -> WeightMatrix:
    return H.weight_matrix()


def submatrix(H: PolyMatrix, row_set: Sequence[int] | None, col_set: Sequence[int]) -> PolyMatrix:
    return H.submatrix(row_set, col_set)


def regularity(A: WeightMatrix) -> tuple[int, int] | None:
    """(variable degree, check degree) if all column sums agree and all row sums agree."""
    cols = set(A.col_sums())
    rows = set(A.row_sums())
    if len(cols) == 1 and len(rows) == 1:
        return cols.pop(), rows.pop()
    return None


def classify(H: PolyMatrix) -> tuple[int, tuple[int, int] | None]:
    """Return ``(type, regularity)``; type is the largest entry weight."""
    A = H.weight_matrix()
    return A.max_entry(), regularity(A)


def circulant_rows(p: RingPoly) -> list[int]:
    """Rows of the r x r circulant of p: bit (u, v) set iff (u - v) mod r is in the support."""
    r = p.r
    return [sum(1 << ((u - s) % r) for s in p.support) for u in range(r)]


def expand_scalar(H: PolyMatrix) -> ScalarMatrix:
    """Expand H(x) into its Jr x Lr binary parity-check matrix."""
    r = H.r
    rows: list[int] = []
    for j in range(H.J):
        block_rows = [0] * r
        for i, p in enumerate(H.entries[j]):
            if p.is_zero():
                continue
            offset = i * r
            for u, bits in enumerate(circulant_rows(p)):
                block_rows[u] |= bits << offset
        rows.extend(block_rows)
    return ScalarMatrix(H.J * r, H.L * r, tuple(rows))


__all__ = [
    "ParseError",
    "PolyMatrix",
    "ScalarMatrix",
    "WeightMatrix",
    "circulant_rows",
    "classify",
    "expand_scalar",
    "parse_matrix",
    "read_matrix",
    "regularity",
    "serialize_matrix",
    "submatrix",
    "weight_matrix",
]
