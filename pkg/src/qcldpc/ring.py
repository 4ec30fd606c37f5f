"""Arithmetic in the binary polynomial ring F2[x]/(x^r - 1).

Elements are stored as a sorted tuple of exponents in ``[0, r)``; with
coefficients in F2 the support determines the polynomial completely.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass


class ModulusMismatchError(ValueError):
    """Raised when combining polynomials that live in different rings."""


@dataclass(frozen=True)
class RingPoly:
    """An element of F2[x]/(x^r - 1).

    ``support`` lists the exponents with coefficient 1, strictly increasing.
    """

    r: int
    support: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError(f"modulus r must be positive, got {self.r}")
        prev = -1
        for e in self.support:
            if not 0 <= e < self.r:
                raise ValueError(f"exponent {e} outside [0, {self.r})")
            if e <= prev:
                raise ValueError(f"support must be strictly increasing: {self.support}")
            prev = e

    @classmethod
    def zero(cls, r: int) -> RingPoly:
        return cls(r, ())

    @classmethod
    def monomial(cls, r: int, e: int) -> RingPoly:
        return cls(r, (e % r,))

    @classmethod
    def from_exponents(cls, r: int, exponents: Iterable[int]) -> RingPoly:
        """Build a polynomial from arbitrary integer exponents.

        Exponents are reduced mod r and repeated terms cancel in pairs.
        """
        odd: set[int] = set()
        for e in exponents:
            odd ^= {e % r}
        return cls(r, tuple(sorted(odd)))

    @property
    def weight(self) -> int:
        return len(self.support)

    def is_zero(self) -> bool:
        return not self.support

    def __bool__(self) -> bool:
        return bool(self.support)

    def _check(self, other: RingPoly) -> None:
        if self.r != other.r:
            raise ModulusMismatchError(f"moduli differ: {self.r} != {other.r}")

    def __add__(self, other: RingPoly) -> RingPoly:
        self._check(other)
        return RingPoly(self.r, tuple(sorted(set(self.support) ^ set(other.support))))

    __sub__ = __add__

    def __mul__(self, other: RingPoly) -> RingPoly:
        self._check(other)
        if not self.support or not other.support:
            return RingPoly(self.r, ())
        r = self.r
        odd: set[int] = set()
        for a in self.support:
            for b in other.support:
                odd ^= {(a + b) % r}
        return RingPoly(r, tuple(sorted(odd)))

    def shift(self, s: int) -> RingPoly:
        """Multiply by the monomial x^s."""
        return RingPoly(self.r, tuple(sorted((e + s) % self.r for e in self.support)))

    def to_bits(self) -> int:
        """Coefficient vector packed into an int (bit e is the x^e coefficient)."""
        out = 0
        for e in self.support:
            out |= 1 << e
        return out

    def to_text(self) -> str:
        """Entry syntax of the matrix file format: ``-`` or ``e1,e2,...``."""
        if not self.support:
            return "-"
        return ",".join(str(e) for e in self.support)

    def __str__(self) -> str:
        if not self.support:
            return "0"
        return " + ".join("1" if e == 0 else "x" if e == 1 else f"x^{e}" for e in self.support)


def poly_add(a: RingPoly, b: RingPoly) -> RingPoly:
    return a + b


def poly_mul(a: RingPoly, b: RingPoly) -> RingPoly:
    return a * b


def poly_weight(a: RingPoly) -> int:
    return a.weight


__all__ = [
    "ModulusMismatchError",
    "RingPoly",
    "poly_add",
    "poly_mul",
    "poly_weight",
]
