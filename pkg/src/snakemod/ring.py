"""Exact integer polynomial ring on fundamental class symbols V[i,j].

This is the computable shadow of the Grothendieck ring: classes are
polynomials in the commuting symbols V[i,j] with [i,j] interior at rank n.
Out-of-range symbols are zero, boundary symbols (length 0 or n+1) are the
unit; products of symbols represent standard module classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable

from .errors import RankMismatchError
from .intervals import Interval
from .lweight import LWeight


def _merge_monomial(pairs: Iterable[tuple[Interval, int]]) -> tuple[tuple[Interval, int], ...]:
    acc: dict[Interval, int] = {}
    for iv, m in pairs:
        acc[iv] = acc.get(iv, 0) + m
    out = tuple((iv, m) for iv, m in sorted(acc.items()) if m != 0)
    if any(m < 0 for _, m in out):
        raise ValueError("monomial multiplicities must be positive")
    return out


@dataclass(frozen=True)
class Monomial:
    gens: tuple[tuple[Interval, int], ...]

    @classmethod
    def one(cls) -> "Monomial":
        return cls(())

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Interval, int]]) -> "Monomial":
        return cls(_merge_monomial(pairs))

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.gens)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial.from_pairs((*self.gens, *other.gens))

    def mirrored(self) -> "Monomial":
        return Monomial.from_pairs((iv.mirrored(), m) for iv, m in self.gens)

    def sort_key(self) -> tuple:
        # graded, then lexicographic on the sorted generator list
        return (self.degree, tuple((iv.i, iv.j, m) for iv, m in self.gens))

    def __str__(self) -> str:
        if not self.gens:
            return "1"
        return "*".join(
            f"V[{iv.i},{iv.j}]" + (f"^{m}" if m != 1 else "") for iv, m in self.gens
        )


@dataclass(frozen=True)
class RingElement:
    """An integer polynomial in the fundamental class symbols, at rank n."""

    n: int
    terms: tuple[tuple[Monomial, int], ...]

    @classmethod
    def zero(cls, n: int) -> "RingElement":
        return cls(n, ())

    @classmethod
    def one(cls, n: int) -> "RingElement":
        return cls(n, ((Monomial.one(), 1),))

    @classmethod
    def from_terms(cls, n: int, items: Iterable[tuple[Monomial, int]]) -> "RingElement":
        acc: dict[Monomial, int] = {}
        for mono, c in items:
            acc[mono] = acc.get(mono, 0) + c
        terms = tuple(
            (mono, c)
            for mono, c in sorted(acc.items(), key=lambda t: t[0].sort_key())
            if c != 0
        )
        return cls(n, terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: Monomial) -> int:
        for m, c in self.terms:
            if m == mono:
                return c
        return 0

    def _require_same_rank(self, other: "RingElement") -> None:
        if self.n != other.n:
            raise RankMismatchError(f"rank mismatch: {self.n} != {other.n}")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._require_same_rank(other)
        return RingElement.from_terms(self.n, (*self.terms, *other.terms))

    def __neg__(self) -> "RingElement":
        return RingElement(self.n, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def __mul__(self, other: "RingElement") -> "RingElement":
        self._require_same_rank(other)
        items = []
        for ma, ca in self.terms:
            for mb, cb in other.terms:
                items.append((ma * mb, ca * cb))
        return RingElement.from_terms(self.n, items)

    def mirrored(self) -> "RingElement":
        return RingElement.from_terms(self.n, ((m.mirrored(), c) for m, c in self.terms))

    def dimension(self) -> int:
        """Evaluate each symbol V[i,j] at binomial(n+1, j-i), exactly."""
        total = 0
        for mono, c in self.terms:
            val = c
            for iv, m in mono.gens:
                val *= comb(self.n + 1, iv.length) ** m
            total += val
        return total

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"coeff": c, "mono": [[iv.i, iv.j, m] for iv, m in mono.gens]}
                for mono, c in self.terms
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "RingElement":
        items = []
        for term in data["terms"]:
            mono = Monomial.from_pairs(
                (Interval(int(i), int(j)), int(m)) for i, j, m in term["mono"]
            )
            items.append((mono, int(term["coeff"])))
        return cls.from_terms(int(data["n"]), items)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.terms:
            sign = "+" if c >= 0 else "-"
            mag = abs(c)
            body = str(mono) if mag == 1 and mono.gens else f"{mag}*{mono}" if mono.gens else str(mag)
            parts.append(f"{sign} {body}")
        joined = " ".join(parts)
        return joined[2:] if joined.startswith("+ ") else joined


def fundamental_class(iv: Interval, n: int) -> RingElement:
    """The class of the symbol at [i, j]: zero out of range, unit on the boundary."""
    if iv.length < 0 or iv.length > n + 1:
        return RingElement.zero(n)
    if iv.is_boundary(n):
        return RingElement.one(n)
    return RingElement(n, ((Monomial(((iv, 1),)), 1),))


def weyl_class(w: LWeight) -> RingElement:
    """The standard module class of a dominant weight: the product of its generators."""
    if not w.is_dominant():
        raise ValueError(f"weight {w} has a negative exponent; no standard class")
    return RingElement(w.n, ((Monomial(w.gens), 1),))
