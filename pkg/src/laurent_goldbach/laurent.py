"""Sparse Laurent polynomials with positive integer coefficients.

A :class:`LaurentPoly` stores its terms as ``(exponent, coefficient)`` pairs in
strictly descending exponent order with every coefficient at least 1.  The
empty tuple is the zero polynomial.  Index ``i`` always refers to the i-th term
in that order, so ``terms[0]`` is the leading term.
"""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    ExponentOverflow,
    NegativeCoefficient,
    TooFewTerms,
    Underflow,
    ZeroPolynomial,
)

Term = tuple[int, int]

# Exponents are kept within signed 64-bit range.
EXPONENT_LIMIT = 2**63


def _check_exponent(k: int) -> int:
    if not -EXPONENT_LIMIT <= k < EXPONENT_LIMIT:
        raise ExponentOverflow(f"exponent {k} outside signed 64-bit range")
    return k


@dataclass(frozen=True)
class LaurentPoly:
    terms: tuple[Term, ...] = ()

    def __post_init__(self):
        prev = None
        for k, c in self.terms:
            if c < 1:
                raise NegativeCoefficient(f"stored coefficient {c} at x^{k} must be >= 1")
            if prev is not None and k >= prev:
                raise ValueError("terms must be strictly descending by exponent")
            _check_exponent(k)
            prev = k

    # -- construction ---------------------------------------------------------

    @classmethod
    def from_terms(cls, pairs: Iterable[Sequence[int]]) -> LaurentPoly:
        """Build a polynomial from ``(exponent, coefficient)`` pairs.

        Coefficients at equal exponents are summed and zero totals dropped.

        >>> LaurentPoly.from_terms([(7, 4), (2, 3), (1, 1)])
        LaurentPoly('4x^7+3x^2+x')
        >>> LaurentPoly.from_terms([(3, 1), (3, -1)]).is_zero()
        True
        """
        acc: dict[int, int] = defaultdict(int)
        for k, c in pairs:
            acc[int(k)] += int(c)
        for k, c in acc.items():
            if c < 0:
                raise NegativeCoefficient(f"coefficient {c} at x^{k} is negative")
        return cls(tuple(sorted(((k, c) for k, c in acc.items() if c), reverse=True)))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentPoly:
        if coefficient < 0:
            raise NegativeCoefficient(f"coefficient {coefficient} is negative")
        if coefficient == 0:
            return cls()
        return cls(((exponent, coefficient),))

    @classmethod
    def from_dense(cls, coeffs: Sequence[int], offset: int = 0) -> LaurentPoly:
        """``coeffs[i]`` is the coefficient of ``x^(offset + i)``."""
        return cls.from_terms((offset + i, c) for i, c in enumerate(coeffs))

    # -- inspection -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.terms)

    @property
    def coefficients(self) -> tuple[int, ...]:
        return tuple(c for _, c in self.terms)

    def support(self) -> frozenset[int]:
        return frozenset(self.exponents)

    def coefficient(self, exponent: int) -> int:
        for k, c in self.terms:
            if k == exponent:
                return c
        return 0

    def degree(self) -> int:
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no degree")
        return self.terms[0][0]

    def valuation(self) -> int:
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no valuation")
        return self.terms[-1][0]

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_unit(self) -> bool:
        """Units of the Laurent semiring are exactly ``x^k``."""
        return len(self.terms) == 1 and self.terms[0][1] == 1

    def evaluate_at_one(self) -> int:
        return sum(c for _, c in self.terms)

    def gaps(self) -> tuple[int, ...]:
        """Consecutive exponent differences in term order.

        >>> LaurentPoly.from_terms([(7, 4), (2, 3), (1, 1)]).gaps()
        (5, 1)
        """
        if len(self.terms) < 2:
            raise TooFewTerms("gap sequence needs at least two terms")
        ks = self.exponents
        return tuple(ks[i] - ks[i + 1] for i in range(len(ks) - 1))

    def coefficient_gcd(self) -> int:
        if not self.terms:
            raise ZeroPolynomial("gcd of the zero polynomial")
        return math.gcd(*self.coefficients)

    def min_coefficient_term(self) -> tuple[int, int, int]:
        """``(index, exponent, coefficient)`` of the smallest coefficient.

        Ties go to the largest exponent, i.e. the smallest index.
        """
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no terms")
        i = min(range(len(self.terms)), key=lambda j: (self.terms[j][1], j))
        k, c = self.terms[i]
        return i, k, c

    def dense(self) -> list[int]:
        """Coefficients from the valuation up to the degree."""
        if not self.terms:
            return []
        low = self.valuation()
        out = [0] * (self.degree() - low + 1)
        for k, c in self.terms:
            out[k - low] = c
        return out

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return LaurentPoly.from_terms(self.terms + other.terms)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc: dict[int, int] = defaultdict(int)
        for k1, c1 in self.terms:
            for k2, c2 in other.terms:
                acc[_check_exponent(k1 + k2)] += c1 * c2
        return LaurentPoly(tuple(sorted(acc.items(), reverse=True)))

    def subtract_checked(self, other: LaurentPoly) -> LaurentPoly:
        """Exact difference; raises :class:`Underflow` unless ``other <= self`` termwise."""
        acc = dict(self.terms)
        for k, c in other.terms:
            left = acc.get(k, 0) - c
            if left < 0:
                raise Underflow(f"cannot remove {c}x^{k}: only {acc.get(k, 0)} available")
            acc[k] = left
        return LaurentPoly(tuple(sorted(((k, c) for k, c in acc.items() if c), reverse=True)))

    __sub__ = subtract_checked

    def __le__(self, other: LaurentPoly) -> bool:
        """Termwise comparison."""
        return all(c <= other.coefficient(k) for k, c in self.terms)

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by the unit ``x^k``."""
        return LaurentPoly(tuple((_check_exponent(e + k), c) for e, c in self.terms))

    def scale(self, factor: int) -> LaurentPoly:
        if factor < 0:
            raise NegativeCoefficient("negative scale factor")
        if factor == 0:
            return LaurentPoly()
        return LaurentPoly(tuple((e, c * factor) for e, c in self.terms))

    def restrict(self, indices: Iterable[int]) -> LaurentPoly:
        """Keep only the terms at the given term indices."""
        keep = sorted(set(indices))
        return LaurentPoly(tuple(self.terms[i] for i in keep))

    def normalize(self) -> tuple[LaurentPoly, int]:
        """Associate with valuation 0, plus the exponent shift that was applied.

        >>> LaurentPoly.from_terms([(-6, 8), (-4, 3)]).normalize()
        (LaurentPoly('3x^2+8'), 6)
        """
        if not self.terms:
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        s = -self.valuation()
        return self.shift(s), s

    def sort_key(self) -> tuple[Term, ...]:
        return self.terms

    def __str__(self) -> str:
        from .notation import format_poly

        return format_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


ZERO = LaurentPoly()
ONE = LaurentPoly(((0, 1),))


def from_terms(pairs: Iterable[Sequence[int]]) -> LaurentPoly:
    return LaurentPoly.from_terms(pairs)


def add(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f + g


def multiply(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f * g
