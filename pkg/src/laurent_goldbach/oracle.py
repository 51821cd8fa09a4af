"""Brute-force factorization oracle.

Ground truth for everything the constructive side claims.  It knows nothing
about gaps, hyper-monolithic polynomials or primes beyond divisor lists; it
enumerates candidate factors and keeps those that divide exactly.

Two semirings are supported:

* ``SemiringMode.LAURENT`` -- N0[x, x^-1], whose units are the monomials ``x^k``.
* ``SemiringMode.POLY`` -- N0[x], whose only unit is ``1`` (``x`` is irreducible).
"""
from __future__ import annotations

import enum
import itertools
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .errors import PreconditionViolation, SizeLimit, ZeroPolynomial
from .laurent import ONE, LaurentPoly

CAP_ENV_VAR = "LG_ORACLE_CAP"


class SemiringMode(enum.Enum):
    LAURENT = "laurent"
    POLY = "poly"


@dataclass(frozen=True)
class OracleBounds:
    max_value: int = 24
    max_degree: int = 12

    @classmethod
    def default(cls) -> OracleBounds:
        """Defaults, with the value cap overridable through ``LG_ORACLE_CAP``."""
        raw = os.environ.get(CAP_ENV_VAR)
        if raw:
            return cls(max_value=int(raw))
        return cls()

    def check(self, value: int, degree: int):
        if value > self.max_value or degree > self.max_degree:
            raise SizeLimit(
                f"oracle bounds exceeded: value {value} (max {self.max_value}), "
                f"degree {degree} (max {self.max_degree})"
            )


@dataclass(frozen=True)
class FactorizationWitness:
    """Either a nontrivial factor pair or a record of the exhausted search."""

    factors: Optional[tuple[LaurentPoly, LaurentPoly]]
    max_degree_searched: int
    values_tried: tuple[int, ...]

    @property
    def exhausted(self) -> bool:
        return self.factors is None


def _divisors(n: int) -> list[int]:
    return [d for d in range(2, n // 2 + 1) if n % d == 0]


def _bounded_vectors(caps: Sequence[int], total: int) -> Iterator[tuple[int, ...]]:
    """Vectors ``v`` with ``0 <= v[i] <= caps[i]`` summing to ``total``, in lex order.

    The first and last entries must be >= 1 (a normalized factor of exact degree).
    """
    n = len(caps)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + caps[i]

    def rec(i: int, left: int, acc: list[int]):
        if i == n:
            if left == 0:
                yield tuple(acc)
            return
        lo = 1 if i in (0, n - 1) else 0
        hi = min(caps[i], left)
        for v in range(lo, hi + 1):
            if left - v > suffix[i + 1]:
                continue
            acc.append(v)
            yield from rec(i + 1, left - v, acc)
            acc.pop()

    yield from rec(0, total, [])


def _exact_quotient(a: Sequence[int], g: Sequence[int]) -> Optional[list[int]]:
    """Return ``q`` with ``g*q == a`` and nonnegative integer entries, if any.

    Both sequences are dense, constant term first, ``g[0] >= 1``.
    """
    D, e = len(a) - 1, len(g) - 1
    if e > D:
        return None
    q = []
    for i in range(D - e + 1):
        s = a[i] - sum(g[j] * q[i - j] for j in range(1, min(i, e) + 1))
        if s < 0 or s % g[0]:
            return None
        q.append(s // g[0])
    for i in range(D - e + 1, D + 1):
        s = sum(g[j] * q[i - j] for j in range(max(0, i - (D - e)), min(i, e) + 1))
        if s != a[i]:
            return None
    return q


def _search(f: LaurentPoly, degrees: range) -> Iterator[tuple[LaurentPoly, LaurentPoly]]:
    """Factor pairs ``(g, h)`` of a normalized ``f`` with both values >= 2."""
    a = f.dense()
    value = f.evaluate_at_one()
    for e in degrees:
        for d in _divisors(value):
            # Each coefficient of g is bounded by f's: f_i >= g_i * h_0 and h_0 >= 1.
            for g in _bounded_vectors(a[: e + 1], d):
                q = _exact_quotient(a, g)
                if q is not None:
                    yield LaurentPoly.from_dense(g), LaurentPoly.from_dense(q)


def find_factorization(
    f: LaurentPoly,
    mode: SemiringMode = SemiringMode.LAURENT,
    bounds: Optional[OracleBounds] = None,
) -> FactorizationWitness:
    """Search exhaustively for a factorization of ``f`` into two non-units.

    In Laurent mode the normalized associate is factored and the witness
    multiplies back to it.  In polynomial mode ``f`` must have no negative
    exponents and the witness multiplies back to ``f`` itself.
    """
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    bounds = bounds or OracleBounds.default()
    if mode is SemiringMode.POLY and f.valuation() < 0:
        raise PreconditionViolation("polynomial mode needs nonnegative exponents")
    ft, _ = f.normalize()
    degree = f.degree() if mode is SemiringMode.POLY else ft.degree()
    bounds.check(f.evaluate_at_one(), degree)

    half = ft.degree() // 2
    tried = tuple(_divisors(ft.evaluate_at_one()))
    if mode is SemiringMode.POLY and f.valuation() >= 1 and f != LaurentPoly.monomial(1):
        # x is a non-unit of N0[x]; the cofactor is a non-unit unless f == x.
        return FactorizationWitness((LaurentPoly.monomial(1), f.shift(-1)), half, tried)
    for g, h in _search(ft, range(half + 1)):
        if mode is SemiringMode.POLY:
            h = h.shift(f.valuation())
        return FactorizationWitness((g, h), half, tried)
    return FactorizationWitness(None, half, tried)


@lru_cache(maxsize=None)
def _irreducible(f: LaurentPoly, mode: SemiringMode, bounds: OracleBounds) -> bool:
    if mode is SemiringMode.LAURENT and f.is_unit():
        return False
    if mode is SemiringMode.POLY and f == ONE:
        return False
    return find_factorization(f, mode, bounds).exhausted


def is_irreducible_oracle(
    f: LaurentPoly,
    mode: SemiringMode = SemiringMode.LAURENT,
    bounds: Optional[OracleBounds] = None,
) -> bool:
    if f.is_zero():
        raise ZeroPolynomial("zero is neither a unit nor irreducible")
    return _irreducible(f, mode, bounds or OracleBounds.default())


def monolithic_counterexample(
    f: LaurentPoly, bounds: Optional[OracleBounds] = None
) -> Optional[tuple[LaurentPoly, LaurentPoly]]:
    """A factorization of ``f`` into two non-monomials, if one exists."""
    if f.is_zero():
        raise ZeroPolynomial("monolithic check on the zero polynomial")
    bounds = bounds or OracleBounds.default()
    ft, _ = f.normalize()
    bounds.check(ft.evaluate_at_one(), ft.degree())
    # A normalized factor of degree e >= 1 has at least two terms; so does
    # its cofactor when e <= D - 1.
    for pair in _search(ft, range(1, ft.degree())):
        return pair
    return None


def is_monolithic_oracle(f: LaurentPoly, bounds: Optional[OracleBounds] = None) -> bool:
    return monolithic_counterexample(f, bounds) is None


def enumerate_two_irreducible_splits(
    f: LaurentPoly,
    mode: SemiringMode = SemiringMode.LAURENT,
    bounds: Optional[OracleBounds] = None,
) -> list[tuple[LaurentPoly, LaurentPoly]]:
    """All termwise splits ``f = A + B`` into two irreducibles, ``A <= B`` canonically."""
    if f.is_zero():
        raise ZeroPolynomial("nothing to split")
    bounds = bounds or OracleBounds.default()
    ft, _ = f.normalize()
    degree = f.degree() if mode is SemiringMode.POLY else ft.degree()
    bounds.check(f.evaluate_at_one(), degree)

    out = []
    exps = f.exponents
    for take in itertools.product(*(range(c + 1) for c in f.coefficients)):
        a = LaurentPoly.from_terms(zip(exps, take))
        if a.is_zero() or a == f:
            continue
        b = f - a
        if a.sort_key() > b.sort_key():
            continue
        if is_irreducible_oracle(a, mode, bounds) and is_irreducible_oracle(b, mode, bounds):
            out.append((a, b))
    return out
