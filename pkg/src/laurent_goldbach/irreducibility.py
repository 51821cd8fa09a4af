"""Sufficient irreducibility criteria, packaged as re-checkable certificates.

A certificate is data.  :func:`verify_certificate` re-derives every side
condition from the subject polynomial and never trusts the producer.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import ShapeMismatch, ZeroPolynomial
from .laurent import LaurentPoly
from .oracle import OracleBounds, SemiringMode, is_irreducible_oracle
from .primes import is_prime


@dataclass(frozen=True)
class PrimeEvaluation:
    """Value at one is prime, so any factorization has a cofactor of value 1."""

    p: int
    kind = "PrimeEvaluation"

    def data(self) -> dict:
        return {"p": self.p}


@dataclass(frozen=True)
class HyperMonolithicGcd1:
    """Hyper-monolithic (hence monolithic) with coprime coefficients."""

    kind = "HyperMonolithicGcd1"

    def data(self) -> dict:
        return {}


@dataclass(frozen=True)
class QuadrinomialGap:
    """Four unit terms whose first and last gaps differ: not a binomial product."""

    exponents: tuple[int, int, int, int]
    kind = "QuadrinomialGap"

    def data(self) -> dict:
        return {"exponents": list(self.exponents)}


@dataclass(frozen=True)
class OracleExhaustion:
    """The brute-force oracle found no factorization within ``bounds``."""

    bounds: OracleBounds = field(default_factory=OracleBounds)
    kind = "OracleExhaustion"

    def data(self) -> dict:
        return {"max_value": self.bounds.max_value, "max_degree": self.bounds.max_degree}


Certificate = Union[PrimeEvaluation, HyperMonolithicGcd1, QuadrinomialGap, OracleExhaustion]


def certificate_from_dict(d: dict) -> Certificate:
    kind, data = d["kind"], d.get("data", {})
    if kind == PrimeEvaluation.kind:
        return PrimeEvaluation(int(data["p"]))
    if kind == HyperMonolithicGcd1.kind:
        return HyperMonolithicGcd1()
    if kind == QuadrinomialGap.kind:
        return QuadrinomialGap(tuple(int(k) for k in data["exponents"]))
    if kind == OracleExhaustion.kind:
        return OracleExhaustion(OracleBounds(int(data["max_value"]), int(data["max_degree"])))
    raise ValueError(f"unknown certificate kind {kind!r}")


def is_hyper_monolithic(f: LaurentPoly) -> bool:
    """The strictly smallest gap sits at the front or at the back.

    Binomials qualify vacuously; monomials and zero do not.

    >>> is_hyper_monolithic(LaurentPoly.from_terms([(7, 4), (2, 3), (1, 1)]))
    True
    >>> is_hyper_monolithic(LaurentPoly.from_terms([(4, 1), (2, 1), (0, 1)]))
    False
    """
    if len(f) < 2:
        return False
    d = f.gaps()
    front = all(d[0] < di for di in d[1:])
    back = all(d[-1] < dj for dj in d[:-1])
    return front or back


def check_quadrinomial_gap(f: LaurentPoly) -> bool:
    if len(f) != 4 or any(c != 1 for c in f.coefficients):
        raise ShapeMismatch("quadrinomial criterion needs exactly four unit terms")
    k = f.exponents
    return k[0] - k[1] != k[2] - k[3]


def certify_irreducible(
    f: LaurentPoly,
    allow_oracle: bool = False,
    bounds: Optional[OracleBounds] = None,
) -> Optional[Certificate]:
    """First criterion that applies, cheapest first; ``None`` proves nothing."""
    if f.is_zero():
        raise ZeroPolynomial("cannot certify the zero polynomial")
    value = f.evaluate_at_one()
    if is_prime(value):
        return PrimeEvaluation(value)
    if is_hyper_monolithic(f) and f.coefficient_gcd() == 1:
        return HyperMonolithicGcd1()
    if len(f) == 4 and all(c == 1 for c in f.coefficients) and check_quadrinomial_gap(f):
        return QuadrinomialGap(f.exponents)
    if allow_oracle:
        bounds = bounds or OracleBounds.default()
        if is_irreducible_oracle(f, SemiringMode.LAURENT, bounds):
            return OracleExhaustion(bounds)
    return None


def verify_certificate(f: LaurentPoly, cert: Certificate) -> bool:
    """Re-check ``cert`` against ``f`` from scratch."""
    if f.is_zero():
        return False
    if isinstance(cert, PrimeEvaluation):
        return cert.p == f.evaluate_at_one() and is_prime(cert.p)
    if isinstance(cert, HyperMonolithicGcd1):
        return is_hyper_monolithic(f) and f.coefficient_gcd() == 1
    if isinstance(cert, QuadrinomialGap):
        if len(f) != 4 or any(c != 1 for c in f.coefficients):
            return False
        return tuple(cert.exponents) == f.exponents and check_quadrinomial_gap(f)
    if isinstance(cert, OracleExhaustion):
        return is_irreducible_oracle(f, SemiringMode.LAURENT, cert.bounds)
    return False
