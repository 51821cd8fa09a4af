"""Writing a Laurent polynomial as a sum of two irreducibles.

The pipeline, bottom-up:

``split_indices``          pick delimiters in the gap sequence
``split_hyper_monolithic`` cut f into a hyper-monolithic part and a smaller rest
``peel_units``             shed unit monomials from a hyper-monolithic part
``decompose_nagura``       use a prime p close to f(1) to finish the job
``decompose_small`` etc.   cases where f(1) is small or f is a binomial
``decompose``              the driver
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

from .errors import (
    AmountTooLarge,
    InvariantFailure,
    NotCovered,
    PreconditionViolation,
    RepairFailed,
    SupportTooSmall,
    TooFewTerms,
    TooShort,
    ValueMismatch,
    WindowViolation,
)
from .irreducibility import Certificate, certify_irreducible, is_hyper_monolithic, verify_certificate
from .laurent import ZERO, LaurentPoly
from .primes import PrimePair, goldbach_pair, in_nagura_window, nagura_prime_for

SMALL_EXCEPTIONS = frozenset({11, 17, 23, 27, 29})


@dataclass(frozen=True)
class SplitIndices:
    alpha: int
    beta: int


@dataclass(frozen=True)
class SplitPlan:
    s_g: frozenset[int]
    s_h: frozenset[int]
    adjustment_applied: bool


@dataclass
class Trace:
    branch: str
    prime: Optional[int] = None
    split: Optional[SplitIndices] = None
    peel_amount: Optional[int] = None
    intermediates: dict[str, Union[LaurentPoly, int]] = field(default_factory=dict)


@dataclass
class DecompositionResult:
    part_a: LaurentPoly
    part_b: LaurentPoly
    cert_a: Certificate
    cert_b: Certificate
    trace: Trace

    @property
    def parts(self) -> tuple[LaurentPoly, LaurentPoly]:
        return self.part_a, self.part_b


def verify_result(f: LaurentPoly, result: DecompositionResult) -> bool:
    """Parts are nonzero, sum to ``f``, and both certificates re-check."""
    a, b = result.parts
    return (
        not a.is_zero()
        and not b.is_zero()
        and a + b == f
        and verify_certificate(a, result.cert_a)
        and verify_certificate(b, result.cert_b)
    )


def _finish(f: LaurentPoly, a: LaurentPoly, b: LaurentPoly, trace: Trace) -> DecompositionResult:
    if a.is_zero() or b.is_zero() or a + b != f:
        raise InvariantFailure(f"parts {a} and {b} do not split {f}")
    ca, cb = certify_irreducible(a), certify_irreducible(b)
    if ca is None or cb is None:
        raise InvariantFailure(f"no certificate for a part of {a} + {b}")
    return DecompositionResult(a, b, ca, cb, trace)


# -- splitting ------------------------------------------------------------------

def split_indices(d: tuple[int, ...]) -> SplitIndices:
    """Delimiters ``alpha < beta`` in a gap sequence of length >= 2.

    If the minimum gap repeats, alpha and beta are its first and last
    occurrences.  Otherwise they are the first and last positions holding the
    smallest or second-smallest value.

    >>> split_indices((3, 1, 2, 2, 3, 2))
    SplitIndices(alpha=1, beta=5)
    """
    if len(d) < 2:
        raise TooShort("splitting needs at least two gaps")
    lo = min(d)
    if d.count(lo) >= 2:
        threshold = lo
    else:
        threshold = min(x for x in d if x != lo)
    marked = [i for i, x in enumerate(d) if x <= threshold]
    return SplitIndices(marked[0], marked[-1])


def split_plan(f: LaurentPoly) -> tuple[SplitIndices, SplitPlan]:
    if len(f) < 3:
        raise TooFewTerms("splitting needs at least three terms")
    d = f.gaps()
    n = len(f) - 1
    idx = split_indices(d)
    a, b = idx.alpha, idx.beta
    middle = range(a + 2, b)
    s_g = {a, a + 1} | {i for i in middle if (i - a) % 2 == 1} | set(range(b + 2, n + 1))
    s_h = set(range(a)) | {i for i in middle if (i - a) % 2 == 0} | {b, b + 1}
    adjusted = False
    if (b - a) % 2 == 1 and b - a > 1 and d[b - 1] <= d[b]:
        s_h.discard(b + 1)
        s_g.add(b + 1)
        adjusted = True
    return idx, SplitPlan(frozenset(s_g), frozenset(s_h), adjusted)


def _split(f: LaurentPoly):
    idx, plan = split_plan(f)
    g = f.restrict(plan.s_g)
    if g.evaluate_at_one() * 2 >= f.evaluate_at_one():
        first = g
    else:
        first = f.restrict(plan.s_h)
    second = f - first
    if not is_hyper_monolithic(first) or second.is_zero():
        raise InvariantFailure(f"split of {f} produced {first} + {second}")
    return first, second, idx, plan


def split_hyper_monolithic(f: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """``f = first + second`` with ``first`` hyper-monolithic and ``first(1) >= second(1)``."""
    first, second, _, _ = _split(f)
    return first, second


# -- peeling --------------------------------------------------------------------

def _descending_fills(caps: list[int], total: int) -> Iterator[list[int]]:
    """Vectors ``1 <= v[i] <= caps[i]`` with sum ``total``, lexicographically descending."""
    m = len(caps)
    rest_max = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        rest_max[i] = rest_max[i + 1] + caps[i]

    def rec(i: int, left: int, acc: list[int]):
        if i == m:
            if left == 0:
                yield list(acc)
            return
        hi = min(caps[i], left - (m - i - 1))
        lo = max(1, left - rest_max[i + 1])
        for v in range(hi, lo - 1, -1):
            acc.append(v)
            yield from rec(i + 1, left - v, acc)
            acc.pop()

    yield from rec(0, total, [])


def peel_units(g: LaurentPoly, amount: int) -> tuple[LaurentPoly, LaurentPoly]:
    """Remove ``amount`` units from ``g`` keeping a hyper-monolithic, gcd-1 remainder.

    Returns ``(kept, removed)`` with ``kept + removed == g``.  The pair of
    terms around the strictly smallest gap is never dropped.  Terms are dropped
    from the opposite end only while there are more terms than the kept value;
    the kept coefficients are the lexicographically largest admissible ones
    (filled from the top exponent down) whose gcd is 1.
    """
    if not is_hyper_monolithic(g) or g.coefficient_gcd() != 1:
        raise PreconditionViolation(f"{g} is not hyper-monolithic with coefficient gcd 1")
    total = g.evaluate_at_one()
    if amount < 0 or amount > total - 2:
        raise AmountTooLarge(f"can peel between 0 and {total - 2} units from {g}, not {amount}")
    if amount == 0:
        return g, ZERO

    target = total - amount
    d = g.gaps()
    front = all(d[0] < x for x in d[1:])
    m = min(len(g), target)
    keep = range(m) if front else range(len(g) - m, len(g))
    exps = [g.terms[i][0] for i in keep]
    caps = [g.terms[i][1] for i in keep]
    for coeffs in _descending_fills(caps, target):
        if math.gcd(*coeffs) == 1:
            kept = LaurentPoly(tuple(zip(exps, coeffs)))
            return kept, g - kept
    raise RepairFailed(f"no gcd-1 remainder of value {target} inside {g}")


# -- decompositions -------------------------------------------------------------

def _binomial_parts(f: LaurentPoly) -> tuple[int, int, int, int]:
    """``(a, r, b, s)`` with ``f = a x^r + b x^s`` and ``a >= b``; ties put r on top."""
    (k0, c0), (k1, c1) = f.terms
    if c1 > c0:
        return c1, k1, c0, k0
    return c0, k0, c1, k1


def decompose_binomial(f: LaurentPoly) -> DecompositionResult:
    if len(f) != 2 or f.evaluate_at_one() <= 3:
        raise PreconditionViolation(f"{f} is not a binomial with value > 3")
    a, r, b, s = _binomial_parts(f)
    x_r, x_s = LaurentPoly.monomial(r), LaurentPoly.monomial(s)
    if b == 1:
        part_a = x_r.scale(a - 2) + x_s
        part_b = x_r.scale(2)
    else:
        part_a = x_r.scale(a - 1) + x_s
        part_b = x_r + x_s.scale(b - 1)
    return _finish(f, part_a, part_b, Trace("binomial"))


def decompose_by_prime_pair(f: LaurentPoly, pair: PrimePair) -> DecompositionResult:
    """Greedy: take units from the top exponent down until part A has value p."""
    if f.evaluate_at_one() != pair.p + pair.q:
        raise ValueMismatch(f"{f} has value {f.evaluate_at_one()}, not {pair.p} + {pair.q}")
    need = pair.p
    taken = []
    for k, c in f.terms:
        if need == 0:
            break
        t = min(need, c)
        taken.append((k, t))
        need -= t
    a = LaurentPoly.from_terms(taken)
    trace = Trace("prime_pair", prime=pair.p, intermediates={"q": pair.q})
    return _finish(f, a, f - a, trace)


def decompose_nagura(f: LaurentPoly, p: int) -> DecompositionResult:
    """Decomposition with part A of prime value ``p`` in ``[5f(1)/6 - 1, f(1) - 2]``."""
    if len(f) < 3:
        raise TooFewTerms(f"{f} needs at least three terms")
    value = f.evaluate_at_one()
    if not in_nagura_window(p, value):
        raise WindowViolation(f"prime {p} outside [5*{value}/6 - 1, {value} - 2]")
    g, h, idx, _ = _split(f)
    trace = Trace("nagura", prime=p, split=idx, intermediates={"G": g, "H": h})
    h_value = h.evaluate_at_one()

    if len(g) == 2:
        a, r, b, s = _binomial_parts(g)
        x_r, x_s = LaurentPoly.monomial(r), LaurentPoly.monomial(s)
        part_a = h + x_s.scale(b - 1) + x_r.scale(p - h_value - b + 1)
        part_b = x_r.scale(value - p - 1) + x_s
        trace.branch = "nagura_binomial"
        return _finish(f, part_a, part_b, trace)

    _, k_j, c_j = g.min_coefficient_term()
    shed = LaurentPoly.monomial(k_j, c_j - 1)
    g_prime = g - shed
    amount = p - h_value - c_j + 1
    kept, removed = peel_units(g_prime, amount)
    trace.branch = "nagura_peel"
    trace.peel_amount = amount
    trace.intermediates.update({"c_j": c_j, "k_j": k_j, "G'": g_prime, "kept": kept, "removed": removed})
    return _finish(f, h + shed + removed, kept, trace)


def _first_big_coefficient(f: LaurentPoly, threshold: int) -> Optional[tuple[int, int]]:
    for j, (_, c) in enumerate(f.terms):
        if c >= threshold:
            t = 0 if j != 0 else 1
            return j, t
    return None


def _quadrinomial(f: LaurentPoly) -> LaurentPoly:
    ks = f.exponents
    n = len(ks)
    for i1 in range(n):
        for i2 in range(i1 + 1, n):
            for i3 in range(i2 + 1, n):
                for i4 in range(i3 + 1, n):
                    if ks[i1] - ks[i2] != ks[i3] - ks[i4]:
                        return LaurentPoly.from_terms((ks[i], 1) for i in (i1, i2, i3, i4))
    raise InvariantFailure(f"no admissible quadrinomial inside {f}")


def decompose_small(f: LaurentPoly) -> DecompositionResult:
    """f(1) is one of 11, 17, 23, 27, 29: the values below 32 with no Goldbach pair."""
    value = f.evaluate_at_one()
    if len(f) < 2 or value not in SMALL_EXCEPTIONS:
        raise PreconditionViolation(f"{f} is not a small exceptional case")
    big = 5 if value == 29 else 3
    hit = _first_big_coefficient(f, big)
    if hit is not None:
        j, t = hit
        g = LaurentPoly.monomial(f.terms[j][0], big) + LaurentPoly.monomial(f.terms[t][0])
        trace = Trace("small_binomial", prime=value - big - 1, intermediates={"g": g})
        return _finish(f, f - g, g, trace)

    if value != 29:
        g = _quadrinomial(f)
        trace = Trace("small_quadrinomial", prime=value - 4, intermediates={"g": g})
        return _finish(f, f - g, g, trace)

    g, h, idx, _ = _split(f)
    _, t_m, d_m = g.min_coefficient_term()
    shed = LaurentPoly.monomial(t_m, d_m - 1)
    g_star = g - shed
    amount = 17 - h.evaluate_at_one() - (d_m - 1)
    kept, removed = peel_units(g_star, amount)
    trace = Trace(
        "small_split",
        prime=17,
        split=idx,
        peel_amount=amount,
        intermediates={"G": g, "H": h, "d_m": d_m, "t_m": t_m, "G*": g_star, "kept": kept, "removed": removed},
    )
    return _finish(f, h + removed + shed, kept, trace)


def decompose(f: LaurentPoly) -> DecompositionResult:
    """Write ``f`` as a sum of two irreducibles; needs f(1) > 3 and two or more terms."""
    value = f.evaluate_at_one()
    if value <= 3:
        raise NotCovered(f"f(1) = {value}; a decomposition needs f(1) > 3")
    if len(f) <= 1:
        raise SupportTooSmall(f"{f} has {len(f)} term(s); a decomposition needs |supp(f)| > 1")
    try:
        if len(f) == 2:
            return decompose_binomial(f)
        if value <= 31:
            pair = goldbach_pair(value)
            if pair is not None:
                return decompose_by_prime_pair(f, pair)
            return decompose_small(f)
        return decompose_nagura(f, nagura_prime_for(value))
    except PreconditionViolation as e:
        raise InvariantFailure(f"internal step rejected {f}: {e}") from e
