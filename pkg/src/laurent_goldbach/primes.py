"""Primality by trial division and the prime choices the decomposition needs."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import PreconditionViolation, WindowViolation

# Residues mod 30 coprime to 30; the wheel skips multiples of 2, 3 and 5.
_WHEEL = (1, 7, 11, 13, 17, 19, 23, 29)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5):
        if n % p == 0:
            return n == p
    base = 0
    while True:
        for r in _WHEEL:
            d = base + r
            if d < 7:
                continue
            if d * d > n:
                return True
            if n % d == 0:
                return False
        base += 30


def largest_prime_below(n: int) -> int:
    """Largest prime strictly less than ``n`` (``n >= 3``)."""
    if n < 3:
        raise PreconditionViolation(f"no prime below {n}")
    m = n - 1
    while not is_prime(m):
        m -= 1
    return m


@dataclass(frozen=True)
class PrimePair:
    p: int
    q: int

    def __post_init__(self):
        if self.p > self.q or not (is_prime(self.p) and is_prime(self.q)):
            raise ValueError(f"invalid prime pair ({self.p}, {self.q})")


def goldbach_pair(m: int) -> Optional[PrimePair]:
    """The pair ``p + q = m`` with the smallest ``p``, or ``None``."""
    if m < 4:
        raise PreconditionViolation(f"goldbach_pair needs m >= 4, got {m}")
    for p in range(2, m // 2 + 1):
        if is_prime(p) and is_prime(m - p):
            return PrimePair(p, m - p)
    return None


def in_nagura_window(p: int, value: int) -> bool:
    """``5*value/6 - 1 <= p <= value - 2``, decided in integers."""
    return 6 * (p + 1) >= 5 * value and p <= value - 2


def nagura_prime_for(v: int) -> int:
    """A prime in the window ``[5v/6 - 1, v - 2]`` for ``v >= 32``.

    Takes the largest prime below ``v``; if that is ``v - 1`` steps down once more.
    """
    if v < 32:
        raise PreconditionViolation(f"nagura_prime_for needs v >= 32, got {v}")
    p = largest_prime_below(v)
    if p == v - 1:
        p = largest_prime_below(p)
    if not in_nagura_window(p, v):
        raise WindowViolation(f"prime {p} outside the window for value {v}")
    return p
