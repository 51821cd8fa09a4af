import pytest

from laurent_goldbach import PrimePair, goldbach_pair, is_prime, largest_prime_below, nagura_prime_for
from laurent_goldbach.errors import PreconditionViolation
from laurent_goldbach.primes import in_nagura_window


def sieve(n):
    flags = [False, False] + [True] * (n - 1)
    for i in range(2, int(n**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = [False] * len(flags[i * i :: i])
    return flags


def test_is_prime_examples():
    assert is_prime(31)
    assert not is_prime(1)
    assert not is_prime(27)
    assert not is_prime(0)


def test_is_prime_matches_sieve():
    flags = sieve(20000)
    assert [n for n in range(20001) if is_prime(n)] == [n for n in range(20001) if flags[n]]


def test_largest_prime_below():
    assert largest_prime_below(32) == 31
    assert largest_prime_below(3) == 2
    assert largest_prime_below(38) == 37
    with pytest.raises(PreconditionViolation):
        largest_prime_below(2)


def test_goldbach_pair():
    assert goldbach_pair(10) == PrimePair(3, 7)
    assert goldbach_pair(4) == PrimePair(2, 2)
    assert goldbach_pair(11) is None


def test_goldbach_exceptions_below_32():
    missing = {m for m in range(4, 32) if goldbach_pair(m) is None}
    assert missing == {11, 17, 23, 27, 29}


def test_nagura_prime_examples():
    assert nagura_prime_for(36) == 31
    assert nagura_prime_for(32) == 29
    assert nagura_prime_for(38) == 31
    with pytest.raises(PreconditionViolation):
        nagura_prime_for(31)


def test_window_is_exact():
    # 6(p + 1) >= 5v: p = 29 is exactly on the boundary for v = 36.
    assert in_nagura_window(29, 36)
    assert not in_nagura_window(28, 36)
    assert not in_nagura_window(35, 36)


def test_prime_pair_validates():
    with pytest.raises(ValueError):
        PrimePair(7, 3)
    with pytest.raises(ValueError):
        PrimePair(4, 5)
