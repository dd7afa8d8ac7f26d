import itertools

import pytest

from spherical_ramsey.ffield import odd_primes


def brute_max_ap(members, p, step):
    """Longest c, c+step, ... inside members, by trying every start and length."""
    members = set(members)
    best = 0
    for c in range(p):
        n = 0
        while n < p and (c + n * step) % p in members:
            n += 1
        best = max(best, n)
    return best


def brute_squares(p):
    return sorted({x * x % p for x in range(p)})


@pytest.fixture(scope="session")
def small_primes():
    return odd_primes(3, 60)
