"""Modular arithmetic over Z/pZ for small odd primes p.

Residue sets are kept as sorted tuples so they hash, compare and serialize
deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

# Deterministic for every n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def check_prime(p: int) -> int:
    """Return ``p`` if it is an odd prime, raise ``ValueError`` otherwise."""
    if isinstance(p, bool) or not isinstance(p, int):
        raise TypeError(f"modulus must be an int, got {type(p).__name__}")
    if not is_prime(p):
        raise ValueError(f"composite modulus: {p}")
    if p == 2:
        raise ValueError("modulus must be an odd prime, got 2")
    return p


def odd_primes(lo: int, hi: int) -> list[int]:
    return [n for n in range(max(lo, 3), hi + 1) if is_prime(n)]


@dataclass(frozen=True)
class ResidueSet:
    """A subset of Z/pZ, members stored sorted in [0, p-1]."""

    p: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        check_prime(self.p)
        m = self.members
        if any(not 0 <= x < self.p for x in m):
            raise ValueError(f"residues must lie in [0, {self.p - 1}]: {m}")
        if any(a >= b for a, b in zip(m, m[1:])):
            raise ValueError(f"residues must be sorted and distinct: {m}")

    @classmethod
    def of(cls, p: int, values: Iterable[int]) -> "ResidueSet":
        return cls(p, tuple(sorted({v % p for v in values})))

    def __contains__(self, x: object) -> bool:
        return isinstance(x, int) and x % self.p in self._lookup

    @property
    def _lookup(self) -> frozenset[int]:
        # frozen dataclass: cache by hand
        try:
            return self.__dict__["_lookup_cache"]
        except KeyError:
            s = frozenset(self.members)
            object.__setattr__(self, "_lookup_cache", s)
            return s

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def complement(self) -> "ResidueSet":
        return ResidueSet(self.p, tuple(x for x in range(self.p) if x not in self._lookup))

    def nonzero(self) -> "ResidueSet":
        return ResidueSet(self.p, tuple(x for x in self.members if x))

    def shift(self, c: int) -> "ResidueSet":
        return ResidueSet.of(self.p, (x + c for x in self.members))

    def scale(self, u: int) -> "ResidueSet":
        return ResidueSet.of(self.p, (x * u for x in self.members))

    def union(self, other: "ResidueSet") -> "ResidueSet":
        if other.p != self.p:
            raise ValueError("moduli differ")
        return ResidueSet.of(self.p, self.members + other.members)


def squares(p: int) -> ResidueSet:
    """All squares in Z/pZ, including 0; there are (p+1)/2 of them."""
    check_prime(p)
    return ResidueSet.of(p, (x * x for x in range(p)))


def nonsquares(p: int) -> ResidueSet:
    return squares(p).complement()


def inverse(a: int, p: int) -> int:
    check_prime(p)
    if a % p == 0:
        raise ZeroDivisionError("zero has no inverse")
    return pow(a, -1, p)


def is_qr(a: int, p: int) -> bool:
    """Euler's criterion; 0 counts as a square."""
    check_prime(p)
    a %= p
    return a == 0 or pow(a, (p - 1) // 2, p) == 1


def max_ap_in_set(s: ResidueSet, step: int) -> int:
    """Longest progression c, c+step, ..., taken mod p, contained in ``s``.

    Progressions wrap around modulo p. Returns p when ``s`` is everything.
    """
    p = s.p
    if step % p == 0:
        raise ValueError("step must be nonzero mod p")
    if len(s) == p:
        return p
    # step is a unit, so k -> k*step visits every residue once
    inside = [(k * step) % p in s for k in range(p)]
    start = inside.index(False)
    best = run = 0
    for k in range(1, p + 1):
        if inside[(start + k) % p]:
            run += 1
            best = max(best, run)
        else:
            run = 0
    return best
