"""Exact rational helpers shared across modules."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


def to_fraction(value: Union[int, str, Fraction]) -> Fraction:
    """Parse an exact rational. Floats are rejected on purpose."""
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction or a 'num/den' string")
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


def fmt_q(q: Rational) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class RationalInterval:
    """Closed interval [lo, hi] with exact rational endpoints.

    Stands in for a real number known only to lie inside it.
    """

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", to_fraction(self.lo))
        object.__setattr__(self, "hi", to_fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x: Rational) -> bool:
        return self.lo <= x <= self.hi

    def to_strings(self) -> list[str]:
        return [fmt_q(self.lo), fmt_q(self.hi)]

    @classmethod
    def parse(cls, text: str) -> "RationalInterval":
        lo, hi = text.split(",")
        return cls(to_fraction(lo), to_fraction(hi))
