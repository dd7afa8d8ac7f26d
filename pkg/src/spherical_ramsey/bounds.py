"""Dirichlet approximation and the blue progression length bound."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .exact import Rational, fmt_q, to_fraction
from .ffield import check_prime


class DistanceCase(str, enum.Enum):
    UNIT = "unit"
    GENERAL = "general"


# (p, case) pairs for which the index count is proved rather than extrapolated.
PROVED_INSTANCES = {(29, DistanceCase.UNIT), (47, DistanceCase.GENERAL)}


@dataclass(frozen=True)
class DirichletApprox:
    a: int
    d: int
    N: int
    beta: Fraction

    @property
    def error_bound(self) -> Fraction:
        return Fraction(1, self.N + 1)

    @property
    def error(self) -> Fraction:
        """|d*beta - a|."""
        return abs(self.d * self.beta - self.a)

    @property
    def eps(self) -> Fraction:
        """beta - a/d, bounded by 1/((N+1) d)."""
        return self.beta - Fraction(self.a, self.d)


def dirichlet_approx(beta: Union[Rational, str], N: int) -> DirichletApprox:
    """Smallest d in [1, N] with |d*beta - a| <= 1/(N+1) for some integer a."""
    if N < 1:
        raise ValueError("N must be at least 1")
    beta = to_fraction(beta)
    bound = Fraction(1, N + 1)
    for d in range(1, N + 1):
        a = math.floor(d * beta + Fraction(1, 2))
        if abs(d * beta - a) <= bound:
            return DirichletApprox(a, d, N, beta)
    raise AssertionError(f"Dirichlet's theorem failed for beta={beta}, N={N}")  # unreachable


def required_index_count(p: int, case: Union[DistanceCase, str]) -> int:
    """How many subsampled indices force a full translate of the squares.

    Unit distance needs three half-periods, 3(p-1)/2 + 1; the general case
    needs 4(p-1) + 1.
    """
    check_prime(p)
    case = DistanceCase(case)
    if case is DistanceCase.UNIT:
        return 3 * (p - 1) // 2 + 1
    return 4 * (p - 1) + 1


@dataclass(frozen=True)
class BoundReport:
    p: int
    case: DistanceCase
    required_index_count: int
    max_denominator: int
    m: int
    notes: str = ""

    def __post_init__(self) -> None:
        if self.m != self.max_denominator * (self.required_index_count - 1) + 1:
            raise ValueError("inconsistent bound report")

    @property
    def extrapolated(self) -> bool:
        return (self.p, self.case) not in PROVED_INSTANCES

    def to_dict(self) -> dict:
        return {
            "kind": "bound_report",
            "p": self.p,
            "case": self.case.value,
            "required_index_count": self.required_index_count,
            "max_denominator": self.max_denominator,
            "m": self.m,
            "notes": self.notes,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "BoundReport":
        return cls(
            data["p"],
            DistanceCase(data["case"]),
            data["required_index_count"],
            data["max_denominator"],
            data["m"],
            data.get("notes", ""),
        )


def blue_bound(p: int, case: Union[DistanceCase, str]) -> BoundReport:
    """No blue progression of length m exists once the translate lemma holds.

    The Dirichlet denominator bound is N = p-1 for unit distance and N = p
    otherwise; a length-m progression then keeps ``required_index_count``
    subsampled points.
    """
    case = DistanceCase(case)
    count = required_index_count(p, case)
    max_den = p - 1 if case is DistanceCase.UNIT else p
    m = max_den * (count - 1) + 1
    notes = "" if (p, case) in PROVED_INSTANCES else "extrapolated"
    return BoundReport(p, case, count, max_den, m, notes)


@dataclass(frozen=True)
class ProgressionNorms:
    """Squared norms X_i = alpha_sq*i^2 + beta*i + X0 along a progression."""

    X0: Fraction
    beta: Fraction
    alpha_sq: Fraction
    length: int

    def __getitem__(self, i: int) -> Fraction:
        return self.alpha_sq * i * i + self.beta * i + self.X0

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(self[i] for i in range(self.length))

    def subsample(self, d: int) -> list[Fraction]:
        """X'_j = X_{dj} for all dj < length."""
        return [self[d * j] for j in range((self.length - 1) // d + 1)]


def progression_norms(X0: Rational, X1: Rational, alpha_sq: Rational, length: int) -> ProgressionNorms:
    if length < 2:
        raise ValueError("length must be at least 2")
    X0, X1, alpha_sq = to_fraction(X0), to_fraction(X1), to_fraction(alpha_sq)
    return ProgressionNorms(X0, X1 - X0 - alpha_sq, alpha_sq, length)


def describe_approx(approx: DirichletApprox) -> dict:
    return {
        "a": approx.a,
        "d": approx.d,
        "N": approx.N,
        "beta": fmt_q(approx.beta),
        "error": fmt_q(approx.error),
        "error_bound": fmt_q(approx.error_bound),
    }
