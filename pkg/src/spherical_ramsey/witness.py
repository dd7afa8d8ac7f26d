"""Scaled distance pairs for the fixed mod-47 coloring.

Given a ratio alpha, the constructors below return (alpha_red^2, alpha_blue^2)
with alpha_blue / alpha_red = alpha such that

* alpha_red^2 lies in [47N + 1, 47N + 3/2] for some N >= 0, which keeps the
  red window at {1, 2, 3, 4} mod 47, and
* alpha_blue^2 = b + eps2 with b a positive integer prime to 47 and
  0 <= eps2 <= 1/C, C = 7 * 47^4 * 48, which is what the blue argument needs.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .coloring import CANONICAL47
from .exact import Rational, RationalInterval, fmt_q, to_fraction
from .verifier import check_red_l3, k_window

MODULUS = 47
C = 7 * 47**4 * 48
EPS2_MAX = Fraction(1, C)
SMALL_THRESHOLD = Fraction(1, 2 * C)
# below this the small-case construction always succeeds
SMALL_GUARANTEED = Fraction(2, 93 * C)
LARGE_THRESHOLD = Fraction(2)


class CaseTag(str, enum.Enum):
    LARGE = "Large"
    SMALL = "Small"
    RATIONAL1 = "Rational1"
    RATIONAL2 = "Rational2"
    IRRATIONAL = "Irrational"


class NotCovered(ValueError):
    """alpha^2 falls outside every case the construction handles."""


class Undecided(ValueError):
    """The interval is too wide, or the scan too short, to certify a pair."""


AlphaSq = Union[Fraction, RationalInterval]


@dataclass(frozen=True)
class WitnessPair:
    alpha_sq: AlphaSq
    alpha_red_sq: AlphaSq
    alpha_blue_sq: Fraction
    b: int
    eps2: Fraction
    red_scale_N: int
    case_tag: CaseTag
    notes: str = ""

    def to_dict(self) -> dict:
        def q(x):
            return x.to_strings() if isinstance(x, RationalInterval) else fmt_q(x)

        return {
            "kind": "witness",
            "alpha_sq": q(self.alpha_sq),
            "alpha_red_sq": q(self.alpha_red_sq),
            "alpha_blue_sq": fmt_q(self.alpha_blue_sq),
            "b": self.b,
            "eps2": fmt_q(self.eps2),
            "red_scale_N": self.red_scale_N,
            "case_tag": self.case_tag.value,
            "notes": self.notes,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "WitnessPair":
        def q(x):
            return RationalInterval(*x) if isinstance(x, list) else to_fraction(x)

        return cls(
            q(data["alpha_sq"]),
            q(data["alpha_red_sq"]),
            to_fraction(data["alpha_blue_sq"]),
            data["b"],
            to_fraction(data["eps2"]),
            data["red_scale_N"],
            CaseTag(data["case_tag"]),
            data.get("notes", ""),
        )


def _scale_index(x: Fraction) -> Optional[int]:
    """N with 47N + 1 <= x <= 47N + 3/2, or None."""
    N = math.floor((x - 1) / MODULUS)
    if N >= 0 and 47 * N + 1 <= x <= 47 * N + Fraction(3, 2):
        return N
    return None


def _blue_split(blue: Fraction) -> tuple[int, Fraction]:
    b = math.floor(blue)
    return b, blue - b


def witness_violations(w: WitnessPair) -> list[str]:
    """Invariant failures of a witness; empty means sound."""
    problems = []
    red = w.alpha_red_sq
    if isinstance(red, RationalInterval):
        N = w.red_scale_N
        if not (47 * N + 1 <= red.lo and red.hi <= 47 * N + Fraction(3, 2)):
            problems.append(f"red interval {red} outside [47N+1, 47N+3/2] for N={N}")
    elif _scale_index(red) != w.red_scale_N:
        problems.append(f"alpha_red_sq {red} not in [47N+1, 47N+3/2] with N={w.red_scale_N}")
    if w.b + w.eps2 != w.alpha_blue_sq:
        problems.append("alpha_blue_sq != b + eps2")
    if w.b < 1 or w.b % MODULUS == 0:
        problems.append(f"b = {w.b} must be positive and prime to 47")
    if not 0 <= w.eps2 <= EPS2_MAX:
        problems.append(f"eps2 = {w.eps2} outside [0, 1/C]")
    a = w.alpha_sq
    if isinstance(a, RationalInterval):
        if not isinstance(red, RationalInterval) or w.alpha_blue_sq / red.hi != a.lo or w.alpha_blue_sq / red.lo != a.hi:
            problems.append("ratio interval does not match alpha_sq")
    elif isinstance(red, RationalInterval) or w.alpha_blue_sq / red != a:
        problems.append("alpha_blue_sq / alpha_red_sq != alpha_sq")
    return problems


def red_side_certificate(w: WitnessPair):
    return check_red_l3(CANONICAL47, k_window(w.alpha_red_sq, MODULUS))


def _small_red(alpha_sq: Fraction) -> Optional[tuple[Fraction, int]]:
    """Smallest admissible red scale r with r * alpha_sq in [1, 1 + 1/C]."""
    t = 1 / alpha_sq
    top = (1 + EPS2_MAX) * t
    N = max(0, math.ceil((t - Fraction(3, 2)) / MODULUS))
    r = max(t, Fraction(47 * N + 1))
    if r <= top and r <= 47 * N + Fraction(3, 2):
        return r, N
    return None


def classify_alpha(alpha_sq: Union[Rational, str, RationalInterval]) -> CaseTag:
    """Pick the construction: Large, Small, Rational1, Rational2, Irrational, in that order.

    Intervals always classify as Irrational.
    """
    if isinstance(alpha_sq, RationalInterval):
        return CaseTag.IRRATIONAL
    a = to_fraction(alpha_sq)
    if a <= 0:
        raise ValueError("alpha_sq must be positive")
    if a >= LARGE_THRESHOLD:
        return CaseTag.LARGE
    if a <= SMALL_THRESHOLD and _small_red(a) is not None:
        return CaseTag.SMALL
    num, den = a.numerator, a.denominator
    if (num * den) % MODULUS:
        return CaseTag.RATIONAL1
    if num % MODULUS == 0:
        return CaseTag.RATIONAL2
    raise NotCovered(f"alpha^2 = {a}: not covered (47 divides the denominator)")


def witness_large(alpha_sq: Union[Rational, str]) -> WitnessPair:
    """Integer blue scale n in [alpha^2, 3/2 alpha^2], red scale n/alpha^2 in [1, 3/2]."""
    a = to_fraction(alpha_sq)
    if a < LARGE_THRESHOLD:
        raise ValueError("witness_large needs alpha_sq >= 2")
    for n in range(max(3, math.ceil(a)), math.floor(Fraction(3, 2) * a) + 1):
        if n % MODULUS:
            return WitnessPair(a, n / a, Fraction(n), n, Fraction(0), 0, CaseTag.LARGE)
    raise AssertionError(f"no admissible integer in [{a}, {Fraction(3, 2) * a}]")  # unreachable


def witness_small(alpha_sq: Union[Rational, str]) -> WitnessPair:
    """Red scale r in [47N+1, 47N+3/2], blue scale r*alpha^2 in [1, 1 + 1/C]."""
    a = to_fraction(alpha_sq)
    if a > SMALL_THRESHOLD:
        raise ValueError("use another case: alpha_sq exceeds 1/(2C)")
    found = _small_red(a)
    if found is None:
        raise NotCovered(f"alpha^2 = {a}: no red scale in [47N+1, 47N+3/2] pairs with blue scale in [1, 1+1/C]")
    r, N = found
    blue = r * a
    b, eps2 = _blue_split(blue)
    return WitnessPair(
        a, r, blue, b, eps2, N, CaseTag.SMALL,
        "threshold 1/(2C), not 1/C; red scale restricted to [47N+1, 47N+3/2]",
    )


def witness_rational(p_num: int, q_den: int) -> WitnessPair:
    """Exact integer scales for alpha^2 = p_num / q_den, gcd(p_num, q_den) = 1.

    If 47 divides neither, scale both by r^{-1} where r = q_den mod 47, giving a
    red scale = 1 (mod 47). If 47 divides p_num, use g = q_den^{-1} mod 47*p_num
    and blue scale (p_num + 1) g, whose red partner is 1 + 1/p_num + 47N(p_num + 1).
    """
    if p_num < 1 or q_den < 1:
        raise ValueError("need positive numerator and denominator")
    if math.gcd(p_num, q_den) != 1:
        raise ValueError("numerator and denominator must be coprime")
    a = Fraction(p_num, q_den)
    if (p_num * q_den) % MODULUS:
        r_inv = pow(q_den % MODULUS, -1, MODULUS)
        red = Fraction(q_den * r_inv)
        blue = Fraction(p_num * r_inv)
        return WitnessPair(a, red, blue, int(blue), Fraction(0), _require_scale(red), CaseTag.RATIONAL1)
    if p_num % MODULUS == 0:
        modulus = MODULUS * p_num
        g = pow(q_den, -1, modulus) if modulus > 1 else 0
        blue = Fraction((p_num + 1) * g)
        red = blue * q_den / p_num
        return WitnessPair(a, red, blue, int(blue), Fraction(0), _require_scale(red), CaseTag.RATIONAL2)
    raise NotCovered(f"alpha^2 = {a}: not covered (47 divides the denominator)")


def _require_scale(red: Fraction) -> int:
    N = _scale_index(red)
    if N is None:
        raise AssertionError(f"red scale {red} is not admissible")
    return N


def witness_irrational(alpha_sq: RationalInterval, max_search: int = 100_000) -> WitnessPair:
    """Scan P = 1 (mod 47) for Q = 1 (mod 47) with Q < P/alpha^2 < Q + 1/2.

    The inequalities must hold across the whole interval, so the returned
    pair is valid for every alpha^2 in it.
    """
    if not isinstance(alpha_sq, RationalInterval):
        raise TypeError("exact value given: use rational case")
    if alpha_sq.lo <= 0:
        raise ValueError("alpha_sq must be positive")
    for k in range(1, max_search + 1):
        P = 47 * k + 1
        lo, hi = P / alpha_sq.hi, P / alpha_sq.lo
        Q = math.floor(lo)
        if Q == lo:
            Q -= 1
        if Q % MODULUS == 1 and hi < Q + Fraction(1, 2):
            return WitnessPair(
                alpha_sq,
                RationalInterval(lo, hi),
                Fraction(P),
                P,
                Fraction(0),
                (Q - 1) // MODULUS,
                CaseTag.IRRATIONAL,
                f"P = {P}, Q = {Q}",
            )
    raise Undecided("undecided: refine input precision or raise max_search")


def witness(alpha_sq: Union[Rational, str, RationalInterval], max_search: int = 100_000) -> WitnessPair:
    tag = classify_alpha(alpha_sq)
    if tag is CaseTag.IRRATIONAL:
        return witness_irrational(alpha_sq, max_search)
    a = to_fraction(alpha_sq)
    if tag is CaseTag.LARGE:
        return witness_large(a)
    if tag is CaseTag.SMALL:
        return witness_small(a)
    return witness_rational(a.numerator, a.denominator)
