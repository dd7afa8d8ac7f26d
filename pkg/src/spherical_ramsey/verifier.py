"""Exhaustive, certificate-producing checks for the finite lemmas.

Every check enumerates a finite domain in a fixed order, so a Refuted
certificate always carries the same counterexample for the same input.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Union

from .coloring import ColoringParams
from .exact import Rational, RationalInterval, fmt_q, to_fraction
from .ffield import ResidueSet, check_prime


class Status(str, enum.Enum):
    VERIFIED = "Verified"
    REFUTED = "Refuted"


@dataclass(frozen=True)
class Certificate:
    lemma_id: str
    params: Optional[ColoringParams]
    modulus: int
    status: Status
    enumeration_size: int
    counterexample: Optional[dict[str, Any]] = None
    notes: str = ""

    def __post_init__(self) -> None:
        if (self.status is Status.REFUTED) != (self.counterexample is not None):
            raise ValueError("a certificate is Refuted exactly when it carries a counterexample")

    @property
    def verified(self) -> bool:
        return self.status is Status.VERIFIED

    def to_dict(self) -> dict:
        return {
            "kind": "certificate",
            "lemma_id": self.lemma_id,
            "params": self.params.to_dict() if self.params else None,
            "modulus": self.modulus,
            "status": self.status.value,
            "enumeration_size": self.enumeration_size,
            "counterexample": self.counterexample,
            "notes": self.notes,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Certificate":
        return cls(
            lemma_id=data["lemma_id"],
            params=ColoringParams.from_dict(data["params"]) if data["params"] else None,
            modulus=data["modulus"],
            status=Status(data["status"]),
            enumeration_size=data["enumeration_size"],
            counterexample=data["counterexample"],
            notes=data.get("notes", ""),
        )


def _certificate(lemma_id, params, modulus, size, counterexample, notes="") -> Certificate:
    status = Status.VERIFIED if counterexample is None else Status.REFUTED
    return Certificate(lemma_id, params, modulus, status, size, counterexample, notes)


@dataclass(frozen=True)
class KWindow:
    """Possible values of floor|x|^2 - 2 floor|y|^2 + floor|z|^2 for a 3-progression.

    ``values`` are the raw integers; ``p`` is the modulus they are read in.
    """

    values: tuple[int, ...]
    p: int
    alpha_sq: Optional[Fraction] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        check_prime(self.p)
        if not self.values:
            raise ValueError("empty window")
        object.__setattr__(self, "values", tuple(sorted(set(self.values))))

    @classmethod
    def of(cls, p: int, values) -> "KWindow":
        return cls(tuple(values), p)

    def residues(self) -> tuple[int, ...]:
        return tuple(sorted({k % self.p for k in self.values}))

    def representatives(self) -> tuple[int, ...]:
        """Residues lifted to (-p/2, p/2]; these enter the range condition."""
        half = self.p // 2
        return tuple(sorted({r - self.p if r > half else r for r in self.residues()}))


def k_window(alpha_sq: Union[Rational, str, RationalInterval], p: int) -> KWindow:
    """Integers within distance < 2 of 2*alpha_sq.

    The fractional parts of three squared norms contribute a residual in
    (-2, 2), so these are the only values the floored combination can take.
    An interval input returns the union over the interval.
    """
    if isinstance(alpha_sq, RationalInterval):
        lo, hi = 2 * alpha_sq.lo, 2 * alpha_sq.hi
        stored = None
    else:
        lo = hi = 2 * to_fraction(alpha_sq)
        stored = lo / 2
    if lo <= 0:
        raise ValueError("alpha_sq must be positive")
    first = math.floor(lo - 2) + 1
    last = math.ceil(hi + 2) - 1
    return KWindow(tuple(range(first, last + 1)), p, stored)


def check_range(params: ColoringParams, window: KWindow) -> bool:
    """Whether X - 2Y + Z for red X, Y, Z is pinned down by its residue.

    With X, Y, Z ranging over the red representatives in [0, p-1], the
    combination lies in [-S, S] for S twice the spread of the red set; the
    residue determines the integer once -p + max(k) < -S and S < p + min(k).
    """
    if window.p != params.p:
        raise ValueError("window and params use different moduli")
    red = params.red_set
    spread = 2 * (max(red) - min(red))
    ks = window.representatives()
    return -params.p + max(ks) < -spread and spread < params.p + min(ks)


def check_divisibility(params: ColoringParams, window: KWindow) -> bool:
    """Fast sufficient test: no window value is a multiple of d.

    Only meaningful when the red representatives are literally the
    multiples 0, d, ..., (l-1)d, so a generator that wraps around p fails.
    """
    if params.d is None:
        raise ValueError("divisibility check needs a (d, l) generator")
    if params.d < 2:
        raise ValueError("need d >= 2")
    if (params.l - 1) * params.d >= params.p:
        return False
    return all(k % params.d for k in window.representatives())


def check_red_l3(params: ColoringParams, window: KWindow) -> Certificate:
    """No red (X, Y, Z) and k in the window with X - 2Y + Z = k (mod p).

    Triples are enumerated with Z slowest, then Y, then X, then k; the first
    hit is the counterexample.
    """
    if not check_range(params, window):
        raise ValueError("range condition violated")
    p = params.p
    red = params.red_set
    ks = window.residues()
    hit = None
    for z, y, x in itertools.product(red, repeat=3):
        t = (x - 2 * y + z) % p
        for k in ks:
            if t == k:
                hit = {"X": x, "Y": y, "Z": z, "k": k}
                break
        if hit:
            break
    return _certificate(
        "red_l3",
        params,
        p,
        len(red) ** 3 * len(ks),
        hit,
        f"window residues {list(ks)}",
    )


def check_blue_translates(params: ColoringParams, test_set: ResidueSet, label: str = "") -> Certificate:
    """Every translate test_set + c meets the red set."""
    if not len(test_set):
        raise ValueError("empty test set")
    if test_set.p != params.p:
        raise ValueError("test set and params use different moduli")
    p = params.p
    red = params.red
    hit = None
    for c in range(p):
        if not any((s + c) % p in red for s in test_set):
            hit = {"c": c}
            break
    return _certificate("blue_translates", params, p, p, hit, label)


def range_certificate(params: ColoringParams, window: KWindow) -> Certificate:
    ok = check_range(params, window)
    red = params.red_set
    spread = 2 * (max(red) - min(red))
    ks = window.representatives()
    bad = None if ok else {"spread": spread, "min_k": min(ks), "max_k": max(ks)}
    return _certificate("range", params, params.p, 1, bad, f"need {-params.p + max(ks)} < {-spread}, {spread} < {params.p + min(ks)}")


def divisibility_certificate(params: ColoringParams, window: KWindow) -> Certificate:
    ok = check_divisibility(params, window)
    bad = None
    if not ok:
        if (params.l - 1) * params.d >= params.p:
            bad = {"wraps": (params.l - 1) * params.d}
        else:
            bad = {"k": next(k for k in window.representatives() if k % params.d == 0)}
    return _certificate("divisibility", params, params.p, len(window.values), bad, f"d = {params.d}")


def describe_window(window: KWindow) -> dict:
    return {
        "p": window.p,
        "values": list(window.values),
        "residues": list(window.residues()),
        "alpha_sq": fmt_q(window.alpha_sq) if window.alpha_sq is not None else None,
    }
