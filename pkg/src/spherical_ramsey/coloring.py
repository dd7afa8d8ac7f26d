"""The spherical coloring: a point is red iff floor(|x|^2) mod p is a red residue."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .exact import Rational, to_fraction
from .ffield import ResidueSet, check_prime


class Color(str, enum.Enum):
    RED = "Red"
    BLUE = "Blue"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ColoringParams:
    """Prime modulus plus red residues.

    Built either from a generator (d, l), giving the red set
    {0, d, ..., (l-1)d} mod p, or from an explicit red set, in which case
    ``d`` and ``l`` are None.
    """

    p: int
    red: ResidueSet
    d: Optional[int] = None
    l: Optional[int] = None

    def __post_init__(self) -> None:
        check_prime(self.p)
        if self.red.p != self.p:
            raise ValueError("red set modulus differs from p")
        if (self.d is None) != (self.l is None):
            raise ValueError("d and l must be given together")
        if self.d is not None:
            if self.d < 1 or self.l < 1:
                raise ValueError("need d >= 1 and l >= 1")
            if len(self.red) != self.l:
                raise ValueError(
                    f"{{0, {self.d}, ..., {(self.l - 1) * self.d}}} mod {self.p} "
                    f"has {len(self.red)} distinct residues, expected {self.l}"
                )

    @classmethod
    def progression(cls, p: int, d: int, l: int) -> "ColoringParams":
        check_prime(p)
        return cls(p, ResidueSet.of(p, (j * d for j in range(l))), d, l)

    @classmethod
    def from_red_set(cls, p: int, members: Iterable[int]) -> "ColoringParams":
        return cls(p, ResidueSet.of(p, members))

    @property
    def red_set(self) -> tuple[int, ...]:
        return self.red.members

    def to_dict(self) -> dict:
        return {"p": self.p, "red_set": list(self.red.members), "d": self.d, "l": self.l}

    @classmethod
    def from_dict(cls, data: dict) -> "ColoringParams":
        if data.get("d") is not None:
            params = cls.progression(data["p"], data["d"], data["l"])
            if list(params.red_set) != list(data.get("red_set", params.red_set)):
                raise ValueError("red_set does not match (d, l)")
            return params
        return cls.from_red_set(data["p"], data["red_set"])


CANONICAL29 = ColoringParams.progression(29, 4, 4)
CANONICAL47 = ColoringParams.progression(47, 5, 5)
PRESETS = {"canonical29": CANONICAL29, "canonical47": CANONICAL47}


@dataclass(frozen=True)
class RationalVector:
    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coords:
            raise ValueError("dimension must be at least 1")
        object.__setattr__(self, "coords", tuple(to_fraction(c) for c in self.coords))

    @classmethod
    def of(cls, *coords: Union[int, str, Fraction]) -> "RationalVector":
        return cls(tuple(coords))

    @classmethod
    def zeros(cls, n: int) -> "RationalVector":
        return cls((Fraction(0),) * n)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def norm_sq(self) -> Fraction:
        return sum((c * c for c in self.coords), Fraction(0))

    def _check(self, other: "RationalVector") -> None:
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "RationalVector") -> "RationalVector":
        self._check(other)
        return RationalVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "RationalVector") -> "RationalVector":
        self._check(other)
        return RationalVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __mul__(self, k: Rational) -> "RationalVector":
        return RationalVector(tuple(c * k for c in self.coords))

    __rmul__ = __mul__

    def dot(self, other: "RationalVector") -> Fraction:
        self._check(other)
        return sum((a * b for a, b in zip(self.coords, other.coords)), Fraction(0))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def to_strings(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coords]


def color_of_floor(k: int, params: ColoringParams) -> Color:
    return Color.RED if k % params.p in params.red else Color.BLUE


def color_of_norm(q: Rational, params: ColoringParams) -> Color:
    q = to_fraction(q)
    if q < 0:
        raise ValueError(f"not a squared norm: {q}")
    return color_of_floor(math.floor(q), params)


def color_point(x: RationalVector, params: ColoringParams) -> Color:
    return color_of_norm(x.norm_sq(), params)


def norm_identity_check(x: RationalVector, y: RationalVector, z: RationalVector) -> Fraction:
    """|x|^2 - 2|y|^2 + |z|^2 for a 3-term progression x, y, z.

    The result always equals 2|x - y|^2, independent of where the
    progression sits.
    """
    if not (x - 2 * y + z).is_zero() or (x - y).norm_sq() != (y - z).norm_sq():
        raise ValueError("not a 3-term progression")
    value = x.norm_sq() - 2 * y.norm_sq() + z.norm_sq()
    assert value == 2 * (x - y).norm_sq()
    return value


def colors_of(points: Sequence[RationalVector], params: ColoringParams) -> list[Color]:
    return [color_point(x, params) for x in points]
