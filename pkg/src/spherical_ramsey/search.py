"""Sweep the (p, d, l) family for colorings with the smallest blue bound."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .bounds import BoundReport, DistanceCase, blue_bound
from .coloring import ColoringParams
from .exact import Rational, fmt_q, to_fraction
from .ffield import odd_primes, squares
from .verifier import (
    check_blue_translates,
    check_divisibility,
    check_range,
    check_red_l3,
    k_window,
)

DEFAULT_P_CAP = 200


@dataclass(frozen=True)
class SearchSpace:
    p_min: int
    p_max: int
    d_min: int
    d_max: int
    l_min: int
    l_max: int
    alpha_sq: Fraction = Fraction(1)
    p_cap: int = DEFAULT_P_CAP

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha_sq", to_fraction(self.alpha_sq))
        if self.p_max > self.p_cap:
            raise ValueError(f"p_max {self.p_max} exceeds cap {self.p_cap}")
        if self.d_min < 2 or self.l_min < 1:
            raise ValueError("need d_min >= 2 and l_min >= 1")
        if self.alpha_sq <= 0:
            raise ValueError("alpha_sq must be positive")

    def is_empty(self) -> bool:
        return self.p_min > self.p_max or self.d_min > self.d_max or self.l_min > self.l_max

    def primes(self) -> list[int]:
        return odd_primes(self.p_min, self.p_max)

    def split(self, parts: int) -> list["SearchSpace"]:
        """Shard by prime; the shards cover the space exactly."""
        primes = self.primes()
        if not primes or parts <= 1:
            return [self]
        chunks = [primes[i::parts] for i in range(parts)]
        out = []
        for chunk in chunks:
            for p in chunk:
                out.append(SearchSpace(p, p, self.d_min, self.d_max, self.l_min, self.l_max, self.alpha_sq, self.p_cap))
        return out

    def to_dict(self) -> dict:
        return {
            "p_range": [self.p_min, self.p_max],
            "d_range": [self.d_min, self.d_max],
            "l_range": [self.l_min, self.l_max],
            "alpha_sq": fmt_q(self.alpha_sq),
            "p_cap": self.p_cap,
        }


@dataclass(frozen=True)
class SearchEntry:
    params: ColoringParams
    report: BoundReport

    @property
    def sort_key(self) -> tuple[int, int, int, int]:
        return (self.report.m, self.params.p, self.params.d, self.params.l)

    def to_dict(self) -> dict:
        return {"kind": "search_entry", "params": self.params.to_dict(), "report": self.report.to_dict()}

    @classmethod
    def from_dict(cls, data: dict) -> "SearchEntry":
        return cls(ColoringParams.from_dict(data["params"]), BoundReport.from_dict(data["report"]))


def admissible(params: ColoringParams, alpha_sq: Rational = 1) -> bool:
    """All four checks that make (p, d, l) a valid unit-distance coloring."""
    window = k_window(alpha_sq, params.p)
    if not (check_range(params, window) and check_divisibility(params, window)):
        return False
    if not check_red_l3(params, window).verified:
        return False
    return check_blue_translates(params, squares(params.p)).verified


def _candidates(space: SearchSpace) -> Iterable[ColoringParams]:
    for p in space.primes():
        for d in range(space.d_min, space.d_max + 1):
            for l in range(space.l_min, space.l_max + 1):
                try:
                    yield ColoringParams.progression(p, d, l)
                except ValueError:
                    # generator collapses mod p
                    continue


def _search_serial(space: SearchSpace) -> list[SearchEntry]:
    out = []
    for params in _candidates(space):
        if admissible(params, space.alpha_sq):
            out.append(SearchEntry(params, blue_bound(params.p, DistanceCase.UNIT)))
    return out


def merge(results: Iterable[Iterable[SearchEntry]]) -> list[SearchEntry]:
    seen = {}
    for shard in results:
        for e in shard:
            seen[e.sort_key] = e
    return [seen[k] for k in sorted(seen)]


def search_unit_params(space: SearchSpace, threads: int = 1) -> list[SearchEntry]:
    """Every admissible (p, d, l) in the space, sorted by (m, p, d, l)."""
    if space.is_empty():
        return []
    if threads <= 1:
        return merge([_search_serial(space)])
    shards = space.split(threads)
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return merge(pool.map(_search_serial, shards))


def best_entry(entries: list[SearchEntry]) -> Optional[SearchEntry]:
    return entries[0] if entries else None
