"""Color genuine progressions in E^n with exact rational coordinates.

Each trial builds a real progression x_i = start + i * step, with
|step|^2 = alpha^2 exactly, colors every point and records whether three
consecutive reds or a long blue run occur.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

import numpy as np

from .coloring import Color, ColoringParams, RationalVector
from .exact import Rational, fmt_q, to_fraction
from .verifier import check_divisibility, check_range, check_red_l3, k_window

DEFAULT_BOUND = 10**6
DEFAULT_LENGTH_CAP = 10_000
DEFAULT_START_SCALE = 50


class InadmissibleAlpha(ValueError):
    pass


def stereographic_lift(v: Sequence[Rational]) -> RationalVector:
    """Inverse stereographic projection Q^(n-1) -> rational points of S^(n-1)."""
    v = [to_fraction(c) for c in v]
    s = sum((c * c for c in v), Fraction(0))
    return RationalVector(tuple(2 * c / (s + 1) for c in v) + ((s - 1) / (s + 1),))


def _random_rational(rng: np.random.Generator, bound: int, scale: int = 1) -> Fraction:
    den = int(rng.integers(1, bound + 1))
    return Fraction(int(rng.integers(-scale * den, scale * den + 1)), den)


def rational_unit_vector(rng: np.random.Generator, n: int, bound: int = DEFAULT_BOUND) -> RationalVector:
    if n < 2:
        raise ValueError("need dimension >= 2")
    return stereographic_lift([_random_rational(rng, bound) for _ in range(n - 1)])


def sum_of_squares(m: int, k: int) -> Optional[list[int]]:
    """Nonnegative integers s_1 >= ... >= s_k with sum of squares m, or None."""
    if m < 0:
        return None
    if k == 1:
        r = math.isqrt(m)
        return [r] if r * r == m else None
    if m == 0:
        return [0] * k
    top = math.isqrt(m)
    # largest part is at least sqrt(m/k)
    for a in range(top, max(math.isqrt(m // k) - 1, -1), -1):
        rest = sum_of_squares(m - a * a, k - 1)
        if rest is not None and rest[0] <= a:
            return [a] + rest
    return None


def _has_rational_root(a: Fraction) -> bool:
    return math.isqrt(a.numerator) ** 2 == a.numerator and math.isqrt(a.denominator) ** 2 == a.denominator


def check_dimension(n: int, alpha_sq: Rational) -> None:
    a = to_fraction(alpha_sq)
    if n >= 4 or _has_rational_root(a):
        return
    if sum_of_squares(a.numerator * a.denominator, n) is None:
        raise InadmissibleAlpha(f"no rational vector of squared norm {a} in dimension {n}")


def _householder(x: RationalVector, v: RationalVector) -> RationalVector:
    """Reflect x in the hyperplane orthogonal to v; exact and norm-preserving."""
    return x - v * (2 * x.dot(v) / v.norm_sq())


def rational_step_vector(rng: np.random.Generator, n: int, alpha_sq: Rational, bound: int = DEFAULT_BOUND) -> RationalVector:
    """A random rational vector in Q^n with squared norm exactly alpha_sq."""
    a = to_fraction(alpha_sq)
    if _has_rational_root(a):
        root = Fraction(math.isqrt(a.numerator), math.isqrt(a.denominator))
        return rational_unit_vector(rng, n, bound) * root
    # |s|^2 = num * den, so |s / den|^2 = alpha_sq
    parts = sum_of_squares(a.numerator * a.denominator, min(n, 4))
    if parts is None:
        raise InadmissibleAlpha(f"no rational vector of squared norm {a} in dimension {n}")
    base = RationalVector(tuple(Fraction(s, a.denominator) for s in parts) + (Fraction(0),) * (n - len(parts)))
    for _ in range(2):
        v = RationalVector(tuple(_random_rational(rng, bound) for _ in range(n)))
        if not v.is_zero():
            base = _householder(base, v)
    return base


@dataclass(frozen=True)
class ProgressionSpec:
    """Points start + i*step for i < length; |step|^2 must equal alpha_sq."""

    start: RationalVector
    step: RationalVector
    alpha_sq: Fraction
    length: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha_sq", to_fraction(self.alpha_sq))
        if self.start.dim != self.step.dim:
            raise ValueError("start and step dimensions differ")
        if self.length < 2:
            raise ValueError("length must be at least 2")
        if self.alpha_sq <= 0 or self.step.norm_sq() != self.alpha_sq:
            raise ValueError(f"|step|^2 = {self.step.norm_sq()} does not equal alpha_sq = {self.alpha_sq}")

    def points(self) -> list[RationalVector]:
        return [self.start + self.step * i for i in range(self.length)]

    def integer_form(self) -> tuple[list[int], list[int], int]:
        """(A, B, D) with point i equal to (A + i*B) / D."""
        D = math.lcm(*(c.denominator for c in self.start.coords + self.step.coords))
        A = [int(c * D) for c in self.start.coords]
        B = [int(c * D) for c in self.step.coords]
        return A, B, D


@dataclass(frozen=True)
class ScanReport:
    length: int
    red_l3_found: bool
    red_l3_index: Optional[int]
    max_blue_run: int
    colors: tuple[tuple[str, int], ...]

    def to_dict(self) -> dict:
        return {
            "kind": "scan",
            "length": self.length,
            "red_l3_found": self.red_l3_found,
            "red_l3_index": self.red_l3_index,
            "max_blue_run": self.max_blue_run,
            "colors": [list(c) for c in self.colors],
        }


def floored_norms(spec: ProgressionSpec) -> list[int]:
    """floor(|x_i|^2) for every point, with the norm recurrence checked exactly."""
    A, B, D = spec.integer_form()
    D2 = D * D
    twice_step = 2 * sum(b * b for b in B)
    if twice_step != 2 * spec.alpha_sq * D2:
        raise AssertionError("consecutive distance is not alpha")
    x = list(A)
    nums = []
    for _ in range(spec.length):
        nums.append(sum(c * c for c in x))
        x = [c + b for c, b in zip(x, B)]
    for q0, q1, q2 in zip(nums, nums[1:], nums[2:]):
        if q2 - 2 * q1 + q0 != twice_step:
            raise AssertionError("squared norms violate X[i+2] - 2X[i+1] + X[i] = 2 alpha^2")
    return [q // D2 for q in nums]


def scan_progression(spec: ProgressionSpec, params: ColoringParams) -> ScanReport:
    p, red = params.p, params.red
    colors = [Color.RED if f % p in red else Color.BLUE for f in floored_norms(spec)]
    red_index = None
    for i in range(len(colors) - 2):
        if colors[i] is colors[i + 1] is colors[i + 2] is Color.RED:
            red_index = i
            break
    rle = tuple((c.value, len(list(g))) for c, g in itertools.groupby(colors))
    max_blue = max((n for c, n in rle if c == Color.BLUE.value), default=0)
    return ScanReport(spec.length, red_index is not None, red_index, max_blue, rle)


@dataclass(frozen=True)
class CampaignConfig:
    dims: tuple[int, ...]
    alpha_sq: Fraction
    length: int
    trials: int
    master_seed: int
    bound: int = DEFAULT_BOUND
    start_scale: int = DEFAULT_START_SCALE
    length_cap: int = DEFAULT_LENGTH_CAP

    def __post_init__(self) -> None:
        object.__setattr__(self, "dims", tuple(self.dims))
        object.__setattr__(self, "alpha_sq", to_fraction(self.alpha_sq))
        if not self.dims or min(self.dims) < 2:
            raise ValueError("dimensions must be >= 2")
        if self.length > self.length_cap:
            raise ValueError(f"length {self.length} exceeds cap {self.length_cap}")
        if self.trials < 0:
            raise ValueError("trials must be nonnegative")

    def to_dict(self) -> dict:
        return {
            "dims": list(self.dims),
            "alpha_sq": fmt_q(self.alpha_sq),
            "length": self.length,
            "trials": self.trials,
            "master_seed": self.master_seed,
            "bound": self.bound,
            "start_scale": self.start_scale,
            "length_cap": self.length_cap,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CampaignConfig":
        return cls(
            tuple(data["dims"]), to_fraction(data["alpha_sq"]), data["length"], data["trials"],
            data["master_seed"], data["bound"], data["start_scale"], data["length_cap"],
        )


@dataclass(frozen=True)
class CampaignReport:
    config: CampaignConfig
    params: ColoringParams
    red_l3_total: int
    red_l3_trials: tuple[int, ...]
    max_blue_run: int
    worst_trial: Optional[int]
    blue_run_histogram: dict[int, int] = field(default_factory=dict)
    max_blue_run_by_dim: dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "kind": "campaign",
            "config": self.config.to_dict(),
            "params": self.params.to_dict(),
            "red_l3_total": self.red_l3_total,
            "red_l3_trials": list(self.red_l3_trials),
            "max_blue_run": self.max_blue_run,
            "worst_trial": self.worst_trial,
            "blue_run_histogram": {str(k): v for k, v in sorted(self.blue_run_histogram.items())},
            "max_blue_run_by_dim": {str(k): v for k, v in sorted(self.max_blue_run_by_dim.items())},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CampaignReport":
        return cls(
            CampaignConfig.from_dict(data["config"]),
            ColoringParams.from_dict(data["params"]),
            data["red_l3_total"],
            tuple(data["red_l3_trials"]),
            data["max_blue_run"],
            data["worst_trial"],
            {int(k): v for k, v in data["blue_run_histogram"].items()},
            {int(k): v for k, v in data["max_blue_run_by_dim"].items()},
        )


def check_admissible(alpha_sq: Rational, params: ColoringParams) -> None:
    """Raise InadmissibleAlpha unless no red 3-progression of step alpha can exist."""
    window = k_window(alpha_sq, params.p)
    if not check_range(params, window):
        raise InadmissibleAlpha(f"alpha^2 = {fmt_q(alpha_sq)} failed check_range for p = {params.p}")
    if params.d is not None and params.d >= 2:
        if not check_divisibility(params, window):
            raise InadmissibleAlpha(
                f"alpha^2 = {fmt_q(alpha_sq)} failed check_divisibility: window {list(window.representatives())}, d = {params.d}"
            )
    elif not check_red_l3(params, window).verified:
        raise InadmissibleAlpha(f"alpha^2 = {fmt_q(alpha_sq)} failed check_red_l3")


def trial_rng(master_seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(master_seed, spawn_key=(trial,)))


def build_trial(config: CampaignConfig, trial: int) -> ProgressionSpec:
    rng = trial_rng(config.master_seed, trial)
    n = config.dims[trial % len(config.dims)]
    step = rational_step_vector(rng, n, config.alpha_sq, config.bound)
    start = RationalVector(tuple(_random_rational(rng, config.bound, config.start_scale) for _ in range(n)))
    return ProgressionSpec(start, step, config.alpha_sq, config.length)


def _run_trials(args) -> list[tuple[int, int, bool, int]]:
    config, params, trials = args
    out = []
    for t in trials:
        spec = build_trial(config, t)
        rep = scan_progression(spec, params)
        out.append((t, spec.start.dim, rep.red_l3_found, rep.max_blue_run))
    return out


def empirical_campaign(config: CampaignConfig, params: ColoringParams, threads: int = 1) -> CampaignReport:
    """Run ``config.trials`` independent scans; the report depends only on the config."""
    check_admissible(config.alpha_sq, params)
    for n in sorted(set(config.dims)):
        check_dimension(n, config.alpha_sq)
    trials = list(range(config.trials))
    if threads <= 1 or len(trials) < 2 * threads:
        rows = _run_trials((config, params, trials))
    else:
        chunks = [trials[i::threads] for i in range(threads)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = [r for part in pool.map(_run_trials, [(config, params, c) for c in chunks]) for r in part]
        rows.sort()
    red_trials = tuple(t for t, _, found, _ in rows if found)
    hist = Counter(run for *_, run in rows)
    by_dim: dict[int, int] = {}
    worst, best_run = None, 0
    for t, n, _, run in rows:
        by_dim[n] = max(by_dim.get(n, 0), run)
        if worst is None or run > best_run:
            worst, best_run = t, run
    return CampaignReport(config, params, len(red_trials), red_trials, best_run, worst, dict(hist), by_dim)
