from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from spherical_ramsey.bounds import progression_norms
from spherical_ramsey.coloring import CANONICAL29, CANONICAL47, ColoringParams, RationalVector, color_point
from spherical_ramsey.simulate import (
    CampaignConfig,
    CampaignReport,
    InadmissibleAlpha,
    ProgressionSpec,
    build_trial,
    empirical_campaign,
    floored_norms,
    rational_step_vector,
    rational_unit_vector,
    scan_progression,
    stereographic_lift,
    sum_of_squares,
)

v = RationalVector.of


def test_stereographic_examples():
    assert stereographic_lift([0]) == v(0, -1)
    assert stereographic_lift([1]) == v(1, 0)
    assert stereographic_lift([1, 1]) == v(Fraction(2, 3), Fraction(2, 3), Fraction(1, 3))


@settings(max_examples=50)
@given(st.integers(0, 2**32 - 1), st.integers(2, 8))
def test_unit_vectors_exact(seed, n):
    u = rational_unit_vector(np.random.default_rng(seed), n)
    assert u.dim == n and u.norm_sq() == 1


@pytest.mark.parametrize("alpha_sq,n", [(1, 2), (Fraction(9, 4), 3), (3, 3), (48, 3), (Fraction(7, 5), 4), (2, 2)])
def test_step_vectors_exact(alpha_sq, n):
    w = rational_step_vector(np.random.default_rng(1), n, alpha_sq)
    assert w.dim == n and w.norm_sq() == alpha_sq


def test_step_vector_impossible():
    with pytest.raises(InadmissibleAlpha):
        rational_step_vector(np.random.default_rng(1), 2, 3)


def test_sum_of_squares():
    for m in range(200):
        for k in (2, 3, 4):
            parts = sum_of_squares(m, k)
            if parts is not None:
                assert sum(x * x for x in parts) == m and len(parts) == k
    assert sum_of_squares(7, 3) is None and sum_of_squares(3, 2) is None
    assert all(sum_of_squares(m, 4) is not None for m in range(500))


def test_scan_examples():
    spec = ProgressionSpec(v(0, 0), v(1, 0), 1, 5)
    rep = scan_progression(spec, CANONICAL29)
    assert [c for c, n in rep.colors for _ in range(n)] == ["Red", "Blue", "Red", "Blue", "Blue"]
    assert rep.max_blue_run == 2 and not rep.red_l3_found

    rep = scan_progression(ProgressionSpec(v(-2, 0), v(1, 0), 1, 5), CANONICAL29)
    assert [c for c, n in rep.colors for _ in range(n)] == ["Red", "Blue", "Red", "Blue", "Red"]
    assert not rep.red_l3_found

    rep = scan_progression(ProgressionSpec(v(0, 0), v(2, 0), 4, 2), CANONICAL29)
    assert not rep.red_l3_found and rep.length == 2


def test_scan_finds_red_triples_when_present():
    # step 2 is not protected mod 29: norms 4, 0, 4 are all red
    rep = scan_progression(ProgressionSpec(v(2, 0), v(-2, 0), 4, 3), CANONICAL29)
    assert rep.red_l3_found and rep.red_l3_index == 0 and rep.max_blue_run == 0


def test_progression_invariants():
    with pytest.raises(ValueError):
        ProgressionSpec(v(0, 0), v(1, 1), 1, 5)
    with pytest.raises(ValueError):
        ProgressionSpec(v(0, 0), v(1, 0), 1, 1)


def test_fast_norms_match_fraction_path():
    rng = np.random.default_rng(3)
    for alpha_sq, n in [(1, 3), (3, 4), (Fraction(1, 4), 2)]:
        cfg = CampaignConfig((n,), alpha_sq, 60, 1, 11)
        spec = build_trial(cfg, 0)
        pts = spec.points()
        assert all((b - a).norm_sq() == alpha_sq for a, b in zip(pts, pts[1:]))
        X = [x.norm_sq() for x in pts]
        assert all(X[i + 2] - 2 * X[i + 1] + X[i] == 2 * Fraction(alpha_sq) for i in range(len(X) - 2))
        assert floored_norms(spec) == [x.numerator // x.denominator for x in X]
        rep = scan_progression(spec, CANONICAL29)
        assert [c for c, k in rep.colors for _ in range(k)] == [color_point(x, CANONICAL29).value for x in pts]
        # same squared norms as the closed form
        assert tuple(X) == progression_norms(X[0], X[1], alpha_sq, len(X)).values


def test_campaign_small():
    cfg = CampaignConfig(tuple(range(2, 9)), 1, 300, 40, 2024)
    rep = empirical_campaign(cfg, CANONICAL29)
    assert rep.red_l3_total == 0 and rep.max_blue_run < 1177
    assert sum(rep.blue_run_histogram.values()) == 40
    assert set(rep.max_blue_run_by_dim) == set(range(2, 9))
    assert CampaignReport.from_dict(rep.to_dict()) == rep


def test_campaign_reproducible_and_schedule_independent():
    cfg = CampaignConfig((2, 3, 5), 1, 200, 30, 99)
    a = empirical_campaign(cfg, CANONICAL29)
    assert empirical_campaign(cfg, CANONICAL29) == a
    assert empirical_campaign(cfg, CANONICAL29, threads=3) == a
    assert empirical_campaign(CampaignConfig((2, 3, 5), 1, 200, 30, 100), CANONICAL29) != a


def test_campaign_zero_trials():
    rep = empirical_campaign(CampaignConfig((2,), 1, 100, 0, 1), CANONICAL29)
    assert rep.red_l3_total == 0 and rep.worst_trial is None and rep.blue_run_histogram == {}


def test_campaign_alpha3_mod47_inadmissible():
    # window {5, 6, 7}: 47 <= 40 + 7 breaks the range condition, and 5 divides 5
    with pytest.raises(InadmissibleAlpha, match="failed check_range"):
        empirical_campaign(CampaignConfig((3, 4), 3, 2000, 5, 1), CANONICAL47)


def test_campaign_divisibility_named():
    with pytest.raises(InadmissibleAlpha, match="check_divisibility"):
        # window {3, 4, 5} passes the range test at p = 31 but contains 4
        empirical_campaign(CampaignConfig((3,), 2, 100, 1, 1), ColoringParams.progression(31, 4, 4))


def test_campaign_alpha48_mod47():
    # 48 = 1 (mod 47), window {1, 2, 3} mod 47; alpha = sqrt 48 is irrational
    rep = empirical_campaign(CampaignConfig((3, 4, 6), 48, 2000, 12, 5), CANONICAL47)
    assert rep.red_l3_total == 0 and rep.max_blue_run < 8649


def test_campaign_dimension_without_rational_step():
    with pytest.raises(InadmissibleAlpha, match="dimension 2"):
        empirical_campaign(CampaignConfig((2, 3), 48, 100, 3, 1), CANONICAL47)


def test_length_cap():
    with pytest.raises(ValueError):
        CampaignConfig((2,), 1, 20_000, 1, 0)
