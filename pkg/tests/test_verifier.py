import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from spherical_ramsey.coloring import CANONICAL29, CANONICAL47, ColoringParams
from spherical_ramsey.ffield import ResidueSet, max_ap_in_set, nonsquares, odd_primes, squares
from spherical_ramsey.verifier import (
    Certificate,
    KWindow,
    Status,
    check_blue_translates,
    check_divisibility,
    check_range,
    check_red_l3,
    k_window,
)


def window_oracle(alpha_sq):
    c = 2 * alpha_sq
    return [k for k in range(math.floor(c) - 5, math.ceil(c) + 6) if abs(k - c) < 2]


@pytest.mark.parametrize("alpha_sq", [Fraction(1), Fraction(1, 2), Fraction(5, 4), Fraction(7, 3), Fraction(1, 100)])
def test_k_window_matches_oracle(alpha_sq):
    assert list(k_window(alpha_sq, 29).values) == window_oracle(alpha_sq)


def test_k_window_examples():
    assert k_window(1, 29).residues() == (1, 2, 3)
    assert k_window(Fraction(1, 2), 29).residues() == (0, 1, 2)
    for N in (0, 1, 5, 1000):
        assert k_window(47 * N + Fraction(5, 4), 47).residues() == (1, 2, 3, 4)


def test_k_window_rejects_nonpositive():
    with pytest.raises(ValueError):
        k_window(0, 29)


@given(
    st.fractions(min_value=Fraction(1, 50), max_value=100, max_denominator=50),
    st.fractions(min_value=0, max_value=1000, max_denominator=997),
    st.fractions(min_value=0, max_value=1000, max_denominator=991),
)
def test_floored_combination_lands_in_window(alpha_sq, x, y):
    # x - 2y + z = 2 alpha^2 for squared norms of a 3-progression
    z = 2 * alpha_sq - x + 2 * y
    if z < 0:
        return
    k = math.floor(x) - 2 * math.floor(y) + math.floor(z)
    assert k in k_window(alpha_sq, 29).values


def test_check_range_examples():
    w = KWindow.of(29, [1, 2, 3])
    assert check_range(CANONICAL29, w)
    assert not check_range(ColoringParams.progression(13, 4, 4), KWindow.of(13, [1, 2, 3]))
    assert check_range(ColoringParams.progression(29, 4, 1), w)


def test_check_divisibility_examples():
    assert check_divisibility(CANONICAL29, KWindow.of(29, [1, 2, 3]))
    assert check_divisibility(CANONICAL47, KWindow.of(47, [1, 2, 3, 4]))
    assert not check_divisibility(ColoringParams.progression(29, 3, 4), KWindow.of(29, [1, 2, 3]))


def test_divisibility_refuses_wrapped_generator():
    # {0, 8} mod 7 is {0, 1}; the members are not multiples of 8
    params = ColoringParams.progression(7, 8, 2)
    assert not check_divisibility(params, k_window(1, 7))


def test_red_l3_canonical():
    c29 = check_red_l3(CANONICAL29, KWindow.of(29, [1, 2, 3]))
    assert c29.status is Status.VERIFIED and c29.enumeration_size == 192
    c47 = check_red_l3(CANONICAL47, KWindow.of(47, [1, 2, 3, 4]))
    assert c47.status is Status.VERIFIED and c47.enumeration_size == 500


def test_red_l3_mutation():
    cert = check_red_l3(CANONICAL29, KWindow.of(29, [4]))
    assert cert.status is Status.REFUTED
    cx = cert.counterexample
    assert (cx["X"], cx["Y"], cx["Z"]) == (4, 0, 0)
    assert 4 - 0 + 0 == cx["k"]


def test_red_l3_range_precondition():
    with pytest.raises(ValueError, match="range condition violated"):
        check_red_l3(ColoringParams.progression(13, 4, 4), KWindow.of(13, [1, 2, 3]))


def test_blue_translates_canonical():
    cert = check_blue_translates(CANONICAL29, squares(29))
    assert cert.verified and cert.enumeration_size == 29
    assert check_blue_translates(CANONICAL47, squares(47)).verified
    assert check_blue_translates(CANONICAL47, nonsquares(47).union(ResidueSet(47, (0,)))).verified


def test_blue_translates_three_reds_brute_force():
    params = ColoringParams.from_red_set(29, [0, 4, 8])
    sq = set(squares(29))
    failing = [c for c in range(29) if not ({(s + c) % 29 for s in sq} & {0, 4, 8})]
    cert = check_blue_translates(params, squares(29))
    assert failing, "brute force finds an uncovered translate"
    assert cert.status is Status.REFUTED and cert.counterexample == {"c": failing[0]}


def test_certificate_status_invariant():
    with pytest.raises(ValueError):
        Certificate("x", None, 29, Status.REFUTED, 1, None)
    with pytest.raises(ValueError):
        Certificate("x", None, 29, Status.VERIFIED, 1, {"c": 0})


def progression_params(p_max=60, d_max=10, l_max=8):
    for p in odd_primes(3, p_max):
        for d in range(2, d_max + 1):
            if d % p == 0:
                continue
            for l in range(1, l_max + 1):
                if l > p:
                    continue
                yield ColoringParams.progression(p, d, l)


def test_range_and_divisibility_imply_red_l3():
    checked = 0
    for params in progression_params():
        w = k_window(1, params.p)
        if check_range(params, w) and check_divisibility(params, w):
            assert check_red_l3(params, w).verified, params
            checked += 1
    assert checked > 100


def test_translates_equivalent_to_nonsquare_progressions():
    for params in progression_params():
        lhs = check_blue_translates(params, squares(params.p)).verified
        rhs = max_ap_in_set(nonsquares(params.p), params.d) < params.l
        assert lhs == rhs, params


def test_multiplicative_reduction_mod_47():
    with_zero = nonsquares(47).union(ResidueSet(47, (0,)))
    lhs = check_blue_translates(CANONICAL47, squares(47)).verified and check_blue_translates(CANONICAL47, with_zero).verified
    assert (19 * 5) % 47 == 1
    s_star = squares(47).nonzero()
    rhs = max_ap_in_set(s_star, 1) < 5 and max_ap_in_set(nonsquares(47), 1) < 5
    # scaling by 19 maps step 5 to step 1 and swaps squares with non-squares
    assert s_star.scale(19) == nonsquares(47)
    assert lhs and rhs


def test_certificates_deterministic():
    a = check_red_l3(CANONICAL29, KWindow.of(29, [4])).to_dict()
    b = check_red_l3(CANONICAL29, KWindow.of(29, [4])).to_dict()
    assert a == b
    cert = check_blue_translates(ColoringParams.from_red_set(29, [0, 4, 8]), squares(29))
    assert Certificate.from_dict(cert.to_dict()) == cert
