import random
from fractions import Fraction

import pytest

from sl2hilb.exactalg import laurent_at_one
from sl2hilb.laurent import (a_invariant, first_coeff_sum, gamma0, gamma1,
                             gamma2, gamma3, gamma_raw, gammas,
                             hilbert1893_gamma0, perturbed_params,
                             random_params, sigma_sum_raw, sigma_sum_schur)
from sl2hilb.repmodel import parse_rep, weight_system
from sl2hilb.series import hilbert_series


def F(text):
    return Fraction(text)


def test_gamma0_closed_values():
    assert gamma0(parse_rep("V5")) == F("1/192")
    assert gamma0(parse_rep("V7")) == F("11/11520")
    assert gamma0(parse_rep("2V3")) == F("1/128")
    assert gamma0(parse_rep("V2+V3")) == F("1/60")


def test_gamma0_exceptions_raise():
    for text in ["V1", "V2", "V3", "V4", "2V1"]:
        with pytest.raises(ValueError):
            gamma0(parse_rep(text))


def test_gamma1_is_three_halves_gamma0():
    for text in ["V5", "V7", "2V3", "V2+V4", "V9"]:
        rep = parse_rep(text)
        assert gamma1(rep) == Fraction(3, 2) * gamma0(rep)


def test_gamma2_closed_values():
    assert gamma2(parse_rep("V7")) == F("311/138240")
    assert gamma2(parse_rep("V10")) == F("2057/2903040")
    assert gamma2(parse_rep("V1+2V2")) == F("17/216")


def test_gamma2_exceptions_raise():
    for text in ["V4", "V5", "V8", "2V3", "V1+V4", "2V2"]:
        with pytest.raises(ValueError):
            gamma2(parse_rep(text))


def test_gamma3_with_fallback_gamma2():
    # 2V3 has no closed gamma2, but gamma3 still comes out right
    assert gamma3(parse_rep("2V3")) == F("95/1024")
    assert gamma3(parse_rep("V5")) == F("965/2304")


def test_gamma_linear_identity():
    # 10 g1 - 15 g2 + 6 g3 = 0 wherever all closed forms apply
    for text in ["V7", "V9", "V10", "2V4+V2", "V1+2V2"]:
        rep = parse_rep(text)
        g1, g2, g3 = gamma1(rep), gamma2(rep), gamma3(rep)
        assert 10 * g1 - 15 * g2 + 6 * g3 == 0


def test_gammas_frozen_rows():
    res = gammas(parse_rep("V9"))
    assert res.gamma == (F("289/1032192"), F("289/688128"),
                         F("1331/2211840"), F("2491/3096576"))
    assert res.a_invariant == -10
    assert res.pole_order == 7
    assert res.methods == ("ClosedForm",) * 4

    res = gammas(parse_rep("2V4+V2"))
    assert res.gamma == (F("1/288"), F("1/192"), F("73/10368"), F("185/20736"))
    assert res.a_invariant == -13


def test_gammas_method_patterns():
    assert gammas(parse_rep("V2")).methods == ("SeriesFallback",) * 4
    assert gammas(parse_rep("V5")).methods == (
        "ClosedForm", "ClosedForm", "SeriesFallback", "ClosedForm")
    assert gammas(parse_rep("V1+2V2")).methods == ("ClosedForm",) * 4


def test_gammas_match_series_expansion():
    for text in ["V6", "V7", "2V3", "V1+2V2", "V2+V5"]:
        rep = parse_rep(text)
        exp = laurent_at_one(hilbert_series(rep), 4)
        res = gammas(rep)
        assert res.gamma == exp.coeffs
        assert res.pole_order == exp.pole_order


def test_a_invariant():
    assert a_invariant(parse_rep("V1")) == 0
    assert a_invariant(parse_rep("V2")) == -2
    assert a_invariant(parse_rep("2V1")) == -2
    assert a_invariant(parse_rep("V3")) == -4
    assert a_invariant(parse_rep("V7")) == -8
    assert a_invariant(parse_rep("2V3+V4")) == -13
    with pytest.raises(ValueError):
        a_invariant(parse_rep("V0+V2"))


def test_hilbert1893_values():
    assert hilbert1893_gamma0(5) == F("1/192")
    assert hilbert1893_gamma0(6) == F("1/240")
    assert hilbert1893_gamma0(7) == F("11/11520")
    with pytest.raises(ValueError):
        hilbert1893_gamma0(4)


def test_first_coeff_sum():
    assert first_coeff_sum(parse_rep("V1")) == 1
    assert first_coeff_sum(parse_rep("V2")) == F("-1/4")
    assert first_coeff_sum(parse_rep("2V1")) == -1
    for text in ["V3", "V4", "V5", "2V2", "V2+V3", "V1+V2"]:
        assert first_coeff_sum(parse_rep(text)) == 0


def test_perturbed_params_validation():
    rep = parse_rep("V2+V3")
    with pytest.raises(ValueError):
        perturbed_params(rep, [1, 2])            # wrong count
    with pytest.raises(ValueError):
        perturbed_params(rep, [1, 2, 2])         # repeated
    with pytest.raises(ValueError):
        perturbed_params(rep, [1, -2, 3])        # not positive
    params = perturbed_params(rep, [Fraction(5, 2), 1, 3])
    # negatives mirror their partners, zeros stay put
    assert params.values[(1, 0)] == -Fraction(5, 2)
    assert params.values[(1, 1)] == 0
    assert params.values[(2, 0)] == -3


def test_random_params_deterministic():
    rep = parse_rep("2V3")
    a = random_params(rep, random.Random(11)).values
    b = random_params(rep, random.Random(11)).values
    assert a == b


def test_sigma_sums_match_schur_side():
    rng = random.Random(5150)
    for text in ["V2+V3", "2V3", "V9"]:
        rep = parse_rep(text)
        dim = rep.dim
        for _ in range(4):
            params = random_params(rep, rng)
            shapes = [("R", (dim - 3,)), ("RS", (dim - 4, 1)),
                      ("RST", (dim - 5, 1, 1)), ("RSTU", (dim - 6, 1, 1, 1))]
            for which, exps in shapes:
                assert sigma_sum_raw(which, exps, params) == \
                    sigma_sum_schur(which, exps, params)


def test_gamma_raw_recombines_into_weight_sums():
    rng = random.Random(77)
    for text in ["V2+V3", "2V3", "V2+V4"]:
        rep = parse_rep(text)
        dim = rep.dim
        sigma = weight_system(rep).sigma
        params = random_params(rep, rng)

        def S(which, exps):
            return sigma_sum_raw(which, exps, params)

        assert gamma_raw(0, params) == sigma * (
            S("R", (dim - 3,)) - 2 * S("R", (dim - 4,)) - S("RS", (dim - 4, 1)))

        assert gamma_raw(1, params) == sigma * (
            Fraction(2, 3) * S("R", (dim - 3,)) - 2 * S("R", (dim - 4,))
            + Fraction(4, 3) * S("R", (dim - 5,))
            + Fraction(1, 6) * S("RS", (dim - 5, 2))
            - Fraction(5, 6) * S("RS", (dim - 4, 1))
            + S("RS", (dim - 5, 1))
            + Fraction(1, 2) * S("RST", (dim - 5, 1, 1)))

        assert gamma_raw(2, params) == sigma * Fraction(1, 24) * (
            12 * S("R", (dim - 3,)) - 44 * S("R", (dim - 4,))
            + 48 * S("R", (dim - 5,)) - 16 * S("R", (dim - 6,))
            - 16 * S("RS", (dim - 4, 1)) + 32 * S("RS", (dim - 5, 1))
            - 16 * S("RS", (dim - 6, 1)) - 4 * S("RS", (dim - 6, 2))
            + 4 * S("RS", (dim - 5, 2)) + 7 * S("RST", (dim - 5, 1, 1))
            - 6 * S("RST", (dim - 6, 1, 1)) - 2 * S("RST", (dim - 6, 2, 1))
            - S("RSTU", (dim - 6, 1, 1, 1)))


def test_trivial_rejected():
    with pytest.raises(ValueError):
        gammas(parse_rep("V0"))
    with pytest.raises(ValueError):
        first_coeff_sum(parse_rep("V0+V3"))
