import random
from fractions import Fraction

import pytest

from sl2hilb.repmodel import parse_rep, weight_system
from sl2hilb.schur import (StraightenedSchur, bialternant_eval,
                           complete_homogeneous, power_sum, schur_eval,
                           straighten)


def test_straighten_examples():
    assert straighten((0, 2, 1, 0)) == StraightenedSchur(-1, (1, 1, 1, 0), 0)
    assert straighten((-1, 2, 1, 0)).sign == 0
    assert straighten(()) == StraightenedSchur(1, (), 0)
    assert straighten((3, 1, 0)) == StraightenedSchur(1, (3, 1, 0), 0)


def test_straighten_negative_shift():
    out = straighten((-1, -1))
    assert out.sign == 1
    assert out.shift == 1
    assert out.partition == (0, 0)


def test_complete_homogeneous():
    # returns the whole table h_0..h_k
    assert complete_homogeneous((1, 2), 2) == [1, 3, 7]
    assert complete_homogeneous((Fraction(1, 2),), 3)[3] == Fraction(1, 8)


def test_schur_small_closed_forms():
    x, y = Fraction(2), Fraction(3)
    assert schur_eval((1, 0), (x, y)) == x + y
    assert schur_eval((1, 1), (x, y)) == x * y
    assert schur_eval((2, 1), (x, y)) == x * y * (x + y)


def test_schur_negative_index():
    assert schur_eval((-1, -1), (1, 3)) == Fraction(1, 3)


def test_schur_vanishing():
    # repeated entries in the shifted exponent vector
    assert schur_eval((0, 1, 0), (1, 2, 3)) == 0


def test_bialternant_example():
    assert bialternant_eval((-1, -1), (Fraction(1), Fraction(3))) == Fraction(1, 3)


def test_bialternant_requires_distinct_points():
    with pytest.raises(ValueError):
        bialternant_eval((1, 0), (2, 2))


def _random_rho(rng, n):
    vec = sorted((rng.randint(-3, 6) for _ in range(n)), reverse=True)
    return tuple(vec)


def _random_points(rng, n):
    pts = set()
    while len(pts) < n:
        pts.add(Fraction(rng.randint(1, 40), rng.randint(1, 12)))
    return tuple(pts)


def test_bialternant_matches_jacobi_trudi():
    rng = random.Random(20240)
    for _ in range(60):
        n = rng.randint(1, 4)
        rho = _random_rho(rng, n)
        pts = _random_points(rng, n)
        assert bialternant_eval(rho, pts) == schur_eval(rho, pts)


def test_shift_identity():
    # s_(rho + c*1) = (prod x)^c * s_rho
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 4)
        rho = _random_rho(rng, n)
        pts = _random_points(rng, n)
        c = rng.randint(-2, 3)
        shifted = tuple(r + c for r in rho)
        prod = Fraction(1)
        for p in pts:
            prod *= p
        assert schur_eval(shifted, pts) == prod ** c * schur_eval(rho, pts)


def test_staircase_product_formula():
    # s_delta over the positive weights equals the product of pairwise sums
    pool = ["V5", "V2+V3", "2V3", "V7", "V2+V4", "V1+V2+V4", "V9", "3V2"]
    for text in pool:
        ws = weight_system(parse_rep(text))
        delta = tuple(range(ws.npos - 1, -1, -1))
        prod = Fraction(1)
        for i in range(ws.npos):
            for j in range(i + 1, ws.npos):
                prod *= ws.a_vec[i] + ws.a_vec[j]
        assert schur_eval(delta, ws.a_vec) == prod


def test_power_sum():
    assert power_sum((2, 3), 2) == 13
    assert power_sum((2, 3, 5), 0) == 3
    assert power_sum((), 4) == 0
    assert power_sum((Fraction(1, 2),), 3) == Fraction(1, 8)
