import math
from fractions import Fraction

import pytest

from cubetile.planar import (OutOfRangeError, claim1_decompose, claim2_decompose, lemma0_tiling,
                             plane_tiling, rho_upper, theorem1_params, theorem1_tiling)
from cubetile.verify import verify_tiling


@pytest.mark.parametrize("n, expected", [
    (55, (7, 9, "ii")),
    (54, (7, 10, "ii")),
    (57, (7, 8, "i")),
])
def test_claim1_examples(n, expected):
    assert claim1_decompose(n) == expected


@pytest.mark.parametrize("n", [35, 36, 49, 10, 0])
def test_claim1_out_of_range(n):
    with pytest.raises(OutOfRangeError):
        claim1_decompose(n)


def test_claim1_identity_and_range():
    for n in range(37, 20000):
        if math.isqrt(n) ** 2 == n:
            continue
        a, b, case = claim1_decompose(n)
        assert a * a < n < (a + 1) ** 2
        assert a < b <= 2 * a
        assert n == (a * a + b if case == "i" else (a + 1) ** 2 - b)


@pytest.mark.parametrize("b, expected", [(9, (4, "i")), (10, (2, "iii")), (8, (2, "ii"))])
def test_claim2_examples(b, expected):
    assert claim2_decompose(b) == expected


def test_claim2_identity_and_range():
    for b in range(7, 5000):
        m, form = claim2_decompose(b)
        assert (b - 2) / 4 <= m <= (b - 1) / 2
        value = {"i": (m + 1) ** 2 - m ** 2,
                 "ii": (m + 1) ** 2 - (m - 1) ** 2,
                 "iii": 2 * (m + 1) ** 2 - 2 * m ** 2}[form]
        assert value == b


@pytest.mark.parametrize("n, pqr, blocks", [
    (55, (8, 5, 4), 1),
    (54, (8, 3, 2), 2),
    (57, (7, 1, 3), 1),
])
def test_theorem1_params_examples(n, pqr, blocks):
    plan = theorem1_params(n)
    assert (plan.p, plan.q, plan.r) == pqr
    assert plan.blocks == blocks


def test_theorem1_params_all_six_combinations():
    seen = {}
    for n in range(37, 400):
        if math.isqrt(n) ** 2 == n:
            continue
        plan = theorem1_params(n)
        seen.setdefault((plan.claim1_case, plan.claim2_form), plan)
        p, q, r, m = plan.p, plan.q, plan.r, plan.m
        assert p in (plan.a, plan.a + 1)
        assert {q, r} <= {m - 1, m, m + 1} and q != r
        if plan.blocks == 1:
            assert n == p * p - q * q + r * r and p > q
        else:
            assert n == p * p - 2 * q * q + 2 * r * r and p >= 2 * q
    assert set(seen) == {(c, f) for c in ("i", "ii") for f in ("i", "ii", "iii")}


@pytest.mark.parametrize("n, units, small, side", [
    (55, 39, 16, Fraction(5, 4)),
    (54, 46, 8, Fraction(3, 2)),
    (57, 48, 9, Fraction(1, 3)),
])
def test_theorem1_tiling_examples(n, units, small, side):
    t = theorem1_tiling(n)
    sides = [b.side for b in t.pieces]
    assert len(t) == n
    assert sides.count(Fraction(1)) == units
    assert sides.count(side) == small
    report = verify_tiling(t)
    assert report.valid
    assert report.ratio == max(side, 1) / min(side, 1)


def test_theorem1_ratio_bound():
    for n in range(37, 1200):
        if math.isqrt(n) ** 2 == n:
            continue
        plan = theorem1_params(n)
        assert rho_upper(n) <= Fraction(plan.m + 1, plan.m - 1)


def test_lemma0_examples():
    t4 = lemma0_tiling(4)
    assert len(t4) == 4 and t4.sides() == [1] and t4.outer.side == 2
    t6 = lemma0_tiling(6)
    assert t6.outer.side == Fraction(3, 2)
    assert sorted(b.side for b in t6.pieces) == [Fraction(1, 2)] * 5 + [1]
    t7 = lemma0_tiling(7)
    assert t7.outer.side == 2
    assert sorted(b.side for b in t7.pieces) == [Fraction(1, 2)] * 4 + [1] * 3
    for t in (t4, t6, t7):
        assert verify_tiling(t).valid


@pytest.mark.parametrize("n", [5, 3, 1, 0])
def test_lemma0_rejects(n):
    with pytest.raises(OutOfRangeError):
        lemma0_tiling(n)


def test_lemma0_range():
    for n in [4] + list(range(6, 120)):
        report = verify_tiling(lemma0_tiling(n))
        assert report.valid and report.piece_count == n
        assert len(report.distinct_sides) <= 2


@pytest.mark.parametrize("n, expected", [(49, 1), (55, Fraction(5, 4)), (54, Fraction(3, 2))])
def test_rho_upper_examples(n, expected):
    assert rho_upper(n) == expected


def test_rho_upper_matches_tiling():
    for n in range(36, 400):
        t = plane_tiling(n)
        assert verify_tiling(t).ratio == rho_upper(n)


def test_plane_tiling_dispatch():
    assert plane_tiling(9).sides() == [1] and len(plane_tiling(9)) == 9
    assert len(plane_tiling(20)) == 20
    assert len(plane_tiling(200)) == 200
