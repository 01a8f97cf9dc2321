"""Exit criteria for the package; one test per criterion.

Run ``pytest tests/test_acceptance.py`` to get the per-criterion summary.
"""
import io
import json
import math
import random
import time
from fractions import Fraction

import pytest

from cubetile import documents
from cubetile.core import Tiling
from cubetile.cli import main
from cubetile.highdim import plan_ratio, plan_sizes, theorem2_params, theorem2_threshold
from cubetile.numtheory import gcd_family_check, sylvester_representation, NotRepresentableError
from cubetile.planar import (OutOfRangeError, claim1_decompose, claim2_decompose, lemma0_tiling,
                             rho_upper, theorem1_tiling)
from cubetile.threesize import theorem5_params, theorem5_tiling
from cubetile.verify import (brute_force_overlaps, sweep_overlaps, verify_cube_plan,
                             verify_threesize_plan, verify_tiling)

from .helpers import mutate, random_refinement
from .test_verify import EXPECTED, valid_samples

RHO_CONSTANT = 20


def _non_squares(lo, hi):
    return [n for n in range(lo, hi + 1) if math.isqrt(n) ** 2 != n]


def test_criterion_01_planar_sweep_36_to_3000():
    start = time.perf_counter()
    for n in _non_squares(36, 3000):
        report = verify_tiling(theorem1_tiling(n))
        assert report.valid, n
        assert report.piece_count == n
        assert len(report.distinct_sides) == 2, n
    assert time.perf_counter() - start < 120


def test_criterion_02_small_planar():
    for n in [4] + list(range(6, 501)):
        report = verify_tiling(lemma0_tiling(n))
        assert report.valid and report.piece_count == n, n
        assert len(report.distinct_sides) <= 2
    with pytest.raises(OutOfRangeError):
        lemma0_tiling(5)


def test_criterion_03_worked_examples():
    for n, (a, b, m), ratio in [(55, (7, 9, 4), Fraction(5, 4)), (54, (7, 10, 2), Fraction(3, 2))]:
        a_, b_, _ = claim1_decompose(n)
        m_, _ = claim2_decompose(b_)
        assert (a_, b_, m_) == (a, b, m)
        assert rho_upper(n) == ratio
        assert verify_tiling(theorem1_tiling(n)).ratio == ratio


def test_criterion_04_rho_decay():
    start = time.perf_counter()
    worst = 0.0
    for n in range(100, 10 ** 6 + 1):
        if math.isqrt(n) ** 2 == n:
            continue
        excess = rho_upper(n) - 1
        # excess <= C/sqrt(n)  <=>  excess**2 * n <= C**2
        assert excess * excess * n <= RHO_CONSTANT ** 2, n
        worst = max(worst, float(excess) * math.sqrt(n))
    print(f"max (rho_upper(n)-1)*sqrt(n) over [100, 1e6]: {worst:.4f}")
    assert time.perf_counter() - start < 300


def _random_n(rng, d, eps):
    n0 = theorem2_threshold(d, eps)
    a0 = round(n0 ** (1 / (3 * d)))
    a = rng.randint(a0, 4 * a0)
    return rng.randint(max(n0, a ** (3 * d)), (a + 1) ** (3 * d) - 1)


def test_criterion_05_theorem2_certificates():
    eps = Fraction(1, 2)
    failures = []
    for d in (2, 3, 4, 5):
        rng = random.Random(1000 + d)
        for _ in range(1000):
            n = _random_n(rng, d, eps)
            plan = theorem2_params(d, n)
            ups = [(plan.m + i) ** d - plan.m ** d for i in range(1, d + 1)]
            down = plan.m ** d - (plan.m - 1) ** d
            sizes = plan_sizes(plan)
            ok = (sum(x * u for x, u in zip(plan.x, ups)) - plan.y1 * down == plan.k
                  and plan.k == n - plan.a ** (2 * d) * plan.m ** d
                  and sum(plan.x) + plan.y1 <= plan.a ** (2 * d)
                  and len(sizes) <= d + 2
                  and sum(c * s ** d for s, c in sizes) == 1
                  and plan_ratio(plan) <= 1 + eps
                  and verify_cube_plan(plan).valid)
            if not ok:
                failures.append((d, n))
    assert failures == []


def test_criterion_06_cube_2_117650_end_to_end(tmp_path):
    start = time.perf_counter()
    out = io.StringIO()
    tiling_path = tmp_path / "t.json"
    code = main(["cube", "2", "117650", "--materialize", "--tiling-out", str(tiling_path)], out=out)
    elapsed = time.perf_counter() - start
    assert code == 0
    assert "valid: 117650 pieces, sides {1/392, 1/343, 1/294}, ratio 4/3" in out.getvalue()
    assert elapsed < 60
    report = verify_tiling(documents.load_document(tiling_path))
    assert report.valid and report.piece_count == 117650
    assert report.distinct_sides == [Fraction(1, 392), Fraction(1, 343), Fraction(1, 294)]
    assert report.ratio == Fraction(4, 3)


def test_criterion_07_theorem5_window():
    window = range(262145, 262646)
    for n in window:
        assert verify_threesize_plan(theorem5_params(3, n)).valid, n
    sample = [262145] + random.Random(5).sample(list(window)[1:], 19)
    for n in sample:
        t = theorem5_tiling(theorem5_params(3, n))
        report = verify_tiling(t)
        assert report.valid and report.piece_count == n, n
        assert len(report.distinct_sides) <= 3
        if n == 262145:
            counts = [sum(1 for b in t.pieces if b.side == s) for s in (1, Fraction(1, 2), Fraction(1, 7))]
            assert counts == [248558, 11872, 1715]


def _reachable(a1, a2, limit):
    ok = [False] * (limit + 1)
    ok[0] = True
    for v in range(1, limit + 1):
        ok[v] = (v >= a1 and ok[v - a1]) or (v >= a2 and ok[v - a2])
    return ok


def test_criterion_08_number_theory_suites():
    for a1 in range(1, 41):
        for a2 in range(1, 41):
            if math.gcd(a1, a2) != 1:
                continue
            bound = (a1 - 1) * (a2 - 1)
            ok = _reachable(a1, a2, bound + 500)
            for k in range(bound, bound + 501):
                assert ok[k]
                x1, x2 = sylvester_representation(a1, a2, k)
                assert x1 >= 0 and x2 >= 0 and x1 * a1 + x2 * a2 == k
            for k in range(0, bound):
                if ok[k]:
                    x1, x2 = sylvester_representation(a1, a2, k)
                    assert x1 * a1 + x2 * a2 == k
                else:
                    with pytest.raises(NotRepresentableError):
                        sylvester_representation(a1, a2, k)
    for d in range(2, 9):
        for m in range(1, 1001):
            assert gcd_family_check(d, m), (d, m)
    primes = [p for p in range(2, 101) if all(p % q for q in range(2, p))]
    for p in primes:
        for d in range(2, 9):
            for m in range(1, 201):
                assert any(((m + t) ** d - m ** d) % p for t in range(1, d + 1)), (p, d, m)


def test_criterion_09_verifier_soundness():
    rng = random.Random(909)
    bases = valid_samples(rng, 50)
    checked = 0
    for t in bases:
        assert verify_tiling(t).valid
        assert len(t) > 2000 or sweep_overlaps(t) == brute_force_overlaps(t)
        for kind, ok in EXPECTED.items():
            m = mutate(rng, t, kind)
            report = verify_tiling(m)
            assert not report.valid and ok(report.kinds()), (kind, report.kinds())
            if len(m) <= 2000:
                assert sweep_overlaps(m) == brute_force_overlaps(m)
            checked += 1
    assert checked == 200


def _run(*argv):
    return main(list(argv), out=io.StringIO())


def test_criterion_10_interchange(tmp_path):
    rng = random.Random(10)
    for i in range(100):
        if i % 4 == 0:
            doc = theorem2_params(rng.randint(2, 4), rng.randint(10 ** 13, 10 ** 40))
        elif i % 4 == 1:
            doc = theorem5_params(3, rng.randint(2 ** 18 + 1, 2 ** 30))
        else:
            doc = random_refinement(rng, rng.randint(1, 4), 300)
        path = tmp_path / f"doc{i}.json"
        documents.save_document(doc, path)
        back = documents.load_document(path)
        assert back == doc
        assert documents.dumps(back) == path.read_text()
        if isinstance(doc, Tiling):
            assert verify_tiling(back) == verify_tiling(doc)

    assert _run("plane", "55") == 0
    assert _run("plane", "5") == 2
    assert _run("plane", "3") == 2
    assert _run("cube", "3", "1000") == 2
    assert _run("threshold", "2", "0.6") == 0
    good = tmp_path / "good.json"
    documents.save_document(theorem1_tiling(55), good)
    assert _run("verify", str(good)) == 0
    obj = json.loads(good.read_text())
    obj["pieces"].pop()
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(obj))
    assert _run("verify", str(bad)) == 1
    assert _run("render", str(good), str(tmp_path / "g.svg")) == 0
