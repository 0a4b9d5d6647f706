"""Exit criteria, one test each.

Run ``pytest tests/test_acceptance.py`` (a PASS/FAIL line per criterion is
printed in the terminal summary) or ``python tests/test_acceptance.py``.
"""
import random
import sys
import time
from fractions import Fraction
from math import gcd
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fiberknots.bounds import (TREFOIL_SEIFERT, BridgeIndices, alexander_from_seifert,  # noqa: E402
                               epsilon_target, growth_rate_bound, lemma_seifert_matrix)
from fiberknots.curves import (A, FamilyParams, apply_twist_word, family_word,  # noqa: E402
                               intersection, k0_class, knot_class, ktw_class)
from fiberknots.exact import ProjectiveRational, evaluate, expand  # noqa: E402
from fiberknots.genus import fibered_genus  # noqa: E402
from fiberknots.smallness import enumerate_witnesses, independent_subsets, is_small  # noqa: E402
from fiberknots.surgery import c7_description, export, l7_description  # noqa: E402
from oracles import fibonacci, naive_witnesses  # noqa: E402

GOLDEN = Path(__file__).parent / "golden"
GRID = [(r, s, n) for r in range(3, 11) for s in range(2, 9) for n in range(0, 26)]
RESULTS = {}


def timed(limit):
    def wrap(fn):
        def run():
            start = time.perf_counter()
            fn()
            elapsed = time.perf_counter() - start
            assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return wrap


@timed(1.0)
def closed_form_grid():
    """1. evaluate([r,-s,n]) == (sn+1)/(rsn+r+n) on the full grid, < 1 s"""
    assert len(GRID) == 8 * 7 * 26
    for r, s, n in GRID:
        assert evaluate([r, -s, n]) == ProjectiveRational(s * n + 1, r * s * n + r + n)


@timed(1.0)
def twist_word_equivalence():
    """2. tau_b^-r tau_a^s tau_b^-n (a) == knot_class on the grid, < 1 s"""
    for r, s, n in GRID:
        p = FamilyParams(r, s, n)
        assert apply_twist_word(family_word(p), A) == knot_class(p)


@timed(1.0)
def linearity():
    """3. [K^n] == n[K^tw] + [K^0] componentwise on the grid, < 1 s"""
    for r, s, n in GRID:
        kn, ktw, k0 = knot_class(FamilyParams(r, s, n)), ktw_class(r, s), k0_class(r)
        assert (kn.m, kn.n) == (n * ktw.m + k0.m, n * ktw.n + k0.n)


def intersections():
    """4. i(Ktw,K0) = 1, i(Ktw,Kn) = 1, i(K0,Kn) = n on the grid"""
    for r, s, n in GRID:
        kn, ktw, k0 = knot_class(FamilyParams(r, s, n)), ktw_class(r, s), k0_class(r)
        assert intersection(ktw, k0) == 1
        assert intersection(ktw, kn) == 1
        assert intersection(k0, kn) == n


def genus():
    """5. fibered_genus((s, rs+1)) == (s^2(r^2-r+1)-s)/2; (3,2) -> 13"""
    for r in range(3, 11):
        for s in range(2, 9):
            assert 2 * fibered_genus(ktw_class(r, s)) == s * s * (r * r - r + 1) - s
    assert fibered_genus(ktw_class(3, 2)) == 13


@timed(1.0)
def smallness_pattern():
    """6. [r,-s,n] not small exactly when n in {r-1, r}, r<=8, s<=6, 2<=n<=20, < 1 s"""
    for r in range(3, 9):
        for s in range(2, 7):
            for n in range(2, 21):
                assert is_small([r, -s, n]) == (n not in (r - 1, r)), (r, s, n)


@timed(30.0)
def oracle_equivalence():
    """7. enumerate_witnesses == naive 4^k oracle on 200 random lists, k <= 12, < 30 s"""
    rng = random.Random(7)

    def coef(lo):
        v = rng.randint(lo, 8)
        return v if rng.random() < 0.5 else -v

    nonempty = 0
    for _ in range(200):
        k = rng.randint(1, 12)
        b = [coef(3)] + [coef(2) for _ in range(k - 1)]
        got = [(w.I, w.J) for w in enumerate_witnesses(b)]
        assert got == naive_witnesses(b), b
        nonempty += bool(got)
    assert nonempty > 0


def subset_counting():
    """8. no-consecutive subsets of {1..k} number Fibonacci(k+2), k <= 20"""
    for k in range(0, 21):
        assert len(independent_subsets(k)) == fibonacci(k + 2)


def growth_rate():
    """9. growth_rate_bound(2,1)=0, (4,2)=1/2, < 1 on 10^4 random, eps thresholds"""
    assert growth_rate_bound(BridgeIndices(2, 1)).value == 0
    assert growth_rate_bound(BridgeIndices(4, 2)).value == Fraction(1, 2)
    rng = random.Random(9)
    for _ in range(10_000):
        b1 = rng.randint(1, 10**6)
        b0 = b1 + rng.randint(1, 10**6)
        assert growth_rate_bound(BridgeIndices(b0, b1)).value < 1
    for eps in (Fraction(1, 2), Fraction(1, 10), Fraction(1, 100)):
        target = epsilon_target(eps)
        for b1 in range(target, target + 500):
            assert 1 - Fraction(1, b1) > 1 - eps
            assert growth_rate_bound(BridgeIndices(b1 + 1, b1)).torus_candidate > 1 - eps
        assert not 1 - Fraction(1, target - 1) > 1 - eps


def round_trip():
    """10. evaluate(expand(m/n)) == m/n for all reduced |m|, |n| <= 200"""
    count = 0
    for m in range(-200, 201):
        for n in range(-200, 201):
            if (m, n) == (0, 0) or gcd(m, n) != 1:
                continue
            q = ProjectiveRational(m, n)
            assert evaluate(expand(q)) == q
            count += 1
    assert count > 0


def alexander_obstruction():
    """11. trefoil gives t^2 - t + 1; lemma-shape t^2 coefficient is -j(j+-1), even, |j| <= 1000"""
    poly = alexander_from_seifert(TREFOIL_SEIFERT)
    assert poly in ([1, -1, 1], [-1, 1, -1])
    for j in range(-1000, 1001):
        for sign in (1, -1):
            for k in range(-5, 6):
                coeffs = alexander_from_seifert(lemma_seifert_matrix(j, sign, k))
                lead = coeffs[2] if len(coeffs) > 2 else 0
                assert lead == -j * (j + sign)
                assert lead % 2 == 0


def golden_exports():
    """12. (3,2,5) L7, C7 and C7 figure-variant exports match golden bytes"""
    p = FamilyParams(3, 2, 5)
    cases = {
        "l7_3_2_5.txt": l7_description(p),
        "c7_3_2_5.txt": c7_description(p),
        "c7_3_2_5_figure.txt": c7_description(p, figure_variant=True),
    }
    for name, d in cases.items():
        assert export(d).encode("utf-8") == (GOLDEN / name).read_bytes(), name


CRITERIA = [closed_form_grid, twist_word_equivalence, linearity, intersections, genus,
            smallness_pattern, oracle_equivalence, subset_counting, growth_rate,
            round_trip, alexander_obstruction, golden_exports]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[c.__name__ for c in CRITERIA])
def test_criterion(criterion):
    label = criterion.__doc__.strip()
    try:
        criterion()
    except Exception:
        RESULTS[label] = "FAIL"
        raise
    RESULTS[label] = "PASS"


if __name__ == "__main__":
    failed = 0
    for criterion in CRITERIA:
        try:
            criterion()
            status = "PASS"
        except Exception as exc:  # report and keep going
            status = f"FAIL  ({exc!r})"
            failed += 1
        print(f"{status[:4]}  {criterion.__doc__.strip()}{status[4:]}")
    sys.exit(1 if failed else 0)
