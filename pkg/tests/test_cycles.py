"""Vector pools, 5-cycle searches, and the d-feasibility scan."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scavenger.cycles import (
    SymCycle,
    VectorPool,
    _collinear,
    find_5cycle,
    find_symmetric_5cycle,
    gen_vectors,
    is_5cycle,
    parallel_first,
    scan_d,
)
from scavenger.geom import bisector_plane
from scavenger.numtheory import eq_pair_feasible, in_T
from scavenger.qcore import dist_sq, midpoint, parse_point, point, vec

SEED_22 = [
    parse_point(s)
    for s in ["0 0 0", "14/3 1/3 1/3", "19/3 -1/3 14/3", "6 0 0", "3 3 2"]
]
CHART_30 = [
    parse_point(s)
    for s in ["0 0 0", "-1 -2 5", "1 3 4", "16/3 8/15 94/15", "5 2 1"]
]


# --- vector pools ---------------------------------------------------------------------


def test_pool_anchors_t22():
    pool = gen_vectors(22, {1, 3}, 60)
    comps = {v.components() for v in pool.vectors}
    assert (Fraction(3), Fraction(3), Fraction(2)) in comps
    assert (Fraction(14, 3), Fraction(1, 3), Fraction(1, 3)) in comps
    assert all(v.norm_sq() == 22 for v in pool.vectors)


def test_pool_parity_exclusion():
    assert gen_vectors(22, {2}, 60).vectors == ()
    mixed = gen_vectors(22, {1, 2}, 60)
    only_odd = gen_vectors(22, {1}, 60)
    assert mixed.vectors == only_odd.vectors


def test_pool_closed_under_signed_permutation():
    pool = gen_vectors(22, {1, 3}, 60)
    comps = {v.components() for v in pool.vectors}
    for c in comps:
        for arr in permutations(c):
            for signs in product(*[(1,) if x == 0 else (1, -1) for x in arr]):
                assert tuple(s * x for s, x in zip(signs, arr)) in comps


def test_pool_heights_and_denominators():
    pool = gen_vectors(22, {1, 3}, 4)
    for v in pool.vectors:
        for c in v.components():
            assert c.denominator in (1, 3)
            assert abs(c.numerator) <= 4 * c.denominator  # numerator of w = c*k
    # height 4 excludes every denominator-3 vector (needs numerators up to 14)
    assert all(
        max(c.denominator for c in v.components()) == 1 for v in pool.vectors
    )


def test_pool_deterministic_and_duplicate_free():
    a = gen_vectors(34, {1, 3}, 30)
    b = gen_vectors(34, {1, 3}, 30)
    assert a.vectors == b.vectors
    assert len(set(a.vectors)) == len(a.vectors)


def test_pool_rejections():
    with pytest.raises(ValueError):
        gen_vectors(22, set(), 60)
    with pytest.raises(ValueError):
        gen_vectors(22, {0, 1}, 60)
    with pytest.raises(ValueError):
        gen_vectors(22, {1}, 0)
    with pytest.raises(ValueError):
        gen_vectors(21, {1}, 60)  # odd, not an open case
    with pytest.raises(ValueError):
        VectorPool(22, frozenset({1}), 60, (vec(1, 0, 0),))


@settings(max_examples=10, deadline=None)
@given(st.sampled_from([10, 22, 30, 34, 46, 58, 66, 70]))
def test_pool_vectors_reduced_to_listed_denominators(t):
    pool = gen_vectors(t, {1, 3}, 45)
    for v in pool.vectors:
        assert max(c.denominator for c in v.components()) in (1, 3)


# --- 5-cycle search -------------------------------------------------------------------


def test_collinearity_predicate():
    assert _collinear(point(0, 0, 0), point(1, 1, 0), point(2, 2, 0))
    assert not _collinear(point(0, 0, 0), point(1, 1, 0), point(2, 2, 1))


def test_cycle_validator():
    assert is_5cycle(SEED_22, 22)
    assert is_5cycle(CHART_30, 30)
    assert not is_5cycle(SEED_22, 23)
    assert not is_5cycle(SEED_22[:4], 22)
    assert not is_5cycle(SEED_22[:4] + [SEED_22[0]], 22)


def test_find_5cycle_t22():
    pool = gen_vectors(22, {1, 3}, 60)
    walk = find_5cycle(22, pool)
    assert walk is not None
    assert walk[0] == point(0, 0, 0)
    assert is_5cycle(walk, 22)


def test_find_5cycle_exhausted_pool():
    pool = gen_vectors(22, {1}, 2)  # no integer triple of height <= 2 reaches 22
    assert pool.vectors == ()
    assert find_5cycle(22, pool) is None


def test_find_5cycle_pool_mismatch():
    pool = gen_vectors(22, {1}, 60)
    with pytest.raises(ValueError):
        find_5cycle(30, pool)


@settings(max_examples=6, deadline=None)
@given(st.sampled_from([10, 30, 34, 46, 66, 70]))
def test_find_5cycle_small_open_cases(t):
    walk = find_5cycle(t, gen_vectors(t, {1, 3}, 60))
    assert walk is not None
    assert is_5cycle(walk, t)


# --- symmetric 5-cycles ---------------------------------------------------------------


def test_chart_30_is_a_symmetric_cycle():
    x0, x1, x2, x3, x4 = CHART_30
    plane = bisector_plane(x0, x4)
    cycle = SymCycle(x0, x1, x2, x3, x4, Fraction(30), plane)
    assert cycle.base_dist_sq == 26
    assert dist_sq(x2, x4) == 26
    m = midpoint(x1, x3)
    assert m == point(Fraction(13, 6), Fraction(-11, 15), Fraction(169, 30))
    assert dist_sq(m, x0) == dist_sq(m, x4) == Fraction(33270, 900)


def test_symcycle_rejects_broken_invariants():
    x0, x1, x2, x3, x4 = CHART_30
    plane = bisector_plane(x0, x4)
    with pytest.raises(ValueError):
        SymCycle(x0, x1, x2, x3, x4, Fraction(22), plane)
    with pytest.raises(ValueError):
        SymCycle(x0, x1, x2, x3, x4, Fraction(30), bisector_plane(x0, x2))
    with pytest.raises(ValueError):
        SymCycle(x0, x1, x4, x3, x4, Fraction(30), plane)


def test_find_symmetric_5cycle_t30():
    cycle = find_symmetric_5cycle(30)
    assert cycle is not None
    assert cycle.base_dist_sq == 26  # minimal feasible leg, matching the chart
    assert is_5cycle(list(cycle.points()), 30)
    assert cycle.plane.contains(cycle.x2)
    assert cycle.plane.contains(midpoint(cycle.x1, cycle.x3))


@settings(max_examples=5, deadline=None)
@given(st.sampled_from([10, 22, 34, 46, 66]))
def test_find_symmetric_5cycle_small_open_cases(t):
    cycle = find_symmetric_5cycle(t)
    assert cycle is not None
    assert cycle.t == t
    # mirror symmetry: x3 and x1 are reflections, so legs about x2 agree
    assert dist_sq(cycle.x0, cycle.x2) == dist_sq(cycle.x4, cycle.x2)


def test_find_symmetric_5cycle_fixed_d():
    cycle = find_symmetric_5cycle(30, d=26)
    assert cycle is not None
    assert cycle.base_dist_sq == 26


def test_find_symmetric_5cycle_rejects_bad_t():
    with pytest.raises(ValueError):
        find_symmetric_5cycle(12)


# --- the d scan -----------------------------------------------------------------------


def test_scan_d_t30_minimal_integer():
    d = scan_d(30, 119)
    assert d == 26
    for smaller in range(1, 26):
        assert not eq_pair_feasible(30, smaller)


def test_scan_d_t10():
    d = scan_d(10, 100)
    assert d is not None
    assert eq_pair_feasible(10, d)


def test_scan_d_rational_fallback():
    # no integer d works here; the scan falls through to denominator 9
    d = scan_d(58, 231)
    assert d == Fraction(314, 9)
    assert eq_pair_feasible(58, d)
    for smaller in range(1, 232):
        assert not eq_pair_feasible(58, smaller)


def test_scan_d_none_below_window():
    # every admissible d exceeds t/4; a bound below that must fail cleanly
    assert scan_d(10, 2) is None


def test_scan_d_rejections():
    with pytest.raises(ValueError):
        scan_d(12, 100)
    with pytest.raises(ValueError):
        scan_d(10, 0)


def test_parallel_first_matches_sequential():
    items = list(range(200))
    assert parallel_first(items, _over_150, workers=1) == 151
    assert parallel_first(items, _over_150, workers=2) == 151
    assert parallel_first(items, _never, workers=2) is None


def _over_150(x):
    return x > 150


def _never(x):
    return False


def test_scan_d_worker_count_invariance():
    assert scan_d(30, 119, workers=2) == scan_d(30, 119, workers=1) == 26
