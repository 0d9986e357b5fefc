"""Planar seed families and their audit report."""

import json
from fractions import Fraction

import pytest

from kakeya.errors import DegenerateSeed, UnsupportedField
from kakeya.projgeom import ProjPoint, meet
from kakeya.scalar import PrimeField, RealField
from kakeya.seeds import (
    dual_conic_seed,
    line_walk_start,
    ngon_bisecant_direction,
    regular_ngon_seed,
    seed_from_json,
    seed_report,
    seed_to_json,
)


def test_conic_seed_shape_q5():
    seed = dual_conic_seed(5)
    assert seed.N == 5
    assert len(seed.lines) == 5
    assert len(seed.m_lines) == 5
    assert len(seed.points) == 15
    assert seed.epsilon == [Fraction(1, 2)] * 5


def test_conic_seed_rejects_bad_orders():
    for q in (2, 3, 4, 9, 15):
        with pytest.raises(UnsupportedField):
            dual_conic_seed(q)


def test_conic_tangent_lines_touch_once():
    # each seed line meets the parabola y = x^2 in exactly one point
    q = 7
    seed = dual_conic_seed(q)
    fld = seed.field
    for line in seed.lines:
        hits = 0
        for x in range(q):
            p = ProjPoint([fld(x), fld(x * x), fld.one])
            if line.contains(p):
                hits += 1
        assert hits == 1


def test_conic_double_points_by_hand_q5():
    # tangents at t1, t2 meet where x = (t1 + t2) / 2; on the line x = 1
    # that means t1 + t2 = 2, giving the pairs {0, 2} and {3, 4} mod 5
    seed = dual_conic_seed(5)
    fld = seed.field
    m_x1 = seed.m_lines[1]
    pairs_on_m = []
    for a in range(5):
        for b in range(a + 1, 5):
            cut = meet(seed.lines[a], seed.lines[b])
            pt = ProjPoint(cut.basis[0])
            if m_x1.contains(pt):
                pairs_on_m.append((a, b))
    assert pairs_on_m == [(0, 2), (3, 4)]


def test_conic_every_line_has_enough_points():
    for q in (5, 7, 11):
        seed = dual_conic_seed(q)
        for line in seed.lines:
            count = sum(1 for sp in seed.points if line.contains(sp.point))
            assert count >= q


def test_conic_seed_report_passes():
    for q in (5, 7):
        rep = seed_report(dual_conic_seed(q))
        assert rep.verdict == "pass"
        assert rep.problems == []
        assert rep.epsilon_measured == [Fraction(1, 2)] * q


def test_ngon_bisecant_direction_depends_on_pair_sum():
    d1 = ngon_bisecant_direction(8, 1, 4)
    d2 = ngon_bisecant_direction(8, 2, 3)
    assert d1 == d2
    d3 = ngon_bisecant_direction(8, 1, 5)
    assert d1 != d3


def test_ngon_epsilon_patterns():
    rep8 = seed_report(regular_ngon_seed(8))
    assert rep8.verdict == "pass"
    assert sorted(rep8.epsilon_measured) == [0, 0, 0, 0, 1, 1, 1, 1]
    rep9 = seed_report(regular_ngon_seed(9))
    assert rep9.verdict == "pass"
    assert rep9.epsilon_measured == [Fraction(1, 2)] * 9


def test_ngon_rejects_small_and_exact_fields():
    with pytest.raises(ValueError):
        regular_ngon_seed(4)
    with pytest.raises(UnsupportedField):
        regular_ngon_seed(8, PrimeField(7))


def test_ngon_directions_distinct_and_affine_frame():
    for N in (5, 8, 9, 12):
        seed = regular_ngon_seed(N)
        dirs = seed.infinite_points
        for i in range(N):
            assert not dirs[i].coords[0].is_zero
            for j in range(i + 1, N):
                assert dirs[i] != dirs[j]


def test_line_walk_start_parametrizes_the_line():
    seed = dual_conic_seed(7)
    fld = seed.field
    for line in seed.lines:
        base, step = line_walk_start(line)
        for lam in range(4):
            pt = ProjPoint([c + fld(lam) * s for c, s in zip(base, step)] + [fld.one])
            assert line.contains(pt)


def test_seed_json_round_trip_exact():
    seed = dual_conic_seed(7)
    doc = json.loads(json.dumps(seed_to_json(seed)))
    back = seed_from_json(doc)
    assert back.N == seed.N
    assert back.field == seed.field
    assert back.epsilon == seed.epsilon
    for a, b in zip(back.lines, seed.lines):
        assert a == b
    for a, b in zip(back.points, seed.points):
        assert a.point == b.point and a.extra == b.extra


def test_seed_json_round_trip_real():
    seed = regular_ngon_seed(8)
    back = seed_from_json(seed_to_json(seed))
    for a, b in zip(back.infinite_points, seed.infinite_points):
        assert a == b
    rep = seed_report(back)
    assert rep.verdict == "pass"


def test_conic_seed_has_no_extras():
    # every affine point of a tangent line is in S, so each line carries
    # exactly q points without topping up
    for q in (5, 7):
        seed = dual_conic_seed(q)
        assert all(not sp.extra for sp in seed.points)
        for line in seed.lines:
            assert sum(1 for sp in seed.points if line.contains(sp.point)) == q


def test_report_flags_starved_line():
    seed = dual_conic_seed(5)
    line0 = seed.lines[0]
    seed.points = [sp for sp in seed.points if not line0.contains(sp.point)]
    rep = seed_report(seed)
    assert rep.verdict == "fail"
    assert rep.line_point_counts[0] == 0


def test_report_flags_wrong_epsilon():
    seed = dual_conic_seed(5)
    seed.epsilon = [Fraction(0)] * 5
    rep = seed_report(seed)
    assert rep.verdict == "fail"
