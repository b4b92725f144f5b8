"""Disk geometry: symbols, placement, tangency spinors, the six laws."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from spintile import (
    CollinearTangencyPoints,
    NoConsistentPlacement,
    NonPositiveCurvature,
    NotTangent,
    PlacedDisk,
    Spinor,
    Symbol,
    ZeroCurvature,
    ZeroRadius,
    circle_through_points,
    cross,
    dot,
    euclid_square,
    from_spinor_pair,
    midcircle_through_tangencies,
    norm_sq,
    place_configuration,
    realize_fourth,
    scaled_tolerance,
    symbol_join,
    tangency_point,
    tangency_spinor,
    verify_spinor_laws,
)

# one hand-checkable frame: the (2, 3, 6) triple inscribed in the unit
# circle (curvature -1 about the origin), with 23 in the middle gap
FRAME = {
    -1: PlacedDisk.from_curvature(-1.0, (0.0, 0.0)),
    2: PlacedDisk.from_curvature(2.0, (0.5, 0.0)),
    3: PlacedDisk.from_curvature(3.0, (0.0, 2.0 / 3.0)),
    6: PlacedDisk.from_curvature(6.0, (0.5, 2.0 / 3.0)),
    23: PlacedDisk.from_curvature(23.0, (8.0 / 23.0, 12.0 / 23.0)),
}

FRAME_SYMBOLS = {
    -1: Symbol(0, 0, -1),
    2: Symbol(1, 0, 2),
    3: Symbol(0, 2, 3),
    6: Symbol(3, 4, 6),
    23: Symbol(8, 12, 23),
}


def approx_spinor(actual, expected, tol=1e-12):
    assert actual.u[0] == pytest.approx(expected[0], abs=tol)
    assert actual.u[1] == pytest.approx(expected[1], abs=tol)


class TestScaledTolerance:
    def test_absolute_below_knee(self):
        assert scaled_tolerance(1e-9, 500.0) == 1e-9

    def test_relative_above_knee(self):
        assert scaled_tolerance(1e-9, 2e3) == pytest.approx(2e-9)


class TestSymbol:
    def test_from_center_and_curvature(self):
        s = Symbol.from_center_and_curvature("1/2", 0, 2)
        assert (s.x_dot, s.y_dot, s.beta) == (1, 0, 2)
        assert s.center() == (Fraction(1, 2), 0)
        assert s.radius() == Fraction(1, 2)

    def test_zero_curvature_rejected(self):
        with pytest.raises(ZeroCurvature):
            Symbol(1, 1, 0)

    def test_negative_curvature_center(self):
        s = Symbol.from_center_and_curvature(0, 0, -1)
        assert s.center() == (0, 0)
        assert s.radius() == -1


class TestSymbolJoin:
    @pytest.mark.parametrize(
        "pair, expected",
        [
            ((2, 3), (-3, 4, 5)),
            ((2, 6), (0, 8, 8)),
            ((3, 6), (9, 0, 9)),
            ((2, 23), (-7, 24, 25)),
            ((2, -1), (1, 0, 1)),
            ((3, -1), (0, 2, 2)),
            ((6, -1), (3, 4, 5)),
        ],
    )
    def test_frame_joins_are_pythagorean(self, pair, expected):
        i, j = pair
        triple = symbol_join(FRAME_SYMBOLS[i], FRAME_SYMBOLS[j])
        assert triple.as_tuple() == expected

    @pytest.mark.parametrize(
        "pair, generator",
        [
            ((2, 3), Spinor(1, 2)),
            ((2, 6), Spinor(2, 2)),
            ((3, 6), Spinor(3, 0)),
            ((2, 23), Spinor(3, 4)),
            ((2, -1), Spinor(1, 0)),
            ((3, -1), Spinor(1, 1)),
            ((6, -1), Spinor(2, 1)),
        ],
    )
    def test_join_is_the_squared_tangency_spinor(self, pair, generator):
        i, j = pair
        triple = symbol_join(FRAME_SYMBOLS[i], FRAME_SYMBOLS[j])
        assert triple == euclid_square(generator)

    def test_reversed_join_flips_legs(self):
        triple = symbol_join(FRAME_SYMBOLS[3], FRAME_SYMBOLS[2])
        assert triple.as_tuple() == (3, -4, 5)

    def test_non_tangent_pair_rejected(self):
        with pytest.raises(NotTangent):
            symbol_join(FRAME_SYMBOLS[23], FRAME_SYMBOLS[-1])

    def test_internal_tangency_rejected(self):
        outer = Symbol.from_center_and_curvature(0, 0, 1)
        hole = Symbol.from_center_and_curvature("1/2", 0, -2)
        with pytest.raises(NotTangent, match="internal"):
            symbol_join(outer, hole)


class TestPlacedDisk:
    def test_zero_radius_rejected(self):
        with pytest.raises(ZeroRadius):
            PlacedDisk(center=(0.0, 0.0), radius=0.0, curvature=1.0)

    def test_zero_curvature_rejected(self):
        with pytest.raises(ZeroCurvature):
            PlacedDisk.from_curvature(0.0, (0.0, 0.0))

    def test_inconsistent_radius_rejected(self):
        with pytest.raises(ValueError):
            PlacedDisk(center=(0.0, 0.0), radius=0.5, curvature=3.0)

    def test_negative_curvature_round_trip(self):
        disk = PlacedDisk.from_curvature(-1.0, (0.0, 0.0))
        assert disk.radius == -1.0


class TestTangencySpinor:
    @pytest.mark.parametrize(
        "pair, expected",
        [
            ((2, 3), (1.0, 2.0)),
            ((2, 6), (2.0, 2.0)),
            ((3, 6), (3.0, 0.0)),
            ((2, 23), (3.0, 4.0)),
            ((3, 23), (5.0, -1.0)),
            ((6, 23), (2.0, -5.0)),
            ((2, -1), (1.0, 0.0)),
            ((3, -1), (1.0, 1.0)),
            ((6, -1), (2.0, 1.0)),
        ],
    )
    def test_frame_values(self, pair, expected):
        i, j = pair
        spinor = tangency_spinor(FRAME[i], FRAME[j])
        approx_spinor(spinor, expected)

    def test_reversal_multiplies_by_i(self):
        spinor = tangency_spinor(FRAME[3], FRAME[2])
        # i*(1, 2) = (-2, 1), folded to the principal branch (2, -1)
        approx_spinor(spinor, (2.0, -1.0))

    def test_norm_sq_is_curvature_sum(self):
        for i, j in ((2, 3), (3, 6), (2, -1), (6, 23)):
            spinor = tangency_spinor(FRAME[i], FRAME[j])
            assert spinor.norm_sq() == pytest.approx(i + j, abs=1e-12)

    def test_source_labels_carried(self):
        spinor = tangency_spinor(FRAME[2], FRAME[3], source=("A", "C"))
        assert spinor.source == ("A", "C")
        assert spinor.as_complex() == pytest.approx(complex(1, 2))

    def test_non_tangent_pair_rejected(self):
        moved = PlacedDisk.from_curvature(3.0, (0.0, 1.0))
        with pytest.raises(NotTangent):
            tangency_spinor(FRAME[2], moved)

    def test_non_tangent_disks_23_and_minus_1(self):
        with pytest.raises(NotTangent):
            tangency_spinor(FRAME[23], FRAME[-1])


class TestTangencyPoint:
    def test_external_pair(self):
        point = tangency_point(FRAME[2], FRAME[3])
        assert point == pytest.approx((0.2, 0.4))

    def test_internal_pair_stays_on_far_side(self):
        point = tangency_point(FRAME[2], FRAME[-1])
        assert point == pytest.approx((1.0, 0.0))

    def test_opposite_radii_rejected(self):
        d1 = PlacedDisk.from_curvature(1.0, (0.0, 0.0))
        d2 = PlacedDisk.from_curvature(-1.0, (3.0, 0.0))
        with pytest.raises(NotTangent):
            tangency_point(d1, d2)


class TestPlacement:
    def test_example_triple(self):
        a, b, c = place_configuration(2, 3, 6)
        assert a.center == (0.0, 0.0)
        assert b.center == pytest.approx((5.0 / 6.0, 0.0))
        assert c.center == pytest.approx((8.0 / 15.0, 2.0 / 5.0))

    def test_fraction_curvatures_accepted(self):
        a, b, c = place_configuration(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))
        assert b.center == pytest.approx((4.0, 0.0))
        assert c.center[1] > 0

    @pytest.mark.parametrize("bad", [(2, 3, 0), (2, 3, -1), (0, 0, 0)])
    def test_non_positive_curvature_rejected(self, bad):
        with pytest.raises(NonPositiveCurvature):
            place_configuration(*bad)

    def test_realize_larger_root(self):
        placed = place_configuration(2, 3, 6)
        fourth = realize_fourth(placed, 23)
        for disk in placed:
            gap = abs(fourth.center_complex() - disk.center_complex())
            assert gap == pytest.approx(disk.radius + fourth.radius, abs=1e-12)

    def test_realize_smaller_root_with_negative_curvature(self):
        placed = place_configuration(2, 3, 6)
        fourth = realize_fourth(placed, -1)
        assert fourth.center == pytest.approx((0.3, -0.4))
        for disk in placed:
            gap = abs(fourth.center_complex() - disk.center_complex())
            assert gap == pytest.approx(abs(disk.radius + fourth.radius), abs=1e-12)

    def test_realize_rejects_non_root(self):
        placed = place_configuration(2, 3, 6)
        with pytest.raises(NoConsistentPlacement):
            realize_fourth(placed, 7)

    def test_realize_rejects_zero_curvature(self):
        placed = place_configuration(2, 3, 6)
        with pytest.raises(ZeroCurvature):
            realize_fourth(placed, 0)


class TestMidcircles:
    def test_inner_triple(self):
        mid = midcircle_through_tangencies(FRAME[2], FRAME[3], FRAME[6])
        assert mid.curvature == pytest.approx(6.0, abs=1e-12)
        assert mid.center == pytest.approx((1.0 / 3.0, 0.5))

    def test_triple_with_outer_circle(self):
        mid = midcircle_through_tangencies(FRAME[2], FRAME[3], FRAME[-1])
        assert mid.curvature == pytest.approx(1.0, abs=1e-12)
        assert mid.center == pytest.approx((1.0, 1.0))

    def test_collinear_points_rejected(self):
        with pytest.raises(CollinearTangencyPoints):
            circle_through_points((0.0, 0.0), (1.0, 1.0), (2.0, 2.0))

    def test_circle_through_points_example(self):
        center, radius = circle_through_points((1.0, 0.0), (0.0, 1.0), (-1.0, 0.0))
        assert center == pytest.approx((0.0, 0.0), abs=1e-12)
        assert radius == pytest.approx(1.0)


class TestSpinorLaws:
    @pytest.mark.parametrize("fourth", [23, -1])
    def test_figure_configurations_pass(self, fourth):
        placed = place_configuration(2, 3, 6)
        disks = placed + (realize_fourth(placed, fourth),)
        report = verify_spinor_laws(disks)
        assert report.passed
        assert set(report.law_residuals) == {
            "prop1",
            "thm2",
            "thm3",
            "thm4_curl",
            "thm5a_div",
            "thm5b_add",
        }
        assert all(value <= 1e-9 for value in report.law_residuals.values())
        assert len(report.spinors) == 6

    def test_frame_configuration_passes(self):
        report = verify_spinor_laws(
            [FRAME[2], FRAME[3], FRAME[6], FRAME[23]], labels=("A", "C", "B", "D")
        )
        assert report.passed
        assert report.scale == 23.0

    def test_degenerate_midcircle_handled_as_line(self):
        # (2, 2, 3) with fourth root -1: the triple (2, 2, -1) has its
        # three tangency points on one line, so the circle through them
        # degenerates; the dot law still holds with curvature zero
        placed = place_configuration(2, 2, 3)
        disks = placed + (realize_fourth(placed, -1),)
        with pytest.raises(CollinearTangencyPoints):
            midcircle_through_tangencies(placed[0], placed[1], disks[3])
        report = verify_spinor_laws(disks)
        assert report.passed

    def test_fourth_center_on_the_axis_of_the_first_two(self):
        # (3, 6, 7) with fourth root -2: the fourth center sits exactly
        # on the line through the first two centers, so the two center
        # loci are internally tangent instead of crossing; rounding in
        # the height term must not push the candidate off the axis
        placed = place_configuration(3, 6, 7)
        fourth = realize_fourth(placed, -2)
        assert fourth.center[1] == pytest.approx(0.0, abs=1e-12)
        report = verify_spinor_laws(placed + (fourth,))
        assert report.passed
        assert max(report.law_residuals.values()) < 1e-11

    def test_tight_tolerance_grades_instead_of_rejecting(self):
        # an unreachable tolerance must still produce a graded report:
        # structure detection keeps the default floor, the verdict
        # reflects the honest residuals
        placed = place_configuration(2, 3, 6)
        disks = placed + (realize_fourth(placed, 23),)
        report = verify_spinor_laws(disks, tolerance=1e-18)
        assert not report.passed
        assert len(report.law_residuals) == 6

    def test_tampered_configuration_fails(self):
        placed = place_configuration(2, 3, 6)
        fourth = realize_fourth(placed, 23)
        nudged = PlacedDisk.from_curvature(
            23.0, (fourth.center[0] + 1e-2, fourth.center[1])
        )
        report = verify_spinor_laws(placed + (nudged,), tolerance=5e-2)
        assert not report.passed

    def test_json_payload(self):
        placed = place_configuration(2, 3, 6)
        report = verify_spinor_laws(placed + (realize_fourth(placed, 23),))
        payload = report.to_json_dict()
        assert [entry["label"] for entry in payload["disks"]] == ["A", "B", "C", "D"]
        assert payload["passed"] is True
        assert payload["tolerance"] == 1e-9
        assert len(payload["spinors"]) == 6
        assert payload["spinors"][0]["pair"] == ["A", "B"]
        assert set(payload["law_residuals"]) == set(report.law_residuals)
        assert payload["sign_assignment"]


class TestRoundTrip:
    """Numeric spinors of a realized family match the exact generators."""

    @staticmethod
    def check_family(a, b):
        family = from_spinor_pair(a, b)
        big_a, big_b, big_c = family.shared_curvatures
        if not (big_a > 0 and big_b > 0 and big_c > 0):
            return False
        c = -a - b
        # pair (big_b, big_c) carries |a|², (big_c, big_a) |b|², (big_a, big_b) |c|²
        disks = place_configuration(big_a, big_c, big_b)
        nu_a = tangency_spinor(disks[2], disks[1])
        nu_b = tangency_spinor(disks[1], disks[0])
        nu_c = tangency_spinor(disks[0], disks[2])
        scale = max(norm_sq(u) for u in (a, b, c))
        tol = scaled_tolerance(1e-9, float(scale))
        for numeric, exact in ((nu_a, a), (nu_b, b), (nu_c, c)):
            assert abs(numeric.norm_sq() - norm_sq(exact)) <= tol
        pairs = (((nu_a, nu_b), (a, b)), ((nu_b, nu_c), (b, c)), ((nu_c, nu_a), (c, a)))
        for (nu1, nu2), (e1, e2) in pairs:
            z1, z2 = nu1.as_complex(), nu2.as_complex()
            numeric_dot = z1.real * z2.real + z1.imag * z2.imag
            numeric_cross = z1.real * z2.imag - z2.real * z1.imag
            assert abs(abs(numeric_dot) - abs(dot(e1, e2))) <= tol
            assert abs(abs(numeric_cross) - abs(cross(e1, e2))) <= tol
        return True

    def test_figure_generators(self):
        assert self.check_family(Spinor(3, 0), Spinor(-1, 2))

    def test_random_positive_families(self):
        rng = random.Random(20260816)
        checked = 0
        while checked < 25:
            a = Spinor(rng.randint(-8, 8), rng.randint(-8, 8))
            b = Spinor(rng.randint(-8, 8), rng.randint(-8, 8))
            if a.is_zero() or b.is_zero() or cross(a, b) == 0:
                continue
            if self.check_family(a, b):
                checked += 1
