"""Descartes quadruples: residual, fourth-curvature roots, spinor builders."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spintile import (
    ComplexSolutions,
    CurlViolation,
    DescartesQuadruple,
    NonIntegral,
    Spinor,
    apollonian_flip,
    canonicalize,
    cross,
    descartes_residual,
    dot,
    fourth_curvatures,
    from_spinor_pair,
    from_spinor_triple,
    norm_sq,
)

nonzero_int_spinors = st.builds(
    Spinor, st.integers(-60, 60), st.integers(-60, 60)
).filter(lambda u: not u.is_zero())


class TestResidual:
    @pytest.mark.parametrize(
        "quadruple",
        [(2, 3, 6, 23), (2, 3, 6, -1), (2, 2, 3, 15), (3, 14, 6, 47), (11, 14, 23, 102)],
    )
    def test_known_quadruples_vanish(self, quadruple):
        assert descartes_residual(*quadruple) == 0

    def test_non_quadruple_value(self):
        # frozen: 2*(4+9+36+49) - 18**2 computed by hand
        assert descartes_residual(2, 3, 6, 7) == -128

    def test_rational_entries(self):
        scaled = (Fraction(2, 5), Fraction(3, 5), Fraction(6, 5), Fraction(23, 5))
        assert descartes_residual(*scaled) == 0

    def test_constructor_validates(self):
        with pytest.raises(ValueError):
            DescartesQuadruple(2, 3, 6, 7)
        assert DescartesQuadruple(2, 3, 6, 23).as_tuple() == (2, 3, 6, 23)

    def test_constructor_rejects_floats(self):
        with pytest.raises(TypeError):
            DescartesQuadruple(2.0, 3, 6, 23)


class TestFourthCurvatures:
    def test_integral_pair_of_roots(self):
        roots = fourth_curvatures(2, 3, 6)
        assert roots == (23, -1, True)

    def test_double_root(self):
        roots = fourth_curvatures(-1, 2, 2)
        assert roots == (3, 3, True)

    def test_rational_roots(self):
        roots = fourth_curvatures(Fraction(2, 5), Fraction(3, 5), Fraction(6, 5))
        assert roots.exact
        assert roots.larger == Fraction(23, 5)
        assert roots.smaller == Fraction(-1, 5)

    def test_irrational_roots_fall_back_to_floats(self):
        roots = fourth_curvatures(1, 1, 1)
        assert not roots.exact
        for d in (roots.larger, roots.smaller):
            assert isinstance(d, float)
            assert abs(descartes_residual(1.0, 1.0, 1.0, d)) < 1e-9
        assert roots.larger == pytest.approx(3 + 2 * 3**0.5)

    def test_negative_discriminant_raises(self):
        with pytest.raises(ComplexSolutions):
            fourth_curvatures(1, 1, -1)

    @given(nonzero_int_spinors, nonzero_int_spinors)
    def test_roots_match_spinor_construction(self, a, b):
        family = from_spinor_pair(a, b)
        roots = fourth_curvatures(*family.shared_curvatures)
        assert roots.exact
        assert (roots.larger, roots.smaller) == (family.d1, family.d2)


class TestFromSpinorPair:
    def test_figure_generators(self):
        family = from_spinor_pair(Spinor(3, 0), Spinor(-1, 2))
        assert family.shared_curvatures == (2, 6, 3)
        assert (family.d1, family.d2) == (23, -1)

    def test_unit_generators(self):
        family = from_spinor_pair(Spinor(1, 0), Spinor(0, 1))
        assert family.quadruple_1.as_tuple() == (1, 1, 0, 4)
        assert family.quadruple_2.as_tuple() == (1, 1, 0, 0)

    def test_parallel_generators_collapse_roots(self):
        family = from_spinor_pair(Spinor(2, 1), Spinor(4, 2))
        assert family.d1 == family.d2

    @given(nonzero_int_spinors, nonzero_int_spinors)
    def test_residuals_vanish_for_both_roots(self, a, b):
        family = from_spinor_pair(a, b)
        assert descartes_residual(*family.quadruple_1.as_tuple()) == 0
        assert descartes_residual(*family.quadruple_2.as_tuple()) == 0

    @given(nonzero_int_spinors, nonzero_int_spinors)
    def test_root_sum_and_product(self, a, b):
        family = from_spinor_pair(a, b)
        base = norm_sq(a) + norm_sq(b) + dot(a, b)
        assert family.d1 + family.d2 == 2 * base
        assert family.d1 * family.d2 == base * base - 4 * cross(a, b) ** 2
        assert family.d1 - family.d2 == 4 * abs(cross(a, b))

    @given(nonzero_int_spinors, nonzero_int_spinors)
    def test_swapping_generators_swaps_a_and_b(self, a, b):
        forward = from_spinor_pair(a, b)
        backward = from_spinor_pair(b, a)
        fa, fb, fc = forward.shared_curvatures
        ba, bb, bc = backward.shared_curvatures
        assert (fa, fb, fc) == (bb, ba, bc)
        assert (forward.d1, forward.d2) == (backward.d1, backward.d2)

    @given(nonzero_int_spinors, nonzero_int_spinors, st.integers(1, 5))
    def test_scaling_generators_scales_quadratically(self, a, b, k):
        plain = from_spinor_pair(a, b)
        scaled = from_spinor_pair(k * a, k * b)
        assert scaled.quadruple_1.as_tuple() == tuple(
            k * k * v for v in plain.quadruple_1.as_tuple()
        )


class TestFromSpinorTriple:
    def test_example_triple(self):
        a, b = Spinor(2, 1), Spinor(1, -3)
        c = -a - b
        assert from_spinor_triple(a, b, c) == (9, 4, 1, 0, 28)

    def test_nonzero_sum_raises(self):
        with pytest.raises(CurlViolation):
            from_spinor_triple(Spinor(1, 0), Spinor(0, 1), Spinor(1, 1))

    @given(nonzero_int_spinors, nonzero_int_spinors)
    def test_agrees_with_pair_construction(self, a, b):
        c = -a - b
        big_a, big_b, big_c, d1, d2 = from_spinor_triple(a, b, c)
        family = from_spinor_pair(a, b)
        assert (big_a, big_b, big_c) == family.shared_curvatures
        assert {d1, d2} == {family.d1, family.d2}
        assert d1 - d2 == 4 * cross(a, b)
        assert descartes_residual(big_a, big_b, big_c, d1) == 0
        assert descartes_residual(big_a, big_b, big_c, d2) == 0


class TestApollonianFlip:
    def test_flip_fourth_of_figure_quadruple(self):
        start = DescartesQuadruple(2, 3, 6, 23)
        assert apollonian_flip(start, 3).as_tuple() == (2, 3, 6, -1)

    def test_flip_is_involution(self):
        start = DescartesQuadruple(2, 3, 6, 23)
        for index in range(4):
            assert apollonian_flip(apollonian_flip(start, index), index) == start

    @given(
        nonzero_int_spinors,
        nonzero_int_spinors,
        st.lists(st.integers(0, 3), min_size=1, max_size=6),
    )
    def test_random_walk_stays_on_residual_zero(self, a, b, indices):
        quadruple = from_spinor_pair(a, b).quadruple_1
        for index in indices:
            # the constructor re-validates the residual at every step
            quadruple = apollonian_flip(quadruple, index)
        assert descartes_residual(*quadruple.as_tuple()) == 0


class TestCanonicalize:
    def test_sorts_primitive_input(self):
        reduced, primitive = canonicalize(DescartesQuadruple(2, 6, 3, 23))
        assert reduced.as_tuple() == (2, 3, 6, 23)
        assert primitive

    def test_reduces_common_factor(self):
        reduced, primitive = canonicalize(DescartesQuadruple(4, 4, 0, 16))
        assert reduced.as_tuple() == (0, 1, 1, 4)
        assert not primitive

    def test_negative_entries(self):
        reduced, primitive = canonicalize(DescartesQuadruple(-2, 4, 4, 6))
        assert reduced.as_tuple() == (-1, 2, 2, 3)
        assert not primitive

    def test_all_zero(self):
        reduced, primitive = canonicalize(DescartesQuadruple(0, 0, 0, 0))
        assert reduced.as_tuple() == (0, 0, 0, 0)
        assert not primitive

    def test_rational_input_rejected(self):
        scaled = DescartesQuadruple(
            Fraction(2, 5), Fraction(3, 5), Fraction(6, 5), Fraction(23, 5)
        )
        with pytest.raises(NonIntegral):
            canonicalize(scaled)

    @given(nonzero_int_spinors, nonzero_int_spinors, st.integers(1, 4))
    def test_scaling_does_not_change_canonical_form(self, a, b, k):
        plain = canonicalize(from_spinor_pair(a, b).quadruple_1)[0]
        scaled = canonicalize(from_spinor_pair(k * a, k * b).quadruple_1)[0]
        assert plain == scaled
