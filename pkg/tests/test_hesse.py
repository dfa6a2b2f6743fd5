"""Pencil members, Hessians, base-point tangents, crossings, polars.

Oracle notes, computed by hand before the assertions were written:

* Second partials of l0*(y1^3+y2^3+y3^3) + 6*l1*y1*y2*y3 are 6*l0*yj on
  the diagonal and 6*l1*yk off it; expanding the determinant gives
  216*(l0^3*y1*y2*y3 - l0*l1^2*(y1^3+y2^3+y3^3) + 2*l1^3*y1*y2*y3),
  which is 36 times the member at (-6*l0*l1^2 : l0^3 + 2*l1^3).
* Gradient of the slope-1 member at (1,-1,0) is (3, 3, -6), so the
  tangent there is y1 + y2 - 2*y3; at slope 2 and point (0,1,-1) the
  gradient is (-12, 3, 3), monic form y1 - 1/4*y2 - 1/4*y3.
* The polar of (1,1,1) with respect to the slope-1 member is
  3*(y1^2+y2^2+y3^2) + 6*(y1*y2+y1*y3+y2*y3) = 3*(y1+y2+y3)^2, a double
  line, while its determinant along the pencil is (1+2*t^3) - 3*t^2 =
  2*t^3 - 3*t^2 + 1 = 2*(t-1)^2*(t+1/2).
* Vertices of the four triangles: the coordinate points, the unit
  points (1,u,u^2), and (1,u,e^2*u^2) and (1,u,e*u^2) with u^3 = 1 and
  e a primitive cube root; twelve in all, four on each of the lines
  y_{j+1} = e^i y_j, three lines through each vertex.
* Matched tangent pencils at (1,-1,0) and (0,1,-1) are (y1+y2, -2*y3)
  and (y2+y3, -2*y1); the determinant is -2*(y1-y3)*(y1+y2+y3).  For
  the pair (1,-1,0) and (1,-e,0) it is -2*(e-1)*y3*(y1-e*y2).
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hesselab.algebra import ZETA, ZETA2, Eisenstein, MPoly, eis, proportional, rat
from hesselab.algebra.factorize import roots_in_base_field
from hesselab.algebra.parse import parse_poly
from hesselab.algebra.resultants import monic_normalize
from hesselab.curvelab import curve, intersection_multiplicity, is_smooth
from hesselab.hesse import (
    XVARS,
    FlexData,
    PencilParam,
    all_triangle_vertices,
    base_points,
    base_tangent_pencil,
    certify_flex_tangency,
    conic_rank,
    equianharmonic_parameters,
    equianharmonic_witness,
    flex_data,
    flex_meeting_points,
    hesse_cubic,
    hessian_curve,
    hessian_form,
    hessian_parameter,
    matched_pencil_locus,
    nine_lines,
    pencil_form,
    polar_conic,
    polar_determinant_slope_poly,
    polar_pencil_determinant,
    singular_parameters,
    symbolic_pencil_form,
    tangent_line_at,
    triangle_vertices,
)
from hesselab.projective import YVARS, point

YV = YVARS


def yp(text: str) -> MPoly:
    return parse_poly(text, YV)


def pt(*coords):
    return tuple(eis(x) for x in coords)


slopes = st.fractions(
    min_value=Fraction(-9), max_value=Fraction(9), max_denominator=4
)


class TestPencilParam:
    def test_normalization(self):
        assert PencilParam(eis(2), eis(3)) == PencilParam.of(Fraction(3, 2))

    def test_zero_zero_rejected(self):
        with pytest.raises(ValueError):
            PencilParam(eis(0), eis(0))

    def test_infinity(self):
        inf = PencilParam.infinity()
        assert inf.is_infinite()
        assert str(inf) == "inf"
        with pytest.raises(ValueError):
            inf.value()

    def test_str_finite(self):
        assert str(PencilParam.of(2)) == "2"
        assert str(PencilParam.of(Fraction(-1, 2))) == "-1/2"

    def test_singular_set(self):
        for param in singular_parameters():
            assert param.is_singular()
            assert not param.is_equianharmonic()
        for lam in (0, 1, 2, -3, Fraction(1, 2)):
            assert not PencilParam.of(lam).is_singular()
        assert not PencilParam.of(ZETA).is_singular()

    def test_singular_members_really_singular(self):
        for param in singular_parameters():
            assert not is_smooth(hesse_cubic(param))
        assert is_smooth(hesse_cubic(PencilParam.of(2)))

    def test_equianharmonic_set(self):
        for param in equianharmonic_parameters():
            assert param.is_equianharmonic()
            assert param.is_excluded()
        for lam in (-1, 2, -3, Fraction(1, 2)):
            assert not PencilParam.of(lam).is_equianharmonic()
        assert not PencilParam.of(-ZETA).is_equianharmonic()

    def test_exclusion_list(self):
        eps = [Eisenstein.zeta_power(i) for i in range(3)]
        listed = (
            [PencilParam.infinity(), PencilParam.of(0)]
            + [PencilParam.of(e) for e in eps]
            + [PencilParam.of(-e) for e in eps]
            + [PencilParam.of(-e / eis(2)) for e in eps]
        )
        assert len(set(listed)) == 11
        for param in listed:
            assert param.is_excluded()
        for lam in (2, -3, Fraction(1, 2), Fraction(-1, 3)):
            assert not PencilParam.of(lam).is_excluded()
        assert not PencilParam.of(ZETA + eis(2)).is_excluded()


class TestMembersAndHessians:
    def test_member_forms(self):
        assert hesse_cubic(PencilParam.of(1)).form == yp(
            "y1^3 + y2^3 + y3^3 + 6*y1*y2*y3"
        )
        inf = hesse_cubic(PencilParam.infinity()).form
        assert proportional(inf, yp("y1*y2*y3")) is not None

    def test_base_points_lie_on_every_sampled_member(self):
        pts = base_points()
        assert len(pts) == 9
        for lam in (0, 1, 2, Fraction(-7, 3)):
            member = hesse_cubic(PencilParam.of(lam))
            assert all(member.contains(p) for p in pts)
        triangle = hesse_cubic(PencilParam.infinity())
        assert all(triangle.contains(p) for p in pts)

    def test_hessian_identity_symbolic(self):
        sym = symbolic_pencil_form()
        l0 = MPoly.variable("l0")
        l1 = MPoly.variable("l1")
        image = pencil_form(l0 * l1 * l1 * -6, l0 ** 3 + l1 ** 3 * 2)
        assert hessian_form(sym) == image * 36

    def test_hessian_parameter_against_direct_computation(self):
        for lam in (0, 1, 2, Fraction(-1, 2), Fraction(5, 3)):
            param = PencilParam.of(lam)
            direct = hessian_curve(hesse_cubic(param)).form
            mapped = hesse_cubic(hessian_parameter(param)).form
            assert proportional(direct, mapped) is not None

    def test_hessian_parameter_values(self):
        assert hessian_parameter(PencilParam.of(1)) == PencilParam.of(
            Fraction(-1, 2)
        )
        assert hessian_parameter(PencilParam.of(0)) == PencilParam.infinity()
        assert hessian_parameter(PencilParam.infinity()) == PencilParam.infinity()

    def test_hessian_fixed_points_are_the_triangles(self):
        for param in singular_parameters():
            assert hessian_parameter(param) == param
        for lam in (0, 1, 2, -3):
            param = PencilParam.of(lam)
            assert hessian_parameter(param) != param

    def test_fixed_point_divisor_identity(self):
        # l0*nu1 - l1*nu0 should be the triangle divisor l0*(l0^3+8*l1^3)
        l0 = MPoly.variable("l0")
        l1 = MPoly.variable("l1")
        nu0 = l0 * l1 * l1 * -6
        nu1 = l0 ** 3 + l1 ** 3 * 2
        assert l0 * nu1 - l1 * nu0 == l0 * (l0 ** 3 + l1 ** 3 * 8)

    @settings(max_examples=25, deadline=None)
    @given(slopes)
    def test_hessian_stays_in_pencil(self, lam):
        param = PencilParam.of(lam)
        direct = hessian_curve(hesse_cubic(param)).form
        mapped = hesse_cubic(hessian_parameter(param)).form
        assert proportional(direct, mapped) is not None


class TestFlexTangents:
    def test_tangent_pencil_at_reference_point(self):
        base, direction = base_tangent_pencil(pt(1, -1, 0))
        assert base == yp("y1 + y2")
        assert direction == yp("-2*y3")

    def test_tangent_pencil_rejects_non_base_point(self):
        with pytest.raises(ValueError):
            base_tangent_pencil(pt(1, 1, 1))

    def test_known_tangents_on_slope_one(self):
        data = flex_data(PencilParam.of(1))
        lookup = dict(zip(data.points, data.tangents))
        assert lookup[pt(1, -1, 0)] == yp("y1 + y2 - 2*y3")
        assert lookup[pt(0, 1, -1)] == monic_normalize(yp("-2*y1 + y2 + y3"))

    def test_tangent_line_at_matches_pencil(self):
        member = hesse_cubic(PencilParam.of(2))
        assert tangent_line_at(member, pt(0, 1, -1)) == monic_normalize(
            yp("-4*y1 + y2 + y3")
        )

    def test_tangent_line_at_rejects_off_curve_point(self):
        member = hesse_cubic(PencilParam.of(2))
        with pytest.raises(ValueError):
            tangent_line_at(member, pt(1, 1, 1))

    def test_flex_data_refuses_triangles(self):
        with pytest.raises(ValueError):
            flex_data(PencilParam.infinity())

    def test_contact_three_certified(self):
        for lam in (0, 1, 2):
            assert certify_flex_tangency(flex_data(PencilParam.of(lam)))

    def test_contact_three_spot_check(self):
        member = hesse_cubic(PencilParam.of(2))
        line = curve(tangent_line_at(member, pt(1, -1, 0)))
        assert intersection_multiplicity(member, line, pt(1, -1, 0)) == 3


class TestMeetingReport:
    def test_generic_member_has_36_simple_crossings(self):
        report = flex_meeting_points(PencilParam.of(2))
        assert report.count() == 36
        assert report.is_generic()
        assert set(report.tangent_counts) == {2}
        assert report.orbit_sizes == (9, 9, 9, 9)

    def test_slope_one_has_30_crossings_with_three_triples(self):
        report = flex_meeting_points(PencilParam.of(1))
        assert report.count() == 30
        assert not report.is_generic()
        assert sorted(report.tangent_counts) == [2] * 27 + [3] * 3
        assert set(report.concurrences) == {
            pt(1, 1, 1),
            pt(1, ZETA, ZETA2),
            pt(1, ZETA2, ZETA),
        }
        assert report.orbit_sizes == (3, 9, 9, 9)

    def test_slope_one_concurrences_are_triangle_vertices(self):
        report = flex_meeting_points(PencilParam.of(1))
        vertices = triangle_vertices(PencilParam.of(Fraction(-1, 2)))
        assert set(report.concurrences) == set(vertices)

    def test_fermat_member_concurs_at_coordinate_vertices(self):
        report = flex_meeting_points(PencilParam.of(0))
        assert report.count() == 30
        assert set(report.concurrences) == {
            pt(1, 0, 0),
            pt(0, 1, 0),
            pt(0, 0, 1),
        }

    def test_negative_one_is_excluded_but_generic(self):
        param = PencilParam.of(-1)
        assert param.is_excluded()
        report = flex_meeting_points(param)
        assert report.count() == 36
        assert report.is_generic()

    @settings(max_examples=8, deadline=None)
    @given(slopes)
    def test_crossing_count_drops_only_on_equianharmonic_members(self, lam):
        param = PencilParam.of(lam)
        if param.is_singular():
            return
        report = flex_meeting_points(param)
        if param.is_equianharmonic():
            assert report.count() == 30
            assert len(report.concurrences) == 3
        else:
            assert report.count() == 36
            assert report.is_generic()


class TestVerticesAndNineLines:
    def test_coordinate_triangle_vertices(self):
        vs = triangle_vertices(PencilParam.infinity())
        assert set(vs) == {pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)}

    def test_unit_triangle_vertices(self):
        vs = triangle_vertices(PencilParam.of(Fraction(-1, 2)))
        assert set(vs) == {pt(1, 1, 1), pt(1, ZETA, ZETA2), pt(1, ZETA2, ZETA)}

    def test_twelve_distinct_vertices(self):
        vs = all_triangle_vertices()
        assert len(vs) == 12
        assert len(set(vs)) == 12

    def test_vertices_refused_for_smooth_members(self):
        with pytest.raises(ValueError):
            triangle_vertices(PencilParam.of(1))

    def test_nine_lines_carry_four_vertices_each(self):
        vs = all_triangle_vertices()
        lines = nine_lines()
        assert len(lines) == 9
        for line in lines:
            assert sum(1 for v in vs if line.evaluate(v).is_zero()) == 4
        for v in vs:
            assert sum(1 for line in lines if line.evaluate(v).is_zero()) == 3

    def test_generic_crossings_sit_four_per_line(self):
        report = flex_meeting_points(PencilParam.of(2))
        lines = nine_lines()
        for line in lines:
            hits = [p for p in report.points if line.evaluate(p).is_zero()]
            assert len(hits) == 4
        for p in report.points:
            assert sum(1 for line in lines if line.evaluate(p).is_zero()) == 1


class TestPolars:
    def test_polar_of_unit_point_on_slope_one_is_double_line(self):
        member = hesse_cubic(PencilParam.of(1))
        q = polar_conic(pt(1, 1, 1), member)
        assert proportional(q.form, yp("(y1 + y2 + y3)^2")) is not None
        assert conic_rank(q) == 1

    def test_polar_rank_three_at_generic_point(self):
        member = hesse_cubic(PencilParam.of(2))
        assert conic_rank(polar_conic(pt(1, 2, 5), member)) == 3

    def test_polar_rank_two_at_base_point(self):
        member = hesse_cubic(PencilParam.of(2))
        assert conic_rank(polar_conic(pt(1, -1, 0), member)) == 2

    def test_conic_rank_validates_degree(self):
        with pytest.raises(ValueError):
            conic_rank(yp("y1^3"))

    def test_determinant_identity(self):
        det = polar_pencil_determinant()
        l0 = MPoly.variable("l0")
        l1 = MPoly.variable("l1")
        image = pencil_form(l0 * l1 * l1 * -6, l0 ** 3 + l1 ** 3 * 2, XVARS)
        assert det * 6 == image

    def test_slope_poly_at_unit_point(self):
        p = polar_determinant_slope_poly(pt(1, 1, 1))
        assert list(p.coeffs) == [eis(1), eis(0), eis(-3), eis(2)]
        roots = dict(roots_in_base_field(p))
        assert roots == {eis(1): 2, eis(rat(-1, 2)): 1}

    def test_slope_poly_roots_at_conjugate_vertex(self):
        roots = dict(roots_in_base_field(polar_determinant_slope_poly(pt(1, 1, ZETA))))
        assert roots == {ZETA2: 2, ZETA2 * eis(rat(-1, 2)): 1}

    def test_slope_poly_vanishes_identically_at_base_points(self):
        assert polar_determinant_slope_poly(pt(1, -1, 0)).is_zero()

    def test_equianharmonic_witness(self):
        assert equianharmonic_witness(PencilParam.of(1)) is not None
        assert equianharmonic_witness(PencilParam.of(0)) is not None
        assert equianharmonic_witness(PencilParam.of(2)) is None
        assert equianharmonic_witness(PencilParam.of(-1)) is None

    def test_witness_agrees_with_algebraic_test(self):
        for lam in (0, 1, ZETA, -1, 2, Fraction(5, 3)):
            param = PencilParam.of(lam)
            found = equianharmonic_witness(param) is not None
            assert found == param.is_equianharmonic()


class TestMatchedPencils:
    def test_rational_pair_locus(self):
        locus = matched_pencil_locus(
            base_tangent_pencil(pt(1, -1, 0)),
            base_tangent_pencil(pt(0, 1, -1)),
        )
        assert locus.form == monic_normalize(yp("(y1 - y3)*(y1 + y2 + y3)"))

    def test_conjugate_pair_locus_splits_off_the_joining_line(self):
        locus = matched_pencil_locus(
            base_tangent_pencil(pt(1, -1, 0)),
            base_tangent_pencil(pt(1, -ZETA, 0)),
        )
        expect = yp("y3") * (yp("y1") - yp("y2") * ZETA)
        assert locus.form == monic_normalize(expect)

    def test_locus_contains_both_base_points(self):
        a, b = pt(1, -1, 0), pt(0, 1, -1)
        locus = matched_pencil_locus(base_tangent_pencil(a), base_tangent_pencil(b))
        assert locus.contains(a)
        assert locus.contains(b)

    def test_identical_pencils_rejected(self):
        pencil = base_tangent_pencil(pt(1, -1, 0))
        with pytest.raises(ValueError):
            matched_pencil_locus(pencil, pencil)
