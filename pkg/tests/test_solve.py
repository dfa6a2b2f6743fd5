"""Intersection solver: multiplicities, certificates, Bezout accounting."""

import pytest

from hesselab.algebra import MPoly, eis, ZETA
from hesselab.algebra.parse import parse_poly
from hesselab.algebra.solve import (
    CommonComponentError,
    intersect,
    intersection_multiplicity,
    normalize_projective,
    solve_system,
    transversal,
    _spiral,
)


def P(s):
    return parse_poly(s)


def pts(records):
    return {r.point for r in records if r.is_rational()}


def E(*ints):
    return tuple(eis(i) for i in ints)


class TestSpiral:
    def test_first_point_is_origin(self):
        assert _spiral(0) == (0, 0)

    def test_covers_distinct_points(self):
        seen = {_spiral(n) for n in range(200)}
        assert len(seen) == 200

    def test_first_shell(self):
        shell = {_spiral(n) for n in range(1, 9)}
        assert shell == {(i, j) for i in (-1, 0, 1) for j in (-1, 0, 1)} - {(0, 0)}


class TestRationalIntersections:
    def test_two_lines(self):
        recs = intersect(P("y1 + y2"), P("y1 - y2"))
        assert len(recs) == 1 and recs[0].point == E(0, 0, 1)

    def test_conic_secant(self):
        recs = intersect(P("y1^2 - y2*y3"), P("y3 - y2"))
        assert pts(recs) == {E(1, 1, 1), E(1, -1, -1)}
        assert all(r.multiplicity == 1 for r in recs)

    def test_conic_tangent_multiplicity(self):
        recs = intersect(P("y1^2 - y2*y3"), P("y2"))
        assert len(recs) == 1
        assert recs[0].point == E(0, 0, 1) and recs[0].multiplicity == 2

    def test_cuspidal_contact(self):
        m = intersection_multiplicity(P("y2^2*y3 - y1^3"), P("y2"), E(0, 0, 1))
        assert m == 3

    def test_point_off_curves(self):
        m = intersection_multiplicity(P("y1"), P("y2"), E(1, 1, 1))
        assert m == 0

    def test_bezout_on_cubics(self):
        recs = intersect(P("y1^3 + y2^3 + y3^3"), P("y1*y2*y3"))
        assert sum(r.multiplicity * r.conjugates for r in recs) == 9
        assert len(recs) == 9 and all(r.is_rational() for r in recs)

    def test_shear_seed_changes_nothing(self):
        a = intersect(P("y1^2 - y2*y3"), P("y3 - y2"), shear_seed=0)
        b = intersect(P("y1^2 - y2*y3"), P("y3 - y2"), shear_seed=7)
        assert pts(a) == pts(b)


class TestCertificates:
    def test_quadratic_orbit(self):
        recs = intersect(P("y1^2 - 2*y3^2"), P("y2"))
        assert len(recs) == 1
        r = recs[0]
        assert not r.is_rational() and r.conjugates == 2 and r.multiplicity == 1
        # the certificate point satisfies both equations
        coords = list(r.point.coords)
        zero = coords[0] - coords[0]
        for f in (P("y1^2 - 2*y3^2"), P("y2")):
            val = f.restrict_to_used().with_variables(("y1", "y2", "y3")).evaluate(coords)
            assert (val + zero).is_zero()

    def test_mixed_orbits_account_for_bezout(self):
        # conic meets conic: y1^2 - 2 y3^2 and y1 y2 - y3^2
        recs = intersect(P("y1^2 - 2*y3^2"), P("y1*y2 - y3^2"))
        assert sum(r.multiplicity * r.conjugates for r in recs) == 4


class TestGuards:
    def test_common_component(self):
        with pytest.raises(CommonComponentError) as e:
            intersect(P("(y1 + y2)*y3"), P("(y1 + y2)*y2"))
        assert e.value.component == P("y1 + y2")

    def test_inhomogeneous_rejected(self):
        with pytest.raises(ValueError):
            intersect(P("y1^2 + y2"), P("y3"))

    def test_foreign_variable_rejected(self):
        with pytest.raises(ValueError):
            intersect(P("y1 + z1"), P("y2"))

    def test_curve_on_all_small_centers(self):
        # this conic contains every center (k, k^2, 1); the spiral
        # family must still find a valid shear
        recs = intersect(P("y1^2 - y2*y3"), P("y1^2 + y2^2 - 2*y3^2"))
        assert sum(r.multiplicity * r.conjugates for r in recs) == 4


class TestTransversal:
    def test_transverse(self):
        ok, recs = transversal(P("y1^2 - y2*y3"), P("y3 - y2"))
        assert ok and len(recs) == 2

    def test_not_transverse(self):
        ok, _ = transversal(P("y1^2 - y2*y3"), P("y2"))
        assert not ok


class TestSolveSystem:
    def test_node_of_nodal_cubic(self):
        F = P("y2^2*y3 - y1^3 - y1^2*y3")
        res = solve_system([F, F.diff("y1"), F.diff("y2"), F.diff("y3")])
        assert res.positive_dimensional is None
        assert res.rational == [E(0, 0, 1)] and res.certified == []

    def test_smooth_conic_has_empty_singular_locus(self):
        F = P("y1^2 + y2^2 + y3^2")
        res = solve_system([F.diff("y1"), F.diff("y2"), F.diff("y3")])
        assert res.rational == [] and res.certified == []

    def test_positive_dimensional_certificate(self):
        res = solve_system([P("(y1 + y2)*y3"), P("(y1 + y2)*y1")])
        assert res.positive_dimensional == P("y1 + y2")

    def test_filter_drops_noncommon_points(self):
        # three concurrent-ish lines: only (0,0,1) common to all three
        res = solve_system([P("y1"), P("y2"), P("y1 + y2")])
        assert res.rational == [E(0, 0, 1)]

    def test_single_form_is_its_own_curve(self):
        result = solve_system([P("y1")])
        assert result.positive_dimensional is not None
        assert str(result.positive_dimensional) == "y1"

    def test_empty_system_rejected(self):
        with pytest.raises(ValueError):
            solve_system([])

    def test_constant_in_system_means_no_zeros(self):
        result = solve_system([P("y1"), P("y1 + 1 - y1")])
        assert result.rational == [] and result.certified == []
        assert result.positive_dimensional is None

    def test_pairwise_shared_components_split(self):
        # every pair shares a line, yet the triple meets only in points
        result = solve_system([P("y2*y3"), P("y1*y3"), P("y1*y2")])
        assert result.positive_dimensional is None
        coords = sorted(
            tuple(int(c.a) for c in p) for p in result.rational
        )
        assert coords == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


class TestNormalize:
    def test_leading_one(self):
        assert normalize_projective(E(0, 3, 6)) == (eis(0), eis(1), eis(2))

    def test_zeta_scaling(self):
        a = normalize_projective([ZETA, ZETA * ZETA, eis(1)])
        b = normalize_projective([eis(1), ZETA, ZETA * ZETA])
        assert a == b

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            normalize_projective(E(0, 0, 0))
