"""The Hesse pencil of plane cubics and its classical apparatus.

Members are lam0*(y1^3+y2^3+y3^3) + 6*lam1*y1*y2*y3.  This module knows
the pencil's parameter line: singular members, Hessians, the nine base
points with their moving tangent lines, tangent-crossing reports, polar
conics, and the loci swept by matched pencils of tangents.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra.eisenstein import Eisenstein, EisLike, Rational, eis, rat
from .algebra.kpoly import KPoly, kpoly_from_mpoly
from .algebra.mpoly import MPoly, MPolyLike
from .algebra.resultants import monic_normalize
from .curvelab import PlaneCurve, curve, intersect, singular_points
from .projective import (
    YVARS,
    Point,
    cross,
    det3,
    extended_group,
    line_coefficients,
    point,
)

PARAM_VARS = ("l0", "l1")
XVARS = ("x1", "x2", "x3")


@dataclass(frozen=True)
class PencilParam:
    """A point (lam0 : lam1) on the parameter line of the pencil.

    Normal form: lam0 = 1 with lam1 the finite slope, or (0 : 1) for the
    member at infinity (the coordinate triangle y1*y2*y3).
    """

    lam0: Eisenstein
    lam1: Eisenstein

    def __post_init__(self) -> None:
        l0, l1 = eis(self.lam0), eis(self.lam1)
        if l0.is_zero() and l1.is_zero():
            raise ValueError("(0 : 0) is not a point of the parameter line")
        if l0.is_zero():
            l1 = eis(1)
        else:
            l1 = l1 / l0
            l0 = eis(1)
        object.__setattr__(self, "lam0", l0)
        object.__setattr__(self, "lam1", l1)

    @classmethod
    def of(cls, value: EisLike) -> "PencilParam":
        return cls(eis(1), eis(value))

    @classmethod
    def infinity(cls) -> "PencilParam":
        return cls(eis(0), eis(1))

    def is_infinite(self) -> bool:
        return self.lam0.is_zero()

    def value(self) -> Eisenstein:
        if self.is_infinite():
            raise ValueError("the member at infinity has no finite slope")
        return self.lam1

    def is_singular(self) -> bool:
        """True for the four triangle members: lam0*(lam0^3 + 8*lam1^3) = 0."""
        return (self.lam0 * (self.lam0 ** 3 + self.lam1 ** 3 * 8)).is_zero()

    def is_equianharmonic(self) -> bool:
        """True when the member is smooth with j-invariant zero.

        These are the smooth members whose nine tangents at the base
        points drop from 36 crossings to 12 by falling into concurrent
        triples; algebraically lam1 = 0 or lam0^3 = lam1^3.
        """
        if self.is_singular():
            return False
        return self.lam1.is_zero() or self.lam0 ** 3 == self.lam1 ** 3

    def is_excluded(self) -> bool:
        """True on the exclusion list used by the arrangement audits.

        The list contains the four triangles, the slopes 0 and eps^i with
        eps^3 = 1 (where concurrences do occur), and their negatives
        -eps^i (flagged alongside them even though the crossing count
        stays at 36 there; see the equianharmonic partition report).
        """
        if self.is_singular() or self.lam1.is_zero():
            return True
        cube = self.lam1 ** 3
        return cube == self.lam0 ** 3 or cube == -(self.lam0 ** 3)

    def __str__(self) -> str:
        return "inf" if self.is_infinite() else str(self.lam1)


def singular_parameters() -> tuple[PencilParam, ...]:
    """The four parameters whose members are triangles of lines."""
    half = eis(rat(-1, 2))
    finite = [PencilParam.of(Eisenstein.zeta_power(i) * half) for i in range(3)]
    return (PencilParam.infinity(), *finite)


def equianharmonic_parameters() -> tuple[PencilParam, ...]:
    """The four smooth members with j-invariant zero: slopes 0 and eps^i."""
    return (
        PencilParam.of(0),
        *(PencilParam.of(Eisenstein.zeta_power(i)) for i in range(3)),
    )


# -- members and Hessians --------------------------------------------------


def pencil_form(l0: MPolyLike, l1: MPolyLike, variables: Sequence[str] = YVARS) -> MPoly:
    """l0*(y1^3+y2^3+y3^3) + 6*l1*y1*y2*y3 with weights from any ring."""
    a, b, c = (MPoly.variable(v) for v in variables)
    return (a ** 3 + b ** 3 + c ** 3) * l0 + a * b * c * l1 * 6


def symbolic_pencil_form() -> MPoly:
    """The pencil member with the parameter left as variables l0, l1."""
    return pencil_form(MPoly.variable("l0"), MPoly.variable("l1"))


def hesse_cubic(param: PencilParam) -> PlaneCurve:
    return curve(pencil_form(param.lam0, param.lam1))


def hessian_form(form: MPoly, variables: Sequence[str] = YVARS) -> MPoly:
    """Determinant of the matrix of second partials in the given variables."""
    rows = [[form.diff(u).diff(v) for v in variables] for u in variables]
    return det3(rows)


def hessian_curve(F: PlaneCurve) -> PlaneCurve:
    return curve(hessian_form(F.form, F.variables), F.variables)


def hessian_parameter(param: PencilParam) -> PencilParam:
    """Parameter of the Hessian of the member at ``param``.

    The pencil is closed under taking Hessians; the map on parameters is
    (l0 : l1) -> (-6*l0*l1^2 : l0^3 + 2*l1^3), and its fixed points are
    exactly the four triangles.
    """
    l0, l1 = param.lam0, param.lam1
    return PencilParam(l0 * l1 * l1 * -6, l0 ** 3 + l1 ** 3 * 2)


# -- base points and their tangents ----------------------------------------

BASE_POINT = point(1, -1, 0)


def base_points() -> tuple[Point, ...]:
    """The nine base points of the pencil, a single group orbit."""
    return tuple(extended_group().orbit(BASE_POINT))


def tangent_line_at(F: PlaneCurve, p: Point) -> MPoly:
    """Monic equation of the tangent line at a smooth point of F."""
    coeffs = [g.evaluate(p) for g in F.partials()]
    if all(c.is_zero() for c in coeffs):
        raise ValueError("point is singular on the curve")
    if not F.contains(p):
        raise ValueError("point does not lie on the curve")
    n = len(F.variables)
    terms = {}
    for i, c in enumerate(coeffs):
        e = [0] * n
        e[i] = 1
        terms[tuple(e)] = c
    return monic_normalize(MPoly(F.variables, terms))


def base_tangent_pencil(p: Point) -> tuple[MPoly, MPoly]:
    """Tangent lines at a base point, as a pencil base + slope*direction.

    Every member is smooth at a base point and the gradient there is
    linear in the parameter: lam0*(sum p_j^2 y_j) plus
    lam1*(2*sum p_{j-1} p_{j+1} y_j), after dividing out the common 3.
    """
    ys = [MPoly.variable(v) for v in YVARS]
    if not sum(c ** 3 for c in p).is_zero() or not (p[0] * p[1] * p[2]).is_zero():
        raise ValueError("not a base point of the pencil")
    base = MPoly.zero(YVARS)
    direction = MPoly.zero(YVARS)
    for j in range(3):
        base = base + ys[j] * (p[j] ** 2)
        direction = direction + ys[j] * (p[j - 2] * p[j - 1] * 2)
    return base, direction


@dataclass(frozen=True)
class FlexData:
    """The nine base points with their tangent lines on one member."""

    param: PencilParam
    points: tuple[Point, ...]
    tangents: tuple[MPoly, ...]


def flex_data(param: PencilParam) -> FlexData:
    if param.is_singular():
        raise ValueError("member is a triangle; it has no flex tangents")
    pts = base_points()
    tangents = []
    for p in pts:
        base, direction = base_tangent_pencil(p)
        tangents.append(monic_normalize(base * param.lam0 + direction * param.lam1))
    return FlexData(param, pts, tuple(tangents))


def certify_flex_tangency(data: FlexData) -> bool:
    """Check each tangent meets its member only at its base point, triply."""
    member = hesse_cubic(data.param)
    for p, t in zip(data.points, data.tangents):
        records = intersect(member, curve(t))
        if len(records) != 1:
            return False
        rec = records[0]
        if not rec.is_rational() or rec.multiplicity != 3 or rec.conjugates != 1:
            return False
        if tuple(rec.point) != tuple(p):
            return False
    return True


# -- the tangent arrangement ------------------------------------------------


def _point_key(p: Point) -> tuple:
    return tuple((c.a, c.b) for c in p)


@dataclass(frozen=True)
class MeetingReport:
    """Pairwise crossings of the nine tangent lines on one member."""

    param: PencilParam
    points: tuple[Point, ...]
    tangent_counts: tuple[int, ...]
    concurrences: tuple[Point, ...]
    orbit_sizes: tuple[int, ...]

    def count(self) -> int:
        return len(self.points)

    def is_generic(self) -> bool:
        return self.count() == 36 and not self.concurrences


def flex_meeting_points(param: PencilParam) -> MeetingReport:
    data = flex_data(param)
    coeff_rows = [line_coefficients(t) for t in data.tangents]
    seen: dict[tuple, Point] = {}
    for i in range(9):
        for j in range(i + 1, 9):
            v = cross(coeff_rows[i], coeff_rows[j])
            if all(c.is_zero() for c in v):
                raise ArithmeticError("coincident tangent lines")
            q = point(*v)
            seen.setdefault(_point_key(q), q)
    pts = tuple(sorted(seen.values(), key=_point_key))
    counts = tuple(
        sum(1 for t in data.tangents if t.evaluate(q).is_zero()) for q in pts
    )
    concurrences = tuple(q for q, c in zip(pts, counts) if c >= 3)
    group = extended_group()
    remaining = dict(zip(map(_point_key, pts), pts))
    sizes = []
    while remaining:
        _, q = next(iter(remaining.items()))
        orbit = group.orbit(q)
        for m in orbit:
            remaining.pop(_point_key(m), None)
        sizes.append(len(orbit))
    return MeetingReport(param, pts, counts, concurrences, tuple(sorted(sizes)))


def nine_lines() -> tuple[MPoly, ...]:
    """The nine lines y_{j+1} - eps^i y_j spanned by the triangle vertices.

    Each carries four of the twelve vertices, and four of the 36 tangent
    crossings of a generic member.
    """
    ys = [MPoly.variable(v) for v in YVARS]
    lines = []
    for j in range(3):
        for i in range(3):
            form = ys[(j + 1) % 3] - ys[j] * Eisenstein.zeta_power(i)
            lines.append(monic_normalize(form.with_variables(YVARS)))
    return tuple(lines)


def triangle_vertices(param: PencilParam) -> tuple[Point, ...]:
    """The three vertices of a triangle member."""
    if not param.is_singular():
        raise ValueError("member is smooth; it has no vertices")
    locus = singular_points(hesse_cubic(param))
    pts = sorted((rec.point for rec in locus.records), key=_point_key)
    if len(pts) != 3 or locus.certificates or locus.component is not None:
        raise ArithmeticError("triangle member did not yield three rational vertices")
    return tuple(pts)


def all_triangle_vertices() -> tuple[Point, ...]:
    """The twelve vertices of the four triangle members."""
    pts: list[Point] = []
    for param in singular_parameters():
        pts.extend(triangle_vertices(param))
    return tuple(sorted(pts, key=_point_key))


# -- polars ------------------------------------------------------------------


def polar_conic(x: Point, F: PlaneCurve) -> PlaneCurve:
    """First polar of x with respect to F: sum_j x_j * dF/dy_j."""
    form = MPoly.zero(F.variables)
    for xi, g in zip(x, F.partials()):
        form = form + g * xi
    return curve(form, F.variables)


def conic_rank(Q: PlaneCurve | MPoly, variables: Sequence[str] = YVARS) -> int:
    """Rank of the symmetric matrix of a quadratic form, computed exactly."""
    form = Q.form if isinstance(Q, PlaneCurve) else Q
    form = form.restrict_to_used().with_variables(variables)
    if form.is_zero() or form.degree() != 2 or not form.is_homogeneous():
        raise ValueError("not a quadratic form")
    half = eis(rat(1, 2))

    def entry(i: int, j: int) -> Eisenstein:
        e = [0, 0, 0]
        e[i] += 1
        e[j] += 1
        c = form.terms.get(tuple(e), eis(0))
        return c if i == j else c * half

    m = [[entry(i, j) for j in range(3)] for i in range(3)]
    if not det3(m).is_zero():
        return 3
    for i in range(3):
        for j in range(3):
            minor = (
                m[(i + 1) % 3][(j + 1) % 3] * m[(i + 2) % 3][(j + 2) % 3]
                - m[(i + 1) % 3][(j + 2) % 3] * m[(i + 2) % 3][(j + 1) % 3]
            )
            if not minor.is_zero():
                return 2
    return 1


def polar_pencil_determinant() -> MPoly:
    """det of the polar conic of x along the pencil, in x1..x3 and l0, l1.

    The polar of x with respect to the member (l0 : l1) is the conic with
    matrix diag(l0*x_j) plus l1*x_j on the two slots away from row j.
    """
    xs = [MPoly.variable(v) for v in XVARS]
    l0, l1 = (MPoly.variable(v) for v in PARAM_VARS)
    m = [
        [xs[0] * l0, xs[2] * l1, xs[1] * l1],
        [xs[2] * l1, xs[1] * l0, xs[0] * l1],
        [xs[1] * l1, xs[0] * l1, xs[2] * l0],
    ]
    return det3(m)


def polar_determinant_slope_poly(x: Point) -> KPoly:
    """The polar determinant at the point x as a polynomial in the slope."""
    d = polar_pencil_determinant().subs(
        {"x1": x[0], "x2": x[1], "x3": x[2], "l0": eis(1)}
    )
    if d.is_zero():
        return KPoly([])
    return kpoly_from_mpoly(d.restrict_to_used().with_variables(("l1",)), "l1")


def equianharmonic_witness(param: PencilParam) -> Point | None:
    """A tangent concurrence whose polar is a double line, if one exists.

    Returns None exactly when the member has the generic 36-crossing
    arrangement; a witness point certifies j-invariant zero structurally.
    """
    member = hesse_cubic(param)
    for q in flex_meeting_points(param).concurrences:
        if conic_rank(polar_conic(q, member)) == 1:
            return q
    return None


# -- matched pencils of lines -------------------------------------------------


def matched_pencil_locus(
    pencil_a: tuple[MPoly, MPoly], pencil_b: tuple[MPoly, MPoly]
) -> PlaneCurve:
    """Locus swept by intersections of matched lines base + t*direction.

    A point lies on matched members of the two pencils for some common t
    exactly when the 2x2 determinant of the pair vanishes there.
    """
    a0, a1 = pencil_a
    b0, b1 = pencil_b
    form = a0 * b1 - b0 * a1
    if form.is_zero():
        raise ValueError("the pencils coincide; the locus is the whole plane")
    return curve(monic_normalize(form))
