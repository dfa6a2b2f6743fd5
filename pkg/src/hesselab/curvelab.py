"""Plane curves and their local geometry, all in exact arithmetic.

A curve is a nonzero homogeneous form in three coordinates.  Local
questions are answered by translating the point of interest to the
origin of an affine chart: the lowest jet there is the tangent cone,
whose degree is the local multiplicity and whose discriminant splits
double points into nodes and cusp candidates.  Intersection numbers and
transversality certificates come from the sheared-resultant machinery
in algebra.solve, so every reported multiplicity is provably exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import Eisenstein, MPoly, eis, proportional
from .algebra.resultants import mgcd, monic_normalize, radical
from .algebra.solve import (
    CommonComponentError,
    IntersectionRecord,
    intersect_full,
    normalize_projective,
)
from .algebra.solve import intersection_multiplicity as _raw_point_multiplicity

Point = Sequence[Eisenstein]

CHART_VARS = ("z1", "z2")

NODE = "Node"
CUSP_A2 = "CuspA2"
TACNODE_A3 = "TacnodeA3"
ORDINARY_TRIPLE = "OrdinaryTriple"
HIGHER = "Higher"

CONE_DISTINCT_LINES = "distinct-lines"
CONE_DOUBLE_LINE = "double-line"
CONE_THREE_DISTINCT_LINES = "three-distinct-lines"
CONE_REPEATED_FACTOR = "repeated-factor"
CONE_HIGHER_ORDER = "higher-order"


@dataclass(frozen=True)
class PlaneCurve:
    """A projective plane curve, optionally with component structure.

    components, when present, is a tuple of (curve, multiplicity) pairs
    whose weighted product equals the stored form up to a scalar.
    """

    form: MPoly
    components: tuple[tuple["PlaneCurve", int], ...] | None = None

    def __post_init__(self) -> None:
        if self.form.is_zero():
            raise ValueError("a curve needs a nonzero form")
        if len(self.form.variables) != 3:
            raise ValueError("a plane curve lives in three coordinates")
        if not self.form.is_homogeneous():
            raise ValueError("a curve form must be homogeneous")
        if self.form.degree() < 1:
            raise ValueError("a curve form must have positive degree")
        if self.components is not None:
            prod = MPoly.constant(eis(1), self.form.variables)
            for part, mult in self.components:
                if mult < 1:
                    raise ValueError("component multiplicities are positive")
                if part.variables != self.variables:
                    raise ValueError("components must share coordinates")
                prod = prod * part.form ** mult
            if proportional(prod, self.form) is None:
                raise ValueError("components do not multiply to the form")

    @property
    def variables(self) -> tuple[str, ...]:
        return self.form.variables

    @property
    def degree(self) -> int:
        return self.form.degree()

    @classmethod
    def product(cls, parts: Sequence[tuple["PlaneCurve", int]]) -> "PlaneCurve":
        parts = tuple(parts)
        if not parts:
            raise ValueError("empty product")
        form = MPoly.constant(eis(1), parts[0][0].variables)
        for part, mult in parts:
            form = form * part.form ** mult
        return cls(form, parts)

    def contains(self, point: Point) -> bool:
        value = self.form.evaluate(tuple(point))
        return not value

    def partials(self) -> tuple[MPoly, MPoly, MPoly]:
        v = self.variables
        return (self.form.diff(v[0]), self.form.diff(v[1]), self.form.diff(v[2]))

    def reduced(self) -> "PlaneCurve":
        return PlaneCurve(radical(self.form))

    def __str__(self) -> str:
        return str(self.form)


def curve(form: MPoly, variables: tuple[str, str, str] = ("y1", "y2", "y3")) -> PlaneCurve:
    """Wrap a form as a curve on the given coordinate triple."""
    return PlaneCurve(form.restrict_to_used().with_variables(variables))


@dataclass(frozen=True)
class SingularPointRecord:
    point: tuple[Eisenstein, Eisenstein, Eisenstein]
    multiplicity: int
    tangent_cone: MPoly
    cone_status: str
    tag: str
    tangent_line: MPoly | None = None
    contact: int | None = None


@dataclass(frozen=True)
class SingularLocus:
    """Classified rational singular points plus non-rational witnesses.

    certificates holds extension-field evidence: IntersectionRecord
    entries from pairwise component meets, or ExtPoint solutions of the
    partial-derivative system.
    """

    records: tuple[SingularPointRecord, ...]
    certificates: tuple[object, ...]
    component: MPoly | None

    def is_empty(self) -> bool:
        return not self.records and not self.certificates and self.component is None


def local_expansion(F: PlaneCurve, point: Point) -> MPoly:
    """The form rewritten in an affine chart with the point at the origin.

    The chart dehomogenizes at the first nonzero coordinate of the
    point; the remaining two coordinates become z1, z2.  Both curves of
    a pair expand in the same chart because the pivot depends only on
    the point.
    """
    p = normalize_projective(point)
    pivot = next(i for i, c in enumerate(p) if c)
    others = [i for i in range(3) if i != pivot]
    v = F.variables
    z1 = MPoly.variable("z1")
    z2 = MPoly.variable("z2")
    mapping = {
        v[pivot]: MPoly.constant(p[pivot], CHART_VARS),
        v[others[0]]: z1 + MPoly.constant(p[others[0]], CHART_VARS),
        v[others[1]]: z2 + MPoly.constant(p[others[1]], CHART_VARS),
    }
    local = F.form.subs(mapping)
    return local.restrict_to_used().with_variables(CHART_VARS)


def local_multiplicity(F: PlaneCurve, point: Point) -> int:
    """Order of the lowest nonvanishing jet at the point."""
    local = local_expansion(F, point)
    orders = {sum(e) for e in local.terms}
    if 0 in orders:
        raise ValueError("the point is not on the curve")
    return min(orders)


def tangent_cone(F: PlaneCurve, point: Point) -> tuple[MPoly, int]:
    """The lowest jet at the point as a binary form, with its degree."""
    local = local_expansion(F, point)
    m = min(sum(e) for e in local.terms)
    terms = {e: c for e, c in local.terms.items() if sum(e) == m}
    return MPoly(CHART_VARS, terms), m


def _cone_coefficient(cone: MPoly, e1: int, e2: int) -> Eisenstein:
    return cone.terms.get((e1, e2), eis(0))


def _binary_form_squarefree(q: MPoly) -> bool:
    # a repeated factor divides both partials; a squarefree form shares
    # at most z2 with the z1-partial and at most z1 with the z2-partial,
    # so the triple gcd is the right witness
    d1, d2 = q.diff("z1"), q.diff("z2")
    if d1.is_zero():
        return q.degree_in("z2") <= 1
    if d2.is_zero():
        return q.degree_in("z1") <= 1
    return mgcd(mgcd(q, d1), d2).is_constant()


def _chart_line_to_projective(
    F: PlaneCurve, point: Point, a: Eisenstein, b: Eisenstein
) -> MPoly:
    """Lift the chart direction a*z1 + b*z2 to the projective line through the point."""
    p = normalize_projective(point)
    pivot = next(i for i, c in enumerate(p) if c)
    others = [i for i in range(3) if i != pivot]
    v = F.variables
    yi = MPoly.variable(v[others[0]])
    yj = MPoly.variable(v[others[1]])
    yk = MPoly.variable(v[pivot])
    scale = p[pivot].inverse()
    shift = (a * p[others[0]] + b * p[others[1]]) * scale
    line = yi * a + yj * b - yk * shift
    return monic_normalize(line.with_variables(F.variables))


def tangent_cones_share_factor(F: PlaneCurve, G: PlaneCurve, point: Point) -> bool:
    """Whether the tangent cones at a common point have a common line."""
    cf, _ = tangent_cone(F, point)
    cg, _ = tangent_cone(G, point)
    return not mgcd(cf, cg).is_constant()


def classify_singularity(F: PlaneCurve, point: Point) -> SingularPointRecord:
    """Classify a singular rational point of the curve.

    Double points split by the discriminant of the degree-2 cone: a
    nonzero discriminant is a node; a double line is refined by the
    contact order of the curve with that line (3 = cusp, 4 = tacnode).
    Triple points with a squarefree cone are ordinary.  Anything else
    is reported as Higher together with the raw cone data.
    """
    p = normalize_projective(point)
    cone, m = tangent_cone(F, p)
    if m < 2:
        raise ValueError("the point is not singular")
    if m == 2:
        alpha = _cone_coefficient(cone, 2, 0)
        beta = _cone_coefficient(cone, 1, 1)
        gamma = _cone_coefficient(cone, 0, 2)
        disc = beta * beta - alpha * gamma * 4
        if disc:
            return SingularPointRecord(p, 2, cone, CONE_DISTINCT_LINES, NODE)
        if alpha:
            a, b = alpha + alpha, beta
        else:
            a, b = beta, gamma + gamma
        line = _chart_line_to_projective(F, p, a, b)
        try:
            contact = intersection_multiplicity(F, curve(line, F.variables), p)
        except CommonComponentError:
            contact = None
        if contact == 3:
            tag = CUSP_A2
        elif contact == 4:
            tag = TACNODE_A3
        else:
            tag = HIGHER
        return SingularPointRecord(p, 2, cone, CONE_DOUBLE_LINE, tag, line, contact)
    if m == 3:
        if _binary_form_squarefree(cone):
            return SingularPointRecord(p, 3, cone, CONE_THREE_DISTINCT_LINES, ORDINARY_TRIPLE)
        return SingularPointRecord(p, 3, cone, CONE_REPEATED_FACTOR, HIGHER)
    return SingularPointRecord(p, m, cone, CONE_HIGHER_ORDER, HIGHER)


def intersect(
    F: PlaneCurve, G: PlaneCurve, shear_seed: int = 0
) -> list[IntersectionRecord]:
    """All intersection points with multiplicities, Bezout-complete."""
    if F.variables != G.variables:
        raise ValueError("curves live on different coordinates")
    return intersect_full(F.form, G.form, F.variables, shear_seed)[0]


@dataclass(frozen=True)
class TransversalityWitness:
    transversal: bool
    shear: tuple[int, int]
    records: tuple[IntersectionRecord, ...]


def transversal(
    F: PlaneCurve, G: PlaneCurve, shear_seed: int = 0
) -> TransversalityWitness:
    """Certify that every intersection of the two curves is simple.

    The witness carries the shear that separated the fibers and the
    full multiplicity list; transversality means every entry is 1,
    which is exactly the squarefree full-degree resultant condition.
    """
    if F.variables != G.variables:
        raise ValueError("curves live on different coordinates")
    records, shear = intersect_full(F.form, G.form, F.variables, shear_seed)
    ok = all(r.multiplicity == 1 for r in records)
    return TransversalityWitness(ok, shear, tuple(records))


def intersection_multiplicity(F: PlaneCurve, G: PlaneCurve, point: Point) -> int:
    """Local intersection number at one rational point (0 if absent).

    A common component is only an obstruction when it passes through
    the point; otherwise it is a unit locally and is divided out.
    """
    if F.variables != G.variables:
        raise ValueError("curves live on different coordinates")
    p = normalize_projective(point)
    f, g = F.form, G.form
    common = mgcd(f, g).restrict_to_used().with_variables(F.variables)
    if not common.is_constant():
        if not common.evaluate(p):
            raise CommonComponentError(common)
        f = f.divexact(common)
        g = g.divexact(common)
        if f.is_constant() or g.is_constant():
            return 0
    return _raw_point_multiplicity(f, g, p, F.variables)


def _dedupe_rational(points: list[tuple[Eisenstein, ...]]) -> list[tuple[Eisenstein, ...]]:
    seen: dict[tuple, tuple[Eisenstein, ...]] = {}
    for p in points:
        key = tuple((c.a, c.b) for c in p)
        seen.setdefault(key, p)
    return [seen[k] for k in sorted(seen)]


def singular_points(F: PlaneCurve) -> SingularLocus:
    """The singular locus: classified rational points plus certificates.

    For a product curve the locus is assembled from pairwise component
    intersections and the components' own loci, which avoids solving
    the partial-derivative system of a high-degree form.  A repeated
    component is itself singular everywhere and is reported as a
    positive-dimensional certificate.
    """
    if F.components is not None and (
        len(F.components) > 1 or any(m > 1 for _, m in F.components)
    ):
        component: MPoly | None = None
        repeated = [part.form for part, mult in F.components if mult > 1]
        if repeated:
            prod = repeated[0]
            for extra in repeated[1:]:
                prod = prod * extra
            component = monic_normalize(prod)
        rational: list[tuple[Eisenstein, ...]] = []
        certificates: list[IntersectionRecord] = []
        parts = [part for part, _ in F.components]
        for i in range(len(parts)):
            inner = singular_points(parts[i])
            rational.extend(r.point for r in inner.records)
            certificates.extend(inner.certificates)
            if inner.component is not None:
                joint = inner.component if component is None else component * inner.component
                component = monic_normalize(joint)
            for j in range(i + 1, len(parts)):
                for rec in intersect(parts[i], parts[j]):
                    if rec.is_rational():
                        rational.append(rec.point)
                    else:
                        certificates.append(rec)
        records = tuple(
            classify_singularity(F, p) for p in _dedupe_rational(rational)
        )
        return SingularLocus(records, tuple(certificates), component)

    from .algebra.solve import solve_system

    result = solve_system(list(F.partials()), F.variables)
    records = tuple(
        classify_singularity(F, p) for p in _dedupe_rational(list(result.rational))
    )
    return SingularLocus(records, tuple(result.certified), result.positive_dimensional)


def is_smooth(F: PlaneCurve) -> bool:
    return singular_points(F).is_empty()
