"""Degenerate-fiber geometry around a pencil member.

Dual curves by exact elimination, the degree-18 fiber (member cubed plus
its nine flex tangents) with its singularity audit, the local model of
the discriminant near a triple line, Pluecker-style enumerative
bookkeeping, and the avoidance audit for a probe cubic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra.eisenstein import Eisenstein, eis, rat
from .algebra.mpoly import InexactDivision, MPoly
from .algebra.resultants import monic_normalize, radical, resultant
from .curvelab import (
    NODE,
    PlaneCurve,
    SingularPointRecord,
    classify_singularity,
    curve,
    intersect,
    intersection_multiplicity,
    is_smooth,
    transversal,
)
from .hesse import (
    PencilParam,
    flex_data,
    flex_meeting_points,
    hesse_cubic,
    nine_lines,
)
from .projective import YVARS, Point

DUAL_VARS = ("x1", "x2", "x3")
LOCAL_VARS = ("z1", "z2", "a", "b", "c")


# -- dual curves ---------------------------------------------------------------


def _line_restriction(F: PlaneCurve) -> MPoly:
    """Restrict F to the universal line x1*y1 + x2*y2 + x3*y3 = 0.

    Fraction-free chart (y1, y2, y3) = (x3*z1, x3*z2, -(x1*z1 + x2*z2)):
    the result is a binary form in (z1, z2) with coefficients in the x's,
    covering every line with x3 != 0.
    """
    z1, z2 = MPoly.variable("z1"), MPoly.variable("z2")
    x1, x2, x3 = (MPoly.variable(v) for v in DUAL_VARS)
    v1, v2, v3 = F.variables
    return F.form.subs(
        {v1: z1 * x3, v2: z2 * x3, v3: (z1 * x1 + z2 * x2) * -1}
    )


def _sample_points(
    F: PlaneCurve, count: int, avoid: Sequence[Point] = ()
) -> list[tuple]:
    """Exact points of F cut out by a pencil of lines.

    Rational points come back as Eisenstein triples, conjugate orbits as
    coordinate triples over their certified extension field.
    """
    va, vb = F.variables[0], F.variables[2]
    skip = {tuple(p) for p in avoid}
    pts: list[tuple] = []
    k = 1
    while len(pts) < count and k <= count + 8:
        section = curve(
            MPoly.variable(va) - MPoly.variable(vb) * k, F.variables
        )
        for rec in intersect(F, section):
            if rec.is_rational():
                p = tuple(rec.point)
                if p not in skip:
                    skip.add(p)
                    pts.append(p)
            else:
                pts.append(tuple(rec.point.coords))
        k += 1
    return pts[:count]


def _gradient_at(F: PlaneCurve, coords: Sequence[object]) -> tuple:
    return tuple(g.evaluate(tuple(coords)) for g in F.partials())


def dual_curve(F: PlaneCurve, sample_count: int = 10) -> PlaneCurve:
    """The curve of tangent lines of a smooth F, in coordinates x1..x3.

    The point of tangency is eliminated by restricting F to the universal
    line and demanding the binary form have a repeated root.  Parasitic
    chart factors (powers of x3) are stripped after squarefree reduction,
    with the class degree d(d-1) as the termination certificate, and the
    output is validated on exact tangent-line samples.
    """
    d = F.degree
    if d < 2:
        raise ValueError("the dual of a line is a point, not a curve")
    if not is_smooth(F):
        raise ValueError("dual_curve needs a smooth input")
    restricted = _line_restriction(F)
    g1 = restricted.diff("z1").subs({"z2": eis(1)})
    g2 = restricted.diff("z2").subs({"z2": eis(1)})
    eliminant = resultant(g1, g2, "z1")
    if eliminant.is_zero():
        raise ArithmeticError("tangency eliminant vanished identically")
    cand = radical(eliminant.restrict_to_used().with_variables(DUAL_VARS))
    target = d * (d - 1)
    chart = MPoly.variable("x3").with_variables(DUAL_VARS)
    while cand.degree() > target:
        try:
            cand = cand.divexact(chart)
        except InexactDivision:
            raise ArithmeticError(
                f"factor stripping stalled at degree {cand.degree()}"
                f" (eliminant {eliminant})"
            ) from None
    if cand.degree() != target:
        raise ArithmeticError(
            f"stripped eliminant has degree {cand.degree()}, want {target}"
            f" (eliminant {eliminant})"
        )
    dual = PlaneCurve(monic_normalize(cand))
    for y in _sample_points(F, sample_count):
        line = _gradient_at(F, y)
        if not dual.form.evaluate(line).is_zero():
            raise ArithmeticError("a tangent-line sample misses the stripped dual")
    return dual


@dataclass(frozen=True)
class BidualReport:
    """Sampled check that dualizing twice is the identity."""

    samples: int
    involutive: bool


def bidual_samples_check(
    F: PlaneCurve,
    count: int = 10,
    avoid: Sequence[Point] = (),
    dual: PlaneCurve | None = None,
) -> BidualReport:
    """At sampled points y of F: grad F(y) lies on the dual D, and
    grad D(grad F(y)) returns y projectively.

    Points whose tangent line is a singular point of D (flexes of a
    cubic) must be passed in ``avoid``; the gradient of D vanishes there.
    A precomputed dual may be supplied to skip the elimination.
    """
    D = dual_curve(F) if dual is None else dual
    checked = 0
    for y in _sample_points(F, count, avoid=avoid):
        line = _gradient_at(F, y)
        if not D.form.evaluate(line).is_zero():
            return BidualReport(checked, False)
        back = tuple(g.evaluate(line) for g in D.partials())
        if all(v.is_zero() for v in back):
            return BidualReport(checked, False)
        for i in range(3):
            j = (i + 1) % 3
            if not (back[i] * y[j] - back[j] * y[i]).is_zero():
                return BidualReport(checked, False)
        checked += 1
    return BidualReport(checked, checked >= count)


# -- the degree-18 degenerate fiber -------------------------------------------


def _require_generic(param: PencilParam) -> None:
    if param.is_singular():
        raise ValueError("triangle member: the degenerate fiber needs a smooth cubic")
    if param.is_equianharmonic():
        raise ValueError(
            "equianharmonic member: the tangent crossings degenerate to triples"
        )


def w0_assemble(param: PencilParam) -> PlaneCurve:
    """The degree-18 fiber: the member cubed times its nine flex tangents."""
    _require_generic(param)
    member = hesse_cubic(param)
    tangents = flex_data(param).tangents
    parts = [(member, 3)] + [(curve(t), 1) for t in tangents]
    return PlaneCurve.product(parts)


def w0_reduced(param: PencilParam) -> PlaneCurve:
    """The reduced fiber: member times tangents, degree 12, with components."""
    _require_generic(param)
    member = hesse_cubic(param)
    tangents = flex_data(param).tangents
    parts = [(member, 1)] + [(curve(t), 1) for t in tangents]
    return PlaneCurve.product(parts)


@dataclass(frozen=True)
class W0AuditReport:
    """Singularity audit of the reduced fiber.

    nodes: classified records at the pairwise tangent crossings.
    flex_contacts: (base point, intersection multiplicity of member and
    its tangent there); the multiplicity-3 loci where cusps collapse.
    crossings_on_cubic: crossings lying on the member (should be none).
    line_histogram: crossings on each of the nine vertex lines.
    """

    param: PencilParam
    nodes: tuple[SingularPointRecord, ...]
    flex_contacts: tuple[tuple[Point, int], ...]
    crossings_on_cubic: tuple[Point, ...]
    line_histogram: tuple[int, ...]

    def node_count(self) -> int:
        return len(self.nodes)

    def all_nodes(self) -> bool:
        return all(rec.tag == NODE for rec in self.nodes)

    def contact_profile(self) -> tuple[int, ...]:
        return tuple(sorted(m for _, m in self.flex_contacts))

    def contact_total(self) -> int:
        return sum(m for _, m in self.flex_contacts)

    def lines_ok(self) -> bool:
        return self.line_histogram == (4,) * 9


def w0_singularity_audit(param: PencilParam) -> W0AuditReport:
    """Classify the reduced fiber along its two kinds of special points."""
    _require_generic(param)
    member = hesse_cubic(param)
    data = flex_data(param)
    reduced = PlaneCurve.product(
        [(member, 1)] + [(curve(t), 1) for t in data.tangents]
    )
    crossings = flex_meeting_points(param).points
    records = tuple(classify_singularity(reduced, q) for q in crossings)
    contacts = tuple(
        (p, intersection_multiplicity(member, curve(t), p))
        for p, t in zip(data.points, data.tangents)
    )
    on_cubic = tuple(q for q in crossings if member.contains(q))
    hist = tuple(
        sum(1 for q in crossings if line.evaluate(q).is_zero())
        for line in nine_lines()
    )
    return W0AuditReport(param, records, contacts, on_cubic, hist)


# -- the local model of the discriminant near a triple line --------------------


@dataclass(frozen=True)
class LocalFamily:
    """a*(z1*z2 - (z1+z2)^2) - b*z1*z2*(z1+z2) + c, the local family."""

    form: MPoly


def local_family() -> LocalFamily:
    z1, z2, a, b, c = (MPoly.variable(v) for v in LOCAL_VARS)
    form = a * (z1 * z2 - (z1 + z2) ** 2) - b * z1 * z2 * (z1 + z2) + c
    return LocalFamily(form.with_variables(LOCAL_VARS))


@dataclass(frozen=True)
class LocalModelReport:
    """Exact facts about the local family's critical locus.

    cubic_coefficient is the single scalar k with c = k*a^3 on every
    nontrivial branch, or None if the branches disagree; flex_contact is
    the contact order of that branch with its tangent at the origin.
    """

    partials_factored: bool
    trivial_branch_is_vertical: bool
    branch_relations: tuple[MPoly, ...]
    branch_directions_contained: bool
    cubic_coefficient: Eisenstein | None
    flex_contact: int | None


def _solve_branch(
    fa: tuple[int, int, int], fb: tuple[int, int, int]
) -> tuple[Eisenstein, Eisenstein] | None:
    """Solve two relations alpha*z1 + beta*z2 + gamma*a = 0 for z = s*a."""
    a1, b1, g1 = fa
    a2, b2, g2 = fb
    det = a1 * b2 - a2 * b1
    if det == 0:
        return None
    s1 = eis(rat(b1 * g2 - g1 * b2, det))
    s2 = eis(rat(g1 * a2 - a1 * g2, det))
    return s1, s2


def local_model_check() -> LocalModelReport:
    z1, z2, a, b, c = (
        MPoly.variable(v).with_variables(LOCAL_VARS) for v in LOCAL_VARS
    )
    D = local_family().form
    factored = (
        D.diff("z1") == (z1 * 2 + z2) * (a + b * z2) * -1
        and D.diff("z2") == (z2 * 2 + z1) * (a + b * z1) * -1
    )
    # slice b = 1; each partial vanishes on one of two linear branches
    sliced = D.subs({"b": eis(1)})
    first = ((2, 1, 0), (0, 1, 1))
    second = ((1, 2, 0), (1, 0, 1))
    direction_product = ((z1 * 2 + z2) * (z1 - z2) * (z1 + z2 * 2)).restrict_to_used()
    trivial_vertical = False
    relations: list[MPoly] = []
    directions_ok = True
    coefficients: list[Eisenstein] = []
    single = True
    for fa in first:
        for fb in second:
            sol = _solve_branch(fa, fb)
            if sol is None:
                continue
            s1, s2 = sol
            rel = sliced.subs({"z1": a * s1, "z2": a * s2})
            rel = rel.restrict_to_used()
            if s1.is_zero() and s2.is_zero():
                trivial_vertical = rel == MPoly.variable("c")
                continue
            rel = rel.with_variables(("a", "c"))
            relations.append(rel)
            if not direction_product.evaluate((s1, s2)).is_zero():
                directions_ok = False
            ok_shape = set(rel.terms) <= {(0, 1), (3, 0)} and rel.terms.get(
                (0, 1)
            ) == eis(1)
            if not ok_shape:
                single = False
                continue
            coefficients.append(-rel.terms.get((3, 0), eis(0)))
    k: Eisenstein | None = None
    if single and coefficients and len(set(coefficients)) == 1:
        k = coefficients[0]
    contact: int | None = None
    if k is not None and not k.is_zero():
        av, cv, hv = (MPoly.variable(v) for v in ("a", "c", "h"))
        branch = curve(cv * hv ** 2 - av ** 3 * k, ("a", "c", "h"))
        tangent = curve(cv, ("a", "c", "h"))
        origin = (eis(0), eis(0), eis(1))
        contact = intersection_multiplicity(branch, tangent, origin)
    return LocalModelReport(
        partials_factored=factored,
        trivial_branch_is_vertical=trivial_vertical,
        branch_relations=tuple(relations),
        branch_directions_contained=directions_ok,
        cubic_coefficient=k,
        flex_contact=contact,
    )


# -- enumerative bookkeeping ---------------------------------------------------


@dataclass(frozen=True)
class EnumerativeProfile:
    """Degree, node and cusp counts with the derived classical numbers."""

    degree: int
    nodes: int
    cusps: int

    @property
    def arithmetic_genus(self) -> int:
        return (self.degree - 1) * (self.degree - 2) // 2

    @property
    def geometric_genus(self) -> int:
        return self.arithmetic_genus - self.nodes - self.cusps

    @property
    def curve_class(self) -> int:
        return self.degree * (self.degree - 1) - 2 * self.nodes - 3 * self.cusps


def plucker_profile(degree: int, nodes: int, cusps: int) -> EnumerativeProfile:
    if degree < 1 or nodes < 0 or cusps < 0:
        raise ValueError("need degree >= 1 and nonnegative node/cusp counts")
    profile = EnumerativeProfile(degree, nodes, cusps)
    if profile.geometric_genus < 0 or profile.curve_class < 0:
        raise ValueError(
            f"inadmissible profile: genus {profile.geometric_genus},"
            f" class {profile.curve_class}"
        )
    return profile


@dataclass(frozen=True)
class ArithmeticCheck:
    name: str
    computed: int
    expected: int

    def ok(self) -> bool:
        return self.computed == self.expected


def zeuthen_segre_check() -> tuple[ArithmeticCheck, ...]:
    """Arithmetic consistency of the fibration and branch-curve counts.

    A pencil of genus-4 curves on a general polarized surface has
    6 + 4*(g-1) singular members; the branch curve has degree 3*D^2 with
    D^2 = 6; its profile (18, 36, 72) gives geometric genus 28 and is
    self-dual in degree.
    """
    genus = 4
    self_intersection = 6
    profile = plucker_profile(18, 36, 72)
    return (
        ArithmeticCheck("pencil.singular-members", 6 + 4 * (genus - 1), 18),
        ArithmeticCheck("branch.degree", 3 * self_intersection, 18),
        ArithmeticCheck("branch.arithmetic-genus", profile.arithmetic_genus, 136),
        ArithmeticCheck("branch.geometric-genus", profile.geometric_genus, 28),
        ArithmeticCheck("branch.class", profile.curve_class, 18),
    )


# -- the probe cubic and avoidance ---------------------------------------------


def probe_cubic() -> PlaneCurve:
    """A smooth cubic, shift-invariant, avoiding the pencil's base points."""
    y1, y2, y3 = (MPoly.variable(v) for v in YVARS)
    return curve(y1 ** 2 * y2 + y2 ** 2 * y3 + y3 ** 2 * y1)


@dataclass(frozen=True)
class AvoidanceReport:
    """Does the probe cubic stay clear of the fiber's special points?"""

    param: PencilParam
    flexes_on_probe: tuple[Point, ...]
    crossings_on_probe: tuple[Point, ...]
    member_transversal: bool
    member_meet_count: int
    line_transversals: tuple[bool, ...]

    def clean(self) -> bool:
        return (
            not self.flexes_on_probe
            and not self.crossings_on_probe
            and self.member_transversal
            and all(self.line_transversals)
        )


def c_avoidance_audit(param: PencilParam, shear_seed: int = 0) -> AvoidanceReport:
    _require_generic(param)
    probe = probe_cubic()
    member = hesse_cubic(param)
    data = flex_data(param)
    crossings = flex_meeting_points(param).points
    flexes_on = tuple(p for p in data.points if probe.contains(p))
    crossings_on = tuple(q for q in crossings if probe.contains(q))
    witness = transversal(probe, member, shear_seed)
    meet_count = sum(rec.conjugates for rec in witness.records)
    line_flags = tuple(
        transversal(probe, curve(t), shear_seed).transversal for t in data.tangents
    )
    return AvoidanceReport(
        param, flexes_on, crossings_on, witness.transversal, meet_count, line_flags
    )
