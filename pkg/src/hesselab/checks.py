"""Verification suites: each check recomputes one documented claim exactly.

A check row carries a stable id, a one-line statement of the claim, a
PASS/FAIL/INFO status and the computed-versus-expected rendering.  FAIL
rows are honest: when a configured slope genuinely breaks a claim (the
equianharmonic members do), the row reports the true computed value
instead of skipping.  INFO rows record observations that contradict or
refine a documented account without being pass/fail claims themselves.

Suites are built as labelled thunks so a runner can execute them
concurrently; results are re-sorted by id, which keeps reports
byte-identical across job counts.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from time import monotonic
from typing import Callable, Iterable, Sequence

from .algebra.eisenstein import ZETA, Eisenstein, eis, rat
from .algebra.factorize import roots_in_base_field
from .algebra.mpoly import MPoly, proportional
from .algebra.parse import ParseError, parse_poly
from .algebra.resultants import monic_normalize
from .curvelab import CUSP_A2, curve, intersect, singular_points, transversal
from .degeneration import (
    DUAL_VARS,
    bidual_samples_check,
    dual_curve,
    local_model_check,
    plucker_profile,
    probe_cubic,
    w0_assemble,
    w0_reduced,
    w0_singularity_audit,
    zeuthen_segre_check,
)
from .hesse import (
    BASE_POINT,
    XVARS,
    PencilParam,
    all_triangle_vertices,
    base_points,
    base_tangent_pencil,
    certify_flex_tangency,
    conic_rank,
    equianharmonic_parameters,
    flex_data,
    flex_meeting_points,
    hesse_cubic,
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
)
from .projective import (
    YVARS,
    coordinate_shift,
    extended_group,
    lines_meet,
    point,
    torsion_scaling,
)

PASS = "PASS"
FAIL = "FAIL"
INFO = "INFO"

SUITE_NAMES = (
    "orbits",
    "hesse-identities",
    "flex-arrangement",
    "duality",
    "w0",
    "local-model",
    "enumerative",
    "transversality",
)

SUITE_DESCRIPTIONS = {
    "orbits": "symmetry group order, closure, and the orbit sizes of special points",
    "hesse-identities": "Hessian and polar-determinant identities of the pencil",
    "flex-arrangement": "tangent lines at the common points and their crossings",
    "duality": "dual curves, their cusps, biduality, and matched tangent pencils",
    "w0": "the degree-18 degenerate fiber: nodes, contacts, and line incidences",
    "local-model": "the two-parameter local family behind the cusp-collapse count",
    "enumerative": "genus and class bookkeeping for the singular branch curve",
    "transversality": "a fixed probe cubic avoiding every special point of a fiber",
    "all": "every suite above, in one report",
}

DEFAULT_LAMBDA_TEXTS = ("1", "2", "-3")

JOBS_ENV = "HESSE_LAB_JOBS"

# the parse surface: coordinates plus the two pencil weights
PARSE_VARS = ("l0", "l1", "y1", "y2", "y3")


class ConfigError(ValueError):
    """Bad suite name, unparsable slope, or a slope the pencil excludes."""


@dataclass(frozen=True)
class CheckResult:
    id: str
    anchor: str
    status: str
    computed: str
    expected: str
    witnesses: tuple[str, ...] = ()


@dataclass(frozen=True)
class SuiteConfig:
    suite: str
    lambdas: tuple[PencilParam, ...]
    shear_seed: int = 0
    jobs: int = 1
    out_format: str = "human"


@dataclass(frozen=True)
class SuiteReport:
    config: SuiteConfig
    results: tuple[CheckResult, ...]
    summary: dict[str, int]
    timings: dict[str, float]

    def exit_code(self) -> int:
        return 1 if self.summary["fail"] else 0


def parse_parameter(text: str) -> PencilParam:
    """One slope from the command line: a constant expression or 'inf'."""
    stripped = text.strip()
    if stripped.lower() in ("inf", "infinity", "oo"):
        return PencilParam.infinity()
    try:
        value = parse_poly(stripped, ())
    except ParseError as exc:
        raise ConfigError(f"cannot read slope {text!r}: {exc}") from exc
    return PencilParam.of(value.constant_value())


def build_config(
    suite: str,
    lambda_texts: Sequence[str] | None = None,
    shear_seed: int = 0,
    jobs: int | None = None,
    out_format: str = "human",
) -> SuiteConfig:
    if suite not in SUITE_NAMES and suite != "all":
        known = ", ".join(SUITE_NAMES + ("all",))
        raise ConfigError(f"unknown suite {suite!r}; expected one of: {known}")
    if out_format not in ("human", "json"):
        raise ConfigError(f"unknown output format {out_format!r}")
    texts = tuple(lambda_texts) if lambda_texts else DEFAULT_LAMBDA_TEXTS
    params: list[PencilParam] = []
    for text in texts:
        param = parse_parameter(text)
        if param.is_singular():
            raise ConfigError(
                f"slope {param} gives a triangle, not a curve; "
                "the pencil is singular there"
            )
        if param not in params:
            params.append(param)
    if jobs is None:
        raw = os.environ.get(JOBS_ENV, "").strip()
        if raw:
            try:
                jobs = int(raw)
            except ValueError as exc:
                raise ConfigError(
                    f"{JOBS_ENV} must be a positive integer, got {raw!r}"
                ) from exc
        else:
            jobs = 1
    if jobs < 1:
        raise ConfigError(f"jobs must be a positive integer, got {jobs}")
    return SuiteConfig(suite, tuple(params), shear_seed, jobs, out_format)


def _fmt(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (tuple, list)):
        return "(" + ", ".join(_fmt(v) for v in value) + ")"
    return str(value)


def compare(
    id: str,
    anchor: str,
    computed: object,
    expected: object,
    witnesses: Iterable[str] = (),
) -> CheckResult:
    status = PASS if computed == expected else FAIL
    return CheckResult(id, anchor, status, _fmt(computed), _fmt(expected), tuple(witnesses))


def verdict(
    id: str,
    anchor: str,
    ok: bool,
    on_true: str,
    on_false: str,
    witnesses: Iterable[str] = (),
) -> CheckResult:
    computed = on_true if ok else on_false
    return CheckResult(id, anchor, PASS if ok else FAIL, computed, on_true, tuple(witnesses))


def info(id: str, anchor: str, computed: str, witnesses: Iterable[str] = ()) -> CheckResult:
    return CheckResult(id, anchor, INFO, computed, "recorded for information", tuple(witnesses))


def _lam_tag(param: PencilParam) -> str:
    return str(param).replace(" ", "")


def _pt(p) -> str:
    return "(" + " : ".join(str(c) for c in p) + ")"


def _ptkey(p) -> tuple:
    return tuple((c.a, c.b) for c in p)


@lru_cache(maxsize=None)
def _meetings(param: PencilParam):
    return flex_meeting_points(param)


# ---------------------------------------------------------------- orbits


def _orbits_checks(config: SuiteConfig) -> list[CheckResult]:
    group = extended_group()
    rows = [
        compare(
            "orbit.group.order",
            "the translations extended by the harmonic flip form eighteen maps",
            len(group),
            18,
        ),
        compare(
            "orbit.group.closed",
            "composing any two of the eighteen maps lands back in the set",
            group.verify_closure(),
            True,
        ),
    ]
    flexes = group.orbit(BASE_POINT)
    rows.append(
        compare(
            "orbit.flexpoints.size",
            "the common points of the pencil form a single orbit of nine",
            len(flexes),
            9,
            witnesses=[f"orbit of {_pt(BASE_POINT)}"],
        )
    )
    members = [hesse_cubic(p) for p in config.lambdas]
    on_all = all(member.contains(p) for member in members for p in flexes)
    rows.append(
        verdict(
            "orbit.flexpoints.on-members",
            "every point of the orbit lies on every configured member",
            on_all,
            "all nine points lie on each member",
            "some orbit point misses a member",
            witnesses=[f"members at {', '.join(str(p) for p in config.lambdas)}"],
        )
    )
    vertices = all_triangle_vertices()
    orbit_sizes = []
    remaining = set(vertices)
    closed = True
    while remaining:
        rep = min(remaining, key=_ptkey)
        orb = group.orbit(rep)
        orbit_sizes.append(len(orb))
        for v in orb:
            if v not in remaining:
                closed = False
            remaining.discard(v)
    rows.append(
        compare(
            "orbit.vertices.partition",
            "the twelve triangle corners split into four orbits of three",
            (len(vertices), tuple(sorted(orbit_sizes)), closed),
            (12, (3, 3, 3, 3), True),
        )
    )
    rows.append(
        compare(
            "orbit.generic.size",
            "a point in general position has the full orbit of eighteen",
            len(group.orbit(point(1, 2, 5))),
            18,
            witnesses=[f"orbit of {_pt(point(1, 2, 5))}"],
        )
    )
    rows.append(
        compare(
            "orbit.halved.size",
            "a point on a corner line but off the special loci has orbit nine",
            len(group.orbit(point(1, 1, 2))),
            9,
            witnesses=[f"orbit of {_pt(point(1, 1, 2))}"],
        )
    )
    return rows


# ------------------------------------------------------- hesse identities


def _hesse_identity_checks(config: SuiteConfig) -> list[CheckResult]:
    rows = []
    l0 = MPoly.variable("l0")
    l1 = MPoly.variable("l1")
    sym = symbolic_pencil_form()
    hess = hessian_form(sym, YVARS)
    image = pencil_form(l0 * l1 * l1 * (-6), l0**3 + l1**3 * 2, YVARS)
    rows.append(
        verdict(
            "hessian.identity",
            "the Hessian of the general member is the member at the image slope",
            hess == image * 36,
            "Hessian equals 36 times the member at (-6*l0*l1^2 : l0^3 + 2*l1^3)",
            "the Hessian is not proportional to the image member",
        )
    )
    nu0 = l0 * l1 * l1 * (-6)
    nu1 = l0**3 + l1**3 * 2
    divisor = l0 * nu1 - l1 * nu0
    target = l0 * (l0**3 + l1**3 * 8)
    rows.append(
        verdict(
            "hessian.fixed-points.identity",
            "the fixed slopes of the Hessian map are cut out by the triangle locus",
            divisor == target,
            "l0*nu1 - l1*nu0 equals l0*(l0^3 + 8*l1^3)",
            "the fixed-point divisor does not match the triangle locus",
        )
    )
    pool: list[PencilParam] = list(singular_parameters())
    for p in equianharmonic_parameters() + config.lambdas:
        if p not in pool:
            pool.append(p)
    fixed = sorted(str(p) for p in pool if hessian_parameter(p) == p)
    expected_fixed = sorted(str(p) for p in singular_parameters())
    rows.append(
        compare(
            "hessian.fixed-points.samples",
            "among sampled slopes, exactly the four triangles are fixed",
            tuple(fixed),
            tuple(expected_fixed),
        )
    )
    samples = [
        (PencilParam.of(1), "-1/2"),
        (PencilParam.of(0), "inf"),
        (PencilParam.infinity(), "inf"),
        (PencilParam.of(2), "-17/24"),
    ]
    rows.append(
        compare(
            "hessian.map.samples",
            "the slope map sends 1, 0, inf, 2 to the documented images",
            tuple(str(hessian_parameter(p)) for p, _ in samples),
            tuple(expect for _, expect in samples),
        )
    )
    det = polar_pencil_determinant()
    rows.append(
        verdict(
            "polar.determinant.identity",
            "six times the polar determinant is the member at the image slope, in dual coordinates",
            det * 6 == pencil_form(l0 * l1 * l1 * (-6), l0**3 + l1**3 * 2, XVARS),
            "6*det equals the image member on (x1, x2, x3)",
            "the determinant identity fails",
        )
    )
    dehom = det.subs({"l0": eis(1)}).restrict_to_used()
    target_form = parse_poly(
        "x1*x2*x3*(1 + 2*l1^3) - l1^2*(x1^3 + x2^3 + x3^3)",
        ("l1", "x1", "x2", "x3"),
    )
    rows.append(
        verdict(
            "polar.determinant.dehomogenized",
            "at l0 = 1 the determinant is the documented slope polynomial, scalar one",
            dehom == target_form,
            "det(1, t) equals x1*x2*x3*(1 + 2*t^3) - t^2*(x1^3 + x2^3 + x3^3)",
            "the dehomogenized determinant differs from the documented form",
        )
    )
    rows.extend(_polar_root_checks())
    rows.extend(_polar_rank_checks(config))
    return rows


def _root_profile(roots: list[tuple[Eisenstein, int]]) -> tuple[tuple[str, int], ...]:
    ordered = sorted(roots, key=lambda rm: (rm[0].a, rm[0].b))
    return tuple((str(r), m) for r, m in ordered)


def _polar_root_checks() -> list[CheckResult]:
    rows = []
    unit = point(1, 1, 1)
    cubic = polar_determinant_slope_poly(unit)
    roots = roots_in_base_field(cubic)
    rows.append(
        compare(
            "polar.slope-cubic.roots",
            "the slope cubic at the unit corner has roots 1 (double) and -1/2",
            _root_profile(roots),
            ((str(eis(rat(-1, 2))), 1), (str(eis(1)), 2)),
            witnesses=["coefficients (constant first): 1, 0, -3, 2"],
        )
    )
    conj = point(1, 1, ZETA)
    conj_roots = roots_in_base_field(polar_determinant_slope_poly(conj))
    zeta2 = ZETA * ZETA
    expected = sorted(
        [(zeta2, 2), (zeta2 * eis(rat(-1, 2)), 1)], key=lambda rm: (rm[0].a, rm[0].b)
    )
    rows.append(
        compare(
            "polar.slope-cubic.conjugate-corner",
            "at a conjugate corner the roots are the unit-corner roots times w^2",
            _root_profile(conj_roots),
            tuple((str(r), m) for r, m in expected),
        )
    )
    value = cubic.evaluate(eis(-1))
    rows.append(
        info(
            "polar.slope-cubic.documented-variant",
            "a documented account lists -1 among the unit-corner roots",
            f"the cubic evaluates to {value} at -1, so -1 is not a root; "
            "the computed root set is {1, -1/2}",
        )
    )
    return rows


def _polar_rank_checks(config: SuiteConfig) -> list[CheckResult]:
    member = hesse_cubic(config.lambdas[0])
    tag = _lam_tag(config.lambdas[0])
    rows = [
        compare(
            "polar.rank.corner",
            "the polar of a triangle corner splits as a double line (rank one)",
            conic_rank(polar_conic(point(1, 1, 1), hesse_cubic(PencilParam.of(1)))),
            1,
        ),
        compare(
            f"polar.rank.flexpoint[lam={tag}]",
            "the polar conic degenerates to a line pair at a common point",
            conic_rank(polar_conic(BASE_POINT, member)),
            2,
        ),
        compare(
            f"polar.rank.generic[lam={tag}]",
            "the polar conic at a general point is nondegenerate",
            conic_rank(polar_conic(point(1, 2, 5), member)),
            3,
        ),
    ]
    return rows


# -------------------------------------------------------- flex arrangement


def _flex_fixed_checks(config: SuiteConfig) -> list[CheckResult]:
    rows = []
    base, direction = base_tangent_pencil(BASE_POINT)
    ok = base == parse_poly("y1 + y2", YVARS) and direction == parse_poly(
        "-2*y3", YVARS
    )
    rows.append(
        verdict(
            "flex.pencil.reference",
            "the tangent pencil at (1 : -1 : 0) is y1 + y2 moving against -2*y3",
            ok,
            "gradient pencil at the reference point is (y1 + y2, -2*y3)",
            "the tangent pencil at the reference point is wrong",
        )
    )
    fermat = _meetings(PencilParam.of(0))
    coord_orbit = sorted(extended_group().orbit(point(0, 0, 1)), key=_ptkey)
    ok0 = (
        fermat.count() < 36
        and sorted(fermat.concurrences, key=_ptkey) == coord_orbit
    )
    rows.append(
        verdict(
            "flex.fermat.concurrency",
            "at slope zero the crossings drop below 36 and concentrate on the coordinate corners",
            ok0,
            "30 crossings; the concurrences are the orbit of (0 : 0 : 1)",
            f"{fermat.count()} crossings with concurrences at "
            + ", ".join(_pt(q) for q in fermat.concurrences),
            witnesses=[f"count {fermat.count()}"]
            + [f"triple point {_pt(q)}" for q in fermat.concurrences],
        )
    )
    collapsed = []
    full = []
    negated = {PencilParam.of(eis(-1) * Eisenstein.zeta_power(i)) for i in range(3)}
    for p in sorted(set(equianharmonic_parameters()) | negated, key=str):
        (collapsed if _meetings(p).count() < 36 else full).append(str(p))
    rows.append(
        info(
            "flex.partition.observed",
            "which excluded slopes actually collapse crossings, versus the documented list",
            "collapsed crossings at {" + ", ".join(collapsed) + "}; "
            "full 36 at {" + ", ".join(full) + "}",
            witnesses=["the negated unit slopes are excluded but geometrically generic"],
        )
    )
    return rows


def _flex_lambda_checks(param: PencilParam, shear_seed: int) -> list[CheckResult]:
    tag = _lam_tag(param)
    rows = []
    data = flex_data(param)
    rows.append(
        verdict(
            f"flex.tangency[lam={tag}]",
            "each tangent meets the member only at its common point, with contact three",
            certify_flex_tangency(data),
            "all nine tangents have a single triple contact",
            "some tangent fails the triple-contact certificate",
        )
    )
    report = _meetings(param)
    rows.append(
        compare(
            f"flex.crossings.count[lam={tag}]",
            "the nine tangents cross pairwise in 36 distinct points",
            report.count(),
            36,
            witnesses=[f"concurrence at {_pt(q)}" for q in report.concurrences],
        )
    )
    doubles = sum(1 for c in report.tangent_counts if c == 2)
    triples = sum(1 for c in report.tangent_counts if c > 2)
    rows.append(
        compare(
            f"flex.crossings.simple[lam={tag}]",
            "every crossing lies on exactly two tangents",
            f"{doubles} simple, {triples} concurrent",
            "36 simple, 0 concurrent",
        )
    )
    rows.append(
        verdict(
            f"flex.crossings.iff[lam={tag}]",
            "the count is 36 exactly when the member is not equianharmonic",
            (report.count() == 36) == (not param.is_equianharmonic()),
            "count and equianharmonicity agree",
            "count and equianharmonicity disagree",
            witnesses=[
                f"count {report.count()}",
                f"equianharmonic: {_fmt(param.is_equianharmonic())}",
            ],
        )
    )
    lines = nine_lines()
    histogram = []
    per_point = []
    for q in report.points:
        per_point.append(sum(1 for line in lines if line.evaluate(tuple(q)).is_zero()))
    for line in lines:
        histogram.append(
            sum(1 for q in report.points if line.evaluate(tuple(q)).is_zero())
        )
    rows.append(
        compare(
            f"flex.crossings.lines[lam={tag}]",
            "crossings sit four per corner line, each on exactly one line",
            (tuple(histogram), max(per_point), min(per_point)),
            ((4,) * 9, 1, 1),
        )
    )
    rows.append(
        compare(
            f"flex.crossings.orbits[lam={tag}]",
            "the crossings split into four orbits of nine under the symmetry group",
            report.orbit_sizes,
            (9, 9, 9, 9),
        )
    )
    return rows


# ----------------------------------------------------------------- duality


def _duality_fixed_checks(config: SuiteConfig) -> list[CheckResult]:
    rows = []
    conic = curve(parse_poly("y2^2 - y1*y3", YVARS))
    dual = dual_curve(conic)
    rows.append(
        verdict(
            "dual.conic.oracle",
            "the dual of y2^2 = y1*y3 is the classical conic x2^2 = 4*x1*x3",
            dual.form == monic_normalize(parse_poly("x2^2 - 4*x1*x3", DUAL_VARS)),
            "the elimination reproduces x2^2 - 4*x1*x3 up to scale",
            f"unexpected dual conic {dual.form}",
        )
    )
    rows.append(
        compare(
            "dual.class.smooth-cubic",
            "the class of a smooth cubic is six, matching the dual degree",
            plucker_profile(3, 0, 0).curve_class,
            6,
        )
    )
    pencil_a = base_tangent_pencil(point(1, -1, 0))
    pencil_b = base_tangent_pencil(point(0, 1, -1))
    locus_ab = matched_pencil_locus(pencil_a, pencil_b)
    expected_ab = monic_normalize(
        parse_poly("(y1 - y3)*(y1 + y2 + y3)", YVARS)
    )
    rows.append(
        verdict(
            "homology.matched.rational-pair",
            "tangents at two rational common points meet along a split conic",
            locus_ab.form == expected_ab,
            "locus is (y1 - y3)*(y1 + y2 + y3)",
            f"unexpected locus {locus_ab.form}",
            witnesses=[
                "the joining line of the two common points times a corner line"
            ],
        )
    )
    pencil_c = base_tangent_pencil(point(1, ZETA * eis(-1), 0))
    locus_ac = matched_pencil_locus(pencil_a, pencil_c)
    expected_ac = monic_normalize(parse_poly("y3*(y1 - w*y2)", YVARS))
    rows.append(
        verdict(
            "homology.matched.conjugate-pair",
            "tangents at two conjugate common points meet along a split conic",
            locus_ac.form == expected_ac,
            "locus is y3*(y1 - w*y2)",
            f"unexpected locus {locus_ac.form}",
            witnesses=["the joining line y3 times a corner line"],
        )
    )
    t1 = parse_poly("y1 + y2 - 2*y3", YVARS)
    t2 = parse_poly("y1 + w^2*y2 - 2*w*y3", YVARS)
    meet = lines_meet(t1, t2)
    documented = parse_poly("y1 - y2", YVARS).evaluate(tuple(meet))
    computed_line = parse_poly("y1 - w*y2", YVARS).evaluate(tuple(meet))
    rows.append(
        info(
            "homology.matched.documented-variant",
            "a documented account concludes y1 - y2 = 0 for the conjugate pair",
            f"at the slope-1 meeting point {_pt(meet)}, y1 - y2 evaluates to "
            f"{documented}, while the computed factor y1 - w*y2 evaluates to "
            f"{computed_line}",
        )
    )
    return rows


def _duality_lambda_checks(param: PencilParam) -> list[CheckResult]:
    tag = _lam_tag(param)
    member = hesse_cubic(param)
    dual = dual_curve(member)
    rows = [
        compare(
            f"dual.member.degree[lam={tag}]",
            "the dual of a smooth member is a sextic",
            dual.degree,
            6,
        )
    ]
    locus = singular_points(dual)
    cusp_points = sorted((rec.point for rec in locus.records), key=_ptkey)
    expected = sorted(_flex_images(param), key=_ptkey)
    rows.append(
        compare(
            f"dual.member.cusps[lam={tag}]",
            "the dual sextic has exactly nine ordinary cusps, at the tangent images",
            (
                len(locus.records),
                tuple(sorted({rec.tag for rec in locus.records})),
                tuple(_pt(q) for q in cusp_points),
                len(locus.certificates),
                locus.component is None,
            ),
            (9, (CUSP_A2,), tuple(_pt(q) for q in expected), 0, True),
        )
    )
    bidual = bidual_samples_check(member, count=10, avoid=base_points(), dual=dual)
    rows.append(
        verdict(
            f"dual.bidual.samples[lam={tag}]",
            "the dual of the dual returns each sampled point of the member",
            bidual.involutive,
            "at least ten samples close the double-dual loop",
            f"only {bidual.samples} samples closed the loop",
        )
    )
    return rows


def _flex_images(param: PencilParam) -> list:
    member = hesse_cubic(param)
    images = []
    for p in base_points():
        grads = tuple(g.evaluate(tuple(p)) for g in member.partials())
        images.append(point(*grads))
    return images


# ---------------------------------------------------------------------- w0


_W0_ROWS = (
    (
        "w0.assembly.degree",
        "the degenerate fiber is the tripled member plus the nine tangents, degree 18",
        "18",
    ),
    (
        "w0.reduced.degree",
        "the reduced fiber (member once, tangents once) has degree 12",
        "12",
    ),
    (
        "w0.nodes.count.by-lambda",
        "the reduced fiber has exactly 36 singular crossings",
        "36",
    ),
    (
        "w0.nodes.type",
        "every crossing of the reduced fiber is a simple double point",
        "all 36 are simple double points",
    ),
    (
        "w0.contacts",
        "the member meets each tangent with contact three at its common point",
        "(3, 3, 3, 3, 3, 3, 3, 3, 3), total 27",
    ),
    (
        "w0.nodes.off-member",
        "no tangent crossing lies on the member itself",
        "0 crossings on the member",
    ),
    (
        "w0.lines.histogram",
        "the crossings sit four on each corner line",
        "(4, 4, 4, 4, 4, 4, 4, 4, 4)",
    ),
)


def _w0_lambda_checks(param: PencilParam) -> list[CheckResult]:
    tag = _lam_tag(param)
    try:
        total = w0_assemble(param)
        reduced = w0_reduced(param)
        audit = w0_singularity_audit(param)
    except ValueError as exc:
        refusal = f"refused: {exc}"
        return [
            CheckResult(f"{rid}[lam={tag}]", anchor, FAIL, refusal, expected)
            for rid, anchor, expected in _W0_ROWS
        ]
    computed = {
        "w0.assembly.degree": _fmt(total.degree),
        "w0.reduced.degree": _fmt(reduced.degree),
        "w0.nodes.count.by-lambda": _fmt(audit.node_count()),
        "w0.nodes.type": (
            f"all {audit.node_count()} are simple double points"
            if audit.all_nodes()
            else "mixed singularity types "
            + ", ".join(sorted({r.tag for r in audit.nodes}))
        ),
        "w0.contacts": f"{_fmt(audit.contact_profile())}, total {audit.contact_total()}",
        "w0.nodes.off-member": f"{len(audit.crossings_on_cubic)} crossings on the member",
        "w0.lines.histogram": _fmt(audit.line_histogram),
    }
    return [
        CheckResult(
            f"{rid}[lam={tag}]",
            anchor,
            PASS if computed[rid] == expected else FAIL,
            computed[rid],
            expected,
        )
        for rid, anchor, expected in _W0_ROWS
    ]


def _w0_aggregate_check(config: SuiteConfig) -> list[CheckResult]:
    counts = []
    refused = []
    for param in config.lambdas:
        try:
            counts.append(w0_singularity_audit(param).node_count())
        except ValueError:
            refused.append(str(param))
    ok = bool(counts) and all(c == 36 for c in counts)
    witnesses = [f"audited slopes gave counts {counts}"]
    if refused:
        witnesses.append("refused slopes: " + ", ".join(refused))
    return [
        verdict(
            "w0.nodes.count",
            "every audited member shows the 36 simple crossings",
            ok,
            "36 on every audited member",
            f"counts {counts} with refusals at {', '.join(refused) or 'none'}",
            witnesses=witnesses,
        )
    ]


# -------------------------------------------------------------- local model


def _local_model_checks(config: SuiteConfig) -> list[CheckResult]:
    report = local_model_check()
    rows = [
        verdict(
            "local.partials.factored",
            "both partials of the local family split into the documented linear factors",
            report.partials_factored,
            "d1 = -(2*z1 + z2)*(a + b*z2) and d2 = -(2*z2 + z1)*(a + b*z1)",
            "the partials do not factor as documented",
        ),
        verdict(
            "local.branch.vertical",
            "the branch z1 = z2 = 0 forces the vertical line c = 0",
            report.trivial_branch_is_vertical,
            "the double-root branch gives c = 0",
            "the double-root branch is not vertical",
        ),
        verdict(
            "local.branch.directions",
            "the critical directions lie in (2*z1 + z2)*(z1 - z2)*(z1 + 2*z2)",
            report.branch_directions_contained,
            "all branch directions divide the documented cubic",
            "some branch direction is missing from the documented cubic",
        ),
    ]
    k = report.cubic_coefficient
    rows.append(
        verdict(
            "local.branch.relation",
            "every nontrivial branch satisfies one relation c = k*a^3",
            k is not None and len(report.branch_relations) == 3,
            f"three branches, all giving c = {k}*a^3",
            "the branches disagree on the cubic relation",
        )
    )
    rows.append(
        compare(
            "local.flex.contact",
            "the discriminant branch meets its tangent with contact three",
            report.flex_contact,
            3,
        )
    )
    rows.append(
        info(
            "local.coefficient.documented",
            "a documented account reports the cubic coefficient as 5",
            f"the exact coefficient on every branch is {k}",
        )
    )
    return rows


# -------------------------------------------------------------- enumerative


def _enumerative_checks(config: SuiteConfig) -> list[CheckResult]:
    rows = []
    big = plucker_profile(18, 36, 72)
    rows.append(
        compare(
            "plucker.18-36-72",
            "degree 18 with 36 nodes and 72 cusps gives genus 28 and class 18",
            (big.geometric_genus, big.curve_class),
            (28, 18),
            witnesses=[f"arithmetic genus {big.arithmetic_genus}"],
        )
    )
    cubic = plucker_profile(3, 0, 0)
    rows.append(
        compare(
            "plucker.smooth-cubic",
            "a smooth cubic has genus one and class six",
            (cubic.geometric_genus, cubic.curve_class),
            (1, 6),
        )
    )
    sextic = plucker_profile(6, 0, 9)
    rows.append(
        compare(
            "plucker.dual-sextic",
            "a nine-cusped sextic has genus one and class three",
            (sextic.geometric_genus, sextic.curve_class),
            (1, 3),
        )
    )
    sweep_ok = all(
        plucker_profile(d, 0, 0).arithmetic_genus == math.comb(d - 1, 2)
        for d in range(1, 21)
    )
    rows.append(
        verdict(
            "plucker.genus.sweep",
            "the arithmetic genus matches the binomial count through degree 20",
            sweep_ok,
            "(d - 1 choose 2) for d = 1..20",
            "some degree disagrees with the binomial count",
        )
    )
    rejected = []
    for d, nodes, cusps in ((2, 5, 0), (3, -1, 0), (0, 0, 0)):
        try:
            plucker_profile(d, nodes, cusps)
            rejected.append(False)
        except ValueError:
            rejected.append(True)
    rows.append(
        verdict(
            "plucker.inadmissible",
            "impossible singularity budgets are rejected",
            all(rejected),
            "negative genus, negative counts, and degree zero all raise",
            f"acceptance flags {rejected}",
        )
    )
    for check in zeuthen_segre_check():
        rows.append(
            compare(
                f"zeuthen.{check.name}",
                "one term of the pencil bookkeeping identity",
                check.computed,
                check.expected,
            )
        )
    return rows


# ------------------------------------------------------------ transversality


def _transversality_fixed_checks(config: SuiteConfig) -> list[CheckResult]:
    rows = []
    probe = probe_cubic()
    rows.append(
        verdict(
            "probe.curve.smooth",
            "the probe cubic is nonsingular",
            singular_points(probe).is_empty(),
            "no singular points",
            "the probe cubic is singular",
        )
    )
    values = [probe.form.evaluate(tuple(p)) for p in base_points()]
    rows.append(
        verdict(
            "probe.flexpoints.off",
            "none of the nine common points lies on the probe",
            all(not v.is_zero() for v in values),
            "the probe omits all nine common points",
            "a common point lies on the probe",
            witnesses=[f"value at {_pt(BASE_POINT)} is {values[0]}"],
        )
    )
    shift_ok = coordinate_shift().pullback(probe.form) == probe.form
    scale = proportional(torsion_scaling().pullback(probe.form), probe.form)
    rows.append(
        verdict(
            "probe.invariance",
            "the probe is invariant under the shift and semi-invariant under the scaling",
            shift_ok and scale is not None and (scale**3) == eis(1),
            "shift-invariant; the scaling multiplies by a cube root of unity",
            "the probe is not semi-invariant under the translations",
            witnesses=[f"scaling character {scale}"],
        )
    )
    fermat = hesse_cubic(PencilParam.of(0))
    tangent = curve(tangent_line_at(fermat, BASE_POINT))
    records = intersect(probe, tangent, shear_seed=config.shear_seed)
    total = sum(r.conjugates for r in records)
    simple = all(r.multiplicity == 1 for r in records)
    rows.append(
        compare(
            "probe.fermat-tangent.case",
            "the slope-zero tangent at the reference point meets the probe in three simple points",
            (total, simple),
            (3, True),
            witnesses=[
                f"{sum(1 for r in records if r.is_rational())} rational point(s), "
                f"{sum(1 for r in records if not r.is_rational())} conjugate record(s)"
            ],
        )
    )
    return rows


def _transversality_lambda_checks(param: PencilParam, shear_seed: int) -> list[CheckResult]:
    tag = _lam_tag(param)
    probe = probe_cubic()
    member = hesse_cubic(param)
    rows = []
    witness = transversal(probe, member, shear_seed=shear_seed)
    rows.append(
        verdict(
            f"probe.member.transversal[lam={tag}]",
            "the probe meets the member transversally",
            witness.transversal,
            "every intersection is simple",
            "a tangential intersection exists",
            witnesses=[f"shear {witness.shear}"],
        )
    )
    total = sum(r.multiplicity * r.conjugates for r in witness.records)
    rows.append(
        compare(
            f"probe.member.bezout[lam={tag}]",
            "the probe and the member meet in nine points, as two cubics must",
            total,
            9,
        )
    )
    report = _meetings(param)
    rows.append(
        compare(
            f"probe.crossings.count[lam={tag}]",
            "the tangent crossings number 36 on this member",
            report.count(),
            36,
            witnesses=[f"concurrence at {_pt(q)}" for q in report.concurrences],
        )
    )
    on_probe = [q for q in report.points if probe.contains(q)]
    rows.append(
        compare(
            f"probe.crossings.off[lam={tag}]",
            "no tangent crossing lies on the probe",
            len(on_probe),
            0,
            witnesses=[_pt(q) for q in on_probe],
        )
    )
    line_flags = tuple(
        transversal(probe, curve(line), shear_seed=shear_seed).transversal
        for line in nine_lines()
    )
    rows.append(
        compare(
            f"probe.lines.transversal[lam={tag}]",
            "the probe meets each corner line transversally",
            line_flags,
            (True,) * 9,
        )
    )
    return rows


# ------------------------------------------------------------------- runner


Thunk = tuple[str, Callable[[], list[CheckResult]]]


def _suite_thunks(name: str, config: SuiteConfig) -> list[Thunk]:
    if name == "orbits":
        return [("orbits", lambda: _orbits_checks(config))]
    if name == "hesse-identities":
        return [("hesse-identities", lambda: _hesse_identity_checks(config))]
    if name == "flex-arrangement":
        thunks: list[Thunk] = [
            ("flex-arrangement.fixed", lambda: _flex_fixed_checks(config))
        ]
        for param in config.lambdas:
            thunks.append(
                (
                    f"flex-arrangement[lam={_lam_tag(param)}]",
                    lambda p=param: _flex_lambda_checks(p, config.shear_seed),
                )
            )
        return thunks
    if name == "duality":
        thunks = [("duality.fixed", lambda: _duality_fixed_checks(config))]
        for param in config.lambdas:
            thunks.append(
                (
                    f"duality[lam={_lam_tag(param)}]",
                    lambda p=param: _duality_lambda_checks(p),
                )
            )
        return thunks
    if name == "w0":
        thunks = [("w0.aggregate", lambda: _w0_aggregate_check(config))]
        for param in config.lambdas:
            thunks.append(
                (f"w0[lam={_lam_tag(param)}]", lambda p=param: _w0_lambda_checks(p))
            )
        return thunks
    if name == "local-model":
        return [("local-model", lambda: _local_model_checks(config))]
    if name == "enumerative":
        return [("enumerative", lambda: _enumerative_checks(config))]
    if name == "transversality":
        thunks = [
            ("transversality.fixed", lambda: _transversality_fixed_checks(config))
        ]
        for param in config.lambdas:
            thunks.append(
                (
                    f"transversality[lam={_lam_tag(param)}]",
                    lambda p=param: _transversality_lambda_checks(
                        p, config.shear_seed
                    ),
                )
            )
        return thunks
    raise ConfigError(f"unknown suite {name!r}")


def run_suite(config: SuiteConfig) -> SuiteReport:
    names = SUITE_NAMES if config.suite == "all" else (config.suite,)
    thunks: list[Thunk] = []
    for name in names:
        thunks.extend(_suite_thunks(name, config))

    def run_one(item: Thunk) -> tuple[str, list[CheckResult], float]:
        label, fn = item
        start = monotonic()
        try:
            rows = fn()
        except Exception as exc:  # a crashed block is a failed block, not a crash
            rows = [
                CheckResult(
                    f"{label}.error",
                    "plumbing",
                    FAIL,
                    f"unhandled error: {exc}",
                    "the block completes",
                )
            ]
        return label, rows, monotonic() - start

    if config.jobs > 1:
        with ThreadPoolExecutor(max_workers=config.jobs) as pool:
            outcomes = list(pool.map(run_one, thunks))
    else:
        outcomes = [run_one(item) for item in thunks]

    results: list[CheckResult] = []
    timings: dict[str, float] = {}
    for label, rows, elapsed in outcomes:
        results.extend(rows)
        timings[label] = elapsed
    ids = [r.id for r in results]
    if len(set(ids)) != len(ids):
        dupes = sorted({i for i in ids if ids.count(i) > 1})
        raise AssertionError(f"duplicate check ids: {dupes}")
    results.sort(key=lambda r: r.id)
    summary = {
        "pass": sum(1 for r in results if r.status == PASS),
        "fail": sum(1 for r in results if r.status == FAIL),
        "info": sum(1 for r in results if r.status == INFO),
    }
    return SuiteReport(config, tuple(results), summary, timings)


def report_document(report: SuiteReport) -> dict:
    """The deterministic report body; timings and timestamps live in meta."""
    return {
        "schema": 1,
        "config": {
            "suite": report.config.suite,
            "lambdas": [str(p) for p in report.config.lambdas],
            "shear_seed": report.config.shear_seed,
            "jobs": report.config.jobs,
        },
        "results": [
            {
                "id": r.id,
                "anchor": r.anchor,
                "status": r.status,
                "computed": r.computed,
                "expected": r.expected,
                "witnesses": list(r.witnesses),
            }
            for r in report.results
        ],
        "summary": dict(report.summary),
    }


def attach_meta(doc: dict, report: SuiteReport) -> dict:
    """Nondeterministic extras, kept out of the comparable body."""
    from datetime import datetime, timezone

    doc["meta"] = {
        "generated_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "timings": {label: round(sec, 6) for label, sec in report.timings.items()},
    }
    return doc
