"""Zero-dimensional intersection of plane projective curves.

Strategy: shear coordinates so the projection center (0,0,1) avoids
both curves, eliminate the third variable with a resultant, factor the
resulting binary form over Q(w), and walk each fiber.  A shear is kept
only when it separates the intersection points, one per fiber; the
multiplicity of a point is then exactly the multiplicity of its fiber's
factor in the resultant.  Points with irrational coordinates are
returned as certified points over an explicit extension field.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .eisenstein import Eisenstein, eis
from .extfield import ExtElem, ExtField, ExtPoint
from .factorize import factor_binary_form, factor_univariate
from .kpoly import KPoly, kpoly_from_mpoly
from .mpoly import MPoly
from .resultants import mgcd, monic_normalize, resultant, univariate_coeffs

SHEAR_TRIES = 3000


def _spiral(n: int) -> tuple[int, int]:
    """n-th point of a square spiral covering Z^2; a deterministic
    supply of projection centers no fixed curve can exhaust."""
    if n == 0:
        return (0, 0)
    m = 1
    count = 1
    while count + 8 * m <= n:
        count += 8 * m
        m += 1
    i = n - count
    side, off = divmod(i, 2 * m)
    if side == 0:
        return (-m + off, -m)
    if side == 1:
        return (m, -m + off)
    if side == 2:
        return (m - off, m)
    return (-m, m - off)


class CommonComponentError(ValueError):
    """The two curves share a component; the intersection is a curve."""

    def __init__(self, component: MPoly) -> None:
        super().__init__(f"curves share the component {component}")
        self.component = component


class ShearExhaustedError(RuntimeError):
    pass


RationalPoint = tuple[Eisenstein, Eisenstein, Eisenstein]


def normalize_projective(coords: Sequence[Eisenstein]) -> tuple[Eisenstein, ...]:
    """Scale so the first nonzero coordinate is 1."""
    cs = [eis(c) for c in coords]
    lead = next((c for c in cs if not c.is_zero()), None)
    if lead is None:
        raise ValueError("projective point needs a nonzero coordinate")
    inv = lead.inverse()
    return tuple(c * inv for c in cs)


@dataclass(frozen=True)
class IntersectionRecord:
    """One Galois orbit of intersection points.

    ``point`` is a normalized rational triple, or an ExtPoint whose
    field degree equals ``conjugates``: the record then stands for that
    many geometric points, all with the same multiplicity.
    """

    point: RationalPoint | ExtPoint
    multiplicity: int
    conjugates: int

    def is_rational(self) -> bool:
        return not isinstance(self.point, ExtPoint)


def _point_sort_key(rec: IntersectionRecord):
    if rec.is_rational():
        return (0, (), tuple((c.a, c.b) for c in rec.point))
    mp = tuple((c.a, c.b) for c in rec.point.field.minpoly.coeffs)
    coords = []
    for x in rec.point.coords:
        coords.extend((c.a, c.b) for c in x.coeffs)
    return (rec.conjugates, mp, tuple(coords))


def _shear_map(variables: Sequence[str], k1: int, k2: int) -> dict[str, MPoly]:
    u, v, z = variables
    return {
        u: MPoly.variable(u) + MPoly.variable(z) * k1,
        v: MPoly.variable(v) + MPoly.variable(z) * k2,
    }


def _unshear_rational(q: Sequence[Eisenstein], k1: int, k2: int) -> RationalPoint:
    q1, q2, q3 = q
    return tuple(normalize_projective((q1 + q3 * k1, q2 + q3 * k2, q3)))


def _fiber_kpoly(coeffs_z: Sequence[MPoly], u_val, v_val, one) -> KPoly:
    """Specialize the z-coefficient list at a fiber direction (u:v)."""
    out = []
    for c in coeffs_z:
        if c.is_zero():
            out.append(one - one)
        else:
            out.append(c.evaluate([u_val, v_val]) + (one - one))
    return KPoly(out)


def _try_shear(F: MPoly, G: MPoly, variables: tuple[str, str, str], k1: int, k2: int) -> list[IntersectionRecord] | None:
    u, v, z = variables
    probe = [eis(k1), eis(k2), eis(1)]
    if not F.evaluate(probe) or not G.evaluate(probe):
        return None
    sh = _shear_map(variables, k1, k2)
    Fs = F.subs(sh)
    Gs = G.subs(sh)
    R = resultant(Fs, Gs, z)
    d1, d2 = F.degree(), G.degree()
    if R.is_zero() or R.degree() != d1 * d2:
        return None
    unit, factors = factor_binary_form(R, u, v)
    del unit
    fz, _ = univariate_coeffs(Fs.with_variables(variables), z)
    gz, _ = univariate_coeffs(Gs.with_variables(variables), z)
    records: list[IntersectionRecord] = []
    for form, mult in factors:
        e = form.degree()
        if e == 1:
            # rational direction (u:v)
            cu = form.terms.get((1, 0), eis(0))
            cv = form.terms.get((0, 1), eis(0))
            if cu.is_zero():
                u_val, v_val = eis(1), eis(0)
            else:
                u_val, v_val = -cv / cu, eis(1)
            one = eis(1)
            fk = _fiber_kpoly(fz, u_val, v_val, one)
            gk = _fiber_kpoly(gz, u_val, v_val, one)
            g = fk.gcd(gk)
            if g.degree() < 1:
                raise ArithmeticError("fiber lost its intersection point")
            sq = g.squarefree_part()
            if sq.degree() != 1:
                return None
            alpha = -sq[0] / sq[1]
            records.append(
                IntersectionRecord(
                    point=_unshear_rational((u_val, v_val, alpha), k1, k2),
                    multiplicity=mult,
                    conjugates=1,
                )
            )
        else:
            # direction with minimal polynomial form(t, 1); v cannot divide
            # an irreducible factor of degree >= 2
            iu = form.variables.index(u)
            mp = [eis(0)] * (e + 1)
            for ee, c in form.terms.items():
                mp[ee[iu]] = c
            field = ExtField(KPoly(mp))
            t = field.gen()
            one = field.one()
            fk = _fiber_kpoly(fz, t, one, one)
            gk = _fiber_kpoly(gz, t, one, one)
            g = fk.gcd(gk)
            if g.degree() < 1:
                raise ArithmeticError("fiber lost its intersection point")
            sq = g.squarefree_part()
            if sq.degree() != 1:
                return None
            alpha = (-sq[0]) * sq[1].inverse()
            pt = ExtPoint(field, [t + alpha * k1, one + alpha * k2, alpha])
            records.append(IntersectionRecord(point=pt, multiplicity=mult, conjugates=e))
    if sum(r.multiplicity * r.conjugates for r in records) != d1 * d2:
        raise ArithmeticError("intersection multiplicities do not add up")
    records.sort(key=_point_sort_key)
    return records


def intersect_full(
    F: MPoly,
    G: MPoly,
    variables: tuple[str, str, str] = ("y1", "y2", "y3"),
    shear_seed: int = 0,
) -> tuple[list[IntersectionRecord], tuple[int, int]]:
    """Like intersect, but also returns the shear center that certified it."""
    for p in (F, G):
        extra = set(p.used_variables()) - set(variables)
        if extra:
            raise ValueError(f"curve uses foreign variables {sorted(extra)}")
        if not p.is_homogeneous() or p.degree() < 1:
            raise ValueError("curves must be homogeneous of positive degree")
    F = F.restrict_to_used().with_variables(variables)
    G = G.restrict_to_used().with_variables(variables)
    common = mgcd(F, G)
    if not common.is_constant():
        raise CommonComponentError(common)
    for i in range(SHEAR_TRIES):
        k1, k2 = _spiral(shear_seed + i)
        records = _try_shear(F, G, variables, k1, k2)
        if records is not None:
            return records, (k1, k2)
    raise ShearExhaustedError(f"no separating shear found in {SHEAR_TRIES} tries")


def intersect(
    F: MPoly,
    G: MPoly,
    variables: tuple[str, str, str] = ("y1", "y2", "y3"),
    shear_seed: int = 0,
) -> list[IntersectionRecord]:
    """All intersection points with multiplicities (Galois orbits bundled).

    Both inputs must be homogeneous forms in the three given variables.
    Raises CommonComponentError when the intersection has a curve part.
    """
    return intersect_full(F, G, variables, shear_seed)[0]


def transversal(
    F: MPoly,
    G: MPoly,
    variables: tuple[str, str, str] = ("y1", "y2", "y3"),
    shear_seed: int = 0,
) -> tuple[bool, list[IntersectionRecord]]:
    """True iff every intersection point is simple (multiplicity 1)."""
    records = intersect(F, G, variables, shear_seed)
    return all(r.multiplicity == 1 for r in records), records


def intersection_multiplicity(
    F: MPoly,
    G: MPoly,
    point: Sequence[Eisenstein],
    variables: tuple[str, str, str] = ("y1", "y2", "y3"),
    shear_seed: int = 0,
) -> int:
    """Multiplicity of F.G at one rational point (0 if not on both)."""
    target = normalize_projective(point)
    for rec in intersect(F, G, variables, shear_seed):
        if rec.is_rational() and rec.point == target:
            return rec.multiplicity
    return 0


@dataclass(frozen=True)
class SolveResult:
    rational: list[RationalPoint]
    certified: list[ExtPoint]
    positive_dimensional: MPoly | None


def _merge_results(left: SolveResult, right: SolveResult) -> SolveResult:
    rational: dict[tuple, RationalPoint] = {}
    for p in left.rational + right.rational:
        rational.setdefault(tuple((c.a, c.b) for c in p), p)
    certified: list[ExtPoint] = []
    for q in left.certified + right.certified:
        if q not in certified:
            certified.append(q)
    component = left.positive_dimensional
    other = right.positive_dimensional
    if component is None:
        component = other
    elif other is not None and mgcd(component, other).degree() < other.degree():
        component = monic_normalize(component * other)
    return SolveResult(list(rational.values()), certified, component)


def solve_system(
    polys: Sequence[MPoly],
    variables: tuple[str, str, str] = ("y1", "y2", "y3"),
    shear_seed: int = 0,
) -> SolveResult:
    """Common projective zeros of a system of homogeneous forms.

    The first coprime pair is intersected and the remaining forms filter
    the candidates.  A nonconstant gcd of the whole system is returned
    as a positive-dimensional certificate instead of a point list.
    When every pair shares a component but the system as a whole is
    coprime, the system is split along a pairwise gcd,
    V(hq, hq', rest) = V(h, rest) + V(q, q', rest), and the reduced
    systems are solved recursively.
    """
    ps = [p for p in polys if not p.is_zero()]
    if not ps:
        raise ValueError("need at least one nonzero form")
    if any(p.is_constant() for p in ps):
        return SolveResult([], [], None)
    if len(ps) == 1:
        return SolveResult([], [], monic_normalize(ps[0]))
    overall = ps[0]
    for p in ps[1:]:
        overall = mgcd(overall, p)
    if not overall.is_constant():
        return SolveResult([], [], monic_normalize(overall))
    pair = None
    for i in range(len(ps)):
        for j in range(i + 1, len(ps)):
            if mgcd(ps[i], ps[j]).is_constant():
                pair = (i, j)
                break
        if pair:
            break
    if pair is None:
        h = mgcd(ps[0], ps[1])
        left = solve_system([h] + ps[2:], variables, shear_seed)
        right = solve_system(
            [ps[0].divexact(h), ps[1].divexact(h)] + ps[2:], variables, shear_seed
        )
        return _merge_results(left, right)
    i, j = pair
    records = intersect(ps[i], ps[j], variables, shear_seed)
    rest = [p.restrict_to_used().with_variables(variables) for k, p in enumerate(ps) if k not in (i, j)]
    rational: list[RationalPoint] = []
    certified: list[ExtPoint] = []
    for rec in records:
        if rec.is_rational():
            coords = list(rec.point)
            if all(not p.evaluate(coords) for p in rest):
                rational.append(rec.point)
        else:
            coords = list(rec.point.coords)
            ok = True
            for p in rest:
                val = p.evaluate(coords)
                if not (val + (coords[0] - coords[0])).is_zero():
                    ok = False
                    break
            if ok:
                certified.append(rec.point)
    return SolveResult(rational, certified, None)
