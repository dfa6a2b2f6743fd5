"""Factorization over Q(w), delegated to sympy's algebraic-field engine.

Only the conversion layer lives here: Eisenstein coefficients are
rewritten over Q(sqrt(-3)) via w = (-1 + sqrt(-3))/2, factored, and the
factors converted back.  Everything stays exact.
"""

from __future__ import annotations

from functools import lru_cache

import sympy
from sympy import Poly, Rational, Symbol, sqrt

from .eisenstein import Eisenstein, eis, rat
from .kpoly import KPoly
from .mpoly import MPoly

_T = Symbol("t")


@lru_cache(maxsize=1)
def _field():
    return sympy.QQ.algebraic_field(sqrt(-3))


def _to_rational(x) -> Rational:
    return Rational(int(x.numerator), int(x.denominator))


def _eis_to_anp(c: Eisenstein):
    # w = (-1 + s)/2 with s = sqrt(-3): a + b*w = (b/2)*s + (a - b/2)
    half_b = rat(c.b) / 2
    return _field()([_to_rational(half_b), _to_rational(c.a - half_b)])


def _anp_to_eis(x) -> Eisenstein:
    lst = [Rational(v) for v in x.to_list()] if hasattr(x, "to_list") else [Rational(x)]
    while len(lst) < 2:
        lst.insert(0, Rational(0))
    u, v = lst[-2], lst[-1]
    b = 2 * u
    a = v + u
    return Eisenstein(rat(a.p, a.q), rat(b.p, b.q))


def _kpoly_to_sympy(p: KPoly) -> Poly:
    desc = [_eis_to_anp(c) for c in reversed(p.coeffs)]
    return Poly(desc, _T, domain=_field())


def _sympy_to_kpoly(f: Poly) -> KPoly:
    desc = f.rep.to_list()
    return KPoly([_anp_to_eis(c) for c in reversed(desc)])


def _coeff_key(p: KPoly):
    return (p.degree(), tuple((c.a, c.b) for c in p.coeffs))


def factor_univariate(p: KPoly) -> tuple[Eisenstein, list[tuple[KPoly, int]]]:
    """Factor into monic irreducibles over Q(w).

    Returns (unit, [(factor, multiplicity), ...]) with
    p == unit * prod(factor^multiplicity), factors monic and sorted by
    (degree, coefficients) so the output is deterministic.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if p.degree() == 0:
        return p.lc(), []
    const, raw = _kpoly_to_sympy(p).factor_list()
    unit = _anp_to_eis(_field().convert(const))
    out: list[tuple[KPoly, int]] = []
    for f, mult in raw:
        k = _sympy_to_kpoly(f)
        lc = k.lc()
        if not (lc - eis(1)).is_zero():
            unit = unit * lc ** int(mult)
            k = k.monic()
        out.append((k, int(mult)))
    out.sort(key=lambda item: _coeff_key(item[0]))
    return unit, out


def roots_in_base_field(p: KPoly) -> list[tuple[Eisenstein, int]]:
    """Roots of p lying in Q(w), with multiplicities, sorted."""
    unit, factors = factor_univariate(p)
    del unit
    roots = []
    for f, mult in factors:
        if f.degree() == 1:
            # monic t + c0 -> root -c0
            roots.append((-f[0], mult))
    roots.sort(key=lambda rm: (rm[0].a, rm[0].b))
    return roots


def homogenize_binary(f: KPoly, u: str, v: str) -> MPoly:
    """Lift univariate f(t) to the binary form v^deg(f) * f(u/v)."""
    d = f.degree()
    if d < 0:
        return MPoly.zero((u, v))
    terms = {}
    for i, c in enumerate(f.coeffs):
        if not c.is_zero():
            terms[(i, d - i)] = c
    return MPoly((u, v), terms)


def factor_binary_form(p: MPoly, u: str, v: str) -> tuple[Eisenstein, list[tuple[MPoly, int]]]:
    """Factor a homogeneous binary form in (u, v) into linear-or-higher
    irreducible binary forms over Q(w), plus a possible power of v."""
    core = p.restrict_to_used()
    extra = set(core.variables) - {u, v}
    if extra:
        raise ValueError(f"form involves other variables: {sorted(extra)}")
    if not p.is_homogeneous():
        raise ValueError("not a homogeneous form")
    d = p.degree()
    if d <= 0:
        raise ValueError("constant form")
    p2 = core.with_variables((u, v))
    iu = p2.variables.index(u)
    fc = [eis(0)] * (d + 1)
    for e, c in p2.terms.items():
        fc[e[iu]] = c
    f = KPoly(fc)
    e = f.degree()
    unit, fac = factor_univariate(f)
    out: list[tuple[MPoly, int]] = []
    if d - e > 0:
        out.append((MPoly.variable(v).with_variables((u, v)), d - e))
    for g, mult in fac:
        out.append((homogenize_binary(g, u, v), mult))
    return unit, out
