"""Resultants, multivariate gcd, and radicals over Q(w).

The resultant follows the subresultant pseudo-remainder sequence.  Each
reduction step is tracked in a factored accumulator (base polynomial,
integer exponent), so only one exact division happens at the very end.
A fraction-free Sylvester determinant is kept alongside as an
independent cross-check for the test suite.
"""

from __future__ import annotations

from typing import Sequence

from .eisenstein import Eisenstein, eis
from .mpoly import MPoly, variable_sort_key


def univariate_coeffs(p: MPoly, var: str) -> tuple[list[MPoly], tuple[str, ...]]:
    """Coefficients of p in ``var`` (ascending), over the remaining variables."""
    if var not in p.variables:
        raise KeyError(f"unknown variable {var!r}")
    i = p.variables.index(var)
    others = tuple(v for v in p.variables if v != var)
    if not p.terms:
        return [], others
    top = max(e[i] for e in p.terms)
    buckets: list[dict] = [dict() for _ in range(top + 1)]
    for e, c in p.terms.items():
        rest = e[:i] + e[i + 1:]
        buckets[e[i]][rest] = c
    return [MPoly(others, b) for b in buckets], others


def poly_from_coeffs(coeffs: Sequence[MPoly], var: str) -> MPoly:
    out = MPoly.zero((var,))
    x = MPoly.variable(var)
    for k, c in enumerate(coeffs):
        out = out + c * x**k
    return out


def _trim(coeffs: list[MPoly]) -> list[MPoly]:
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return coeffs


def _prem(a: list[MPoly], b: list[MPoly]) -> list[MPoly]:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b."""
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        raise ValueError("pseudo-division needs deg a >= deg b")
    lb = b[-1]
    r = list(a)
    for k in range(da, db - 1, -1):
        top = r[k]
        r = [lb * c for c in r]
        for j in range(db + 1):
            r[k - db + j] = r[k - db + j] - top * b[j]
        r = r[:k]
    return _trim(r)


def _one(others: tuple[str, ...]) -> MPoly:
    return MPoly.constant(1, others)


def resultant(A: MPoly, B: MPoly, var: str) -> MPoly:
    """Resultant of A and B with respect to ``var``.

    Sign convention matches the Sylvester determinant with the A block
    on top, so resultant(A, B) == (-1)^(deg A * deg B) * resultant(B, A).
    """
    A, B = MPoly._aligned(A, B)
    if var not in A.variables:
        raise KeyError(f"unknown variable {var!r}")
    a, others = univariate_coeffs(A, var)
    b, _ = univariate_coeffs(B, var)
    if not a or not b:
        return MPoly.zero(others)
    da, db = len(a) - 1, len(b) - 1
    sign = 1
    if da < db:
        a, b, da, db = b, a, db, da
        if (da * db) % 2:
            sign = -sign
    # factored accumulator: base poly -> integer exponent (negative = divide)
    powers: dict[MPoly, int] = {}

    def push(base: MPoly, exp: int) -> None:
        if exp == 0 or base == _one(others):
            return
        powers[base] = powers.get(base, 0) + exp

    g = _one(others)
    h = _one(others)
    first = True
    while db >= 1:
        delta = da - db
        r = _prem(a, b)
        if not r:
            return MPoly.zero(others)
        if (da * db) % 2:
            sign = -sign
        d = _one(others) if first else g * h**delta
        if not first:
            r = [c.divexact(d) for c in r]
        p = len(r) - 1
        lb = b[-1]
        push(lb, da - p - (delta + 1) * db)
        push(d, db)
        a, b, da, db = b, r, db, p
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = (g**delta).divexact(h ** (delta - 1))
        first = False
    # db == 0: b is a nonzero constant in var
    push(b[0], da)
    num = _one(others)
    den = _one(others)
    for base, exp in powers.items():
        if exp > 0:
            num = num * base**exp
        elif exp < 0:
            den = den * base ** (-exp)
    out = num.divexact(den)
    return out if sign == 1 else -out


# -- Sylvester / Bareiss oracle ------------------------------------------------


def sylvester_matrix(A: MPoly, B: MPoly, var: str) -> list[list[MPoly]]:
    A, B = MPoly._aligned(A, B)
    a, others = univariate_coeffs(A, var)
    b, _ = univariate_coeffs(B, var)
    if not a or not b:
        raise ValueError("Sylvester matrix needs nonzero inputs")
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    zero = MPoly.zero(others)
    rows = []
    desc_a = list(reversed(a))
    desc_b = list(reversed(b))
    for i in range(n):
        rows.append([zero] * i + desc_a + [zero] * (size - i - len(desc_a)))
    for i in range(m):
        rows.append([zero] * i + desc_b + [zero] * (size - i - len(desc_b)))
    return rows


def bareiss_det(matrix: list[list[MPoly]]) -> MPoly:
    """Fraction-free determinant; every division is exact by construction."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    some = matrix[0][0]
    one = MPoly.constant(1, some.variables)
    m = [row[:] for row in matrix]
    sign = 1
    prev = one
    for k in range(n - 1):
        if m[k][k].is_zero():
            pivot_row = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if pivot_row is None:
                return MPoly.zero(some.variables)
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divexact(prev)
            m[i][k] = MPoly.zero(some.variables)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def resultant_bareiss(A: MPoly, B: MPoly, var: str) -> MPoly:
    A, B = MPoly._aligned(A, B)
    a, others = univariate_coeffs(A, var)
    b, _ = univariate_coeffs(B, var)
    if not a or not b:
        return MPoly.zero(others)
    if len(a) == 1 and len(b) == 1:
        return _one(others)
    if len(a) == 1:
        return a[0] ** (len(b) - 1)
    if len(b) == 1:
        return b[0] ** (len(a) - 1)
    return bareiss_det(sylvester_matrix(A, B, var))


# -- multivariate gcd ------------------------------------------------------------


def monic_normalize(p: MPoly) -> MPoly:
    """Scale so the canonically-leading coefficient is 1."""
    if p.is_zero():
        return p
    _, c = p.leading_term()
    return p * c.inverse()


def _content(coeffs: Sequence[MPoly]) -> MPoly:
    g = MPoly.zero(())
    for c in coeffs:
        g = mgcd(g, c)
        if g.is_constant() and not g.is_zero():
            break
    return g


def mgcd(p: MPoly, q: MPoly) -> MPoly:
    """Monic gcd via the primitive pseudo-remainder sequence."""
    if p.is_zero():
        return monic_normalize(q)
    if q.is_zero():
        return monic_normalize(p)
    p = p.restrict_to_used()
    q = q.restrict_to_used()
    if p.is_constant() or q.is_constant():
        return MPoly.constant(1)
    shared = sorted(set(p.variables) & set(q.variables), key=variable_sort_key)
    if not shared:
        return MPoly.constant(1)
    var = shared[0]
    p, q = MPoly._aligned(p, q)
    a, others = univariate_coeffs(p, var)
    b, _ = univariate_coeffs(q, var)
    cont_a = _content(a)
    cont_b = _content(b)
    a = [c.divexact(cont_a) for c in a]
    b = [c.divexact(cont_b) for c in b]
    cont = mgcd(cont_a, cont_b)
    if len(a) - 1 < len(b) - 1:
        a, b = b, a
    while len(b) - 1 >= 1:
        r = _prem(a, b)
        if not r:
            break
        rc = _content(r)
        r = [c.divexact(rc) for c in r]
        a, b = b, r
    if not b:
        pp = poly_from_coeffs(a, var)
    elif len(b) - 1 == 0:
        pp = MPoly.constant(1)
    else:
        pp = poly_from_coeffs(b, var)
    return monic_normalize(cont * pp)


def radical(p: MPoly) -> MPoly:
    """Squarefree part: the product of the distinct irreducible factors."""
    if p.is_zero() or p.is_constant():
        return monic_normalize(p)
    g = p
    for v in p.used_variables():
        g = mgcd(g, p.diff(v))
        if g.is_constant():
            break
    if g.is_constant():
        return monic_normalize(p)
    return monic_normalize(p.divexact(g))
