"""Sparse multivariate polynomials over Q(w).

A polynomial is a map from exponent vectors to nonzero Eisenstein
coefficients.  Variable tuples are always kept in the package-wide
canonical order, and binary operations align their operands' variable
sets automatically, so polynomials built from different contexts mix
freely.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Sequence, Union

from .eisenstein import Eisenstein, EisLike, eis

# Canonical variable order shared by the parser, the printer and every
# alignment operation.  Names outside this list sort after it, alphabetically.
MASTER_ORDER = ("y1", "y2", "y3", "x1", "x2", "x3", "z1", "z2", "a", "b", "c", "l0", "l1")

_MASTER_INDEX = {name: i for i, name in enumerate(MASTER_ORDER)}


def variable_sort_key(name: str) -> tuple[int, str]:
    return (_MASTER_INDEX.get(name, len(MASTER_ORDER)), name)


def _term_key(exponents: tuple[int, ...]) -> tuple:
    # graded, then lexicographic by exponent vector; min() picks the leading term
    return (-sum(exponents), tuple(-e for e in exponents))


class InexactDivision(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


MPolyLike = Union["MPoly", EisLike]


class MPoly:
    """Immutable sparse polynomial over Q(w)."""

    __slots__ = ("variables", "terms")

    def __init__(
        self,
        variables: Sequence[str],
        terms: Mapping[tuple[int, ...], Eisenstein] | Iterable[tuple[tuple[int, ...], Eisenstein]],
    ) -> None:
        vars_in = tuple(variables)
        ordered = tuple(sorted(vars_in, key=variable_sort_key))
        items = terms.items() if isinstance(terms, Mapping) else terms
        if ordered != vars_in:
            perm = [vars_in.index(v) for v in ordered]
            items = [(tuple(e[i] for i in perm), c) for e, c in items]
        clean: dict[tuple[int, ...], Eisenstein] = {}
        for e, c in items:
            c = eis(c)
            if c.is_zero():
                continue
            if len(e) != len(ordered):
                raise ValueError("exponent arity does not match variable count")
            prev = clean.get(e)
            c = c if prev is None else prev + c
            if c.is_zero():
                clean.pop(e, None)
            else:
                clean[e] = c
        object.__setattr__(self, "variables", ordered)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("MPoly values are immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def constant(cls, value: EisLike, variables: Sequence[str] = ()) -> "MPoly":
        value = eis(value)
        n = len(tuple(variables))
        if value.is_zero():
            return cls(variables, {})
        return cls(variables, {(0,) * n: value})

    @classmethod
    def zero(cls, variables: Sequence[str] = ()) -> "MPoly":
        return cls(variables, {})

    @classmethod
    def variable(cls, name: str) -> "MPoly":
        return cls((name,), {(1,): eis(1)})

    @classmethod
    def monomial(cls, variables: Sequence[str], exponents: Sequence[int], coeff: EisLike = 1) -> "MPoly":
        return cls(variables, {tuple(exponents): eis(coeff)})

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Eisenstein:
        if self.is_zero():
            return eis(0)
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var: str) -> int:
        if var not in self.variables:
            raise KeyError(f"unknown variable {var!r}")
        i = self.variables.index(var)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Eisenstein]]:
        return sorted(self.terms.items(), key=lambda item: _term_key(item[0]))

    def leading_term(self) -> tuple[tuple[int, ...], Eisenstein]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = min(self.terms, key=_term_key)
        return e, self.terms[e]

    def used_variables(self) -> tuple[str, ...]:
        """Variables with a nonzero exponent somewhere."""
        used = [False] * len(self.variables)
        for e in self.terms:
            for i, p in enumerate(e):
                if p:
                    used[i] = True
        return tuple(v for v, u in zip(self.variables, used) if u)

    # -- alignment --------------------------------------------------------

    def restrict_to_used(self) -> "MPoly":
        """Drop variables that never occur with a nonzero exponent."""
        used = self.used_variables()
        if used == self.variables:
            return self
        cols = [self.variables.index(v) for v in used]
        terms = {tuple(e[i] for i in cols): c for e, c in self.terms.items()}
        return MPoly(used, terms)

    def with_variables(self, variables: Sequence[str]) -> "MPoly":
        """Re-express over a superset of the current variables."""
        target = tuple(sorted(variables, key=variable_sort_key))
        if target == self.variables:
            return self
        pos = []
        for v in self.variables:
            if v not in target:
                raise ValueError(f"cannot drop variable {v!r}")
            pos.append(target.index(v))
        n = len(target)
        terms = {}
        for e, c in self.terms.items():
            new_e = [0] * n
            for p, val in zip(pos, e):
                new_e[p] = val
            terms[tuple(new_e)] = c
        return MPoly(target, terms)

    @staticmethod
    def _aligned(p: "MPoly", q: "MPoly") -> tuple["MPoly", "MPoly"]:
        if p.variables == q.variables:
            return p, q
        union = sorted(set(p.variables) | set(q.variables), key=variable_sort_key)
        return p.with_variables(union), q.with_variables(union)

    @staticmethod
    def _coerce(other: object, variables: Sequence[str]) -> "MPoly | None":
        if isinstance(other, MPoly):
            return other
        if isinstance(other, Eisenstein):
            return MPoly.constant(other, variables)
        if isinstance(other, int):
            return MPoly.constant(eis(other), variables)
        try:  # rationals (mpq / Fraction)
            return MPoly.constant(Eisenstein(other), variables)
        except TypeError:
            return None

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: object) -> "MPoly":
        o = self._coerce(other, self.variables)
        if o is None:
            return NotImplemented
        p, q = self._aligned(self, o)
        terms = dict(p.terms)
        for e, c in q.terms.items():
            s = terms.get(e)
            s = c if s is None else s + c
            if s.is_zero():
                terms.pop(e, None)
            else:
                terms[e] = s
        return MPoly(p.variables, terms)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: object) -> "MPoly":
        o = self._coerce(other, self.variables)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "MPoly":
        o = self._coerce(other, self.variables)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> "MPoly":
        if isinstance(other, (Eisenstein, int)) or (
            not isinstance(other, MPoly) and self._coerce(other, self.variables) is not None
        ):
            c = eis(other) if isinstance(other, (Eisenstein, int)) else Eisenstein(other)
            if c.is_zero():
                return MPoly.zero(self.variables)
            return MPoly(self.variables, {e: k * c for e, k in self.terms.items()})
        if not isinstance(other, MPoly):
            return NotImplemented
        p, q = self._aligned(self, other)
        terms: dict[tuple[int, ...], Eisenstein] = {}
        for e1, c1 in p.terms.items():
            for e2, c2 in q.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = terms.get(e)
                s = c if s is None else s + c
                if s.is_zero():
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return MPoly(p.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MPoly":
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = MPoly.constant(1, self.variables)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other, self.variables)
        if o is None:
            return NotImplemented
        p, q = self._aligned(self, o)
        return p.terms == q.terms

    def __hash__(self) -> int:
        core = self.restrict_to_used()
        return hash((core.variables, frozenset((e, c.a, c.b) for e, c in core.terms.items())))

    # -- calculus -------------------------------------------------------------

    def diff(self, var: str) -> "MPoly":
        if var not in self.variables:
            raise KeyError(f"unknown variable {var!r}")
        i = self.variables.index(var)
        terms = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            new_e = e[:i] + (e[i] - 1,) + e[i + 1:]
            nc = c * e[i]
            prev = terms.get(new_e)
            terms[new_e] = nc if prev is None else prev + nc
        return MPoly(self.variables, terms)

    # -- evaluation and substitution --------------------------------------------

    def evaluate(self, values: Sequence[object]) -> object:
        """Evaluate at a point.

        Values may be Eisenstein scalars or elements of any ring that
        supports mixed arithmetic with them (e.g. a quotient-field
        element), so extension-field points evaluate exactly.
        """
        if len(values) != len(self.variables):
            raise ValueError(
                f"expected {len(self.variables)} values, got {len(values)}"
            )
        powers: list[dict[int, object]] = [dict() for _ in values]
        result: object = eis(0)
        for e, coeff in self.terms.items():
            term: object = coeff
            for i, p in enumerate(e):
                if p == 0:
                    continue
                cache = powers[i]
                v = cache.get(p)
                if v is None:
                    v = values[i] ** p
                    cache[p] = v
                term = term * v
            result = result + term
        return result

    def subs(self, mapping: Mapping[str, MPolyLike]) -> "MPoly":
        """Substitute polynomials (or scalars) for some of the variables."""
        sub_polys: dict[int, MPoly] = {}
        keep: list[str] = []
        for i, v in enumerate(self.variables):
            if v in mapping:
                val = mapping[v]
                sub_polys[i] = val if isinstance(val, MPoly) else MPoly.constant(eis(val))
            else:
                keep.append(v)
        target = set(keep)
        for p in sub_polys.values():
            target |= set(p.variables)
        target_vars = tuple(sorted(target, key=variable_sort_key))
        result = MPoly.zero(target_vars)
        pcache: dict[tuple[int, int], MPoly] = {}
        for e, coeff in self.terms.items():
            term = MPoly.constant(coeff, target_vars)
            for i, p in enumerate(e):
                if p == 0:
                    continue
                if i in sub_polys:
                    key = (i, p)
                    factor = pcache.get(key)
                    if factor is None:
                        factor = sub_polys[i] ** p
                        pcache[key] = factor
                    term = term * factor
                else:
                    term = term * MPoly.monomial(target_vars, tuple(p if v == self.variables[i] else 0 for v in target_vars))
            result = result + term
        return result

    # -- exact division -----------------------------------------------------------

    def divexact(self, divisor: "MPoly") -> "MPoly":
        """Exact division; raises InexactDivision if a remainder is left."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        p, q = self._aligned(self, divisor)
        if q.is_constant():
            inv = q.constant_value().inverse()
            return MPoly(p.variables, {e: c * inv for e, c in p.terms.items()})
        quotient: dict[tuple[int, ...], Eisenstein] = {}
        rem = p
        q_exp, q_coeff = q.leading_term()
        q_coeff_inv = q_coeff.inverse()
        while not rem.is_zero():
            r_exp, r_coeff = rem.leading_term()
            exp = tuple(a - b for a, b in zip(r_exp, q_exp))
            if any(x < 0 for x in exp):
                raise InexactDivision("division is not exact")
            c = r_coeff * q_coeff_inv
            quotient[exp] = c
            rem = rem - MPoly(p.variables, {exp: c}) * q
        return MPoly(p.variables, quotient)

    # -- display ---------------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for e, c in self.sorted_terms():
            mon = "*".join(
                v if p == 1 else f"{v}^{p}"
                for v, p in zip(self.variables, e)
                if p
            )
            cs = _format_coeff(c, bool(mon))
            if mon:
                if cs == "":
                    body = mon
                elif cs == "-":
                    body = f"-{mon}"
                else:
                    body = f"{cs}*{mon}"
            else:
                body = cs if cs else "1"
            if body.startswith("-"):
                parts.append(("- " if parts else "-") + body[1:])
            else:
                parts.append(("+ " if parts else "") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"MPoly({self})"


def _format_coeff(c: Eisenstein, has_monomial: bool) -> str:
    """Render a coefficient for the canonical polynomial grammar."""
    if c.is_rational():
        if has_monomial and c.a == 1:
            return ""
        if has_monomial and c.a == -1:
            return "-"
        return str(c.a)
    if not c.a:
        if c.b == 1:
            return "w"
        if c.b == -1:
            return "-w"
        return f"{c.b}*w"
    inner = str(c).replace(" ", "")
    return f"({inner})" if has_monomial else inner


def proportional(p: MPoly, q: MPoly) -> Eisenstein | None:
    """Return c with p == c*q (c nonzero), or None if not proportional."""
    if p.is_zero() or q.is_zero():
        return None
    a, b = MPoly._aligned(p, q)
    if set(a.terms) != set(b.terms):
        return None
    e0 = next(iter(a.terms))
    ratio = a.terms[e0] / b.terms[e0]
    for e, c in a.terms.items():
        if b.terms[e] * ratio != c:
            return None
    return ratio


def linear_change(p: MPoly, matrix: Sequence[Sequence[EisLike]], variables: Sequence[str]) -> MPoly:
    """Compose p with the linear map y -> M*y on the given variables.

    The result is p(M*y).  This is a right action: applying M2 and then
    M1 equals a single application of the product M2*M1.
    """
    names = tuple(variables)
    n = len(names)
    rows = [list(map(eis, row)) for row in matrix]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError("matrix shape does not match the variable count")
    mapping = {}
    for i, v in enumerate(names):
        expr = MPoly.zero(names)
        for j, u in enumerate(names):
            expr = expr + MPoly.variable(u) * rows[i][j]
        mapping[v] = expr
    return p.subs(mapping)


def euler_holds(p: MPoly, variables: Sequence[str] | None = None) -> bool:
    """Check sum_i v_i * dp/dv_i == deg(p) * p for homogeneous p."""
    if p.is_zero():
        return True
    names = tuple(variables) if variables is not None else p.variables
    if not p.is_homogeneous():
        return False
    total = MPoly.zero(p.variables)
    for v in names:
        if v in p.variables:
            total = total + MPoly.variable(v) * p.diff(v)
    return total == p * p.degree()
