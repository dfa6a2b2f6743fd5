"""Finite extensions K = Q(w)[t]/(f) and projective points over them.

Used to certify intersection points whose coordinates live in a proper
extension of Q(w): the point is stored as a minimal polynomial together
with coordinates written in the residue class of t.
"""

from __future__ import annotations

from typing import Sequence, Union

from .eisenstein import Eisenstein, EisLike, eis
from .kpoly import KPoly


def _xgcd(a: KPoly, b: KPoly) -> tuple[KPoly, KPoly, KPoly]:
    """Extended Euclid: returns (g, s, t) with s*a + t*b = g."""
    zero = KPoly([])
    one = KPoly([eis(1)])
    r0, r1 = a, b
    s0, s1 = one, zero
    t0, t1 = zero, one
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return r0, s0, t0


class ExtField:
    """Q(w)[t]/(minpoly) for a monic squarefree minpoly over Q(w)."""

    __slots__ = ("minpoly",)

    def __init__(self, minpoly: KPoly) -> None:
        if minpoly.degree() < 1:
            raise ValueError("minimal polynomial must have degree >= 1")
        m = minpoly.monic()
        object.__setattr__(self, "minpoly", m)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("ExtField values are immutable")

    def degree(self) -> int:
        return self.minpoly.degree()

    def element(self, coeffs: Sequence[EisLike]) -> "ExtElem":
        cs = [eis(c) for c in coeffs]
        if len(cs) > self.degree():
            red = KPoly(cs) % self.minpoly
            cs = list(red.coeffs)
        cs += [eis(0)] * (self.degree() - len(cs))
        return ExtElem(self, tuple(cs))

    def constant(self, value: EisLike) -> "ExtElem":
        return self.element([value])

    def zero(self) -> "ExtElem":
        return self.element([])

    def one(self) -> "ExtElem":
        return self.element([1])

    def gen(self) -> "ExtElem":
        """The residue class of t."""
        return self.element([0, 1])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExtField):
            return NotImplemented
        return self.minpoly == other.minpoly

    def __hash__(self) -> int:
        return hash(self.minpoly)

    def __repr__(self) -> str:
        return f"ExtField(t: {[str(c) for c in self.minpoly.coeffs]})"


ExtLike = Union["ExtElem", Eisenstein, int]


class ExtElem:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: ExtField, coeffs: tuple[Eisenstein, ...]) -> None:
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("ExtElem values are immutable")

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def is_scalar(self) -> bool:
        """True when the element already lies in Q(w)."""
        return all(c.is_zero() for c in self.coeffs[1:])

    def scalar_value(self) -> Eisenstein:
        if not self.is_scalar():
            raise ValueError("element is not in the base field")
        return self.coeffs[0]

    def _coerce(self, other: object) -> "ExtElem | None":
        if isinstance(other, ExtElem):
            if other.field != self.field:
                raise ValueError("elements of different extensions")
            return other
        if isinstance(other, (Eisenstein, int)):
            return self.field.constant(other)
        try:
            return self.field.constant(Eisenstein(other))
        except TypeError:
            return None

    def __add__(self, other: object) -> "ExtElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExtElem(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "ExtElem":
        return ExtElem(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other: object) -> "ExtElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "ExtElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> "ExtElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prod = KPoly(self.coeffs) * KPoly(o.coeffs)
        red = prod % self.field.minpoly
        cs = list(red.coeffs)
        cs += [eis(0)] * (self.field.degree() - len(cs))
        return ExtElem(self.field, tuple(cs))

    __rmul__ = __mul__

    def inverse(self) -> "ExtElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        g, s, _ = _xgcd(KPoly(self.coeffs), self.field.minpoly)
        if g.degree() != 0:
            raise ZeroDivisionError(
                "element is a zero divisor; the minimal polynomial is reducible"
            )
        inv = s.scale(g.lc().inverse())
        cs = list((inv % self.field.minpoly).coeffs)
        cs += [eis(0)] * (self.field.degree() - len(cs))
        return ExtElem(self.field, tuple(cs))

    def __truediv__(self, other: object) -> "ExtElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "ExtElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int) -> "ExtElem":
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        if self.is_scalar():
            return hash(self.coeffs[0])
        return hash((self.field, self.coeffs))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mon = "t" if i == 1 else f"t^{i}"
                cs = str(c)
                parts.append(mon if cs == "1" else f"({cs})*{mon}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"ExtElem({self})"


class ExtPoint:
    """Projective point with coordinates in an extension of Q(w).

    Coordinates are normalized so the first nonzero one equals 1.
    """

    __slots__ = ("field", "coords")

    def __init__(self, field: ExtField, coords: Sequence[ExtElem]) -> None:
        cs = list(coords)
        if all(c.is_zero() for c in cs):
            raise ValueError("projective point needs a nonzero coordinate")
        lead = next(c for c in cs if not c.is_zero())
        inv = lead.inverse()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", tuple(c * inv for c in cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("ExtPoint values are immutable")

    def is_rational(self) -> bool:
        return all(c.is_scalar() for c in self.coords)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExtPoint):
            return NotImplemented
        return self.field == other.field and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.field, self.coords))

    def __repr__(self) -> str:
        return "ExtPoint(" + ", ".join(str(c) for c in self.coords) + ")"
