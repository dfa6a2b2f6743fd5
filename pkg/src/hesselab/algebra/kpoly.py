"""Dense univariate polynomials over an arbitrary exact field.

Coefficients may be Eisenstein scalars or elements of a finite
extension (see extfield); anything with +, -, *, ``is_zero`` and
``inverse`` works.  Coefficient lists are ascending and trimmed, so the
zero polynomial is the empty list.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .eisenstein import Eisenstein, eis
from .mpoly import MPoly


class KPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[object]) -> None:
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("KPoly values are immutable")

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lc(self) -> object:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> object:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        raise IndexError(i)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KPoly):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all((a - b).is_zero() for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "KPoly") -> "KPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return KPoly(out)

    def __neg__(self) -> "KPoly":
        return KPoly([-c for c in self.coeffs])

    def __sub__(self, other: "KPoly") -> "KPoly":
        return self + (-other)

    def __mul__(self, other: "KPoly") -> "KPoly":
        if not self.coeffs or not other.coeffs:
            return KPoly([])
        zero = self.coeffs[0] - self.coeffs[0]
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return KPoly(out)

    def scale(self, c: object) -> "KPoly":
        return KPoly([a * c for a in self.coeffs])

    def shift(self, k: int) -> "KPoly":
        """Multiply by t^k."""
        if not self.coeffs or k == 0:
            return self
        zero = self.coeffs[0] - self.coeffs[0]
        return KPoly([zero] * k + list(self.coeffs))

    def monic(self) -> "KPoly":
        if self.is_zero():
            return self
        return self.scale(self.lc().inverse())

    def divmod(self, other: "KPoly") -> tuple["KPoly", "KPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.degree() < other.degree():
            return KPoly([]), self
        inv = other.lc().inverse()
        rem = list(self.coeffs)
        zero = rem[0] - rem[0]
        dq = len(rem) - len(other.coeffs)
        quo = [zero] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + other.degree()] * inv
            if c.is_zero():
                continue
            quo[k] = c
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - c * b
        return KPoly(quo), KPoly(rem[: other.degree()])

    def __mod__(self, other: "KPoly") -> "KPoly":
        return self.divmod(other)[1]

    def __floordiv__(self, other: "KPoly") -> "KPoly":
        return self.divmod(other)[0]

    def __pow__(self, e: int) -> "KPoly":
        if e < 0:
            raise ValueError("negative power")
        one = self.lc().inverse() * self.lc() if self.coeffs else None
        if one is None:
            if e == 0:
                raise ValueError("0^0 over an unknown field")
            return KPoly([])
        result = KPoly([one])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- calculus and evaluation -------------------------------------------------

    def diff(self) -> "KPoly":
        return KPoly([c * i for i, c in enumerate(self.coeffs) if i >= 1])

    def evaluate(self, x: object) -> object:
        if not self.coeffs:
            raise ValueError("evaluating the zero polynomial needs a zero element")
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    # -- gcd family ---------------------------------------------------------------

    def gcd(self, other: "KPoly") -> "KPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def squarefree_part(self) -> "KPoly":
        """Product of the distinct irreducible factors (monic)."""
        if self.degree() <= 0:
            return self.monic()
        g = self.gcd(self.diff())
        if g.degree() <= 0:
            return self.monic()
        return self.divmod(g)[0].monic()


def kpoly_from_mpoly(p: MPoly, var: str) -> KPoly:
    """View an MPoly that only uses ``var`` as a univariate KPoly over Q(w)."""
    core = p.restrict_to_used()
    if core.variables not in ((), (var,)):
        raise ValueError(f"polynomial is not univariate in {var!r}")
    n = core.degree() + 1
    out = [eis(0)] * max(n, 0)
    if core.variables == ():
        if core.terms:
            out = [core.constant_value()]
    else:
        for (e,), c in core.terms.items():
            out[e] = c
    return KPoly(out)


def kpoly_to_mpoly(p: KPoly, var: str) -> MPoly:
    return MPoly((var,), {(i,): c for i, c in enumerate(p.coeffs)})
