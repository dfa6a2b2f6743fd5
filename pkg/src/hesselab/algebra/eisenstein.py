"""Exact arithmetic in Q(w), where w is a primitive cube root of unity.

Elements are stored as a + b*w with rational a, b and the reduction
w^2 = -1 - w.  The type is immutable, hashable and closed under the four
field operations, so it can serve as the coefficient field for every
polynomial computation in this package.
"""

from __future__ import annotations

from typing import Union

try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover - gmpy2 is an optional speedup
    from fractions import Fraction as _mpq

Rational = _mpq

RatLike = Union[int, Rational]


def rat(value: "RatLike", den: int = 1) -> Rational:
    """Coerce ``value`` (or ``value/den``) to the package rational type."""
    return _mpq(value, den)


class Eisenstein:
    """An element a + b*w of Q(w), w^2 + w + 1 = 0."""

    __slots__ = ("a", "b")

    def __init__(self, a: RatLike = 0, b: RatLike = 0) -> None:
        object.__setattr__(self, "a", _mpq(a))
        object.__setattr__(self, "b", _mpq(b))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Eisenstein values are immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rational(cls, value: RatLike) -> "Eisenstein":
        return cls(value, 0)

    @classmethod
    def zeta_power(cls, k: int) -> "Eisenstein":
        """w^k for any integer k."""
        k %= 3
        if k == 0:
            return cls(1, 0)
        if k == 1:
            return cls(0, 1)
        return cls(-1, -1)

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.a and not self.b

    def is_rational(self) -> bool:
        return not self.b

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    # -- involution and norm ------------------------------------------

    def conj(self) -> "Eisenstein":
        """The nontrivial field automorphism w -> w^2."""
        return Eisenstein(self.a - self.b, -self.b)

    def norm(self) -> Rational:
        """Multiplicative norm to Q: a^2 - a*b + b^2, zero only at zero."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    def inverse(self) -> "Eisenstein":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(w)")
        c = self.conj()
        return Eisenstein(c.a / n, c.b / n)

    # -- arithmetic ----------------------------------------------------

    @staticmethod
    def _coerce(other: object) -> "Eisenstein | None":
        if isinstance(other, Eisenstein):
            return other
        if isinstance(other, (int, _mpq)):
            return Eisenstein(other, 0)
        return None

    def __add__(self, other: object) -> "Eisenstein":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Eisenstein(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other: object) -> "Eisenstein":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Eisenstein(self.a - o.a, self.b - o.b)

    def __rsub__(self, other: object) -> "Eisenstein":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Eisenstein(o.a - self.a, o.b - self.b)

    def __neg__(self) -> "Eisenstein":
        return Eisenstein(-self.a, -self.b)

    def __mul__(self, other: object) -> "Eisenstein":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (a + b w)(c + d w) = ac - bd + (ad + bc - bd) w
        bd = self.b * o.b
        return Eisenstein(self.a * o.a - bd, self.a * o.b + self.b * o.a - bd)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "Eisenstein":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "Eisenstein":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> "Eisenstein":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Eisenstein(1, 0)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison / hashing -----------------------------------------

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self) -> int:
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b))

    # -- display --------------------------------------------------------

    def __str__(self) -> str:
        if not self.b:
            return str(self.a)
        if self.b == 1:
            wterm = "w"
        elif self.b == -1:
            wterm = "-w"
        else:
            wterm = f"{self.b}*w"
        if not self.a:
            return wterm
        sign = "+" if self.b > 0 else "-"
        mag = wterm.lstrip("-")
        return f"{self.a} {sign} {mag}"

    def __repr__(self) -> str:
        return f"Eisenstein({self.a!r}, {self.b!r})"


ZERO = Eisenstein(0, 0)
ONE = Eisenstein(1, 0)
ZETA = Eisenstein(0, 1)
ZETA2 = Eisenstein(-1, -1)

EisLike = Union[int, Rational, Eisenstein]


def eis(value: EisLike) -> Eisenstein:
    """Coerce an int, rational or Eisenstein value to Eisenstein."""
    if isinstance(value, Eisenstein):
        return value
    return Eisenstein(value, 0)
