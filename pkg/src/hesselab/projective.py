"""Projective plane over Q(w): points, lines, linear maps, finite groups.

Points are normalized coordinate triples of Eisenstein scalars (first
nonzero coordinate 1), lines are linear forms, and projective maps are
matrices normalized the same way so they hash and compare projectively.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .algebra.eisenstein import Eisenstein, EisLike, eis, ZETA, ZETA2
from .algebra.mpoly import MPoly, linear_change, proportional
from .algebra.solve import normalize_projective

Point = tuple[Eisenstein, Eisenstein, Eisenstein]

YVARS = ("y1", "y2", "y3")


def point(*coords: EisLike) -> Point:
    if len(coords) != 3:
        raise ValueError("points live in the plane: three coordinates")
    return tuple(normalize_projective([eis(c) for c in coords]))


def cross(a: Sequence[Eisenstein], b: Sequence[Eisenstein]) -> tuple[Eisenstein, ...]:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def line_through(p: Point, q: Point, variables: Sequence[str] = YVARS) -> MPoly:
    """The linear form vanishing on both points (normalized)."""
    c = cross(p, q)
    if all(x.is_zero() for x in c):
        raise ValueError("points coincide; the line is not unique")
    c = normalize_projective(c)
    names = tuple(variables)
    return MPoly(names, {tuple(1 if i == j else 0 for i in range(3)): c[j] for j in range(3) if not c[j].is_zero()})


def line_coefficients(line: MPoly, variables: Sequence[str] = YVARS) -> tuple[Eisenstein, ...]:
    names = tuple(variables)
    core = line.restrict_to_used().with_variables(names)
    if core.degree() != 1 or not core.is_homogeneous():
        raise ValueError("not a linear form")
    return tuple(
        core.terms.get(tuple(1 if i == j else 0 for i in range(3)), eis(0))
        for j in range(3)
    )


def lines_meet(l1: MPoly, l2: MPoly, variables: Sequence[str] = YVARS) -> Point:
    c = cross(line_coefficients(l1, variables), line_coefficients(l2, variables))
    return tuple(normalize_projective(c))


def on_curve(F: MPoly, p: Point, variables: Sequence[str] = YVARS) -> bool:
    core = F.restrict_to_used().with_variables(variables)
    return not core.evaluate(list(p))


def are_collinear(p: Point, q: Point, r: Point) -> bool:
    return det3([list(p), list(q), list(r)]).is_zero()


def det3(rows: Sequence[Sequence]) -> object:
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


class ProjMap:
    """Element of PGL_3 over Q(w); the matrix is normalized so the first
    nonzero entry (row-major) equals 1."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[EisLike]]) -> None:
        m = [[eis(x) for x in row] for row in rows]
        if len(m) != 3 or any(len(r) != 3 for r in m):
            raise ValueError("projective maps are 3 by 3")
        flat = [x for row in m for x in row]
        lead = next((x for x in flat if not x.is_zero()), None)
        if lead is None:
            raise ValueError("zero matrix")
        if det3(m).is_zero():
            raise ValueError("matrix is singular")
        inv = lead.inverse()
        object.__setattr__(
            self, "rows", tuple(tuple(x * inv for x in row) for row in m)
        )

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("ProjMap values are immutable")

    @classmethod
    def identity(cls) -> "ProjMap":
        return cls([[1, 0, 0], [0, 1, 0], [0, 0, 1]])

    @classmethod
    def diagonal(cls, a: EisLike, b: EisLike, c: EisLike) -> "ProjMap":
        return cls([[a, 0, 0], [0, b, 0], [0, 0, c]])

    def __matmul__(self, other: "ProjMap") -> "ProjMap":
        a, b = self.rows, other.rows
        return ProjMap(
            [
                [sum((a[i][k] * b[k][j] for k in range(3)), eis(0)) for j in range(3)]
                for i in range(3)
            ]
        )

    def inverse(self) -> "ProjMap":
        m = self.rows
        cof = [
            [
                m[(i + 1) % 3][(j + 1) % 3] * m[(i + 2) % 3][(j + 2) % 3]
                - m[(i + 1) % 3][(j + 2) % 3] * m[(i + 2) % 3][(j + 1) % 3]
                for i in range(3)
            ]
            for j in range(3)
        ]
        return ProjMap(cof)

    def apply_point(self, p: Point) -> Point:
        out = [
            self.rows[i][0] * p[0] + self.rows[i][1] * p[1] + self.rows[i][2] * p[2]
            for i in range(3)
        ]
        return tuple(normalize_projective(out))

    def pullback(self, F: MPoly, variables: Sequence[str] = YVARS) -> MPoly:
        """F composed with this map: (pullback F)(y) = F(M y)."""
        core = F.restrict_to_used().with_variables(tuple(variables))
        return linear_change(core, self.rows, variables)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProjMap):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(tuple((x.a, x.b) for row in self.rows for x in row))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(x) for x in row) for row in self.rows)
        return f"ProjMap[{body}]"


class FiniteGroup:
    """A finite subgroup of PGL_3 generated breadth-first, with words."""

    def __init__(self, elements: list[ProjMap], labels: dict[ProjMap, str]) -> None:
        self.elements = elements
        self.labels = labels

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def verify_closure(self) -> bool:
        seen = set(self.elements)
        return all(g @ h in seen for g in self.elements for h in self.elements)

    def orbit(self, p: Point) -> list[Point]:
        out = {g.apply_point(p) for g in self.elements}
        return sorted(out, key=lambda q: tuple((c.a, c.b) for c in q))

    def orbit_curves(self, F: MPoly, variables: Sequence[str] = YVARS) -> list[MPoly]:
        from .algebra.resultants import monic_normalize

        out = {monic_normalize(g.pullback(F, variables)) for g in self.elements}
        return sorted(out, key=str)

    def stabilizer(self, p: Point) -> list[ProjMap]:
        return [g for g in self.elements if g.apply_point(p) == p]

    def invariance_characters(self, F: MPoly, variables: Sequence[str] = YVARS) -> dict[str, Eisenstein] | None:
        """Map each element's word to the scalar c with F(g y) = c F(y),
        or None if some element fails to preserve F up to scalar."""
        out = {}
        for g in self.elements:
            c = proportional(g.pullback(F, variables), F)
            if c is None:
                return None
            out[self.labels[g]] = c
        return out


def generate_group(generators: dict[str, ProjMap], max_order: int = 400) -> FiniteGroup:
    identity = ProjMap.identity()
    labels: dict[ProjMap, str] = {identity: "1"}
    order: list[ProjMap] = [identity]
    frontier = [identity]
    while frontier:
        fresh: list[ProjMap] = []
        for el in frontier:
            for name, g in generators.items():
                prod = g @ el
                if prod not in labels:
                    word = name if labels[el] == "1" else f"{name}*{labels[el]}"
                    labels[prod] = word
                    order.append(prod)
                    fresh.append(prod)
                    if len(order) > max_order:
                        raise RuntimeError("group generation exceeded the bound")
        frontier = fresh
    return FiniteGroup(order, labels)


# -- the two symmetry groups used throughout ---------------------------------------


def torsion_scaling() -> ProjMap:
    return ProjMap.diagonal(1, ZETA, ZETA2)


def coordinate_shift() -> ProjMap:
    return ProjMap([[0, 1, 0], [0, 0, 1], [1, 0, 0]])


def swap_first_two() -> ProjMap:
    return ProjMap([[0, 1, 0], [1, 0, 0], [0, 0, 1]])


def translation_group() -> FiniteGroup:
    """Order nine: generated by the scaling and the coordinate shift."""
    return generate_group({"t": torsion_scaling(), "s": coordinate_shift()})


def extended_group() -> FiniteGroup:
    """Order eighteen: the translation group plus the involution."""
    return generate_group(
        {"t": torsion_scaling(), "s": coordinate_shift(), "r": swap_first_two()}
    )


# -- exact linear algebra -----------------------------------------------------------


def nullspace(rows: Sequence[Sequence[Eisenstein]]) -> list[list[Eisenstein]]:
    """Basis of the right kernel of a matrix over Q(w)."""
    if not rows:
        return []
    m = [list(r) for r in rows]
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if not m[i][col].is_zero()), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][col].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][col].is_zero():
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [eis(0)] * ncols
        v[fc] = eis(1)
        for row_i, pc in enumerate(pivots):
            v[pc] = -m[row_i][fc]
        basis.append(v)
    return basis
